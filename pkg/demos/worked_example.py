#!/usr/bin/env python3
"""The diagonal pair B = diag(1, 0), C = diag(0, 2).

For this pair every quantity can be found by hand, which makes it a good
first look at how the catalog reads. The Euclidean radius is

    w_e(B, C)^2 = max_{t in [0,1]} t^2 + 4 (1 - t)^2 = 4,

attained at x = e2. The midpoint lower bound w(B^2/2 + C^2/2) only reaches
2, while letting alpha range over [0, 1] in w(alpha B^2 + (1 - alpha) C^2)
recovers the exact value 4 at alpha = 0.
"""

import numpy as np

from radius_lab import euclidean_radius, evaluate_all, numerical_radius
from radius_lab.bounds import evaluate_at

B = np.diag([1.0, 0.0])
C = np.diag([0.0, 2.0])


def main():
    print("=" * 72)
    print("Diagonal pair B = diag(1, 0), C = diag(0, 2)")
    print("=" * 72)

    t = np.linspace(0, 1, 11)
    print("\nDirect maximization of |<Bx,x>|^2 + |<Cx,x>|^2 with t = |x_1|^2:")
    for ti in t[::5]:
        print(f"  t = {ti:.1f}:  {ti**2 + 4 * (1 - ti) ** 2:.3f}")
    we = euclidean_radius(B, C).value
    print(f"angle sweep gives w_e = {we:.12g}, so w_e^2 = {we**2:.12g}")

    print("\nThe alpha family w(alpha B^2 + (1 - alpha) C^2):")
    for a in (0.0, 0.25, 0.5, 0.75, 1.0):
        e = evaluate_at("th4.lower", B, C, a)
        print(f"  alpha = {a:.2f}:  {e.bound_value:.6g}")
    print(f"midpoint value w(B^2/2 + C^2/2) = {numerical_radius((B @ B + C @ C) / 2).value:.6g} < 4")

    print("\nEvery catalog entry on this pair:")
    print(f"  {'bound_id':22s} {'bound':>8s} {'target':>8s} {'slack':>9s}")
    for e in evaluate_all(B, C):
        flag = "tight" if e.is_tight(1e-6) else ""
        print(f"  {e.bound_id:22s} {e.bound_value:8.4g} {e.target_value:8.4g} {e.slack:9.2e} {flag}")


if __name__ == "__main__":
    main()
