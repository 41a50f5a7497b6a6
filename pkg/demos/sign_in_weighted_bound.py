#!/usr/bin/env python3
"""Two readings of the weighted upper bound for w_e^2.

For alpha in [0, 1] consider

    minus:  w^2(sqrt(a) B + sqrt(1-a) C) + w^2(sqrt(1-a) B - sqrt(a) C)
    plus:   w^2(sqrt(a) B + sqrt(1-a) C) + w^2(sqrt(1-a) B + sqrt(a) C)

The minus form comes from an orthogonal change of variables, so it can
never fall below w_e^2. The plus form has no such argument behind it. This
script samples random pairs and counts how often each form drops below the
target.
"""

import numpy as np

from radius_lab.bounds import th5_upper


def main(trials=200, dim=3, seed=0):
    rng = np.random.default_rng(seed)
    below = {"minus": 0, "plus": 0}
    worst_plus = (0.0, None)
    for _ in range(trials):
        B = rng.standard_normal((dim, dim)) + 1j * rng.standard_normal((dim, dim))
        C = rng.standard_normal((dim, dim)) + 1j * rng.standard_normal((dim, dim))
        alpha = rng.uniform()
        e = th5_upper(B, C, alpha)
        gap_minus = e.bound_value - e.target_value
        gap_plus = e.extra["plus_form"] - e.target_value
        below["minus"] += gap_minus < -1e-9
        below["plus"] += gap_plus < -1e-9
        if gap_plus / e.target_value < worst_plus[0]:
            worst_plus = (gap_plus / e.target_value, alpha)

    print(f"{trials} random {dim}x{dim} pairs, alpha uniform on [0, 1]")
    print(f"  minus form below w_e^2: {below['minus']}")
    print(f"  plus form below w_e^2:  {below['plus']}")
    if worst_plus[1] is not None:
        print(f"  largest relative shortfall of the plus form: {-worst_plus[0]:.3%} at alpha = {worst_plus[1]:.3f}")


if __name__ == "__main__":
    main()
