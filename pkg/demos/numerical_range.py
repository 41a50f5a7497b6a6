#!/usr/bin/env python3
"""Reading w(A) and c(A) off the boundary of the numerical range.

The support point of W(A) in direction theta is <A x, x> for the top
eigenvector x of Re(e^{-i theta} A). Tracing theta around the circle gives
the boundary of the convex set W(A): its farthest point from 0 is w(A), and
when 0 lies outside, its distance to 0 is c(A). The boundary is written to
numerical_range.csv for an external plotter.
"""

import csv

import numpy as np

from radius_lab import crawford_number, numerical_radius, numerical_range_boundary
from radius_lab.radii import boundary_angles


def main(k=720, out="numerical_range.csv"):
    rng = np.random.default_rng(3)
    A = rng.standard_normal((4, 4)) + 1j * rng.standard_normal((4, 4)) + (3 + 2j) * np.eye(4)
    pts = numerical_range_boundary(A, k)

    print(f"max |z| on {k} boundary points: {np.max(np.abs(pts)):.10f}")
    print(f"numerical radius (sweep):       {numerical_radius(A).value:.10f}")

    # distance from 0 to the polygon through the boundary points
    seg_a, seg_b = pts, np.roll(pts, -1)
    d = seg_b - seg_a
    t = np.clip(np.real(-seg_a * np.conj(d)) / np.maximum(np.abs(d) ** 2, 1e-300), 0, 1)
    dist = np.min(np.abs(seg_a + t * d))
    print(f"distance from 0 to boundary:    {dist:.10f}")
    print(f"Crawford number (sweep):        {crawford_number(A).value:.10f}")

    with open(out, "w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(["theta", "re", "im"])
        for th, z in zip(boundary_angles(k), pts):
            w.writerow([th, z.real, z.imag])
    print(f"wrote {out}")


if __name__ == "__main__":
    main()
