#!/usr/bin/env python3
"""Independent oracles for domain projection values frozen into test_domain.cpp."""
import itertools


def clamp(v, lo, hi):
    return max(lo, min(hi, v))


def project_box(x, lower, upper, shrink):
    return [clamp(xi, (1 - shrink) * lo, (1 - shrink) * hi)
            for xi, lo, hi in zip(x, lower, upper)]


def brute_force_box(x, lower, upper, shrink, n=2001):
    # dense grid minimizer of ||x - y|| over the shrunk box (d=2)
    best, best_d = None, float("inf")
    l0, u0 = (1 - shrink) * lower[0], (1 - shrink) * upper[0]
    l1, u1 = (1 - shrink) * lower[1], (1 - shrink) * upper[1]
    for i in range(n):
        y0 = l0 + (u0 - l0) * i / (n - 1)
        for j in range(n):
            y1 = l1 + (u1 - l1) * j / (n - 1)
            d = (x[0] - y0) ** 2 + (x[1] - y1) ** 2
            if d < best_d:
                best_d, best = d, (y0, y1)
    return best


if __name__ == "__main__":
    # clamp oracle for the shrunk box example
    print("project_box([2,-0.2],[-1,1]^2,xi=0.5) =",
          project_box([2.0, -0.2], [-1.0, -1.0], [1.0, 1.0], 0.5))
    # cross-check against the grid minimizer (coarse tolerance = grid pitch)
    print("grid check =", brute_force_box([2.0, -0.2], [-1.0, -1.0], [1.0, 1.0], 0.5, n=401))
    # non-centered box, no shrink
    print("project_box([0.3,5],[0,-1],[2,1],xi=0) =",
          project_box([0.3, 5.0], [0.0, -1.0], [2.0, 1.0], 0.0))
    # circumradius/inradius of [-1,1]^2 about the origin
    print("R([-1,1]^2) =", repr((2 * (1.0 ** 2)) ** 0.5))
    print("r([-1,1]^2) =", 1.0)
