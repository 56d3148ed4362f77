#!/usr/bin/env python3
"""Independent oracles for the log-barrier one-point learner, frozen into
test_barrier.cpp: barrier curvature, action offsets, estimate values, and
grid-bracketed roots of F(x) = eta*(S + c*sqrt(f''(x))) + f'(x)."""
import math


def lam(w, a, b):
    return 1.0 / (b - w) ** 2 + 1.0 / (w - a) ** 2


def fprime(x, a, b):
    return 1.0 / (b - x) - 1.0 / (x - a)


def fsecond(x, a, b):
    return 1.0 / (x - a) ** 2 + 1.0 / (b - x) ** 2


def F(x, S, c, eta, a, b):
    return eta * (S + c * math.sqrt(fsecond(x, a, b))) + fprime(x, a, b)


def grid_bracket_root(S, c, eta, a, b, n=10**6):
    """Scan a dense grid for the sign change, then bisect inside that cell."""
    lo, hi = None, None
    prev_x = a + (b - a) * 1.0 / (n + 1)
    prev_f = F(prev_x, S, c, eta, a, b)
    for k in range(2, n + 1):
        x = a + (b - a) * k / (n + 1)
        f = F(x, S, c, eta, a, b)
        if prev_f <= 0.0 <= f:
            lo, hi = prev_x, x
            break
        prev_x, prev_f = x, f
    assert lo is not None, "no bracket found"
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        if F(mid, S, c, eta, a, b) < 0.0:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


if __name__ == "__main__":
    print("lam(0,-1,1)    =", repr(lam(0.0, -1.0, 1.0)))
    print("lam(0.5,0,2)   =", repr(lam(0.5, 0.0, 2.0)))
    # action offset at the center of [-1,1]: lambda = 2 -> 1/sqrt(2)
    print("offset         =", repr(1.0 / math.sqrt(lam(0.0, -1.0, 1.0))))
    # one-point estimate: d=1, [-1,1], w=0, g~=0, z=0, eps=+1, v=0.5
    print("estimate       =", repr(1 * (0.5 - 0.0) * 1.0 * math.sqrt(lam(0.0, -1.0, 1.0))))
    # optimism: d=1, [-1,1], w=0, r+=1, r-=0
    print("optimism       =", repr(0.5 * math.sqrt(lam(0.0, -1.0, 1.0)) * (1.0 - 0.0)))
    # grid-bracketed roots (frozen; C++ bisection must agree to 1e-6)
    cases = [
        (5.0, 0.3, 0.1, -1.0, 1.0),
        (0.0, 0.0, 0.1, -1.0, 1.0),
        (0.0, 0.0, 0.1, 0.0, 4.0),
        (-12.0, 0.9, 0.05, -0.5, 2.0),
        (40.0, -2.0, 0.02, -3.0, 1.0),
    ]
    for S, c, eta, a, b in cases:
        r = grid_bracket_root(S, c, eta, a, b, n=10**6)
        print(f"root S={S} c={c} eta={eta} [{a},{b}] =", repr(r),
              " F(root) =", repr(F(r, S, c, eta, a, b)))
