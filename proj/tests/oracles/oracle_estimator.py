#!/usr/bin/env python3
"""Independent oracles for the two-point coordinate estimator, frozen into test_estimator.cpp."""


def update(d, g_tilde, i, v):
    g = list(g_tilde)
    g = [d * (v - g_tilde[i]) * (1.0 if k == i else 0.0) + g_tilde[k] for k in range(d)]
    g_next = list(g_tilde)
    g_next[i] = v
    return g, g_next


if __name__ == "__main__":
    # hand evaluation: d=2, buffer (1,2), coordinate 0, v=3
    print("d=2 g~=(1,2) i=0 v=3 ->", update(2, [1.0, 2.0], 0, 3.0))
    # first round: d=3, zero buffer, coordinate 1, v=1
    print("d=3 g~=0 i=1 v=1   ->", update(3, [0.0, 0.0, 0.0], 1, 1.0))
    # central difference on f(x)=x1^2 at w=(0.5,0), delta=0.1
    fp = 0.6 ** 2
    fm = 0.4 ** 2
    print("quadratic v =", repr((fp - fm) / 0.2))
    # exact unbiasedness identity on linear losses: mean over coordinates of
    # d*(l_i - g~_i)e_i + g~  equals l for any g~
    d = 4
    ell = [0.3, -1.2, 0.77, 2.5]
    gt = [0.1, 0.2, -0.9, 1.5]
    mean = [0.0] * d
    for i in range(d):
        g, _ = update(d, gt, i, ell[i])
        mean = [m + gi / d for m, gi in zip(mean, g)]
    print("unbiased mean =", mean, " ell =", ell)
