#!/usr/bin/env python3
"""Reference values for loss-sequence summaries: total variation, the best
fixed point in hindsight, and comparator-variance for small linear streams."""
import math


def vt_linear(ells):
    out = 0.0
    for t in range(1, len(ells)):
        out += max(abs(a - b) for a, b in zip(ells[t], ells[t - 1])) ** 2 \
            if False else sum((a - b) ** 2 for a, b in zip(ells[t], ells[t - 1]))
    return out


def best_fixed_linear_box(ells, lo, hi):
    s = [sum(e[i] for e in ells) for i in range(len(lo))]
    w = [lo[i] if s[i] > 0 else hi[i] for i in range(len(lo))]
    return w, sum(si * wi for si, wi in zip(s, w))


def wt_linear(ells):
    d = len(ells[0])
    T = len(ells)
    mu = [sum(e[i] for e in ells) / T for i in range(d)]
    return sum(sum((e[i] - mu[i]) ** 2 for i in range(d)) for e in ells)


if __name__ == "__main__":
    ells = [[1.0, 0.0], [0.0, 1.0], [-1.0, 0.5], [0.5, -0.5]]
    print("V_T      =", repr(vt_linear(ells)))
    w, v = best_fixed_linear_box(ells, [-1.0, -1.0], [1.0, 1.0])
    print("best w   =", w, " value =", repr(v))
    print("W_T      =", repr(wt_linear(ells)))
    # rotating pair: ell alternates +u,-u with u=(0.6,0.8); V_T = (T-1)*4
    u = [0.6, 0.8]
    T = 8
    seq = [[ui if t % 2 == 0 else -ui for ui in u] for t in range(T)]
    print("alt V_T  =", repr(vt_linear(seq)), " expect", repr((T - 1) * 4.0 * (0.6**2 + 0.8**2)))
    w, v = best_fixed_linear_box(seq, [-1.0, -1.0], [1.0, 1.0])
    print("alt best =", w, repr(v))
