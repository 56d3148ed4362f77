#!/usr/bin/env python3
"""Single-step hand evaluations for the two meta-combiners."""
import math


def optimistic_hedge_step(cum_loss, m_next, eps):
    logits = [-eps * (c + m) for c, m in zip(cum_loss, m_next)]
    mx = max(logits)
    w = [math.exp(l - mx) for l in logits]
    s = sum(w)
    return [x / s for x in w]


def mlprod_step(W_prev, eps_prev, eps_now, r, m):
    # W_t,i = (W_{t-1,i} * exp(eps_prev*r - eps_prev^2*(r-m)^2))^(eps_now/eps_prev)
    lnW = [math.log(Wp) + ep * ri - ep * ep * (ri - mi) ** 2
           for Wp, ep, ri, mi in zip(W_prev, eps_prev, r, m)]
    lnW = [l * (en / ep) for l, en, ep in zip(lnW, eps_now, eps_prev)]
    return [math.exp(l) for l in lnW]


def mlprod_weights(W, eps, m_next):
    raw = [e * math.exp(e * mn) * Wi for e, mn, Wi in zip(eps, m_next, W)]
    s = sum(raw)
    return [x / s for x in raw]


if __name__ == "__main__":
    p = optimistic_hedge_step([0.0, 10.0], [0.0, 0.0], 1.0)
    print("hedge N=2 cum=(0,10) eps=1 :", repr(p[0]), repr(p[1]))
    p = optimistic_hedge_step([1.0, 2.0, 3.0], [0.5, 0.0, -0.5], 0.3)
    print("hedge N=3 :", [repr(x) for x in p])

    W0 = [0.5, 0.5]
    eps0 = [0.125, 0.125]
    r1 = [0.2, -0.2]
    m1 = [0.0, 0.0]
    # eps_1,i = min(1/8, sqrt(ln2 / (r-m)^2))
    eps1 = [min(0.125, math.sqrt(math.log(2.0) / (ri - mi) ** 2))
            for ri, mi in zip(r1, m1)]
    W1 = mlprod_step(W0, eps0, eps1, r1, m1)
    print("mlprod eps1 :", [repr(x) for x in eps1])
    print("mlprod W1   :", [repr(x) for x in W1])
    p2 = mlprod_weights(W1, eps1, [0.1, -0.1])
    print("mlprod p2   :", [repr(x) for x in p2])
