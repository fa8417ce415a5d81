"""Independent reference values for the test suite, computed with mpmath.

Run: python3 tools/oracles.py
"""
from math import comb, factorial

import mpmath as mp

mp.mp.dps = 60


def S(n, alpha=0):
    alpha = mp.mpf(alpha)
    return mp.fsum(1 / (k + alpha) for k in range(1, n + 1)) - mp.log(alpha + n + 1) + mp.log(alpha + 1)


def gamma_alpha(alpha):
    alpha = mp.mpf(alpha)
    return mp.log(alpha + 1) - mp.digamma(alpha + 1)


def transform(r, n, tau, alpha=0):
    N = sum(n)
    A = []
    for k in range(N + 1):
        a = (-1) ** (k + N) * comb(N, k)
        for nj, tj in zip(n, tau[1:]):
            a *= comb(r * k + nj + tj, nj)
        A.append(a)
    total = sum(A)
    return mp.fsum(a * S(r * k + tau[0], alpha) for k, a in enumerate(A)) / total, total


def q_poly(n, tau, y):
    # direct nested sum, m = 2 only
    top = n[-1] + tau[-1]
    return mp.fsum(
        mp.rf(-n[0], k) * mp.rf(1 + top - tau[1], k) / (mp.factorial(k) * mp.rf(1 + top - n[0] - tau[0], k)) * y**k
        for k in range(n[0] + 1)
    )


def thm1_integral(r, n, tau, absolute=True):
    nm, tm, t0 = n[-1], tau[-1], tau[0]
    N = sum(n)
    pref = 1
    for nj, tj in zip(n, tau[1:]):
        pref *= comb(nm + tm - tj, nj)

    def inner(t):
        def f(x):
            den = 1 - t + x * t
            v = x ** (nm + tm) * (1 - x**r) ** N / den ** (nm + 1)
            if len(n) == 2:
                q = q_poly(n, tau[1:], x * t / den)
                v *= abs(q) if absolute else q
            return v
        return mp.quad(f, [0, 0.5, 1])

    def outer(u):
        t = 1 / (1 + mp.exp(u))
        return (1 - t) / (u**2 + mp.pi**2) * t ** (nm + tm - t0) * (1 - t) ** (t0 - tm) * inner(t)

    mp.mp.dps = 20
    v = pref * mp.quad(outer, [-mp.inf, -10, 0, 10, mp.inf])
    mp.mp.dps = 60
    return v


if __name__ == "__main__":
    print("gamma", mp.euler)
    print("gamma_1", gamma_alpha(1))
    print("S_1", S(1), "S_2", S(2))
    a, _ = transform(1, [1], [1, 0])
    print("tau0=1 example", a, abs(a - mp.euler))
    a, _ = transform(1, [1], [0, 0])
    print("elsner(1,1)", a, abs(a - mp.euler))
    for nn in (1, 2, 3):
        a, _ = transform(1, [4 * nn, 4 * nn], [4 * nn, 2 * nn, 2 * nn])
        print("cor2_5", nn, mp.nstr(abs(a - mp.euler), 20), "bound", mp.nstr(mp.mpf(4 * nn) / (16 * 3**12) ** nn, 20))
    print("omega(1/(1+e))", 1 / ((1 / (1 + mp.e)) * (1 + mp.pi**2)))
    print("omega(1/2)", 2 / mp.pi**2)
    a, tot = transform(1, [1, 1], [1, 0, 0])
    print("thm1 m=2 lhs", tot * abs(mp.euler - a))
    print("thm1 m=2 |Q| integral", thm1_integral(1, [1, 1], [1, 0, 0], True))
    print("thm1 m=2 signed integral", thm1_integral(1, [1, 1], [1, 0, 0], False))
    print("lmax cor2_5", mp.mpf(16) / 531441)
