#!/usr/bin/env python3
# Copyright 2026 The constq-waves Authors
# SPDX-License-Identifier: Apache-2.0
"""Reference values for the unit tests, computed with mpmath at 50 digits.

The printed literals are frozen into tests/*.cpp; rerun this script to audit
them. Nothing here shares code with the C++ library.
"""

import mpmath as mp

mp.mp.dps = 50


def wright(lam, mu, z):
    def term(n):
        g = lam * n + mu
        if g <= 0 and g == int(g):
            return mp.mpf(0)
        return z**n / (mp.factorial(n) * mp.gamma(g))

    return mp.nsum(term, [0, mp.inf], method="direct", steps=[4000])


def wright_sum(lam, mu, z, nmax=4000):
    s = mp.mpf(0)
    for n in range(nmax):
        g = lam * n + mu
        if g <= 0 and g == int(g):
            continue
        t = z**n / (mp.factorial(n) * mp.gamma(g))
        s += t
        if n > 10 and abs(t) < mp.mpf(10) ** (-45) * abs(s):
            break
    return s


def M(r, b):
    return wright_sum(-b, 1 - b, -r)


def F(r, b):
    return wright_sum(-b, 0, -r)


def stable_feller(x, alpha, theta):
    # p(x) = (1/π) Re ∫₀^∞ exp(-i k x - k^α e^{iθπ/2}) dk
    w = mp.exp(1j * theta * mp.pi / 2)
    f = lambda k: mp.re(mp.exp(-1j * k * x - k**alpha * w))
    return mp.quad(f, mp.linspace(0, 400, 801) + [mp.inf]) / mp.pi


def show(name, v):
    print(f"{name} = {mp.nstr(v, 17)}")


def main():
    print("# Wright function")
    show("W(1,1;1) = I0(2)", wright_sum(1, 1, 1))
    show("besseli(0,2)", mp.besseli(0, 2))
    show("W(0.5,1;2)", wright_sum(0.5, 1, 2))
    show("W(-0.5,0.5;-1)", wright_sum(-0.5, 0.5, -1))
    show("W(0.3,0.7;-5)", wright_sum(0.3, 0.7, -5))
    print("# M(r;beta)")
    for b in [0.25, 1 / 3, 0.5, 0.75, 0.9, 0.99]:
        for r in [0, 0.5, 1, 2, 3, 4]:
            if (b == 0.99 and r > 1) or (b == 0.9 and r > 2):
                continue
            show(f"M({r};{b})", M(mp.mpf(r), mp.mpf(b)))
    show("Airy M(1.5;1/3)", 3 ** (mp.mpf(2) / 3) * mp.airyai(1.5 / 3 ** (mp.mpf(1) / 3)))
    show("1/Gamma(1/4)", 1 / mp.gamma(mp.mpf(1) / 4))
    show("1/Gamma(1/3)", 1 / mp.gamma(mp.mpf(1) / 3))
    show("1/Gamma(0.49)", 1 / mp.gamma(mp.mpf("0.49")))
    print("# F(r;beta)")
    for b in [0.25, 0.75]:
        for r in [0.5, 2]:
            show(f"F({r};{b})", F(mp.mpf(r), mp.mpf(b)))
    print("# M at larger r (series at high precision)")
    mp.mp.dps = 300
    for b, r in [(0.25, 6), (0.5, 8), (0.75, 5), (0.75, 6), (0.9, 2), (0.99, 1.0)]:
        show(f"M({r};{b})", M(mp.mpf(r), mp.mpf(b)))
    mp.mp.dps = 50
    print("# stable densities (Feller inversion integral)")
    for a, th, y in [(1.5, -0.5, 0.7), (1.5, -0.5, -1.2), (1.5, 0.2, 1.0), (0.75, -0.75, 1.3),
                     (0.75, 0.0, 0.8), (1.25, -0.75, 2.0), (1.5, 0.0, 10.0), (1.25, 0.0, 3.0),
                     (1.8, 0.2, 10.0), (1.8, 0.0, 30.0), (1.25, 0.2, 100.0)]:
        show(f"p({y};{a},{th})", stable_feller(mp.mpf(y), mp.mpf(a), mp.mpf(th)))
    show("p(2;1/2,-1/2)", mp.mpf(2) ** -1.5 / 2 * mp.exp(-mp.mpf(1) / 8) / mp.sqrt(mp.pi))
    print("# Green functions at D = 1")
    for b, x, t in [(0.75, 0.5, 1.0), (0.75, 1.0, 2.0), (0.9, 0.3, 0.7)]:
        r = x / mp.mpf(t) ** b
        show(f"Gc({x},{t};{b})", M(r, b) / (2 * mp.mpf(t) ** b))
        show(f"Gs({x},{t};{b})", F(r, b) / t)
    print("# fractional calculus")
    show("Gamma(3)/Gamma(2.75)", mp.gamma(3) / mp.gamma(2.75))
    show("Gamma(3)/Gamma(3.25)", mp.gamma(3) / mp.gamma(3.25))
    show("2/sqrt(pi)", 2 / mp.sqrt(mp.pi))
    show("1/sqrt(pi)", 1 / mp.sqrt(mp.pi))
    show("Gamma(2.5)/Gamma(1.2)", mp.gamma(2.5) / mp.gamma(1.2))
    print("# material")
    show("nu(Q=1000)", 2 / mp.pi * mp.atan(mp.mpf(1) / 1000))
    show("beta(Q=1000)", 1 - mp.atan(mp.mpf(1) / 1000) / mp.pi)
    show("nu(Q=10)", 2 / mp.pi * mp.atan(mp.mpf(1) / 10))
    print("# stable medians and cdf")
    show("Levy median mu=1", 1 / (2 * mp.erfinv(mp.mpf(1) / 2) ** 2))
    show("Levy cdf(2;1)", mp.erfc(mp.sqrt(mp.mpf(1) / 4)))


if __name__ == "__main__":
    main()
