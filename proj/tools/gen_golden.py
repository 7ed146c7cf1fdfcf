#!/usr/bin/env python3
"""Regenerate the high-precision golden data under data/.

Outputs:
  data/zeros100.txt             first 100 nontrivial zeta zeros (imaginary parts)
  data/coefficients_golden.csv  explicit-formula coefficients a(rho, m), m = 1..4

The script also prints a constants report (twin-prime constant, Euler
product values, zeta derivatives, zero-sum diagnostics) whose values are
frozen as literals in the C++ test suite.

Everything is computed with mpmath at 20-35 significant digits.  The
correction product

    G(s) = prod_{p>2} (1 + 2/((p-2) (p^{s+1}+1)))

converges too slowly near Re(s) = -3/4 for direct truncation, so it is
evaluated as a finite product over p <= P0 times an analytic tail: with
X = 1/p, Y = p^(-w), w = s+1, each factor's log expands as a bivariate
series log(1 + 2XY/((1-2X)(1+Y))) = sum c_{a,b} X^a Y^b, and the sum over
primes p > P0 of p^(-(a+bw)) is evaluated exactly through Moebius
inversion of depleted zeta logs.  The result is validated against the two
exact identities G(1) = 5 zeta(4)/(4 zeta(2) C2) and
G(0) = 3 zeta(2)/(4 C2), and against a run with a different P0 split.

Runtime: ~15 minutes.  Run from the repository root:
    python3 tools/gen_golden.py
"""

import math
import os
import sys
import time
from fractions import Fraction

from mpmath import (mp, mpf, mpc, zeta, zetazero, diff, log, exp,
                    pi, euler, factorial, fabs, nstr)

P0 = 3000

MU = [0, 1, -1, -1, 0, -1, 1, -1, 0, 0, 1, -1, 0, -1, 1, 1, 0]


def sieve_primes(n):
    flags = bytearray([1]) * (n + 1)
    flags[0] = flags[1] = 0
    p = 2
    while p * p <= n:
        if flags[p]:
            flags[p * p::p] = bytearray(len(flags[p * p::p]))
        p += 1
    return [i for i in range(2, n + 1) if flags[i]]


PRIMES = sieve_primes(P0)
ODD_PRIMES = [p for p in PRIMES if p > 2]


def log_series_coeffs(amax, bmax):
    """Coefficients c[a][b] of log(1 + 2XY/((1-2X)(1+Y))) as Fractions."""
    u = [[0] * (bmax + 1) for _ in range(amax + 1)]
    for a in range(1, amax + 1):
        for b in range(1, bmax + 1):
            u[a][b] = (-1) ** (b + 1) * 2 ** a
    out = [[Fraction(0)] * (bmax + 1) for _ in range(amax + 1)]
    upow = [row[:] for row in u]
    v = 1
    while True:
        sgn = Fraction((-1) ** (v + 1), v)
        for a in range(amax + 1):
            for b in range(bmax + 1):
                if upow[a][b]:
                    out[a][b] += sgn * upow[a][b]
        v += 1
        if v > min(amax, bmax):
            break
        nxt = [[0] * (bmax + 1) for _ in range(amax + 1)]
        for a1 in range(v - 1, amax + 1):
            row = upow[a1]
            for b1 in range(v - 1, bmax + 1):
                c1 = row[b1]
                if not c1:
                    continue
                for a2 in range(1, amax + 1 - a1):
                    urow = u[a2]
                    for b2 in range(1, bmax + 1 - b1):
                        c2 = urow[b2]
                        if c2:
                            nxt[a1 + a2][b1 + b2] += c1 * c2
        upow = nxt
    return out


AMAX, BMAX = 10, 40
COEF = log_series_coeffs(AMAX, BMAX)


def prime_zeta_tail(z, goal, primes=PRIMES, p0=P0):
    """sum_{p > p0} p^(-z) for Re z > 1.05, via Moebius-depleted zeta logs."""
    rez = mp.re(z)
    logs = [log(mpf(p)) for p in primes]
    total = mpc(0)
    lim = mpf(10) ** (-(goal + 6))
    n = 1
    while n < len(MU):
        if n > 1 and exp(-n * rez * log(mpf(p0))) < lim:
            break
        if MU[n] != 0:
            nz = n * z
            lz = log(zeta(nz))
            for lp in logs:
                lz += log(1 - exp(-nz * lp))
            total += mpf(MU[n]) / n * lz
        n += 1
    return total


def kept_pairs(rew, goal):
    keep = []
    lp0 = log(mpf(P0))
    thresh = mpf(10) ** (-(goal + 4))
    for a in range(1, AMAX + 1):
        for b in range(1, BMAX + 1):
            c = COEF[a][b]
            if c == 0:
                continue
            q = a + b * rew
            if q <= mpf("1.05"):
                raise ValueError("tail exponent too close to 1")
            cmag = abs(mpf(c.numerator) / c.denominator)
            bound = cmag * 2 * exp((1 - q) * lp0) / ((q - 1) * lp0)
            if bound > thresh:
                keep.append((a, b, mpf(c.numerator) / c.denominator))
    return keep


def G_hybrid(w, goal, primes=PRIMES, odd=ODD_PRIMES, p0=P0):
    prod = mp.one
    for p in odd:
        prod *= 1 + mpf(2) / ((p - 2) * (mpf(p) ** w + 1))
    tail = mpc(0)
    for a, b, c in kept_pairs(mp.re(w), goal):
        tail += c * prime_zeta_tail(a + b * w, goal, primes=primes, p0=p0)
    return prod * exp(tail)


def twin_prime_constant(goal):
    acc = mpf(0)
    for p in ODD_PRIMES:
        acc += log(1 - mpf(1) / (p - 1) ** 2)
    lp0 = log(mpf(P0))
    lim = mpf(10) ** (-(goal + 6))
    a = 2
    while True:
        coef = Fraction(2 - 2 ** a, a)
        cmag = abs(mpf(coef.numerator)) / coef.denominator
        # a priori bound keyed to the true tail size: the computed term
        # bottoms out at rounding noise which 2^a/a would amplify.
        bound = cmag * 2 * exp((1 - a) * lp0) / ((a - 1) * lp0)
        if a > 4 and bound < lim:
            break
        acc += mpf(coef.numerator) / coef.denominator * prime_zeta_tail(mpf(a), goal)
        a += 1
    return exp(acc)


def a_rho(rho, m, zprime, c2, gval):
    half = rho / 2
    num = 2 * c2 * factorial(m) * zeta(half - 1) * zeta(half) * gval
    den = (mpf(2) ** half + 1) * zprime * (half - 1)
    for i in range(m):
        den *= half + i
    return num / den


def main():
    t0 = time.time()
    here = os.path.dirname(os.path.abspath(__file__))
    data_dir = os.path.join(here, "..", "data")
    os.makedirs(data_dir, exist_ok=True)

    mp.dps = 35
    c2 = twin_prime_constant(30)
    print("C2                      =", nstr(c2, 30))

    z2, z4 = zeta(2), zeta(4)
    g1_identity = 5 * z4 / (4 * z2 * c2)
    g0_identity = 3 * z2 / (4 * c2)
    g1_hybrid = G_hybrid(mpf(2), 28)
    g0_hybrid = G_hybrid(mpf(1), 28)
    print("G(1) identity           =", nstr(g1_identity, 25))
    print("G(1) hybrid             =", nstr(g1_hybrid, 25))
    print("G(0) identity           =", nstr(g0_identity, 25))
    print("G(0) hybrid             =", nstr(g0_hybrid, 25))
    assert fabs(g1_hybrid - g1_identity) < mpf(10) ** -22, "G(1) hybrid validation failed"
    assert fabs(g0_hybrid - g0_identity) < mpf(10) ** -22, "G(0) hybrid validation failed"

    zp2 = diff(zeta, mpf(2))
    print("zeta(2)                 =", nstr(z2, 25))
    print("zeta'(2)                =", nstr(zp2, 25))
    print("zeta'(0)                =", nstr(diff(zeta, mpf(0)), 25))
    print("G'/G(0)                 =", nstr(mpf(2) / 3 * log(2) + 2 * zp2 / z2, 25))
    print("euler_gamma             =", nstr(+euler, 30))
    print("log(2*pi)               =", nstr(log(2 * pi), 30))
    mt11 = mpf(1) / 2 - mpf(1) / 2 * (log(1) - 1 + euler + log(2 * pi))
    print("main_term(1,1)          =", nstr(mt11, 25))

    print("computing zeros...", flush=True)
    mp.dps = 32
    gammas = []
    for n in range(1, 101):
        gammas.append(mp.im(zetazero(n)))
    with open(os.path.join(data_dir, "zeros100.txt"), "w", newline="\n") as f:
        f.write("# Imaginary parts of the first 100 nontrivial zeros of the\n")
        f.write("# Riemann zeta-function, one per line, ascending.\n")
        for g in gammas:
            f.write(nstr(g, 17, strip_zeros=False) + "\n")
    print("zeros written, t=%.0fs" % (time.time() - t0), flush=True)

    rows = []
    avals = {}
    zp_abs = []
    for n, g in enumerate(gammas, start=1):
        if n == 1:
            mp.dps, goal = 35, 26
        else:
            mp.dps, goal = 20, 13
        rho = mpc(mpf(1) / 2, g)
        zprime = diff(zeta, rho)
        zp_abs.append(fabs(zprime))
        if n == 1:
            print("zeta'(rho_1)            =", nstr(zprime, 25))
            assert fabs(zeta(rho)) < mpf(10) ** -25
        gval = G_hybrid(rho / 2, goal)  # w = s+1 with s = rho/2 - 1
        if n == 1:
            pr2 = sieve_primes(12000)
            gcheck = G_hybrid(rho / 2, 24, primes=pr2,
                              odd=[p for p in pr2 if p > 2], p0=12000)
            assert fabs(gval - gcheck) / fabs(gval) < mpf(10) ** -20, \
                "G hybrid split validation failed: %s vs %s" % (nstr(gval, 25), nstr(gcheck, 25))
            print("G(rho_1/2 - 1)          =", nstr(gval, 25))
        for m in range(1, 5):
            av = a_rho(rho, m, zprime, c2, gval)
            avals[(n, m)] = av
            rows.append((g, m, av))
        if n in (1, 2, 5, 10, 25, 50, 75, 100):
            print("  zero %3d done, t=%.0fs" % (n, time.time() - t0), flush=True)

    with open(os.path.join(data_dir, "coefficients_golden.csv"), "w", newline="\n") as f:
        f.write("gamma,m,re_a,im_a\n")
        for g, m, av in rows:
            f.write("%.17g,%d,%.17g,%.17g\n"
                    % (float(g), m, float(mp.re(av)), float(mp.im(av))))

    mp.dps = 35
    rho1 = mpc(mpf(1) / 2, gammas[0])
    for m in range(1, 4):
        lhs = avals[(1, m + 1)]
        rhs = avals[(1, m)] * (m + 1) / (rho1 / 2 + m)
        assert fabs(lhs - rhs) / fabs(lhs) < mpf(10) ** -18

    for m in range(1, 5):
        print("|a(rho_1, %d)|           = %s" % (m, nstr(fabs(avals[(1, m)]), 22)))
    print("a(rho_1, 2)             = %s" % nstr(avals[(1, 2)], 22))

    mp.dps = 25
    for b in (2, 3):
        t1 = mpf(0)
        t2 = mpf(0)
        for n, g in enumerate(gammas, start=1):
            za = zp_abs[n - 1]
            t1 += 1 / (g ** b * za)
            t2 += 1 / (g ** b * za ** 2)
        print("T1(%d) over 100 zeros    = %s" % (b, nstr(t1, 20)))
        print("T2(%d) over 100 zeros    = %s" % (b, nstr(t2, 20)))

    for m in (1, 2):
        mods = [float(fabs(avals[(n, m)])) for n in range(1, 101)]
        q1 = sum(mods[0:25])
        q4 = sum(mods[75:100])
        xs = [math.log(float(g)) for g in gammas]
        ys = [math.log(v) for v in mods]
        nn = len(xs)
        sx = sum(xs); sy = sum(ys)
        sxx = sum(x * x for x in xs); sxy = sum(x * y for x, y in zip(xs, ys))
        slope = (nn * sxy - sx * sy) / (nn * sxx - sx * sx)
        print("m=%d: quarter sums q1=%.6g q4=%.6g ratio=%.4f, fit exponent=%.4f"
              % (m, q1, q4, q4 / q1, slope))
        print("m=%d: sum 2|a| over 100 zeros = %.12g" % (m, 2 * sum(mods)))

    mp.dps = 25
    print("C2 product to p<=3      =", nstr(1 - mpf(1) / 4, 10))
    acc = mpf(0)
    for p in sieve_primes(10 ** 6):
        if p > 2:
            acc += log(1 - mpf(1) / (p - 1) ** 2)
    print("C2 product to p<=1e6    =", nstr(exp(acc), 25))
    print("done in %.0fs" % (time.time() - t0))
    return 0


if __name__ == "__main__":
    sys.exit(main())
