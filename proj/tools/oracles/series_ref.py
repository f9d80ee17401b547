#!/usr/bin/env python3
"""Reference q-expansions computed straight from the infinite products.

Everything here is an independent re-derivation used to pin down expected
coefficients; the generated header is committed and included by the test
suite. Regenerate with:

    python3 tools/oracles/series_ref.py > tests/frozen_series.h

Series are dicts {(qnum, znum): Fraction} with q-exponents stored over a
fixed denominator 24 and zeta-exponents over 2.
"""

from fractions import Fraction
from math import comb
import sys

PREC = {}


def mul(A, B, prec24):
    C = {}
    for (qa, za), ca in A.items():
        for (qb, zb), cb in B.items():
            q = qa + qb
            if q >= prec24:
                continue
            k = (q, za + zb)
            C[k] = C.get(k, Fraction(0)) + ca * cb
    return {k: v for k, v in C.items() if v != 0}


def eta_product(prec):
    p24 = 24 * prec
    acc = {(1, 0): Fraction(1)}
    n = 1
    while 1 + 24 * n < p24:
        acc = mul(acc, {(0, 0): Fraction(1), (24 * n, 0): Fraction(-1)}, p24)
        n += 1
    return acc


def theta_product(a, prec):
    p24 = 24 * prec
    acc = {(3, a): Fraction(1)}
    acc = mul(acc, {(0, 0): Fraction(1), (0, -2 * a): Fraction(-1)}, p24)
    n = 1
    while 3 + 24 * n < p24:
        for f in ({(0, 0): Fraction(1), (24 * n, 0): Fraction(-1)},
                  {(0, 0): Fraction(1), (24 * n, 2 * a): Fraction(-1)},
                  {(0, 0): Fraction(1), (24 * n, -2 * a): Fraction(-1)}):
            acc = mul(acc, f, p24)
        n += 1
    return acc


def quintuple_product(a, prec):
    p24 = 24 * prec
    acc = {(1, a): Fraction(1)}
    acc = mul(acc, {(0, 0): Fraction(1), (0, -2 * a): Fraction(1)}, p24)
    n = 1
    while 1 + 24 * n < p24:
        for f in ({(0, 0): Fraction(1), (24 * n, 0): Fraction(-1)},
                  {(0, 0): Fraction(1), (24 * n, 2 * a): Fraction(1)},
                  {(0, 0): Fraction(1), (24 * n, -2 * a): Fraction(1)}):
            acc = mul(acc, f, p24)
        n += 1
    n = 1
    while 1 + 24 * (2 * n - 1) < p24:
        for f in ({(0, 0): Fraction(1), (24 * (2 * n - 1), 4 * a): Fraction(-1)},
                  {(0, 0): Fraction(1), (24 * (2 * n - 1), -4 * a): Fraction(-1)}):
            acc = mul(acc, f, p24)
        n += 1
    return acc


def eta_inverse_power(c, prec, qmin24):
    """eta^-c for c > 0, truncated so products down to qmin24 stay exact."""
    p24 = 24 * prec - qmin24  # relative window
    acc = {(-c, 0): Fraction(1)}
    n = 1
    while -c + 24 * n < p24:
        f = {}
        k = 0
        while -c + 24 * n * k < p24:
            f[(24 * n * k, 0)] = Fraction(comb(k + c - 1, c - 1))
            k += 1
        acc = mul(acc, f, p24)
        n += 1
    return acc


def frac_binom(alpha, k):
    r = Fraction(1)
    for i in range(k):
        r *= (alpha - i) / Fraction(i + 1)
    return r


def eta_fractional_power(e, prec):
    """eta^e for rational e via per-factor binomial expansion of (1-q^n)^e."""
    from math import gcd
    e = Fraction(e)
    lead = e / 24
    scale = 24 * lead.denominator // gcd(24, lead.denominator)  # lcm(24, den)
    lead_num = int(lead * scale)
    assert Fraction(lead_num, scale) == lead
    p = scale * prec
    acc = {(lead_num, 0): Fraction(1)}
    n = 1
    while lead_num + scale * n < p:
        f = {}
        k = 0
        while lead_num + scale * n * k < p:
            f[(scale * n * k, 0)] = frac_binom(e, k) * (-1) ** k
            k += 1
        acc = mul(acc, f, p)
        n += 1
    return acc, scale


def emit(name, series, cols, scale_note):
    rows = sorted(series.items())
    print(f"// {scale_note}")
    print(f"inline const FrozenTerm {name}[] = {{")
    for (q, z), c in rows:
        if cols == 2:
            print(f"    {{{q}, 0, \"{c}\"}},")
        else:
            print(f"    {{{q}, {z}, \"{c}\"}},")
    print("};")
    print(f"inline const int {name}_len = {len(rows)};")
    print()


def main():
    print("// Generated by tools/oracles/series_ref.py -- do not edit by hand.")
    print("#pragma once")
    print()
    print("struct FrozenTerm { long qnum; long znum; const char* coeff; };")
    print()

    emit("kEtaRef", eta_product(12), 2, "eta to q^12; q-exponents over 24")
    emit("kTheta1Ref", theta_product(1, 8), 3,
         "theta_1 to q^8; q-exponents over 24, zeta over 2")
    emit("kTheta3Ref", theta_product(3, 8), 3,
         "theta_3 to q^8; q-exponents over 24, zeta over 2")
    emit("kQuintuple2Ref", quintuple_product(2, 8), 3,
         "quintuple series, a=2, to q^8; q over 24, zeta over 2")

    # the product theta_1..theta_5 / eta^6, truncated to q^6
    prec = 6
    p24 = 24 * prec
    blk = eta_inverse_power(6, prec, 0)
    for a in (1, 2, 3, 4, 5):
        blk = mul(blk, theta_product(a, prec + 2), p24)
    blk = {k: v for k, v in blk.items() if k[0] < p24}
    emit("kBlock12345Ref", blk, 3,
         "theta_1 theta_2 theta_3 theta_4 theta_5 / eta^6 to q^6; q over 24, zeta over 2")

    # eta^(5/2) to q^4: coefficients are rational with odd structure
    s, scale = eta_fractional_power(Fraction(5, 2), 4)
    rows = sorted(s.items())
    print(f"// eta^(5/2) to q^4; q-exponents over {scale}")
    print("inline const FrozenTerm kEtaPow52Ref[] = {")
    for (q, z), c in rows:
        print(f"    {{{q}, 0, \"{c}\"}},")
    print("};")
    print(f"inline const int kEtaPow52Ref_len = {len(rows)};")
    print(f"inline const long kEtaPow52Scale = {scale};")


if __name__ == "__main__":
    sys.exit(main())
