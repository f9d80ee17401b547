#!/usr/bin/env python3
"""Reference values for orders of vanishing along the boundary.

The single-theta bent function is computed by brute minimisation over the
shift integer (no closed form), and block profiles by summation; minima over
[0,1] are located on successively finer grids and must agree, which guards
the candidate-point argument used by the library. Regenerate with:

    python3 tools/oracles/order_ref.py > tests/frozen_order.h
"""

from fractions import Fraction
import sys


def bent(x):
    """min over integers k of (x - 1/2 + k)^2 / 2, by brute scan near -x."""
    x = Fraction(x)
    center = round(Fraction(1, 2) - x)
    best = None
    for k in range(center - 3, center + 4):
        v = (x - Fraction(1, 2) + k) ** 2 / 2
        if best is None or v < best:
            best = v
    return best


def profile(thetas, eta_exp, x):
    """order of prod theta_{a}^{c} * eta^{e} at elliptic direction x."""
    x = Fraction(x)
    s = Fraction(eta_exp, 24)
    for a, c in thetas:
        s += c * bent(a * x)
    return s


BLOCKS = [
    # (label, [(a, c), ...], eta exponent)
    ("B1", [(1, 1), (2, 1), (3, 1), (4, 1), (5, 1)], -6),
    ("B2", [(1, 2), (2, 1), (3, 2), (4, 1), (5, 1), (6, 1), (8, 1), (11, 1)], -4),
    ("B3", [(1, 1)], 21),
    ("B4", [(2, 3), (3, -1), (5, 1)], 4),
    ("B5", [(1, 4), (2, 2), (3, 2), (4, 1), (5, 1)], -14),
]

SAMPLES = [Fraction(0), Fraction(1, 12), Fraction(1, 7), Fraction(1, 5),
           Fraction(1, 4), Fraction(1, 3), Fraction(2, 5), Fraction(1, 2),
           Fraction(5, 8), Fraction(17, 23), Fraction(9, 10), Fraction(1)]


def grid_min(thetas, eta_exp, density):
    """min of the profile over {j / density : 0 <= j <= density}."""
    best = None
    arg = None
    for j in range(density + 1):
        v = profile(thetas, eta_exp, Fraction(j, density))
        if best is None or v < best:
            best, arg = v, Fraction(j, density)
    return best, arg


def main():
    print("// Generated by tools/oracles/order_ref.py -- do not edit by hand.")
    print("#pragma once")
    print()
    print("struct FrozenOrderSample { const char* block; const char* x; const char* value; };")
    print("struct FrozenOrderMin { const char* block; const char* min; const char* argmin; };")
    print()
    print("inline const FrozenOrderSample kOrderSamples[] = {")
    for label, thetas, e in BLOCKS:
        for x in SAMPLES:
            v = profile(thetas, e, x)
            print(f'    {{"{label}", "{x}", "{v}"}},')
    print("};")
    print("inline const int kOrderSamples_len = "
          f"{len(BLOCKS) * len(SAMPLES)};")
    print()
    print("inline const FrozenOrderMin kOrderMins[] = {")
    for label, thetas, e in BLOCKS:
        # Every piece of the profile is a quadratic with leading coefficient
        # m = (sum c a^2)/2 > 0, so minima sit at kinks j/a or at vertices
        # with denominator 2*sum(c a^2); a grid containing both cannot miss.
        m2 = sum(c * a * a for a, c in thetas)
        assert m2 > 0
        d1 = 2 * m2
        for a, _ in thetas:
            d1 = d1 * a // __import__("math").gcd(d1, a)
        best1, arg1 = grid_min(thetas, e, d1)
        best2, arg2 = grid_min(thetas, e, 2 * d1)
        assert best1 == best2, (label, best1, best2)
        assert arg1 == arg2, (label, arg1, arg2)
        print(f'    {{"{label}", "{best1}", "{arg1}"}},')
    print("};")
    print(f"inline const int kOrderMins_len = {len(BLOCKS)};")


if __name__ == "__main__":
    sys.exit(main())
