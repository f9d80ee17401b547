#!/usr/bin/env python3
"""Reference counts of generalized theta block shapes per index.

A shape is a multiset {a_1,...} of positive integers, and its cost is
sum of w(a) with w(a) = a^2 * prod_{p | a} (1 - 1/p^2); shapes of index m
are those with total cost 2m. The library counts them via a generating
function product, so this oracle counts by direct recursive enumeration
of nondecreasing multisets instead. Regenerate with:

    python3 tools/oracles/count_ref.py > tests/frozen_counts.h
"""

from fractions import Fraction
from functools import lru_cache
import sys

MAX_M = 40


def weight(a):
    w = Fraction(a * a)
    n, p = a, 2
    primes = set()
    while p * p <= n:
        if n % p == 0:
            primes.add(p)
            while n % p == 0:
                n //= p
        p += 1
    if n > 1:
        primes.add(n)
    for p in primes:
        w *= 1 - Fraction(1, p * p)
    assert w.denominator == 1
    return int(w)


def main():
    budget = 2 * MAX_M
    usable = [a for a in range(1, budget + 1) if weight(a) <= budget]

    @lru_cache(maxsize=None)
    def count(remaining, idx):
        if remaining == 0:
            return 1
        total = 0
        for i in range(idx, len(usable)):
            w = weight(usable[i])
            if w <= remaining:
                total += count(remaining - w, i)
        return total

    print("// Generated by tools/oracles/count_ref.py -- do not edit by hand.")
    print("#pragma once")
    print()
    print("// kShapeCounts[m-1] = number of shape multisets of index m, m = 1..%d" % MAX_M)
    print("inline const long long kShapeCounts[] = {")
    for m in range(1, MAX_M + 1):
        print(f"    {count(2 * m, 0)},  // m = {m}")
    print("};")
    print(f"inline const int kShapeCounts_len = {MAX_M};")
    print()
    print("// weights w(a) for a = 1..16")
    print("inline const long kShapeWeights[] = {", ", ".join(str(weight(a)) for a in range(1, 17)), "};")


if __name__ == "__main__":
    sys.exit(main())
