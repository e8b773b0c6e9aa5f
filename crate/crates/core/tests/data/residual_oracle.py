#!/usr/bin/env python3
"""Naive oracle for the frozen residual table used by the acceptance suite.

For every (m, n, k) with m, n <= 4 it enumerates all m x n 0/1 matrices with
k ones, groups them into orbits by applying every (row, column) permutation
pair, classifies the vertices of one representative per orbit by comparing
neighbor sets, and sums 1/prod(delta!) exactly. Stabilizers are counted with
the full m!*n! loop.

Output: one line per (m, n, k):
    m n k classes residual_num residual_den stab_mismatch_count
"""

import itertools
import math
import sys
from fractions import Fraction


def apply(mat, m, n, rho, sigma):
    out = [[0] * n for _ in range(m)]
    for i in range(m):
        for j in range(n):
            out[rho[i]][sigma[j]] = mat[i][j]
    return tuple(tuple(r) for r in out)


def delta_product(mat, m, n):
    keys = {}
    for i in range(m):
        nb = frozenset(j for j in range(n) if mat[i][j])
        keys.setdefault(("R", nb), 0)
        keys[("R", nb)] += 1
    for j in range(n):
        nb = frozenset(i for i in range(m) if mat[i][j])
        keys.setdefault(("C", nb), 0)
        keys[("C", nb)] += 1
    p = 1
    for v in keys.values():
        p *= math.factorial(v)
    return p


def survey(m, n, k):
    rows_p = list(itertools.permutations(range(m)))
    cols_p = list(itertools.permutations(range(n)))
    seen = set()
    lhs = Fraction(0)
    classes = 0
    mismatch = 0
    total = 0
    for cells in itertools.combinations(range(m * n), k):
        mat = [[0] * n for _ in range(m)]
        for c in cells:
            mat[c // n][c % n] = 1
        key = tuple(tuple(r) for r in mat)
        if key in seen:
            continue
        orbit = set()
        stab = 0
        for rho in rows_p:
            for sigma in cols_p:
                img = apply(mat, m, n, rho, sigma)
                orbit.add(img)
                if img == key:
                    stab += 1
        seen |= orbit
        classes += 1
        total += len(orbit)
        assert len(orbit) * stab == math.factorial(m) * math.factorial(n)
        d = delta_product(mat, m, n)
        if d != stab:
            mismatch += 1
        lhs += Fraction(1, d)
    assert total == math.comb(m * n, k)
    rhs = Fraction(math.comb(m * n, k), math.factorial(m) * math.factorial(n))
    return classes, lhs - rhs, mismatch


def main():
    limit = int(sys.argv[1]) if len(sys.argv) > 1 else 4
    for m in range(1, limit + 1):
        for n in range(1, limit + 1):
            for k in range(m * n + 1):
                classes, res, mism = survey(m, n, k)
                print(m, n, k, classes, res.numerator, res.denominator, mism)


if __name__ == "__main__":
    main()
