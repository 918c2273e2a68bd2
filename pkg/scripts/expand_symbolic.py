#!/usr/bin/env python3
"""Print the symbolic expansion of a monic product coefficient.

Shows each path of the (m, n, k) census with its weight polynomial, the
expanded coefficient, and a numeric evaluation at b[j] = j, lam[j] = j,
cross-checked against the recurrence oracle.
"""

import argparse
from fractions import Fraction

from orthopath import (
    AffineSeq,
    SymbolicSeq,
    monic_system,
    path_sum_monic,
    triple_product_value,
)


def main() -> None:
    ap = argparse.ArgumentParser()
    ap.add_argument("--m", type=int, default=3)
    ap.add_argument("--n", type=int, default=3)
    ap.add_argument("--k", type=int, default=3)
    args = ap.parse_args()

    res = path_sum_monic(args.m, args.n, args.k, SymbolicSeq("b"), SymbolicSeq("l"))
    for path, w in res.per_path.items():
        print(f"{path}  {w}")
    print(f"\ncoefficient = {res.weight_sum}")
    print(f"prefactor   = {res.prefactor}")

    b = AffineSeq(Fraction(0), Fraction(1))
    lam = AffineSeq(Fraction(0), Fraction(1))
    numeric = path_sum_monic(args.m, args.n, args.k, b, lam)
    want = triple_product_value(args.m, args.n, args.k, monic_system(b, lam))
    print(f"\nat b[j]=j, lam[j]=j: total = {numeric.total}, oracle = {want}")


if __name__ == "__main__":
    main()
