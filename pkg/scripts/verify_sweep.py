#!/usr/bin/env python3
"""Sweep both path formulas against the recurrence oracle on random systems.

Reports per-route match counts, including the two informational routes
that are expected to disagree on boundary instances: the strict
(axis-respecting only) path census for the monic formula, and the
k-indexed prefactor reading for the two-family formula.
"""

import argparse
import random
from fractions import Fraction

from orthopath import (
    CoefficientSystem,
    ExplicitSeq,
    mixed_product_value,
    monic_prefactor,
    monic_system,
    path_sum_mixed,
    path_sum_monic,
    strict_monic_weight_sum,
    triple_product_value,
)


def rand_seq(rng, size, nonzero=False):
    vals = []
    for _ in range(size):
        num = rng.choice([i for i in range(-9, 10) if i != 0 or not nonzero])
        vals.append(Fraction(num, rng.randint(1, 4)))
    return ExplicitSeq(tuple(vals))


def main() -> None:
    ap = argparse.ArgumentParser()
    ap.add_argument("--max", type=int, default=5)
    ap.add_argument("--seed", type=int, default=2024)
    args = ap.parse_args()
    rng = random.Random(args.seed)
    size = 3 * args.max + 4

    b, lam = rand_seq(rng, size), rand_seq(rng, size, nonzero=True)
    sys_m = monic_system(b, lam, "random-monic")
    ok = strict_ok = total = 0
    for m in range(args.max + 1):
        for n in range(args.max + 1):
            for k in range(args.max + 1):
                total += 1
                want = triple_product_value(m, n, k, sys_m)
                ok += path_sum_monic(m, n, k, b, lam).total == want
                strict = monic_prefactor(n, lam) * strict_monic_weight_sum(m, n, k, b, lam)
                strict_ok += strict == want
    print(f"monic: {ok}/{total} matched; strict census {strict_ok}/{total}")

    sys_a = CoefficientSystem(
        rand_seq(rng, size, True), rand_seq(rng, size), rand_seq(rng, size, True), "A"
    )
    sys_b = CoefficientSystem(
        rand_seq(rng, size, True), rand_seq(rng, size), rand_seq(rng, size, True), "B"
    )
    ok = alt_ok = total = 0
    for m in range(args.max + 1):
        for n in range(args.max + 1):
            for k in range(args.max + 1):
                total += 1
                want = mixed_product_value(m, n, k, sys_a, sys_b)
                ok += path_sum_mixed(m, n, k, sys_a, sys_b).total == want
                alt = path_sum_mixed(m, n, k, sys_a, sys_b, k_indexed_prefactor=True)
                alt_ok += alt.total == want
    print(f"mixed: {ok}/{total} matched; k-indexed prefactor {alt_ok}/{total}")


if __name__ == "__main__":
    main()
