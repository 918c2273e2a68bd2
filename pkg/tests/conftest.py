import random
import sys
from fractions import Fraction
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from orthopath import (
    AffineSeq,
    CoefficientSystem,
    ConstantSeq,
    ExplicitSeq,
    monic_system,
)

SYSTEMS_DIR = Path(__file__).parent.parent / "systems"


def random_fractions(rng, size, nonzero=False):
    values = []
    for _ in range(size):
        num = rng.choice([i for i in range(-9, 10) if i != 0]) if nonzero else rng.randint(-9, 9)
        values.append(Fraction(num, rng.randint(1, 5)))
    return tuple(values)


def random_ints(rng, size, nonzero=False):
    pool = [i for i in range(-7, 8) if i != 0 or not nonzero]
    return tuple(rng.choice(pool) for _ in range(size))


def random_monic(seed, size=22, integer=False):
    """A pseudo-random monic system plus its (b, lam) sequences."""
    rng = random.Random(seed)
    draw = random_ints if integer else random_fractions
    b = ExplicitSeq(draw(rng, size))
    lam = ExplicitSeq(draw(rng, size, nonzero=True))
    return b, lam, monic_system(b, lam, f"random-monic-{seed}")


def random_system(seed, size=22, integer=False, label=None):
    rng = random.Random(seed)
    draw = random_ints if integer else random_fractions
    return CoefficientSystem(
        alpha=ExplicitSeq(draw(rng, size, nonzero=True)),
        beta=ExplicitSeq(draw(rng, size)),
        gamma=ExplicitSeq(draw(rng, size, nonzero=True)),
        label=label or f"random-{seed}",
    )


def random_system_pair(seed, size=22, integer=False):
    return (
        random_system(seed, size, integer, label=f"pair-{seed}-a"),
        random_system(seed + 10_000, size, integer, label=f"pair-{seed}-b"),
    )


def random_monotone_monic(seed, size=22):
    """b weakly increasing, lam positive and weakly increasing."""
    rng = random.Random(seed)
    b_vals, lam_vals = [], []
    b = Fraction(rng.randint(-3, 3))
    lam = Fraction(rng.randint(1, 4), rng.randint(1, 3))
    for _ in range(size):
        b_vals.append(b)
        lam_vals.append(lam)
        b += Fraction(rng.randint(0, 4), rng.randint(1, 3))
        lam += Fraction(rng.randint(0, 4), rng.randint(1, 3))
    bs, ls = ExplicitSeq(tuple(b_vals)), ExplicitSeq(tuple(lam_vals))
    return bs, ls, monic_system(bs, ls, f"monotone-{seed}")


def random_dominant_pair(seed, size=22):
    """A pair satisfying the dominance rule: primed sequences increasing and
    positive, unprimed pointwise at least as large."""
    rng = random.Random(seed)

    def increasing(start_lo, start_hi):
        vals = [Fraction(rng.randint(start_lo, start_hi), rng.randint(1, 2))]
        for _ in range(size - 1):
            vals.append(vals[-1] + Fraction(rng.randint(0, 3), rng.randint(1, 2)))
        return vals

    ap = increasing(1, 3)
    gp = increasing(1, 3)
    bp = increasing(0, 2)
    bump = lambda: Fraction(rng.randint(0, 3), rng.randint(1, 2))
    a = [x + bump() for x in ap]
    g = [max(gp[i], ap[i]) + bump() for i in range(size)]
    be = [bp[i] + bump() for i in range(size)]
    prime = CoefficientSystem(
        ExplicitSeq(tuple(ap)), ExplicitSeq(tuple(bp)), ExplicitSeq(tuple(gp)),
        f"dominated-{seed}",
    )
    main = CoefficientSystem(
        ExplicitSeq(tuple(a)), ExplicitSeq(tuple(be)), ExplicitSeq(tuple(g)),
        f"dominant-{seed}",
    )
    return main, prime


@pytest.fixture
def chebyshev_like():
    return monic_system(ConstantSeq(0), ConstantSeq(1), "chebyshev-like")


@pytest.fixture
def hermite_like():
    """b = 0, lam[j] = j."""
    b = ConstantSeq(0)
    lam = AffineSeq(Fraction(0), Fraction(1))
    return b, lam, monic_system(b, lam, "hermite-like")


@pytest.fixture
def monotone_monic():
    """b[j] = j, lam[j] = j."""
    b = AffineSeq(Fraction(0), Fraction(1))
    lam = AffineSeq(Fraction(0), Fraction(1))
    return b, lam, monic_system(b, lam, "monotone-monic")
