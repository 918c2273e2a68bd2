"""Coefficient systems of three-term recurrences.

A family of orthogonal polynomials is determined by the recurrence

    alpha[n+1] * p[n+1](x) = (x - beta[n]) * p[n](x) - gamma[n-1] * p[n-1](x)

with p[-1] = 0 and p[0] = 1.  A :class:`CoefficientSystem` holds the
three coefficient sequences.  The recurrence reads alpha from index 1,
beta and gamma from index 0; ``alpha`` at index 0 is defined to be 0 by
convention, which is what the two-family edge weights need at height 0
(the acceptance suite pins this against the recurrence oracle).

Sequences come in a few shapes (explicit list, affine in the index,
constant, symbolic family), are immutable, and evaluate eagerly: an
explicit list raises :class:`SequenceRangeError` on any out-of-range
index rather than extending silently.

JSON wire format for a system file::

    {"label": "hermite-like",
     "alpha": {"family": "constant", "value": "1"},
     "beta":  {"family": "constant", "value": "0"},
     "gamma": {"family": "affine", "c0": "1", "c1": "1"}}

where a sequence is one of
``{"family":"explicit","values":["1/2","2",...]}`` (index i = position i),
``{"family":"affine","c0":"p/q","c1":"p/q"}``,
``{"family":"constant","value":"p/q"}``, or
``{"family":"symbolic","tag":"b"}`` (optional ``"shift"`` adds to the
index, so gamma of a monic family can be the l-family shifted by 1).
Rationals are decimal-free strings "p/q".
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Tuple, Union

from .scalars import (
    FAMILIES,
    DomainMismatchError,
    Poly,
    Scalar,
    UnsupportedDomainError,
    indet,
    parse_rational,
    scalar_div,
    scalar_product,
    scalar_sign,
)


class SequenceRangeError(IndexError):
    """An explicit coefficient list was asked for an index it does not hold."""


@dataclass(frozen=True)
class ExplicitSeq:
    """Fixed-length list of scalars; index i is values[i]."""

    values: Tuple[Scalar, ...]

    def at(self, i: int) -> Scalar:
        if i < 0 or i >= len(self.values):
            raise SequenceRangeError(
                f"index {i} outside explicit sequence of length {len(self.values)}"
            )
        return self.values[i]

    @property
    def is_symbolic(self) -> bool:
        return any(isinstance(v, Poly) for v in self.values)


@dataclass(frozen=True)
class AffineSeq:
    """i -> c0 + c1*i with rational c0, c1."""

    c0: Fraction
    c1: Fraction

    def at(self, i: int) -> Scalar:
        if i < 0:
            raise SequenceRangeError(f"negative index {i}")
        return self.c0 + self.c1 * i

    is_symbolic = False


@dataclass(frozen=True)
class ConstantSeq:
    value: Scalar

    def at(self, i: int) -> Scalar:
        if i < 0:
            raise SequenceRangeError(f"negative index {i}")
        return self.value

    @property
    def is_symbolic(self) -> bool:
        return isinstance(self.value, Poly)


@dataclass(frozen=True)
class SymbolicSeq:
    """i -> the indeterminate family[i + shift]."""

    family: str
    shift: int = 0

    def at(self, i: int) -> Scalar:
        if i < 0 or i + self.shift < 0:
            raise SequenceRangeError(f"negative index {i}")
        return indet(self.family, i + self.shift)

    is_symbolic = True


@dataclass(frozen=True)
class ShiftedSeq:
    """View of another sequence with the index shifted by a fixed offset."""

    base: "SequenceSpec"
    offset: int

    def at(self, i: int) -> Scalar:
        return self.base.at(i + self.offset)

    @property
    def is_symbolic(self) -> bool:
        return self.base.is_symbolic


SequenceSpec = Union[ExplicitSeq, AffineSeq, ConstantSeq, SymbolicSeq, ShiftedSeq]


@dataclass(frozen=True)
class CoefficientSystem:
    """The three coefficient sequences of a three-term recurrence.

    Immutable and pure; safe to share across workers.
    """

    alpha: SequenceSpec
    beta: SequenceSpec
    gamma: SequenceSpec
    label: str = "system"

    def __post_init__(self) -> None:
        symbolic = [s.is_symbolic for s in (self.alpha, self.beta, self.gamma)]
        if any(symbolic):
            for s in (self.alpha, self.beta, self.gamma):
                if isinstance(s, ExplicitSeq) and any(
                    isinstance(v, Fraction) and v.denominator != 1 for v in s.values
                ):
                    raise DomainMismatchError(
                        "symbolic systems cannot mix in non-integer rationals"
                    )

    @property
    def is_symbolic(self) -> bool:
        return any(s.is_symbolic for s in (self.alpha, self.beta, self.gamma))

    # Coefficient access used by weights and the oracle.  alpha_at(0) is
    # the fixed convention value 0, whatever the raw sequence would say.
    def alpha_at(self, i: int) -> Scalar:
        if i == 0:
            return 0
        return self.alpha.at(i)

    def beta_at(self, i: int) -> Scalar:
        return self.beta.at(i)

    def gamma_at(self, i: int) -> Scalar:
        return self.gamma.at(i)

    def coeff_at(self, which: str, i: int) -> Scalar:
        """Coefficient by name, one of "alpha", "beta", "gamma"."""
        if which == "alpha":
            return self.alpha_at(i)
        if which == "beta":
            return self.beta_at(i)
        if which == "gamma":
            return self.gamma_at(i)
        raise ValueError(f"unknown coefficient name {which!r}")

    def require_range(self, top: int) -> None:
        """Eagerly probe every coefficient needed for indices up to ``top``."""
        for i in range(1, top + 1):
            self.alpha.at(i)
        for i in range(0, top + 1):
            self.beta.at(i)
            self.gamma.at(i)

    def is_monic(self, upto: int) -> bool:
        """True when alpha is identically 1 over indices 1..upto."""
        return all(self.alpha.at(i) == 1 for i in range(1, upto + 1))

    def positive_definite(self, upto: int) -> bool:
        """alpha[n] > 0 for 1 <= n <= upto and gamma[n] > 0 for 0 <= n <= upto."""
        if self.is_symbolic:
            raise UnsupportedDomainError("positivity is a numeric-mode notion")
        return all(
            scalar_sign(self.alpha.at(i)) > 0 for i in range(1, upto + 1)
        ) and all(scalar_sign(self.gamma.at(i)) > 0 for i in range(0, upto + 1))

    def norm_squared(self, k: int) -> Scalar:
        """L(p_k * p_k) = gamma[0]...gamma[k-1] / (alpha[1]...alpha[k]).

        k = 0 gives 1 (empty products).  Symbolic mode requires monic
        alpha, since the quotient is otherwise not representable.
        """
        if k < 0:
            raise ValueError("norm index must be nonnegative")
        num = scalar_product(self.gamma.at(i) for i in range(k))
        den = scalar_product(self.alpha.at(i) for i in range(1, k + 1))
        return scalar_div(num, den)


def monic_system(
    b: SequenceSpec, lam: SequenceSpec, label: str = "monic"
) -> CoefficientSystem:
    """The monic specialization: alpha = 1, beta[n] = b[n], gamma[n] = lam[n+1].

    ``b`` must be defined from index 0, ``lam`` from index 1.
    """
    return CoefficientSystem(
        alpha=ConstantSeq(1),
        beta=b,
        gamma=ShiftedSeq(lam, 1),
        label=label,
    )


def monic_b_lambda(sys: CoefficientSystem, upto: int) -> Tuple[SequenceSpec, SequenceSpec]:
    """Recover (b, lam) from a monic system: b[n] = beta[n], lam[j] = gamma[j-1].

    Raises if alpha deviates from 1 anywhere in 1..upto.
    """
    if not sys.is_monic(upto):
        raise ValueError(f"system {sys.label!r} is not monic up to index {upto}")
    return sys.beta, ShiftedSeq(sys.gamma, -1)


# -- JSON wire format -----------------------------------------------------

def _parse_value(raw: object) -> Scalar:
    if isinstance(raw, bool):
        raise ValueError("booleans are not scalars")
    if isinstance(raw, int):
        return Fraction(raw)
    if isinstance(raw, str):
        return parse_rational(raw)
    raise ValueError(f"coefficient values must be ints or 'p/q' strings, got {raw!r}")


def sequence_from_json(obj: dict) -> SequenceSpec:
    family = obj.get("family")
    if family == "explicit":
        return ExplicitSeq(tuple(_parse_value(v) for v in obj["values"]))
    if family == "affine":
        return AffineSeq(parse_rational(str(obj["c0"])), parse_rational(str(obj["c1"])))
    if family == "constant":
        return ConstantSeq(_parse_value(obj["value"]))
    if family == "symbolic":
        tag = obj["tag"]
        if tag not in FAMILIES:
            raise ValueError(f"unknown symbolic family tag {tag!r}")
        return SymbolicSeq(tag, int(obj.get("shift", 0)))
    raise ValueError(f"unknown sequence family {family!r}")


def system_from_json(obj: dict, label: str = "system") -> CoefficientSystem:
    return CoefficientSystem(
        alpha=sequence_from_json(obj["alpha"]),
        beta=sequence_from_json(obj["beta"]),
        gamma=sequence_from_json(obj["gamma"]),
        label=obj.get("label", label),
    )


def load_system(path: str | Path) -> CoefficientSystem:
    """Load a coefficient system from a JSON file."""
    path = Path(path)
    with open(path) as fh:
        obj = json.load(fh)
    return system_from_json(obj, label=path.stem)
