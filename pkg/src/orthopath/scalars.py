"""Exact scalar arithmetic: arbitrary-precision rationals and sparse
integer-coefficient polynomials in indexed indeterminates.

Every computation in this package runs in one of two scalar domains:

* numeric: Python ``int`` or ``fractions.Fraction`` (ints are exact
  rationals with denominator 1, so the two mix freely);
* symbolic: :class:`Poly`, a sparse polynomial with integer coefficients
  in indeterminates such as ``b3``, ``l4``, ``a'2``.

A ``Poly`` is stored as a dict from monomial to nonzero int coefficient.
A monomial is a sorted tuple of ``(family_rank, index, exponent)``
triples, e.g. ``b3^2`` -> ``((0, 3, 2),)``.  The empty tuple is the
constant monomial.  Canonical form never stores zero coefficients, so
equality is plain dict equality and is independent of how a value was
built.

Mixing the two domains (``Fraction`` with ``Poly``) is an input error
and raises :class:`DomainMismatchError`.  There is deliberately no
general computer algebra here: no polynomial division, no factoring.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterable, Tuple, Union


class DomainMismatchError(TypeError):
    """Raised when numeric and symbolic scalars are combined."""


class UnsupportedDomainError(ValueError):
    """Raised when an operation is not defined in the given scalar domain."""


# Indeterminate families, in their canonical order.  Primed families are
# rendered with an apostrophe after the family letter(s).
FAMILIES: Tuple[str, ...] = ("b", "l", "a", "be", "g", "a'", "be'", "g'")
_FAMILY_RANK: Dict[str, int] = {name: i for i, name in enumerate(FAMILIES)}

# One monomial factor: (family rank, indeterminate index, exponent).
_Factor = Tuple[int, int, int]
Monomial = Tuple[_Factor, ...]

Numeric = Union[int, Fraction]
Scalar = Union[int, Fraction, "Poly"]


@dataclass(frozen=True)
class Indeterminate:
    """A single indexed symbol, e.g. family ``"l"`` index 4 is ``l4``.

    Ordered by family rank first, then index; the order is total and
    stable, which fixes the canonical monomial order.
    """

    family: str
    index: int

    def __post_init__(self) -> None:
        if self.family not in _FAMILY_RANK:
            raise ValueError(f"unknown indeterminate family {self.family!r}")
        if self.index < 0:
            raise ValueError("indeterminate index must be nonnegative")

    @property
    def rank(self) -> Tuple[int, int]:
        return (_FAMILY_RANK[self.family], self.index)

    def __str__(self) -> str:
        return f"{self.family}{self.index}"


def _check_int_coeff(c: object) -> int:
    if isinstance(c, bool) or not isinstance(c, int):
        raise DomainMismatchError(
            f"symbolic coefficients must be ints, got {type(c).__name__}"
        )
    return c


class Poly:
    """Sparse multivariate polynomial with integer coefficients.

    Immutable once constructed; all operations return new values.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Dict[Monomial, int] | None = None):
        clean: Dict[Monomial, int] = {}
        if terms:
            for mono, coeff in terms.items():
                _check_int_coeff(coeff)
                if coeff != 0:
                    clean[mono] = coeff
        self._terms = clean

    # -- constructors -------------------------------------------------

    @classmethod
    def constant(cls, c: int) -> "Poly":
        _check_int_coeff(c)
        return cls({(): c} if c else {})

    @classmethod
    def indeterminate(cls, family: str, index: int) -> "Poly":
        ind = Indeterminate(family, index)
        return cls({((_FAMILY_RANK[ind.family], ind.index, 1),): 1})

    # -- inspection ----------------------------------------------------

    @property
    def terms(self) -> Dict[Monomial, int]:
        return dict(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    # -- ring operations -----------------------------------------------

    @staticmethod
    def _coerce(other: object) -> "Poly | None":
        if isinstance(other, Poly):
            return other
        if isinstance(other, int) and not isinstance(other, bool):
            return Poly.constant(other)
        if isinstance(other, (Fraction, float, complex)):
            raise DomainMismatchError(
                "cannot mix symbolic polynomials with non-integer numerics"
            )
        return None

    def __add__(self, other: object) -> "Poly":
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        out = dict(self._terms)
        for mono, coeff in rhs._terms.items():
            new = out.get(mono, 0) + coeff
            if new:
                out[mono] = new
            else:
                out.pop(mono, None)
        return Poly(out)

    __radd__ = __add__

    def __neg__(self) -> "Poly":
        return Poly({m: -c for m, c in self._terms.items()})

    def __sub__(self, other: object) -> "Poly":
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return self + (-rhs)

    def __rsub__(self, other: object) -> "Poly":
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return rhs + (-self)

    def __mul__(self, other: object) -> "Poly":
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        out: Dict[Monomial, int] = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in rhs._terms.items():
                mono = _mul_monomials(m1, m2)
                new = out.get(mono, 0) + c1 * c2
                if new:
                    out[mono] = new
                else:
                    out.pop(mono, None)
        return Poly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "Poly":
        if not isinstance(n, int) or n < 0:
            raise ValueError("polynomial powers must be nonnegative ints")
        result = Poly.constant(1)
        for _ in range(n):
            result = result * self
        return result

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Poly):
            return self._terms == other._terms
        if isinstance(other, int) and not isinstance(other, bool):
            return self._terms == Poly.constant(other)._terms
        return NotImplemented

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    # -- rendering -----------------------------------------------------

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for mono in sorted(self._terms, key=_display_key):
            coeff = self._terms[mono]
            body = _format_monomial(mono)
            mag = abs(coeff)
            if body:
                text = body if mag == 1 else f"{mag}*{body}"
            else:
                text = str(mag)
            parts.append(("-" if coeff < 0 else "+", text))
        sign, first = parts[0]
        out = ("-" if sign == "-" else "") + first
        for sign, text in parts[1:]:
            out += f" {sign} {text}"
        return out

    def __repr__(self) -> str:
        return f"Poly({self})"


def _mul_monomials(m1: Monomial, m2: Monomial) -> Monomial:
    exps: Dict[Tuple[int, int], int] = {}
    for rank, index, exp in m1 + m2:
        exps[(rank, index)] = exps.get((rank, index), 0) + exp
    return tuple(sorted((r, i, e) for (r, i), e in exps.items()))


def _display_key(mono: Monomial):
    degree = sum(e for _, _, e in mono)
    return (-degree, tuple((-r, -i, -e) for r, i, e in mono))


def _format_monomial(mono: Monomial) -> str:
    factors = []
    for rank, index, exp in mono:
        name = f"{FAMILIES[rank]}{index}"
        factors.append(name if exp == 1 else f"{name}^{exp}")
    return "*".join(factors)


def indet(family: str, index: int) -> Poly:
    """The indeterminate with the given family tag and index, as a Poly."""
    return Poly.indeterminate(family, index)


# -- parsing ------------------------------------------------------------

_FACTOR_RE = re.compile(r"^([a-z]+'?)(\d+)(?:\^(\d+))?$")


def parse_rational(text: str) -> Fraction:
    """Parse a rational from its canonical "p/q" rendering (q omitted when 1)."""
    text = text.strip()
    if "." in text:
        raise ValueError(f"rationals must be decimal-free: {text!r}")
    return Fraction(text)


def parse_polynomial(text: str) -> Poly:
    """Parse a polynomial from its canonical signed-monomial rendering.

    Inverse of ``str(poly)``; also accepts a bare integer constant.
    """
    squeezed = text.replace(" ", "")
    if not squeezed:
        raise ValueError("empty polynomial text")
    result = Poly()
    for raw in re.findall(r"[+-]?[^+-]+", squeezed):
        sign = -1 if raw.startswith("-") else 1
        body = raw.lstrip("+-")
        if not body:
            raise ValueError(f"dangling sign in {text!r}")
        coeff = sign
        mono: Monomial = ()
        for factor in body.split("*"):
            if factor.isdigit():
                coeff *= int(factor)
                continue
            m = _FACTOR_RE.match(factor)
            if not m or m.group(1) not in _FAMILY_RANK:
                raise ValueError(f"bad factor {factor!r} in {text!r}")
            family, index, exp = m.group(1), int(m.group(2)), int(m.group(3) or 1)
            mono = _mul_monomials(
                mono, ((_FAMILY_RANK[family], index, exp),)
            )
        result = result + Poly({mono: coeff})
    return result


def format_scalar(x: Scalar) -> str:
    """Canonical text rendering of any scalar."""
    if isinstance(x, Poly):
        return str(x)
    if isinstance(x, (int, Fraction)) and not isinstance(x, bool):
        return str(x)
    raise DomainMismatchError(f"not a scalar: {type(x).__name__}")


def parse_scalar(text: str) -> Scalar:
    """Parse either scalar domain, guessing from the text.

    Anything containing a letter is read as a polynomial, else a rational.
    """
    if re.search(r"[a-z]", text):
        return parse_polynomial(text)
    return parse_rational(text)


# -- generic helpers -----------------------------------------------------

def is_symbolic(x: Scalar) -> bool:
    return isinstance(x, Poly)


def scalar_sign(x: Scalar) -> int:
    """Sign of a numeric scalar: -1, 0, or +1.  Symbolic input is an error."""
    if isinstance(x, Poly):
        raise UnsupportedDomainError("sign of a symbolic polynomial is undefined")
    if not isinstance(x, (int, Fraction)) or isinstance(x, bool):
        raise DomainMismatchError(f"not a scalar: {type(x).__name__}")
    return (x > 0) - (x < 0)


def scalar_div(num: Scalar, den: Scalar) -> Scalar:
    """Exact division.

    Numeric scalars divide into a Fraction.  In the symbolic domain only
    division by 1 is representable (there is no rational-function type),
    anything else raises :class:`UnsupportedDomainError`.
    """
    if den == 1:
        return num
    if isinstance(num, Poly) or isinstance(den, Poly):
        raise UnsupportedDomainError(
            "symbolic division is only defined for divisor 1"
        )
    if den == 0:
        raise ValueError("division by zero coefficient")
    return Fraction(num) / Fraction(den)


def scalar_product(values: Iterable[Scalar]) -> Scalar:
    """Product of scalars; the empty product is 1."""
    result: Scalar = 1
    for v in values:
        result = result * v
    return result


def scalar_sum(values: Iterable[Scalar]) -> Scalar:
    """Sum of scalars; the empty sum is 0."""
    result: Scalar = 0
    for v in values:
        result = result + v
    return result
