"""Brute-force ground truth for every path formula in this package.

Products of orthogonal polynomials are expanded directly in the p-basis
from the three-term recurrence, with no path combinatorics at all:
multiplication by x maps the basis vector e_t to

    alpha[t+1] e_{t+1} + beta[t] e_t + gamma[t-1] e_{t-1}

and the recurrence itself is run to build p_m * p_j (or p_m * p'_j)
iteratively.  Everything lives in the p-basis, never the monomial basis,
so the only divisions are by leading alpha coefficients; moments fall
out as the coefficient of p_0.  The moment functional is normalized by
mu_0 = 1 (any positive constant would cancel in the coefficients).

A BasisVector is a plain dict from basis index to a nonzero Scalar.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, Tuple

from .scalars import Scalar, format_scalar, scalar_div
from .systems import CoefficientSystem

BasisVector = Dict[int, Scalar]


def _acc(vec: BasisVector, idx: int, value: Scalar) -> None:
    new = vec.get(idx, 0) + value
    if new == 0:
        vec.pop(idx, None)
    else:
        vec[idx] = new


def multiply_by_x(vec: BasisVector, sys: CoefficientSystem) -> BasisVector:
    """Exact image of multiplication by x in the p-basis."""
    out: BasisVector = {}
    for t, c in vec.items():
        _acc(out, t + 1, c * sys.alpha.at(t + 1))
        _acc(out, t, c * sys.beta.at(t))
        if t >= 1:
            _acc(out, t - 1, c * sys.gamma.at(t - 1))
    return out


def _scale(vec: BasisVector, factor: Scalar) -> BasisVector:
    if factor == 0:
        return {}
    return {t: c * factor for t, c in vec.items()}


def _sub(a: BasisVector, b: BasisVector) -> BasisVector:
    out = dict(a)
    for t, c in b.items():
        _acc(out, t, -c)
    return out


def _product_vectors(
    m: int, top: int, sys: CoefficientSystem, primed: CoefficientSystem
) -> List[BasisVector]:
    """Vectors p_m * q_j for j = 0..top, where q runs the ``primed`` recurrence
    and the expansion lives in the (unprimed) p-basis of ``sys``."""
    sys.require_range(m + top + 1)
    primed.require_range(top)
    vecs: List[BasisVector] = [{m: 1}]
    prev: BasisVector = {}
    for j in range(top):
        cur = vecs[-1]
        nxt = _sub(multiply_by_x(cur, sys), _scale(cur, primed.beta.at(j)))
        if j >= 1:
            nxt = _sub(nxt, _scale(prev, primed.gamma.at(j - 1)))
        alpha = primed.alpha.at(j + 1)
        nxt = {t: scalar_div(c, alpha) for t, c in nxt.items()}
        prev = cur
        vecs.append(nxt)
    return vecs


@dataclass(frozen=True)
class LinearizationTable:
    """Expansion coefficients of one product, with the matching L-values.

    ``entries[target] = (coefficient, L_value)`` where
    L_value = coefficient * norm_squared(target); the support sits inside
    [|m - n|, m + n] for a same-family product.
    """

    m: int
    other: int
    other_primed: bool
    entries: Dict[int, Tuple[Scalar, Scalar]]

    def coefficient(self, target: int) -> Scalar:
        return self.entries.get(target, (0, 0))[0]

    def l_value(self, target: int) -> Scalar:
        return self.entries.get(target, (0, 0))[1]

    def rows(self) -> List[Tuple[int, str, str]]:
        return [
            (t, format_scalar(c), format_scalar(l))
            for t, (c, l) in sorted(self.entries.items())
        ]


def _table(
    m: int, other: int, primed: bool, vec: BasisVector, sys: CoefficientSystem
) -> LinearizationTable:
    # fill interior zeros so the table reads contiguously over the support
    if vec:
        lo, hi = min(vec), max(vec)
        targets = range(lo, hi + 1)
    else:
        targets = range(0)
    entries = {
        t: (vec.get(t, 0), vec.get(t, 0) * sys.norm_squared(t)) for t in targets
    }
    return LinearizationTable(m, other, primed, entries)


def expand_product(m: int, n: int, sys: CoefficientSystem) -> LinearizationTable:
    """p_m * p_n = sum over k of a[m,n;k] p_k, straight from the recurrence."""
    if m < 0 or n < 0:
        raise ValueError("indices must be nonnegative")
    vec = _product_vectors(m, n, sys, sys)[n]
    return _table(m, n, False, vec, sys)


def connection_expand(
    k_prime: int, sys: CoefficientSystem, sys_prime: CoefficientSystem
) -> BasisVector:
    """p'_{k'} expressed in the p-basis of ``sys``."""
    if k_prime < 0:
        raise ValueError("index must be nonnegative")
    return _product_vectors(0, k_prime, sys, sys_prime)[k_prime]


def mixed_expand(
    m: int, k_prime: int, sys: CoefficientSystem, sys_prime: CoefficientSystem
) -> LinearizationTable:
    """p_m * p'_{k'} = sum over n of b[m,k';n] p_n."""
    if m < 0 or k_prime < 0:
        raise ValueError("indices must be nonnegative")
    vec = _product_vectors(m, k_prime, sys, sys_prime)[k_prime]
    return _table(m, k_prime, True, vec, sys)


def moments(n: int, sys: CoefficientSystem) -> Scalar:
    """The n-th moment mu_n = L(x^n), with mu_0 = 1."""
    if n < 0:
        raise ValueError("moment index must be nonnegative")
    vec: BasisVector = {0: 1}
    for _ in range(n):
        vec = multiply_by_x(vec, sys)
    return vec.get(0, 0)


def triple_product_value(m: int, n: int, k: int, sys: CoefficientSystem) -> Scalar:
    """L(p_m p_n p_k), fully symmetric in its three indices."""
    if k < 0:
        raise ValueError("indices must be nonnegative")
    return expand_product(m, n, sys).coefficient(k) * sys.norm_squared(k)


def mixed_product_value(
    m: int,
    n: int,
    k_prime: int,
    sys: CoefficientSystem,
    sys_prime: CoefficientSystem,
) -> Scalar:
    """L(p_m p_n p'_{k'}), symmetric in the two unprimed indices."""
    if n < 0:
        raise ValueError("indices must be nonnegative")
    return mixed_expand(m, k_prime, sys, sys_prime).coefficient(n) * sys.norm_squared(n)
