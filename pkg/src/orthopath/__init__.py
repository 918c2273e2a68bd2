"""Exact linearization and connection coefficients of orthogonal
polynomials via weighted Motzkin paths, verified against a
recurrence-based oracle, with positivity certificates."""

from .scalars import (
    FAMILIES,
    DomainMismatchError,
    Indeterminate,
    Poly,
    Scalar,
    UnsupportedDomainError,
    format_scalar,
    indet,
    parse_polynomial,
    parse_rational,
    parse_scalar,
    scalar_div,
    scalar_product,
    scalar_sign,
    scalar_sum,
)
from .systems import (
    AffineSeq,
    CoefficientSystem,
    ConstantSeq,
    ExplicitSeq,
    SequenceRangeError,
    SequenceSpec,
    ShiftedSeq,
    SymbolicSeq,
    load_system,
    monic_b_lambda,
    monic_system,
    system_from_json,
)
from .paths import (
    MotzkinPath,
    Paving,
    enumerate_paths,
    enumerate_pavings,
    merge_pair,
    merge_pair_generalized,
    merge_preimages,
)
from .weights import (
    PathSumResult,
    WeightedTerm,
    all_terms,
    dp_sum,
    expand_choices,
    is_fixed_point,
    make_term,
    mixed_prefactor,
    monic_prefactor,
    path_sum_mixed,
    path_sum_monic,
    path_weight_merged,
    path_weight_mixed,
    path_weight_monic,
    sign_involution,
    strict_monic_weight_sum,
)
from .oracle import (
    BasisVector,
    LinearizationTable,
    connection_expand,
    expand_product,
    mixed_expand,
    mixed_product_value,
    moments,
    multiply_by_x,
    triple_product_value,
)
from .positivity import (
    HypothesisReport,
    PositivityCertificate,
    Violation,
    certify_mixed,
    certify_monic,
    check_dominance,
    check_monic_monotone,
    check_parity_dominance,
    required_window,
)

__all__ = [name for name in dir() if not name.startswith("_")]
