from fractions import Fraction

import pytest

from orthopath import (
    AffineSeq,
    ConstantSeq,
    ExplicitSeq,
    SymbolicSeq,
    certify_mixed,
    certify_monic,
    check_dominance,
    check_monic_monotone,
    check_parity_dominance,
    expand_product,
    mixed_product_value,
    required_window,
    scalar_sign,
    triple_product_value,
)
from orthopath.scalars import UnsupportedDomainError
from orthopath.systems import CoefficientSystem
from conftest import random_dominant_pair, random_monotone_monic


def F(x):
    return Fraction(x)


def _affine(c0, c1):
    return AffineSeq(F(c0), F(c1))


# -- hypothesis checks --------------------------------------------------------

def test_monotone_check_holds_for_linear_sequences():
    report = check_monic_monotone(_affine(0, 1), _affine(0, 1), window=10)
    assert report.holds and not report.violations


def test_monotone_check_flags_a_decrease():
    b = ExplicitSeq((F(0), F(2), F(1), F(3)))
    report = check_monic_monotone(b, _affine(1, 1), window=3)
    assert not report.holds
    v = next(v for v in report.violations if v.name == "b increasing")
    assert (v.i, v.j, v.value_i, v.value_j) == (1, 2, F(2), F(1))


def test_monotone_check_flags_nonpositive_lam():
    lam = ExplicitSeq((F(1), F(0), F(1), F(2)))
    report = check_monic_monotone(_affine(0, 1), lam, window=3)
    assert not report.holds
    assert any(v.name == "lam positive" and v.i == 1 for v in report.violations)


def test_monotone_check_strict_mode():
    lam = ConstantSeq(F(1))
    assert check_monic_monotone(_affine(0, 1), lam, window=5).holds
    assert not check_monic_monotone(_affine(0, 1), lam, window=5, strict=True).holds


def test_monotone_check_rejects_symbolic():
    with pytest.raises(UnsupportedDomainError):
        check_monic_monotone(SymbolicSeq("b"), SymbolicSeq("l"), window=3)


def test_dominance_check_equal_constant_pair_holds():
    sys = CoefficientSystem(ConstantSeq(F(1)), ConstantSeq(F(0)), ConstantSeq(F(1)))
    report = check_dominance(sys, sys, window=6)
    assert report.holds


def test_dominance_check_affine_monotone_pair():
    main = CoefficientSystem(_affine(2, 1), _affine(1, 1), _affine(3, 1))
    prime = CoefficientSystem(_affine(1, 1), _affine(0, 1), _affine(2, 1))
    assert check_dominance(main, prime, window=8).holds


def test_dominance_check_flags_gamma_below_alpha_prime():
    main = CoefficientSystem(ConstantSeq(F(3)), ConstantSeq(F(0)), ConstantSeq(F(1)))
    prime = CoefficientSystem(ConstantSeq(F(2)), ConstantSeq(F(0)), ConstantSeq(F(1)))
    report = check_dominance(main, prime, window=4)
    assert not report.holds
    v = next(v for v in report.violations if v.name == "gamma >= alpha'")
    assert (v.i, v.j) == (0, 0) and v.value_i == 2 and v.value_j == 1


def test_parity_check_holds_for_parity_split_pair():
    alpha = ExplicitSeq(tuple(F(4 + (i % 2) + i) for i in range(12)))
    alpha_p = ExplicitSeq(tuple(F(2 + (i % 2) + i) for i in range(12)))
    gamma = ExplicitSeq(tuple(F(5) + i for i in range(12)))
    gamma_p = ExplicitSeq(tuple(F(3) + i for i in range(12)))
    zero = ConstantSeq(F(0))
    main = CoefficientSystem(alpha, zero, gamma)
    prime = CoefficientSystem(alpha_p, zero, gamma_p)
    assert check_parity_dominance(main, prime, window=10).holds


def test_parity_check_flags_nonzero_beta_and_even_slot():
    zero = ConstantSeq(F(0))
    beta = ExplicitSeq((F(0), F(0), F(0), F(1), F(0)))
    main = CoefficientSystem(ConstantSeq(F(2)), beta, ConstantSeq(F(2)))
    prime = CoefficientSystem(ConstantSeq(F(1)), zero, ConstantSeq(F(1)))
    report = check_parity_dominance(main, prime, window=4)
    assert any(v.name == "beta = 0" and v.i == 3 for v in report.violations)

    main2 = CoefficientSystem(
        ExplicitSeq((F(5), F(5), F(1), F(5), F(5))), zero, ConstantSeq(F(9))
    )
    prime2 = CoefficientSystem(ConstantSeq(F(2)), zero, ConstantSeq(F(2)))
    report2 = check_parity_dominance(main2, prime2, window=4)
    assert any(
        v.name.startswith("alpha >= alpha' (even)") and (v.i, v.j) == (2, 2)
        for v in report2.violations
    )


def test_required_window():
    assert required_window(3, 3, 3) == 9
    assert required_window(0, 0, 0) == 0


# -- certificates --------------------------------------------------------------

def test_certificate_3_3_3_worked_example(monotone_monic):
    b, lam, sys = monotone_monic
    cert = certify_monic(3, 3, 3, b, lam)
    by_path = {str(p): w for p, w, _ in cert.rows}
    assert by_path == {
        "3:HHH": 6,
        "3:HUD": 12,
        "3:HDU": 3,
        "3:UHD": 12,
        "3:UDH": 4,
        "3:DHU": 3,
        "3:DUH": 2,
    }
    assert cert.all_nonnegative
    assert cert.weight_sum == 42
    assert expand_product(3, 3, sys).coefficient(3) == 42


def test_certificate_flags_decreasing_b():
    b = _affine(0, -1)
    lam = _affine(0, 1)
    cert = certify_monic(3, 3, 3, b, lam)
    assert not cert.all_nonnegative
    by_path = {str(p): s for p, _, s in cert.rows}
    assert by_path["3:HHH"] == -1  # (b3-b0)(b3-b1)(b3-b2) < 0


def test_certificate_empty_instance():
    cert = certify_monic(0, 0, 0, _affine(0, 1), _affine(0, 1))
    assert cert.rows[0][1] == 1 and cert.all_nonnegative


def test_certificate_orientation_swaps_k_into_range(monotone_monic):
    b, lam, _ = monotone_monic
    cert = certify_monic(1, 2, 4, b, lam)
    assert cert.oriented == (1, 4, 2)
    assert cert.all_nonnegative


def test_monic_soundness_on_random_monotone_systems():
    for seed in range(5):
        b, lam, sys = random_monotone_monic(100 + seed)
        window = required_window(4, 4, 4)
        assert check_monic_monotone(b, lam, window).holds
        for m in range(5):
            for n in range(5):
                for k in range(n + 1):
                    cert = certify_monic(m, n, k, b, lam)
                    assert cert.all_nonnegative, (seed, m, n, k)
                    assert scalar_sign(triple_product_value(m, n, k, sys)) >= 0


def test_mixed_soundness_on_random_dominant_pairs():
    for seed in range(4):
        main, prime = random_dominant_pair(200 + seed)
        assert check_dominance(main, prime, required_window(4, 4, 4)).holds
        for m in range(4):
            for n in range(4):
                for kp in range(max(m, n) + 1):
                    cert = certify_mixed(m, n, kp, main, prime)
                    assert cert.all_nonnegative, (seed, m, n, kp)
                    value = mixed_product_value(m, n, kp, main, prime)
                    assert scalar_sign(value) >= 0


def test_mixed_certificate_orientation():
    main, prime = random_dominant_pair(300)
    cert = certify_mixed(1, 0, 1, main, prime)
    assert cert.oriented == (0, 1, 1)
    assert cert.all_nonnegative


def test_parity_vertex_property():
    # with both betas 0 and even start, vertices keep index parity equal
    from orthopath import enumerate_paths, path_weight_mixed

    zero = ConstantSeq(F(0))
    main = CoefficientSystem(ConstantSeq(F(2)), zero, ConstantSeq(F(2)))
    prime = CoefficientSystem(ConstantSeq(F(1)), zero, ConstantSeq(F(1)))
    for m in (0, 2, 4):
        for n in range(5):
            for kp in range(5):
                for path in enumerate_paths(m, n, kp, allow_hh=True):
                    if path_weight_mixed(path, main, prime) == 0:
                        continue
                    assert all((i - j) % 2 == 0 for i, j in path.vertices()), (
                        m, n, kp, str(path),
                    )
