import math
from fractions import Fraction

import pytest

from heterobell import (
    Bernoulli,
    Constant,
    NonPositiveEvaluationPoint,
    Poisson,
    Route,
    UnsupportedDistribution,
    dobinski_details,
    dobinski_eval,
    hetero_bell_poly,
    hetero_derivative,
    hetero_stirling,
    lah,
    prob_hetero_bell_poly,
    prob_hetero_bell_recurrence,
    prob_hetero_stirling,
    prob_lah,
    prob_stirling2,
    stirling2,
)

from . import oracles
from .oracles import BERN_HALF, BERN_THIRD, CONST_ONE, FS_ZERO_TWO, TRIO

HALF = Fraction(1, 2)

# Frozen heterogeneous rows at lam = 1/2, from the standalone
# partial-Bell recurrence script.
HETERO_HALF_ROWS = {
    4: [0, Fraction(15, 2), Fraction(75, 4), 9, 1],
    5: [0, Fraction(45, 2), Fraction(165, 2), Fraction(255, 4), 15, 1],
}


def test_hetero_frozen_rows():
    for n, row in HETERO_HALF_ROWS.items():
        assert [hetero_stirling(n, k, HALF) for k in range(n + 1)] == row


def test_hetero_small_closed_forms():
    for lam in [Fraction(0), HALF, Fraction(1), Fraction(-2), Fraction(7, 3)]:
        assert hetero_stirling(2, 1, lam) == 1 + lam
        assert hetero_stirling(3, 2, lam) == 3 + 3 * lam
        assert hetero_stirling(0, 0, lam) == 1
        assert hetero_stirling(3, 0, lam) == 0
        assert hetero_stirling(2, 4, lam) == 0


def test_hetero_interpolates_stirling2_and_lah():
    for n in range(9):
        for k in range(n + 1):
            assert hetero_stirling(n, k, Fraction(0)) == stirling2(n, k)
            assert hetero_stirling(n, k, Fraction(1)) == lah(n, k)


def test_hetero_against_bell_recurrence_oracle():
    for lam in [HALF, Fraction(-1, 3), Fraction(2)]:
        for n in range(8):
            for k in range(n + 1):
                assert hetero_stirling(n, k, lam) == oracles.hetero_via_bell(n, k, lam)


def test_hetero_bell_poly_coeffs():
    p = hetero_bell_poly(2, Fraction(1))
    assert p.coeffs == (0, 2, 1)
    q = hetero_bell_poly(4, HALF)
    assert list(q.coeffs) == HETERO_HALF_ROWS[4]


def test_prob_hetero_frozen_row():
    d = Bernoulli(Fraction(1, 3))
    row = [prob_hetero_stirling(d, 2, k, Fraction(1)) for k in range(3)]
    assert row == [0, Fraction(2, 3), Fraction(1, 9)]


def test_prob_reduces_to_classical_at_unit_constant():
    for lam in [Fraction(0), HALF, Fraction(1), Fraction(3)]:
        for n in range(7):
            for k in range(n + 1):
                assert prob_hetero_stirling(CONST_ONE, n, k, lam) == hetero_stirling(
                    n, k, lam
                )
    for n in range(7):
        for k in range(n + 1):
            assert prob_stirling2(CONST_ONE, n, k) == stirling2(n, k)
            assert prob_lah(CONST_ONE, n, k) == lah(n, k)


def test_prob_unit_bernoulli_matches_unit_constant():
    one = Bernoulli(Fraction(1))
    for n in range(6):
        for k in range(n + 1):
            assert prob_hetero_stirling(one, n, k, HALF) == prob_hetero_stirling(
                CONST_ONE, n, k, HALF
            )


def test_prob_lambda_limits():
    for d in TRIO + (FS_ZERO_TWO,):
        for n in range(6):
            for k in range(n + 1):
                assert prob_hetero_stirling(d, n, k, Fraction(0)) == prob_stirling2(
                    d, n, k
                )
                assert prob_hetero_stirling(d, n, k, Fraction(1)) == prob_lah(d, n, k)


def test_routes_agree():
    for d in TRIO + (FS_ZERO_TWO,):
        for lam in [Fraction(0), HALF, Fraction(1), Fraction(5, 3)]:
            for n in range(7):
                for k in range(n + 1):
                    base = prob_hetero_stirling(d, n, k, lam, Route.DIRECT)
                    assert (
                        prob_hetero_stirling(d, n, k, lam, Route.STIRLING_TRANSFORM)
                        == base
                    )
                    assert prob_hetero_stirling(d, n, k, lam, Route.PARTIAL_BELL) == base


def test_negative_indices_rejected():
    with pytest.raises(ValueError):
        hetero_stirling(-1, 0, HALF)
    with pytest.raises(ValueError):
        prob_hetero_stirling(BERN_HALF, 2, -1, HALF)


def test_recurrence_polynomials_match_direct():
    for d in TRIO:
        for lam in [Fraction(0), HALF, Fraction(1)]:
            polys = prob_hetero_bell_recurrence(d, 6, lam)
            assert len(polys) == 7
            for n, p in enumerate(polys):
                assert p == prob_hetero_bell_poly(d, n, lam)


def test_derivative_formula_matches_calculus():
    for d in (BERN_THIRD, Poisson(2), FS_ZERO_TWO):
        for lam in [Fraction(0), HALF, Fraction(1)]:
            for n in range(1, 6):
                direct = prob_hetero_bell_poly(d, n, lam)
                for k in range(1, n + 1):
                    assert hetero_derivative(d, n, lam, k) == direct.derivative(k)


def test_derivative_rejects_bad_order():
    with pytest.raises(ValueError):
        hetero_derivative(BERN_HALF, 3, HALF, 0)
    with pytest.raises(ValueError):
        hetero_derivative(BERN_HALF, 3, HALF, 4)


def test_dobinski_classical_bell_numbers():
    # at Y = 1, lam = 0, x = 1 the series gives the Bell numbers
    bells = [1, 1, 2, 5, 15, 52, 203]
    for n, b in enumerate(bells):
        r = dobinski_details(CONST_ONE, n, Fraction(0), Fraction(1))
        assert abs(r.value - b) <= r.rel_bound * b
        assert r.rel_bound <= 2e-12


def test_dobinski_matches_exact_polynomial_value():
    for d in (CONST_ONE, BERN_HALF, FS_ZERO_TWO):
        for lam in [Fraction(0), HALF, Fraction(1)]:
            for n in range(6):
                for x in [HALF, Fraction(1), Fraction(2), Fraction(7, 3)]:
                    exact = prob_hetero_bell_poly(d, n, lam)(x)
                    r = dobinski_details(d, n, lam, x)
                    assert abs(Fraction(r.value) - exact) <= Fraction(r.rel_bound) * abs(
                        exact
                    )


def test_dobinski_respects_rel_tol_argument():
    r = dobinski_details(BERN_HALF, 5, HALF, Fraction(3, 2), rel_tol=1e-6)
    loose = r.terms_used
    r2 = dobinski_details(BERN_HALF, 5, HALF, Fraction(3, 2), rel_tol=1e-14)
    assert r2.terms_used > loose
    assert r2.rel_bound <= 1e-13


def test_dobinski_rejects_bad_inputs():
    with pytest.raises(NonPositiveEvaluationPoint):
        dobinski_eval(BERN_HALF, 3, HALF, Fraction(0))
    with pytest.raises(NonPositiveEvaluationPoint):
        dobinski_eval(BERN_HALF, 3, HALF, Fraction(-2))
    with pytest.raises(UnsupportedDistribution):
        dobinski_eval(Poisson(1), 3, HALF, Fraction(1))
    with pytest.raises(ValueError):
        dobinski_eval(BERN_HALF, 3, HALF, Fraction(1), rel_tol=0.0)


def test_dobinski_zero_value_cases():
    # lam = 0 point mass at 0: majorant vanishes, certified zero
    r = dobinski_details(Constant(0), 2, Fraction(0), Fraction(1))
    assert r.value == 0.0 and r.rel_bound == 0.0
    # lam != 0 point mass at 0: value is 0 but no relative bound exists
    with pytest.raises(ArithmeticError):
        dobinski_details(Constant(0), 2, HALF, Fraction(1))


def test_dobinski_large_nondyadic_point():
    # the reported bound must absorb the rounding of x itself
    x = Fraction(50, 3)
    exact = prob_hetero_bell_poly(BERN_HALF, 3, HALF)(x)
    r = dobinski_details(BERN_HALF, 3, HALF, x)
    assert abs(Fraction(r.value) - exact) <= Fraction(r.rel_bound) * abs(exact)
    assert math.isfinite(r.value)
