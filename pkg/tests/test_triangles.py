import math
from fractions import Fraction

import pytest

from heterobell import (
    InsufficientSequence,
    bell_poly,
    complete_bell,
    deg_stirling1,
    lah,
    lah_bell_poly,
    partial_bell,
    stirling1u,
    stirling2,
)
from heterobell.triangles import _LAH, _STIRLING1U, _STIRLING2

from . import oracles

# Frozen rows, produced by the standalone recurrence script before the
# package existed.
STIRLING2_ROWS = [
    [1],
    [0, 1],
    [0, 1, 1],
    [0, 1, 3, 1],
    [0, 1, 7, 6, 1],
    [0, 1, 15, 25, 10, 1],
    [0, 1, 31, 90, 65, 15, 1],
]
STIRLING1U_ROWS = [
    [1],
    [0, 1],
    [0, 1, 1],
    [0, 2, 3, 1],
    [0, 6, 11, 6, 1],
    [0, 24, 50, 35, 10, 1],
]
BELL_NUMBERS = [1, 1, 2, 5, 15, 52, 203, 877, 4140, 21147, 115975]
DEG_S1_THIRD_ROWS = {
    3: [0, Fraction(10, 9), 2, 1],
    4: [0, Fraction(80, 27), Fraction(52, 9), 4, 1],
}


def test_stirling2_frozen_rows():
    for n, row in enumerate(STIRLING2_ROWS):
        assert [stirling2(n, k) for k in range(n + 1)] == row


def test_stirling1u_frozen_rows():
    for n, row in enumerate(STIRLING1U_ROWS):
        assert [stirling1u(n, k) for k in range(n + 1)] == row


def test_rows_against_recurrence_oracle():
    for n in range(11):
        for k in range(n + 1):
            assert stirling2(n, k) == oracles.stirling2_rec(n, k)
            assert stirling1u(n, k) == oracles.stirling1u_rec(n, k)
            assert lah(n, k) == oracles.lah_closed(n, k)


def test_out_of_triangle_values():
    assert stirling2(3, 5) == 0
    assert stirling1u(0, 1) == 0
    assert lah(4, 0) == 0
    assert stirling2(0, 0) == 1
    with pytest.raises(ValueError):
        stirling2(-1, 0)
    with pytest.raises(ValueError):
        lah(2, -1)


def test_triangle_row_shape():
    assert len(_STIRLING2.row(7)) == 8
    assert _STIRLING1U.row(0) == (Fraction(1),)
    assert _LAH.row(3) == (Fraction(0), Fraction(6), Fraction(6), Fraction(1))


def test_row_sums():
    # stirling2 rows sum to Bell numbers, stirling1u rows to factorials
    for n in range(len(BELL_NUMBERS)):
        assert sum(_STIRLING2.row(n)) == BELL_NUMBERS[n]
    for n in range(9):
        assert sum(_STIRLING1U.row(n)) == math.factorial(n)


def test_signed_inversion():
    # sum_l (-1)**(n-l) [n,l] {l,k} = delta(n,k)
    for n in range(9):
        for k in range(9):
            acc = sum(
                (-1) ** (n - l) * stirling1u(n, l) * stirling2(l, k)
                for l in range(n + 1)
            )
            assert acc == (1 if n == k else 0)


def test_lah_factors_through_both_kinds():
    for n in range(9):
        for k in range(n + 1):
            assert lah(n, k) == sum(
                stirling1u(n, l) * stirling2(l, k) for l in range(n + 1)
            )


def test_deg_stirling1_frozen_rows():
    lam = Fraction(1, 3)
    for n, row in DEG_S1_THIRD_ROWS.items():
        assert [deg_stirling1(n, k, lam) for k in range(n + 1)] == row
    assert deg_stirling1(8, 3, Fraction(5, 2)) == Fraction(-1323, 16)


def test_deg_stirling1_small_closed_forms():
    for lam in [Fraction(0), Fraction(1, 2), Fraction(2), Fraction(-1, 3)]:
        assert deg_stirling1(0, 0, lam) == 1
        assert deg_stirling1(1, 1, lam) == 1
        assert deg_stirling1(2, 1, lam) == 1 - lam
        assert deg_stirling1(2, 2, lam) == 1


def test_deg_stirling1_against_division_oracle():
    for lam in [Fraction(1, 3), Fraction(5, 2), Fraction(-2), Fraction(7, 5)]:
        for n in range(8):
            for k in range(n + 1):
                assert deg_stirling1(n, k, lam) == oracles.deg_stirling1_div(n, k, lam)


def test_deg_stirling1_limit_rows():
    for n in range(8):
        for k in range(n + 1):
            assert deg_stirling1(n, k, Fraction(0)) == stirling1u(n, k)
            assert deg_stirling1(n, k, Fraction(1)) == (1 if n == k else 0)


def test_partial_bell_specializations():
    ones = [1] * 10
    facts = [math.factorial(m) for m in range(1, 11)]
    shifted = [math.factorial(m - 1) for m in range(1, 11)]
    for n in range(10):
        for k in range(n + 1):
            assert partial_bell(n, k, ones) == stirling2(n, k)
            assert partial_bell(n, k, facts) == lah(n, k)
            assert partial_bell(n, k, shifted) == stirling1u(n, k)


def test_partial_bell_against_recurrence_oracle():
    xs = [Fraction(1, 2), Fraction(-1), Fraction(3), Fraction(2, 7), Fraction(0), Fraction(5)]
    for n in range(7):
        for k in range(n + 1):
            assert partial_bell(n, k, xs) == oracles.partial_bell_rec(n, k, xs)


def test_partial_bell_homogeneity():
    xs = [Fraction(1), Fraction(2), Fraction(-1, 3), Fraction(4)]
    a, b = Fraction(3), Fraction(-1, 2)
    scaled = [a * b**m * x for m, x in enumerate(xs, start=1)]
    for n in range(5):
        for k in range(n + 1):
            assert partial_bell(n, k, scaled) == a**k * b**n * partial_bell(n, k, xs)


def test_partial_bell_short_sequence():
    with pytest.raises(InsufficientSequence):
        partial_bell(5, 2, [1, 1])
    with pytest.raises(InsufficientSequence):
        complete_bell(3, [1, 1])
    # exactly n - k + 1 entries suffice
    assert partial_bell(5, 4, [1, 1]) == stirling2(5, 4)


def test_complete_bell_sums_partials():
    xs = [Fraction(2), Fraction(1), Fraction(-1), Fraction(1, 2), Fraction(3)]
    for n in range(6):
        assert complete_bell(n, xs) == sum(
            partial_bell(n, k, xs) for k in range(n + 1)
        )


def test_bell_polys_wrap_triangle_rows():
    assert bell_poly(4).coeffs == (0, 1, 7, 6, 1)
    assert bell_poly(6)(1) == BELL_NUMBERS[6]
    assert lah_bell_poly(3).coeffs == (0, 6, 6, 1)
    assert lah_bell_poly(0).coeffs == (1,)
