import math
from fractions import Fraction

import pytest

from heterobell import (
    ParseError,
    PartsMismatch,
    binomial,
    deg_rising_factorial,
    factorial,
    falling_factorial,
    format_rational,
    gen_binomial,
    multinomial,
    parse_rational,
)

from .oracles import rising


def test_parse_rational_accepts_integers_and_fractions():
    assert parse_rational("3") == 3
    assert parse_rational("-7") == -7
    assert parse_rational("+2/4") == Fraction(1, 2)
    assert parse_rational("-10/4") == Fraction(-5, 2)


@pytest.mark.parametrize("bad", ["", "1/0", "1.5", "a", "1/2/3", "1 / 2", "--3", "2/-3"])
def test_parse_rational_rejects_garbage(bad):
    with pytest.raises(ParseError):
        parse_rational(bad)


def test_format_rational_round_trip():
    for s in ["0", "5", "-5", "1/3", "-22/7"]:
        assert format_rational(parse_rational(s)) == s


def test_format_rational_reduces():
    assert format_rational(Fraction(4, 8)) == "1/2"
    assert format_rational(Fraction(6, 3)) == "2"


def test_factorial_and_binomial_match_math():
    for n in range(12):
        assert factorial(n) == math.factorial(n)
        for k in range(n + 2):
            assert binomial(n, k) == math.comb(n, k)


def test_binomial_negative_k_raises():
    with pytest.raises(ValueError):
        binomial(5, -1)


def test_gen_binomial_integer_arg_agrees_with_comb():
    for n in range(8):
        for k in range(8):
            assert gen_binomial(Fraction(n), k) == math.comb(n, k)


def test_gen_binomial_fractional_arg():
    # C(1/2, 2) = (1/2)(-1/2)/2 = -1/8
    assert gen_binomial(Fraction(1, 2), 2) == Fraction(-1, 8)
    assert gen_binomial(Fraction(-1), 3) == -1
    assert gen_binomial(Fraction(1, 3), 0) == 1
    with pytest.raises(ValueError):
        gen_binomial(Fraction(1, 3), -2)


def test_multinomial():
    assert multinomial(5, (2, 3)) == 10
    assert multinomial(6, (1, 2, 3)) == 60
    assert multinomial(0, ()) == 1
    with pytest.raises(PartsMismatch):
        multinomial(5, (2, 2))


def test_deg_rising_factorial_against_product_oracle():
    for x in [Fraction(0), Fraction(1), Fraction(-3, 2), Fraction(5)]:
        for lam in [Fraction(0), Fraction(1), Fraction(1, 2), Fraction(-2)]:
            for n in range(6):
                assert deg_rising_factorial(x, n, lam) == rising(x, n, lam)


def test_deg_rising_factorial_limits():
    # lam = 0 collapses to the plain power, lam = 1 to the rising factorial
    assert deg_rising_factorial(Fraction(3), 4, Fraction(0)) == 3**4
    assert deg_rising_factorial(Fraction(3), 4, Fraction(1)) == 3 * 4 * 5 * 6


def test_falling_factorial():
    assert falling_factorial(Fraction(5), 3) == 5 * 4 * 3
    assert falling_factorial(Fraction(1, 2), 2) == Fraction(1, 2) * Fraction(-1, 2)
    assert falling_factorial(Fraction(7), 0) == 1
