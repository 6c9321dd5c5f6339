"""Exact scalar combinatorics.

Everything here is computed over arbitrary-precision rationals
(`fractions.Fraction`); nothing ever rounds.  Integer-valued quantities
(factorials, binomials) are returned as plain ints, which mix freely
with Fraction arithmetic.
"""
from __future__ import annotations

import math
import re
from fractions import Fraction
from typing import Sequence, Union

from .errors import ParseError, PartsMismatch

# The exact scalar type used throughout the package.
Rational = Fraction
RationalLike = Union[Fraction, int]

_RATIONAL_RE = re.compile(r"^[+-]?\d+(?:/\d+)?$")


def parse_rational(text: str) -> Fraction:
    """Parse 'a/b' or an integer literal; anything else is a ParseError."""
    s = text.strip()
    if not _RATIONAL_RE.match(s):
        raise ParseError(f"not a rational literal: {text!r}")
    try:
        return Fraction(s)
    except ZeroDivisionError:
        raise ParseError(f"zero denominator: {text!r}") from None


def format_rational(q: RationalLike) -> str:
    """Render exactly as 'num/den', or plain 'num' when the denominator is 1."""
    return str(Fraction(q))


def factorial(n: int) -> int:
    return math.factorial(n)


def binomial(n: int, k: int) -> int:
    """C(n, k) for n, k >= 0; zero when k > n."""
    if n < 0 or k < 0:
        raise ValueError("binomial needs n >= 0 and k >= 0")
    return math.comb(n, k)


def gen_binomial(a: RationalLike, m: int) -> Fraction:
    """Generalized binomial coefficient C(a, m) = a(a-1)...(a-m+1)/m!.

    a may be any rational; m must be a nonnegative integer.
    """
    if m < 0:
        raise ValueError("gen_binomial needs m >= 0")
    a = Fraction(a)
    num = Fraction(1)
    for i in range(m):
        num *= a - i
    return num / math.factorial(m)


def multinomial(n: int, parts: Sequence[int]) -> int:
    """n! / (parts[0]! * parts[1]! * ...); parts must be >= 0 and sum to n."""
    if n < 0 or any(p < 0 for p in parts):
        raise ValueError("multinomial needs nonnegative arguments")
    if sum(parts) != n:
        raise PartsMismatch(f"parts {list(parts)} do not sum to {n}")
    out = math.factorial(n)
    for p in parts:
        out //= math.factorial(p)
    return out


def deg_rising_factorial(x: RationalLike, n: int, lam: RationalLike) -> Fraction:
    """x(x + lam)(x + 2*lam)...(x + (n-1)*lam); the empty product (n=0) is 1.

    At lam = 0 this is x**n; at lam = 1 the ordinary rising factorial.
    """
    if n < 0:
        raise ValueError("deg_rising_factorial needs n >= 0")
    x = Fraction(x)
    lam = Fraction(lam)
    out = Fraction(1)
    for i in range(n):
        out *= x + i * lam
    return out


def falling_factorial(x: RationalLike, n: int) -> Fraction:
    """x(x-1)...(x-n+1)."""
    if n < 0:
        raise ValueError("falling_factorial needs n >= 0")
    x = Fraction(x)
    out = Fraction(1)
    for i in range(n):
        out *= x - i
    return out
