"""Classical combinatorial triangles and Bell polynomial machinery.

Triangles are grown lazily, one row at a time, and cached for the life of
the process.  All entries are exact rationals (the classical families are
in fact integers, kept as Fraction for uniformity of the table type).
"""
from __future__ import annotations

import threading
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Sequence

from .arith import RationalLike, binomial, factorial
from .errors import InsufficientSequence
from .polynomial import Polynomial

RowBuilder = Callable[[int, "Sequence[Fraction] | None"], "list[Fraction]"]


class Triangle:
    """Lazily extended lower-triangular table (n, k) -> Fraction.

    Rows are append-only, so values handed out never change.  Extension is
    serialized by a lock; concurrent readers are safe.
    """

    def __init__(self, family: str, row_builder: RowBuilder):
        self.family = family
        self._row_builder = row_builder
        self._rows: list[tuple[Fraction, ...]] = []
        self._lock = threading.Lock()

    def _ensure(self, n: int) -> None:
        if len(self._rows) > n:
            return
        with self._lock:
            while len(self._rows) <= n:
                m = len(self._rows)
                prev = self._rows[m - 1] if m else None
                row = tuple(self._row_builder(m, prev))
                if len(row) != m + 1:
                    raise AssertionError(f"row builder for {self.family} returned wrong length")
                self._rows.append(row)

    def value(self, n: int, k: int) -> Fraction:
        if n < 0 or k < 0:
            raise ValueError("triangle indices must be >= 0")
        if k > n:
            return Fraction(0)
        self._ensure(n)
        return self._rows[n][k]

    def row(self, n: int) -> tuple[Fraction, ...]:
        if n < 0:
            raise ValueError("triangle indices must be >= 0")
        self._ensure(n)
        return self._rows[n]


def _stirling2_row(n: int, prev) -> list[Fraction]:
    # alternating-sum formula; 0**0 == 1 makes the (0, 0) entry right
    out = []
    for k in range(n + 1):
        acc = 0
        for j in range(k + 1):
            acc += (-1) ** (k - j) * binomial(k, j) * j**n
        out.append(Fraction(acc, factorial(k)))
    return out


def _stirling1u_row(n: int, prev) -> list[Fraction]:
    if n == 0:
        return [Fraction(1)]
    out = []
    for k in range(n + 1):
        left = prev[k - 1] if k >= 1 else Fraction(0)
        right = prev[k] if k <= n - 1 else Fraction(0)
        out.append(left + (n - 1) * right)
    return out


def _lah_row(n: int, prev) -> list[Fraction]:
    if n == 0:
        return [Fraction(1)]
    out = [Fraction(0)]
    for k in range(1, n + 1):
        out.append(Fraction(factorial(n), factorial(k)) * binomial(n - 1, k - 1))
    return out


_STIRLING2 = Triangle("stirling2", _stirling2_row)
_STIRLING1U = Triangle("stirling1u", _stirling1u_row)
_LAH = Triangle("lah", _lah_row)


def stirling2(n: int, k: int) -> Fraction:
    """Stirling number of the second kind (set partitions into k blocks)."""
    return _STIRLING2.value(n, k)


def stirling1u(n: int, k: int) -> Fraction:
    """Unsigned Stirling number of the first kind (permutations with k cycles)."""
    return _STIRLING1U.value(n, k)


def lah(n: int, k: int) -> Fraction:
    """Lah number (ordered set partitions into k lists)."""
    return _LAH.value(n, k)


@lru_cache(maxsize=None)
def _deg_log_series(lam: Fraction, order: int) -> tuple[Fraction, ...]:
    """Coefficients c[0..order] of (1 - (1-t)**lam)/lam.

    The 1/lam is cancelled against the product form of the generalized
    binomial coefficient, so lam = 0 is a regular point (giving the
    classical series for -log(1-t), coefficients 1/m).
    """
    coeffs = [Fraction(0)]
    prod = Fraction(1)  # (lam-1)(lam-2)...(lam-(m-1))
    for m in range(1, order + 1):
        coeffs.append((-1) ** (m + 1) * prod / factorial(m))
        prod *= lam - m
    return tuple(coeffs)


@lru_cache(maxsize=None)
def _deg_stirling1_row(n: int, lam: Fraction) -> tuple[Fraction, ...]:
    c = _deg_log_series(lam, n)
    # truncated powers of the series; entry k reads off t**n of series**k / k!
    row = []
    power = [Fraction(0)] * (n + 1)
    power[0] = Fraction(1)
    for k in range(n + 1):
        row.append(power[n] * factorial(n) / factorial(k))
        nxt = [Fraction(0)] * (n + 1)
        for i in range(n + 1):
            if power[i] == 0:
                continue
            for m in range(1, n + 1 - i):
                nxt[i + m] += power[i] * c[m]
        power = nxt
    return tuple(row)


def deg_stirling1(n: int, k: int, lam: RationalLike) -> Fraction:
    """Degenerate unsigned Stirling number of the first kind.

    Coefficient n! [t**n] of (1/k!) ((1 - (1-t)**lam)/lam)**k.  At lam = 0
    this reduces to stirling1u; at lam = 1 the series collapses to t and
    the triangle becomes the identity.
    """
    if n < 0 or k < 0:
        raise ValueError("triangle indices must be >= 0")
    if k > n:
        return Fraction(0)
    return _deg_stirling1_row(n, Fraction(lam))[k]


def partial_bell(n: int, k: int, xs: Sequence[RationalLike]) -> Fraction:
    """Partial (incomplete) exponential Bell polynomial B_{n,k}(x1, x2, ...).

    Sums n!/(l1!...lM!) * prod (x_i/i!)**l_i over multi-indices with
    sum l_i = k and sum i*l_i = n, where M = n - k + 1.  Needs at least
    M leading entries of xs (indexed from x1).
    """
    if n < 0 or k < 0:
        raise ValueError("partial_bell needs n >= 0 and k >= 0")
    if n == 0 and k == 0:
        return Fraction(1)
    if k == 0 or k > n:
        return Fraction(0)
    m = n - k + 1
    if len(xs) < m:
        raise InsufficientSequence(f"need {m} sequence entries, got {len(xs)}")
    args = [Fraction(x) for x in xs[:m]]
    total = Fraction(0)

    def descend(i: int, count_left: int, weight_left: int, acc: Fraction) -> None:
        nonlocal total
        if i == 0:
            if count_left == 0 and weight_left == 0:
                total += acc
            return
        if weight_left < count_left or weight_left > count_left * i:
            return
        piece = args[i - 1] / factorial(i)
        term = acc
        for l in range(min(count_left, weight_left // i) + 1):
            descend(i - 1, count_left - l, weight_left - l * i, term)
            term = term * piece / (l + 1)

    descend(m, k, n, Fraction(1))
    return factorial(n) * total


def complete_bell(n: int, xs: Sequence[RationalLike]) -> Fraction:
    """Complete exponential Bell polynomial: sum of partial_bell over k."""
    if n < 0:
        raise ValueError("complete_bell needs n >= 0")
    if len(xs) < n:
        raise InsufficientSequence(f"need {n} sequence entries, got {len(xs)}")
    return sum((partial_bell(n, k, xs) for k in range(n + 1)), Fraction(0))


def bell_poly(n: int) -> Polynomial:
    """Bell (Touchard) polynomial: coefficients are the stirling2 row."""
    return Polynomial(_STIRLING2.row(n))


def lah_bell_poly(n: int) -> Polynomial:
    """Lah-Bell polynomial: coefficients are the Lah row."""
    return Polynomial(_LAH.row(n))
