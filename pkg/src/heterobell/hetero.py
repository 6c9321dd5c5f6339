"""Heterogeneous Stirling numbers and Bell polynomials.

The heterogeneous family interpolates, through a deformation parameter
lam, between the Stirling-2/Bell world at lam = 0 and the Lah world at
lam = 1.  Probabilistic versions replace the plain integer argument by
the i.i.d. partial sums of a random variable Y and take expectations;
they are computable along three independent routes, which the test and
verification layers hold to exact agreement.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .arith import RationalLike, binomial, deg_rising_factorial, factorial
from .distributions import (
    Distribution,
    deg_rising_moment,
    sum_deg_rising_moment,
    sum_raw_moment,
    support_bound,
)
from .errors import NonPositiveEvaluationPoint, UnsupportedDistribution
from .polynomial import Polynomial
from .triangles import partial_bell, stirling1u, stirling2


class Route(enum.Enum):
    """Independent computation routes for the probabilistic numbers."""

    DIRECT = "direct"  # alternating sum over partial-sum moments
    STIRLING_TRANSFORM = "stirling-transform"  # prob Stirling2 against deg Stirling1 weights
    PARTIAL_BELL = "partial-bell"  # partial Bell polynomial of single-copy moments


@lru_cache(maxsize=None)
def hetero_stirling(n: int, k: int, lam: Fraction) -> Fraction:
    """Heterogeneous Stirling number.

    Alternating binomial sum of degenerate rising factorials of the
    integers 0..k, normalized by k!.  Equals stirling2 at lam = 0 and
    lah at lam = 1.
    """
    if n < 0 or k < 0:
        raise ValueError("indices must be >= 0")
    if k > n:
        return Fraction(0)
    lam = Fraction(lam)
    acc = Fraction(0)
    for j in range(k + 1):
        acc += (-1) ** (k - j) * binomial(k, j) * deg_rising_factorial(j, n, lam)
    return acc / factorial(k)


def hetero_bell_poly(n: int, lam: RationalLike) -> Polynomial:
    """Heterogeneous Bell polynomial: coefficient k is hetero_stirling(n, k)."""
    lam = Fraction(lam)
    return Polynomial(hetero_stirling(n, k, lam) for k in range(n + 1))


@lru_cache(maxsize=None)
def prob_stirling2(d: Distribution, n: int, k: int) -> Fraction:
    """Probabilistic Stirling number of the second kind for the law d.

    Same alternating sum as stirling2 with j**n replaced by E[S_j**n].
    """
    if n < 0 or k < 0:
        raise ValueError("indices must be >= 0")
    acc = Fraction(0)
    for j in range(k + 1):
        acc += (-1) ** (k - j) * binomial(k, j) * sum_raw_moment(d, j, n)
    return acc / factorial(k)


@lru_cache(maxsize=None)
def prob_lah(d: Distribution, n: int, k: int) -> Fraction:
    """Probabilistic Lah number: rising-factorial moments in the alternating sum."""
    if n < 0 or k < 0:
        raise ValueError("indices must be >= 0")
    acc = Fraction(0)
    for j in range(k + 1):
        acc += (-1) ** (k - j) * binomial(k, j) * sum_deg_rising_moment(d, j, n, Fraction(1))
    return acc / factorial(k)


@lru_cache(maxsize=None)
def _prob_hetero_direct(d: Distribution, n: int, k: int, lam: Fraction) -> Fraction:
    acc = Fraction(0)
    for j in range(k + 1):
        acc += (-1) ** (k - j) * binomial(k, j) * sum_deg_rising_moment(d, j, n, lam)
    return acc / factorial(k)


def prob_hetero_stirling(
    d: Distribution, n: int, k: int, lam: RationalLike, route: Route = Route.DIRECT
) -> Fraction:
    """Probabilistic heterogeneous Stirling number, by the chosen route.

    All routes agree exactly; they exist so the library can check itself.
    """
    if n < 0 or k < 0:
        raise ValueError("indices must be >= 0")
    lam = Fraction(lam)
    if route is Route.DIRECT:
        return _prob_hetero_direct(d, n, k, lam)
    if route is Route.STIRLING_TRANSFORM:
        acc = Fraction(0)
        for l in range(k, n + 1):
            acc += prob_stirling2(d, l, k) * stirling1u(n, l) * lam ** (n - l)
        return acc
    if route is Route.PARTIAL_BELL:
        if n == 0 and k == 0:
            return Fraction(1)
        if k == 0 or k > n:
            return Fraction(0)
        moments = [deg_rising_moment(d, m, lam) for m in range(1, n - k + 2)]
        return partial_bell(n, k, moments)
    raise ValueError(f"unknown route {route!r}")


def prob_hetero_bell_poly(
    d: Distribution, n: int, lam: RationalLike, route: Route = Route.DIRECT
) -> Polynomial:
    """Probabilistic heterogeneous Bell polynomial for the law d."""
    lam = Fraction(lam)
    return Polynomial(prob_hetero_stirling(d, n, k, lam, route) for k in range(n + 1))


def prob_hetero_bell_recurrence(d: Distribution, n_max: int, lam: RationalLike) -> list[Polynomial]:
    """Polynomials of order 0..n_max built by the moment-weighted recurrence.

    Each step multiplies by x a binomial convolution of single-copy
    degenerate rising moments against the earlier polynomials; an
    independent route to the same family as prob_hetero_bell_poly.
    """
    if n_max < 0:
        raise ValueError("n_max must be >= 0")
    lam = Fraction(lam)
    x = Polynomial.x()
    out = [Polynomial.one()]
    for n in range(n_max):
        acc = Polynomial.zero()
        for k in range(n + 1):
            acc = acc + binomial(n, k) * deg_rising_moment(d, k + 1, lam) * out[n - k]
        out.append(x * acc)
    return out


def hetero_derivative(d: Distribution, n: int, lam: RationalLike, k: int) -> Polynomial:
    """k-th derivative of the order-n probabilistic heterogeneous Bell polynomial.

    Computed without differentiating: k! times the binomial convolution of
    lower-order polynomials against order-(n-j) probabilistic numbers.
    Requires 1 <= k <= n.
    """
    if not 1 <= k <= n:
        raise ValueError("need 1 <= k <= n")
    lam = Fraction(lam)
    acc = Polynomial.zero()
    for j in range(n - k + 1):
        acc = acc + binomial(n, j) * prob_hetero_stirling(d, n - j, k, lam) * prob_hetero_bell_poly(
            d, j, lam
        )
    return factorial(k) * acc


@dataclass(frozen=True)
class SeriesEvaluation:
    """Result of a truncated exponential-series evaluation."""

    value: float  # e**(-x) times the exact truncated sum, rounded once
    terms_used: int  # number of leading series terms summed
    partial_sum: Fraction  # exact truncated sum, before the e**(-x) factor
    rel_bound: float  # guaranteed bound on |value - exact| / |exact|


def dobinski_details(
    d: Distribution, n: int, lam: RationalLike, x: RationalLike, rel_tol: float = 1e-12
) -> SeriesEvaluation:
    """Evaluate the order-n polynomial at x > 0 through its Dobinski-type series.

    The series is e**(-x) sum_k E[<S_k>] x**k / k! with degenerate rising
    factorials inside the expectation.  Terms are summed exactly; the tail
    after truncation is dominated by a geometric majorant built from a
    support bound B of |Y|, |E[<S_k>]| <= (k*B + (n-1)|lam|)**n, so the
    reported error bound is sound, not heuristic.
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    bound = support_bound(d)
    if bound is None:
        raise UnsupportedDistribution(
            "series evaluation needs a bounded-support distribution"
        )
    x = Fraction(x)
    if x <= 0:
        raise NonPositiveEvaluationPoint(f"evaluation point must be > 0, got {x}")
    if not rel_tol > 0:
        raise ValueError("rel_tol must be positive")
    lam = Fraction(lam)
    spread = (n - 1) * abs(lam) if n >= 1 else Fraction(0)
    # stop once the truncation alone is well under rel_tol, leaving room
    # for the single float rounding at the end
    target = min(Fraction(rel_tol) / 2, Fraction(1, 4))

    def majorant(k: int) -> Fraction:
        if n == 0:
            head = Fraction(1)
        else:
            head = (k * bound + spread) ** n
        return head * x**k / factorial(k)

    partial = Fraction(0)
    k = 0
    any_term = False
    while True:
        term = sum_deg_rising_moment(d, k, n, lam) * x**k / factorial(k)
        any_term = any_term or term != 0
        partial += term
        first_omitted = majorant(k + 1)
        if first_omitted == 0:
            tail = Fraction(0)
        else:
            ratio = majorant(k + 2) / first_omitted
            if ratio >= 1:
                k += 1
                continue
            tail = first_omitted / (1 - ratio)
        if tail == 0 and partial == 0:
            # identically zero series
            return SeriesEvaluation(0.0, k + 1, partial, 0.0)
        if partial != 0 and tail <= target * abs(partial):
            # allowance: float rounding of exp/product plus the shift of the
            # exponent when x itself is not exactly representable
            rel = (
                float(tail / (abs(partial) - tail))
                + 1e-15
                + 1.01 * abs(float(Fraction(float(x)) - x))
            )
            value = math.exp(-float(x)) * float(partial)
            return SeriesEvaluation(value, k + 1, partial, rel)
        if not any_term and k >= 64 + 4 * n:
            # e.g. a point mass at 0 with lam != 0: the limit is 0 but the
            # majorant stays positive, so no relative bound can be certified
            raise ArithmeticError(
                "series terms are all zero; cannot certify a relative error"
            )
        k += 1
        if k > 100_000:
            raise ArithmeticError("series failed to certify convergence")


def dobinski_eval(
    d: Distribution, n: int, lam: RationalLike, x: RationalLike, rel_tol: float = 1e-12
) -> float:
    """Approximate value of the order-n polynomial at x via its series."""
    return dobinski_details(d, n, lam, x, rel_tol).value
