"""Exact heterogeneous Stirling numbers and Bell polynomials.

A single deformation parameter lam moves the whole theory between the
Stirling-2/Bell world (lam = 0) and the Lah world (lam = 1); the
probabilistic versions average the construction over i.i.d. copies of a
random variable known through its exact raw moments.  Everything is
rational arithmetic; an identity verifier holds the independent
computation routes to exact agreement.
"""

from .arith import (
    Rational,
    binomial,
    deg_rising_factorial,
    factorial,
    falling_factorial,
    format_rational,
    gen_binomial,
    multinomial,
    parse_rational,
)
from .distributions import (
    Bernoulli,
    Constant,
    Distribution,
    FiniteSupport,
    MomentCache,
    MomentList,
    Poisson,
    deg_rising_moment,
    format_distribution,
    parse_distribution,
    raw_moment,
    sum_deg_rising_moment,
    sum_raw_moment,
    support_bound,
)
from .errors import (
    ArityMismatch,
    HeterobellError,
    InsufficientSequence,
    MissingDistribution,
    MomentUnavailable,
    NonPositiveEvaluationPoint,
    ParseError,
    PartsMismatch,
    UnknownIdentity,
    UnsupportedDistribution,
)
from .hetero import (
    Route,
    SeriesEvaluation,
    dobinski_details,
    dobinski_eval,
    hetero_bell_poly,
    hetero_derivative,
    hetero_stirling,
    prob_hetero_bell_poly,
    prob_hetero_bell_recurrence,
    prob_hetero_stirling,
    prob_lah,
    prob_stirling2,
)
from .identities import (
    IDENTITY_TAGS,
    IdentityReport,
    load_grid_config,
    run_identities,
    run_identity,
    verify_identity,
)
from .iid import SymPoly, compositions, expect, order_split_rhs, shifted_product_term
from .polynomial import Polynomial, deg_rising_poly
from .triangles import (
    Triangle,
    bell_poly,
    complete_bell,
    deg_stirling1,
    lah,
    lah_bell_poly,
    partial_bell,
    stirling1u,
    stirling2,
)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
