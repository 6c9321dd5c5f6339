"""Machine verification of the identity catalogue.

Every identity the library claims is checked here by computing both sides
along genuinely different code paths and comparing exactly (rational
equality, no tolerances).  Identities carry short stable tags (T2.2,
T2.8, ..., L2.19, LIMITS) used by the CLI;  parameter grids for full runs
live in a small versioned config file shipped with the package.
"""
from __future__ import annotations

import configparser
from dataclasses import dataclass
from fractions import Fraction
from importlib import resources
from typing import Callable, Iterable, Sequence

from .arith import binomial, deg_rising_factorial, factorial, parse_rational
from .distributions import (
    Bernoulli,
    Distribution,
    Poisson,
    deg_rising_moment,
    format_distribution,
    parse_distribution,
    sum_deg_rising_moment,
)
from .errors import UnknownIdentity
from .hetero import (
    Route,
    hetero_bell_poly,
    hetero_stirling,
    prob_hetero_bell_poly,
    prob_hetero_stirling,
    prob_lah,
    prob_stirling2,
)
from .iid import order_split_rhs
from .polynomial import Polynomial
from .triangles import (
    deg_stirling1,
    lah,
    lah_bell_poly,
    partial_bell,
    bell_poly,
    stirling1u,
    stirling2,
)


@dataclass
class IdentityReport:
    identity: str
    params: dict[str, str]
    left: list[str]
    right: list[str]
    passed: bool
    note: str | None = None

    def as_dict(self) -> dict:
        out = {
            "identity": self.identity,
            "params": self.params,
            "left": self.left,
            "right": self.right,
            "pass": self.passed,
        }
        if self.note:
            out["note"] = self.note
        return out


def _render(value) -> str:
    if isinstance(value, Polynomial):
        return "[" + ", ".join(str(c) for c in value.coeffs) + "]"
    return str(Fraction(value))


def _as_list(value) -> list[str]:
    if isinstance(value, (list, tuple)):
        return [_render(v) for v in value]
    return [_render(value)]


def _coerce_dist(d) -> Distribution:
    if isinstance(d, str):
        return parse_distribution(d)
    return d


def _coerce_rat(q) -> Fraction:
    if isinstance(q, str):
        return parse_rational(q)
    return Fraction(q)


# ---------------------------------------------------------------------------
# individual checks: return (passed, left values, right values, note)


def _check_stirling_transform(dist, n: int, k: int, lam: Fraction):
    left = prob_hetero_stirling(dist, n, k, lam, Route.DIRECT)
    right = prob_hetero_stirling(dist, n, k, lam, Route.STIRLING_TRANSFORM)
    return left == right, left, right, None


def _check_lah_via_stirling(dist, n: int, k: int):
    left = prob_lah(dist, n, k)
    right = sum(
        (prob_stirling2(dist, l, k) * stirling1u(n, l) for l in range(k, n + 1)),
        Fraction(0),
    )
    return left == right, left, right, None


def _check_lah_lambda_free(dist, n: int, k: int, lambdas: Sequence[Fraction]):
    left = prob_lah(dist, n, k)
    rights = []
    for lam in lambdas:
        rights.append(
            sum(
                (
                    prob_hetero_stirling(dist, l, k, lam) * deg_stirling1(n, l, lam)
                    for l in range(k, n + 1)
                ),
                Fraction(0),
            )
        )
    return all(r == left for r in rights), left, rights, None


_SPLIT_NOTE = (
    "order-splitting expansion computed with the partial-sum shift n*lam "
    "inside the outer factor and strictly positive composition parts; "
    "alternative readings of the identity exist"
)


def _check_order_split(dist, n: int, m: int, t: Fraction, lam: Fraction):
    left = order_split_rhs(dist, n, m, t, lam)
    right = prob_hetero_bell_poly(dist, n + m, lam)(t)
    ok = left == right
    return ok, left, right, None if ok else _SPLIT_NOTE


def _moment_bell_row(dist, n: int, lam: Fraction) -> list[Fraction]:
    out = []
    for k in range(n + 1):
        if n == 0 and k == 0:
            out.append(Fraction(1))
        elif k == 0:
            out.append(Fraction(0))
        else:
            moments = [deg_rising_moment(dist, m, lam) for m in range(1, n - k + 2)]
            out.append(partial_bell(n, k, moments))
    return out


def _check_poly_via_partial_bell(dist, n: int, lam: Fraction):
    left = prob_hetero_bell_poly(dist, n, lam)
    right = Polynomial(_moment_bell_row(dist, n, lam))
    return left == right, left, right, None


def _check_addition(dist, n: int, lam: Fraction, x: Fraction, y: Fraction):
    left = prob_hetero_bell_poly(dist, n, lam)(x + y)
    right = Fraction(0)
    for k in range(n + 1):
        right += (
            binomial(n, k)
            * prob_hetero_bell_poly(dist, k, lam)(x)
            * prob_hetero_bell_poly(dist, n - k, lam)(y)
        )
    return left == right, left, right, None


def _falling_poly(k: int) -> Polynomial:
    # x(x-1)...(x-k+1) through the signed first-kind expansion
    return Polynomial(
        (-1) ** (k - l) * stirling1u(k, l) for l in range(k + 1)
    )


def _check_numbers_partial_bell(dist, n: int, lam: Fraction):
    left = prob_hetero_bell_poly(dist, n, lam)
    bell_numbers = [
        prob_hetero_bell_poly(dist, j, lam)(1) for j in range(n + 1)
    ]
    right = Polynomial.zero()
    for k in range(n + 1):
        b = partial_bell(n, k, bell_numbers[1 : n - k + 2]) if k else (
            Fraction(1) if n == 0 else Fraction(0)
        )
        if b:
            right = right + b * _falling_poly(k)
    return left == right, left, right, None


def _check_shifted_sequence_bell(dist, n: int, k: int, lam: Fraction, x: Fraction):
    left = Fraction(0)
    for j in range(n - k + 1):
        left += (
            Fraction(k) ** j * x**j * prob_hetero_stirling(dist, n - k, j, lam)
        )
    left *= binomial(n, k)
    shifted = [
        m * prob_hetero_bell_poly(dist, m - 1, lam)(x) for m in range(1, n - k + 2)
    ]
    if n == 0 and k == 0:
        right = Fraction(1)
    elif k == 0:
        right = Fraction(0)
    else:
        right = partial_bell(n, k, shifted)
    return left == right, left, right, None


def _check_poly_sequence_bell(dist, n: int, k: int, lam: Fraction, x: Fraction):
    values = [prob_hetero_bell_poly(dist, j, lam)(x) for j in range(1, n - k + 2)]
    if n == 0 and k == 0:
        left = Fraction(1)
    elif k == 0:
        left = Fraction(0)
    else:
        left = partial_bell(n, k, values)
    right = Fraction(0)
    for j in range(k, n + 1):
        right += stirling2(j, k) * prob_hetero_stirling(dist, n, j, lam) * x**j
    return left == right, left, right, None


def _check_poisson_moment(alpha: Fraction, k: int, n: int, lam: Fraction):
    left = sum_deg_rising_moment(Poisson(alpha), k, n, lam)
    right = hetero_bell_poly(n, lam)(k * alpha)
    return left == right, left, right, None


def _check_poisson_poly(alpha: Fraction, n: int, lam: Fraction):
    left = prob_hetero_bell_poly(Poisson(alpha), n, lam)
    right = Polynomial.zero()
    for k in range(n + 1):
        h = hetero_stirling(n, k, lam)
        if h:
            right = right + h * alpha**k * bell_poly(k)
    return left == right, left, right, None


def _check_bernoulli_scaling(p: Fraction, n: int, lam: Fraction):
    left = prob_hetero_bell_poly(Bernoulli(p), n, lam)
    right = hetero_bell_poly(n, lam).scale_arg(p)
    return left == right, left, right, None


def _check_block_sum(n: int, k: int, lam: Fraction):
    left = sum(
        (deg_rising_factorial(j, n, lam) for j in range(1, k + 1)), Fraction(0)
    )
    right = Fraction(0)
    for l in range(1, n + 1):
        right += hetero_stirling(n, l, lam) * factorial(l) * binomial(k + 1, l + 1)
    return left == right, left, right, None


def _check_bernoulli_moment(p: Fraction, k: int, n: int, lam: Fraction):
    left = sum_deg_rising_moment(Bernoulli(p), k, n, lam)
    right = Fraction(0)
    for j in range(n + 1):
        right += binomial(k, j) * p**j * factorial(j) * hetero_stirling(n, j, lam)
    return left == right, left, right, None


def _check_limits(dist, n: int):
    left: list = []
    right: list = []
    for k in range(n + 1):
        left += [hetero_stirling(n, k, Fraction(0)), hetero_stirling(n, k, Fraction(1))]
        right += [stirling2(n, k), lah(n, k)]
        left += [
            prob_hetero_stirling(dist, n, k, Fraction(0)),
            prob_hetero_stirling(dist, n, k, Fraction(1)),
        ]
        right += [prob_stirling2(dist, n, k), prob_lah(dist, n, k)]
    left += [hetero_bell_poly(n, 0), hetero_bell_poly(n, 1)]
    right += [bell_poly(n), lah_bell_poly(n)]
    left += [prob_hetero_bell_poly(dist, n, 0), prob_hetero_bell_poly(dist, n, 1)]
    right += [
        Polynomial(prob_stirling2(dist, n, k) for k in range(n + 1)),
        Polynomial(prob_lah(dist, n, k) for k in range(n + 1)),
    ]
    return left == right, left, right, None


# ---------------------------------------------------------------------------
# registry and public entry points

_CHECKERS: dict[str, Callable] = {
    "T2.2": _check_stirling_transform,
    "T2.3": _check_lah_via_stirling,
    "T2.4": _check_lah_lambda_free,
    "T2.8": _check_order_split,
    "T2.9": _check_poly_via_partial_bell,
    "T2.10": _check_addition,
    "T2.11": _check_numbers_partial_bell,
    "T2.12": _check_shifted_sequence_bell,
    "T2.13": _check_poly_sequence_bell,
    "T2.16": _check_poisson_moment,
    "T2.17": _check_poisson_poly,
    "T2.18": _check_bernoulli_scaling,
    "L2.19": _check_block_sum,
    "T2.20": _check_bernoulli_moment,
    "LIMITS": _check_limits,
}

IDENTITY_TAGS: tuple[str, ...] = tuple(_CHECKERS)

_COERCERS = {
    "dist": _coerce_dist,
    "lam": _coerce_rat,
    "x": _coerce_rat,
    "y": _coerce_rat,
    "t": _coerce_rat,
    "alpha": _coerce_rat,
    "p": _coerce_rat,
    "lambdas": lambda v: tuple(_coerce_rat(q) for q in v),
    "n": int,
    "m": int,
    "k": int,
}


def _render_param(key: str, value) -> str:
    if key == "dist":
        return format_distribution(value)
    if key == "lambdas":
        return "(" + ", ".join(str(q) for q in value) + ")"
    return str(value)


def verify_identity(tag: str, **params) -> IdentityReport:
    """Check one identity at one parameter point; both sides exact."""
    checker = _CHECKERS.get(tag)
    if checker is None:
        raise UnknownIdentity(f"no identity with tag {tag!r}")
    typed = {key: _COERCERS[key](value) for key, value in params.items()}
    passed, left, right, note = checker(**typed)
    shown = {key: _render_param(key, value) for key, value in typed.items()}
    return IdentityReport(
        identity=tag,
        params=shown,
        left=_as_list(left),
        right=_as_list(right),
        passed=passed,
        note=note,
    )


# ---------------------------------------------------------------------------
# parameter grids

DEFAULT_GRID_RESOURCE = "verify_grids.cfg"


@dataclass(frozen=True)
class GridConfig:
    version: str
    sections: dict


def load_grid_config(path: str | None = None) -> GridConfig:
    """Load the grid config; with no path, the copy shipped in the package."""
    parser = configparser.ConfigParser()
    if path is None:
        text = (
            resources.files("heterobell").joinpath("data", DEFAULT_GRID_RESOURCE).read_text()
        )
    else:
        with open(path) as fh:
            text = fh.read()
    parser.read_string(text)
    version = parser.get("meta", "version", fallback="0")
    defaults = dict(parser["defaults"]) if parser.has_section("defaults") else {}
    sections = {}
    for tag in IDENTITY_TAGS:
        merged = dict(defaults)
        if parser.has_section(tag):
            merged.update(parser[tag])
        sections[tag] = merged
    return GridConfig(version=version, sections=sections)


def _split_list(raw: str) -> list[str]:
    return [piece.strip() for piece in raw.split(";") if piece.strip()]


# used when a (possibly user-supplied) config leaves a list out entirely
_LIST_FALLBACKS = {
    "dists": "const:1; bernoulli:1/2; poisson:1",
    "lambdas": "0; 1/2; 1",
    "xs": "1/2; 1; 2",
    "ys": "1/3; 1; 3",
    "ts": "1/2; 1",
    "alphas": "1; 2; 1/2",
    "ps": "1/4; 1/3; 1",
}


def _grid_dists(sec: dict) -> list[Distribution]:
    raw = sec.get("dists", _LIST_FALLBACKS["dists"])
    return [parse_distribution(s) for s in _split_list(raw)]


def _grid_rats(sec: dict, key: str) -> list[Fraction]:
    raw = sec.get(key, _LIST_FALLBACKS[key])
    return [parse_rational(s) for s in _split_list(raw)]


def identity_grid(tag: str, cfg: GridConfig) -> list[dict]:
    """Parameter dicts for one identity, in a fixed deterministic order."""
    if tag not in _CHECKERS:
        raise UnknownIdentity(f"no identity with tag {tag!r}")
    sec = cfg.sections[tag]
    nmax = int(sec.get("nmax", "6"))
    points: list[dict] = []
    if tag == "T2.2":
        for d in _grid_dists(sec):
            for lam in _grid_rats(sec, "lambdas"):
                for n in range(nmax + 1):
                    for k in range(n + 1):
                        points.append({"dist": d, "n": n, "k": k, "lam": lam})
    elif tag == "T2.3":
        for d in _grid_dists(sec):
            for n in range(nmax + 1):
                for k in range(n + 1):
                    points.append({"dist": d, "n": n, "k": k})
    elif tag == "T2.4":
        lambdas = tuple(_grid_rats(sec, "lambdas"))
        for d in _grid_dists(sec):
            for n in range(nmax + 1):
                for k in range(n + 1):
                    points.append({"dist": d, "n": n, "k": k, "lambdas": lambdas})
    elif tag == "T2.8":
        sum_max = int(sec.get("sum_max", "4"))
        for d in _grid_dists(sec):
            for lam in _grid_rats(sec, "lambdas"):
                for t in _grid_rats(sec, "ts"):
                    for n in range(sum_max + 1):
                        for m in range(sum_max - n + 1):
                            points.append(
                                {"dist": d, "n": n, "m": m, "t": t, "lam": lam}
                            )
    elif tag in ("T2.9", "T2.11"):
        for d in _grid_dists(sec):
            for lam in _grid_rats(sec, "lambdas"):
                for n in range(nmax + 1):
                    points.append({"dist": d, "n": n, "lam": lam})
    elif tag == "T2.10":
        for d in _grid_dists(sec):
            for lam in _grid_rats(sec, "lambdas"):
                for n in range(nmax + 1):
                    for x in _grid_rats(sec, "xs"):
                        for y in _grid_rats(sec, "ys"):
                            points.append(
                                {"dist": d, "n": n, "lam": lam, "x": x, "y": y}
                            )
    elif tag in ("T2.12", "T2.13"):
        for d in _grid_dists(sec):
            for lam in _grid_rats(sec, "lambdas"):
                for x in _grid_rats(sec, "xs"):
                    for n in range(nmax + 1):
                        for k in range(n + 1):
                            points.append(
                                {"dist": d, "n": n, "k": k, "lam": lam, "x": x}
                            )
    elif tag == "T2.16":
        kmax = int(sec.get("kmax", "5"))
        for alpha in _grid_rats(sec, "alphas"):
            for lam in _grid_rats(sec, "lambdas"):
                for k in range(kmax + 1):
                    for n in range(nmax + 1):
                        points.append({"alpha": alpha, "k": k, "n": n, "lam": lam})
    elif tag == "T2.17":
        for alpha in _grid_rats(sec, "alphas"):
            for lam in _grid_rats(sec, "lambdas"):
                for n in range(nmax + 1):
                    points.append({"alpha": alpha, "n": n, "lam": lam})
    elif tag == "T2.18":
        for p in _grid_rats(sec, "ps"):
            for lam in _grid_rats(sec, "lambdas"):
                for n in range(nmax + 1):
                    points.append({"p": p, "n": n, "lam": lam})
    elif tag == "L2.19":
        kmax = int(sec.get("kmax", "8"))
        for lam in _grid_rats(sec, "lambdas"):
            for n in range(1, nmax + 1):
                for k in range(1, kmax + 1):
                    points.append({"n": n, "k": k, "lam": lam})
    elif tag == "T2.20":
        kmax = int(sec.get("kmax", "6"))
        for p in _grid_rats(sec, "ps"):
            for lam in _grid_rats(sec, "lambdas"):
                for k in range(kmax + 1):
                    for n in range(nmax + 1):
                        points.append({"p": p, "k": k, "n": n, "lam": lam})
    elif tag == "LIMITS":
        for d in _grid_dists(sec):
            for n in range(nmax + 1):
                points.append({"dist": d, "n": n})
    return points


def run_identity(tag: str, cfg: GridConfig | None = None) -> list[IdentityReport]:
    """Verify one identity over its whole configured grid."""
    if cfg is None:
        cfg = load_grid_config()
    return [verify_identity(tag, **point) for point in identity_grid(tag, cfg)]


def run_identities(
    tags: Iterable[str] | None = None, cfg: GridConfig | None = None
) -> list[IdentityReport]:
    """Verify several identities (all of them when tags is None)."""
    if cfg is None:
        cfg = load_grid_config()
    chosen = list(IDENTITY_TAGS) if tags is None else list(tags)
    for tag in chosen:
        if tag not in _CHECKERS:
            raise UnknownIdentity(f"no identity with tag {tag!r}")
    reports: list[IdentityReport] = []
    for tag in chosen:
        reports.extend(run_identity(tag, cfg))
    return reports
