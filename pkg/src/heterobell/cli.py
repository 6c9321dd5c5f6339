"""Command-line interface.

Four commands: `table` prints a triangle of exact numbers, `poly` the
coefficients of one polynomial, `verify` machine-checks identity grids,
`dobinski` evaluates a polynomial through its exponential series with a
certified error bound.  All rational fields on the wire are exact
'num/den' strings; only series evaluations are decimal, and those carry
their tolerance.

Exit codes: 0 success (and every check passed), 1 at least one identity
check failed, 2 usage or parse errors.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction
from typing import Sequence

from .arith import format_rational, parse_rational
from .distributions import parse_distribution
from .errors import (
    MissingDistribution,
    MomentUnavailable,
    NonPositiveEvaluationPoint,
    ParseError,
    UnknownIdentity,
    UnsupportedDistribution,
)
from .hetero import (
    dobinski_details,
    hetero_bell_poly,
    hetero_stirling,
    prob_hetero_bell_poly,
    prob_hetero_stirling,
    prob_lah,
    prob_stirling2,
)
from .identities import IDENTITY_TAGS, load_grid_config, run_identities
from .polynomial import Polynomial
from .triangles import (
    bell_poly,
    deg_stirling1,
    lah,
    lah_bell_poly,
    stirling1u,
    stirling2,
)

TABLE_FAMILIES = (
    "stirling2",
    "stirling1u",
    "lah",
    "deg_stirling1",
    "hetero",
    "prob_stirling2",
    "prob_lah",
    "prob_hetero",
)
POLY_KINDS = ("bell", "lahbell", "hetero_bell", "prob_hetero_bell")

_NEEDS_DIST = {"prob_stirling2", "prob_lah", "prob_hetero", "prob_hetero_bell"}


def _rational_arg(text: str) -> Fraction:
    return parse_rational(text)


def _dist_arg(text: str):
    return parse_distribution(text)


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="heterobell",
        description="Exact Stirling/Bell family tables, polynomials, and identity checks.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_table = sub.add_parser("table", help="print a lower-triangular number table")
    p_table.add_argument("family", choices=TABLE_FAMILIES)
    p_table.add_argument("--nmax", type=int, required=True)
    p_table.add_argument("--lambda", dest="lam", type=_rational_arg, default=Fraction(0),
                         metavar="RAT", help="deformation parameter (rational, default 0)")
    p_table.add_argument("--dist", type=_dist_arg, default=None,
                         help="distribution, e.g. bernoulli:1/3 or finite:0:1/2,2:1/2")
    p_table.add_argument("--format", choices=("csv", "json"), default="json")
    p_table.add_argument("--out", default=None)
    p_table.set_defaults(func=cmd_table)

    p_poly = sub.add_parser("poly", help="print one polynomial's coefficients")
    p_poly.add_argument("kind", choices=POLY_KINDS)
    p_poly.add_argument("--n", type=int, required=True)
    p_poly.add_argument("--lambda", dest="lam", type=_rational_arg, default=Fraction(0),
                        metavar="RAT")
    p_poly.add_argument("--dist", type=_dist_arg, default=None)
    p_poly.add_argument("--format", choices=("csv", "json"), default="json")
    p_poly.add_argument("--out", default=None)
    p_poly.set_defaults(func=cmd_poly)

    p_verify = sub.add_parser("verify", help="machine-check identity grids")
    p_verify.add_argument("ids", nargs="*", default=["all"],
                          help="identity tags, or 'all' (default)")
    p_verify.add_argument("--config", default=None, help="alternate grid config file")
    p_verify.add_argument("--out", default=None)
    p_verify.set_defaults(func=cmd_verify)

    p_dob = sub.add_parser("dobinski", help="series evaluation with certified error")
    p_dob.add_argument("--dist", type=_dist_arg, required=True)
    p_dob.add_argument("--n", type=int, required=True)
    p_dob.add_argument("--lambda", dest="lam", type=_rational_arg, default=Fraction(0),
                       metavar="RAT")
    p_dob.add_argument("--x", type=_rational_arg, required=True)
    p_dob.add_argument("--tol", type=float, default=1e-12)
    p_dob.add_argument("--out", default=None)
    p_dob.set_defaults(func=cmd_dobinski)

    return parser


def _emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        print(text, end="" if text.endswith("\n") else "\n")


def _json_record(record: dict) -> str:
    return json.dumps(record, indent=2)


def _table_entry(family: str, n: int, k: int, lam: Fraction, dist) -> Fraction:
    if family == "stirling2":
        return stirling2(n, k)
    if family == "stirling1u":
        return stirling1u(n, k)
    if family == "lah":
        return lah(n, k)
    if family == "deg_stirling1":
        return deg_stirling1(n, k, lam)
    if family == "hetero":
        return hetero_stirling(n, k, lam)
    if family == "prob_stirling2":
        return prob_stirling2(dist, n, k)
    if family == "prob_lah":
        return prob_lah(dist, n, k)
    if family == "prob_hetero":
        return prob_hetero_stirling(dist, n, k, lam)
    raise AssertionError(family)


def _require_dist(name: str, dist) -> None:
    if name in _NEEDS_DIST and dist is None:
        raise MissingDistribution(f"{name} needs --dist")


def _common_parameters(args, extra: dict) -> dict:
    params = {
        "lambda": format_rational(args.lam),
        "dist": None if args.dist is None else _dist_str(args.dist),
    }
    params.update(extra)
    return params


def _dist_str(dist) -> str:
    from .distributions import format_distribution

    return format_distribution(dist)


def cmd_table(args) -> int:
    _require_dist(args.family, args.dist)
    if args.nmax < 0:
        raise ParseError("--nmax must be >= 0")
    rows = [
        [_table_entry(args.family, n, k, args.lam, args.dist) for k in range(n + 1)]
        for n in range(args.nmax + 1)
    ]
    params = _common_parameters(args, {"family": args.family, "nmax": args.nmax,
                                       "format": args.format})
    if args.format == "json":
        record = {
            "command": "table",
            "parameters": params,
            "rows": [[format_rational(v) for v in row] for row in rows],
        }
        _emit(_json_record(record), args.out)
    else:
        buf = io.StringIO()
        writer = csv.writer(buf)
        for n, row in enumerate(rows):
            writer.writerow([n] + [format_rational(v) for v in row])
        _emit(buf.getvalue(), args.out)
    return 0


def _poly_for(kind: str, n: int, lam: Fraction, dist) -> Polynomial:
    if kind == "bell":
        return bell_poly(n)
    if kind == "lahbell":
        return lah_bell_poly(n)
    if kind == "hetero_bell":
        return hetero_bell_poly(n, lam)
    if kind == "prob_hetero_bell":
        return prob_hetero_bell_poly(dist, n, lam)
    raise AssertionError(kind)


def cmd_poly(args) -> int:
    _require_dist(args.kind, args.dist)
    if args.n < 0:
        raise ParseError("--n must be >= 0")
    poly = _poly_for(args.kind, args.n, args.lam, args.dist)
    coeffs = [poly.coeff(i) for i in range(args.n + 1)]
    params = _common_parameters(args, {"kind": args.kind, "n": args.n,
                                       "format": args.format})
    if args.format == "json":
        record = {
            "command": "poly",
            "parameters": params,
            "coefficients": [format_rational(c) for c in coeffs],
        }
        _emit(_json_record(record), args.out)
    else:
        buf = io.StringIO()
        writer = csv.writer(buf)
        writer.writerow(["power", "coefficient"])
        for i, c in enumerate(coeffs):
            writer.writerow([i, format_rational(c)])
        _emit(buf.getvalue(), args.out)
    return 0


def cmd_verify(args) -> int:
    ids = list(args.ids) or ["all"]
    if ids == ["all"]:
        tags = list(IDENTITY_TAGS)
    else:
        for tag in ids:
            if tag not in IDENTITY_TAGS:
                raise UnknownIdentity(f"no identity with tag {tag!r}")
        tags = ids
    cfg = load_grid_config(args.config)
    reports = run_identities(tags, cfg)
    failed = [r for r in reports if not r.passed]
    record = {
        "command": "verify",
        "parameters": {"ids": tags, "grid_version": cfg.version},
        "reports": [r.as_dict() for r in reports],
        "summary": {
            "total": len(reports),
            "passed": len(reports) - len(failed),
            "failed": len(failed),
        },
    }
    _emit(_json_record(record), args.out)
    return 1 if failed else 0


def cmd_dobinski(args) -> int:
    if args.n < 0:
        raise ParseError("--n must be >= 0")
    result = dobinski_details(args.dist, args.n, args.lam, args.x, args.tol)
    exact = prob_hetero_bell_poly(args.dist, args.n, args.lam)(args.x)
    if exact != 0:
        achieved = abs(Fraction(result.value) - exact) / abs(exact)
        achieved_str = repr(float(achieved))
    else:
        achieved_str = "0.0" if result.value == 0 else "inf"
    record = {
        "command": "dobinski",
        "parameters": {
            "dist": _dist_str(args.dist),
            "n": args.n,
            "lambda": format_rational(args.lam),
            "x": format_rational(args.x),
            "rel_tol": repr(args.tol),
        },
        "value": repr(result.value),
        "terms": result.terms_used,
        "exact": format_rational(exact),
        "achieved_rel_error": achieved_str,
        "rel_error_bound": repr(result.rel_bound),
    }
    _emit(_json_record(record), args.out)
    return 0


def main(argv: Sequence[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except (
        ParseError,
        MissingDistribution,
        UnknownIdentity,
        MomentUnavailable,
        UnsupportedDistribution,
        NonPositiveEvaluationPoint,
    ) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
