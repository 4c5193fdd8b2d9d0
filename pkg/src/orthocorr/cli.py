"""
Command-line front end.

    orthocorr eval   --family F [--alpha A] [--beta B] --m M --n N --y Y [--method ...] [--format ...]
    orthocorr table  --family F ... --m M --n N --y-min LO --y-max HI --y-steps K [--coeffs]
    orthocorr verify [--family F] [--tol T] [--seed S] [--suite NAME ...]

Exit codes: 0 success, 1 evaluation or verification failure, 2 bad arguments.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import re
import sys
from dataclasses import dataclass
from typing import Optional

from . import closed, quadrature, recurrence, verify
from .errors import OrthoCorrError
from .families import Family, Kind
from .hypergeom import EPS

__all__ = ["OutputRecord", "FIELDS", "METHODS", "build_parser", "main"]

FIELDS = ("family", "alpha", "beta", "m", "n", "y", "value", "method", "est_error")
METHODS = ("closed", "oracle", "recurrence", "coeffs")

_REAL = re.compile(r"^[+-]?(\d+\.?\d*|\.\d+)([eE][+-]?\d+)?$")
_COUNT = re.compile(r"^\d+$")
# argparse only treats "-1" or "-.5" style tokens as negative numbers, not "-2.5e-1"
_NEGATIVE = re.compile(r"^-(\d+\.?\d*|\.\d+)([eE][+-]?\d+)?$")


@dataclass(frozen=True)
class OutputRecord:
    family: str
    alpha: Optional[float]
    beta: Optional[float]
    m: int
    n: int
    y: float
    value: float
    method: str
    est_error: float


def _real(text: str) -> float:
    if not _REAL.match(text.strip()):
        raise argparse.ArgumentTypeError(f"expected a decimal or scientific-notation number, got {text!r}")
    return float(text)


def _count(text: str) -> int:
    if not _COUNT.match(text.strip()):
        raise argparse.ArgumentTypeError(f"expected a non-negative integer, got {text!r}")
    return int(text)


def _g17(x: Optional[float]) -> str:
    return "" if x is None else "%.17g" % x


# --- parser -----------------------------------------------------------------

def _add_query_args(p: argparse.ArgumentParser, with_y: bool) -> None:
    p.add_argument("--family", required=True, choices=[k.value for k in Kind])
    p.add_argument("--alpha", type=_real, help="gegenbauer, jacobi and laguerre parameter")
    p.add_argument("--beta", type=_real, help="jacobi parameter")
    p.add_argument("--m", type=_count, required=True, help="degree offset")
    p.add_argument("--n", type=_count, required=True, help="base degree")
    if with_y:
        p.add_argument("--y", type=_real, required=True, help="shift")
    p.add_argument("--method", choices=METHODS, default="closed")
    p.add_argument("--format", choices=("csv", "json"), default="csv")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="orthocorr",
        description="Correlation functions R_{m,n}(y) of the classical orthogonal polynomials.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_eval = sub.add_parser("eval", help="evaluate R_{m,n}(y) at one point")
    _add_query_args(p_eval, with_y=True)

    p_table = sub.add_parser("table", help="tabulate R_{m,n}(y) on a uniform y grid")
    _add_query_args(p_table, with_y=False)
    p_table.add_argument("--y-min", type=_real, default=-1.0)
    p_table.add_argument("--y-max", type=_real, default=1.0)
    p_table.add_argument("--y-steps", type=_count, default=11, help="number of points, endpoints included")
    p_table.add_argument("--coeffs", action="store_true",
                         help="emit the monomial coefficients c_0..c_m instead of samples")

    p_verify = sub.add_parser("verify", help="run the verification suites")
    p_verify.add_argument("--family", choices=[k.value for k in Kind])
    p_verify.add_argument("--tol", type=_real, help="replace every suite's tolerance by this value")
    p_verify.add_argument("--seed", type=_count, default=0, help="seed for randomized parameter draws")
    p_verify.add_argument("--suite", action="append", choices=verify.SUITES,
                          help="run only this suite (repeatable)")
    for p in (parser, p_eval, p_table, p_verify):
        p._negative_number_matcher = _NEGATIVE
    return parser


def _family_from_args(parser: argparse.ArgumentParser, args) -> Family:
    kind = Kind(args.family)
    needs_alpha = kind in (Kind.GEGENBAUER, Kind.JACOBI, Kind.LAGUERRE)
    if needs_alpha and args.alpha is None:
        parser.error(f"--alpha is required for --family {kind.value}")
    if not needs_alpha and args.alpha is not None:
        parser.error(f"--alpha is not used by --family {kind.value}")
    if kind is Kind.JACOBI and args.beta is None:
        parser.error("--beta is required for --family jacobi")
    if kind is not Kind.JACOBI and args.beta is not None:
        parser.error(f"--beta is not used by --family {kind.value}")
    try:
        return Family(kind, args.alpha, args.beta)
    except OrthoCorrError as exc:
        parser.error(f"{'--alpha/--beta' if kind is Kind.JACOBI else '--alpha'}: {exc}")


# --- evaluation -------------------------------------------------------------

def _recurrence_value(family: Family, m: int, n: int, y: float) -> tuple[float, float]:
    """Propagate from oracle seeds; the spread against closed-form seeds serves as the error estimate."""
    keys = recurrence.required_seeds(m, n)
    values = []
    for source in (quadrature.corr_oracle, closed.corr_value):
        seeds = recurrence.CorrTable.from_function(family, y, keys, lambda a, b: source(family, a, b, y))
        values.append(recurrence.propagate_table(family, y, m, n, seeds)[(m, n)])
    return values[0], abs(values[0] - values[1])


def evaluate(family: Family, m: int, n: int, y: float, method: str) -> tuple[float, float]:
    if method == "closed":
        r = closed.corr(closed.CorrelationQuery(family, m, n, y))
        return r.value, r.est_error
    if method == "oracle":
        value, mag = quadrature.corr_oracle_detail(family, m, n, y)
        return value, verify.ORACLE_ROUNDING * EPS * mag
    if method == "coeffs":
        cv = closed.coefficient_vector(family, m, n)
        return cv(y), 32 * (m + 2) * EPS * cv.magnitude(y)
    return _recurrence_value(family, m, n, y)


def _record(family: Family, m, n, y, method) -> OutputRecord:
    value, est = evaluate(family, m, n, y, method)
    return OutputRecord(family.kind.value, family.alpha, family.beta, m, n, y, value, method, est)


def _emit(rows: list[dict], fmt: str, fields) -> str:
    if fmt == "json":
        return json.dumps(rows, indent=1) + "\n"
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=list(fields))
    writer.writeheader()
    for row in rows:
        writer.writerow({k: (v if isinstance(v, str) else _g17(v) if isinstance(v, float) or v is None else v)
                         for k, v in row.items()})
    return buf.getvalue()


def _record_row(rec: OutputRecord) -> dict:
    return {k: getattr(rec, k) for k in FIELDS}


def cmd_eval(parser, args) -> int:
    family = _family_from_args(parser, args)
    rec = _record(family, args.m, args.n, args.y, args.method)
    sys.stdout.write(_emit([_record_row(rec)], args.format, FIELDS))
    return 0


def _grid(lo: float, hi: float, steps: int) -> list[float]:
    return [lo if i == 0 else hi if i == steps - 1 else lo + (hi - lo) * i / (steps - 1)
            for i in range(steps)]


def cmd_table(parser, args) -> int:
    family = _family_from_args(parser, args)
    if args.coeffs:
        if args.method in ("closed", "coeffs"):
            cv = closed.coefficient_vector(family, args.m, args.n)
        elif args.method == "oracle":
            cv = quadrature.oracle_coefficients(family, args.m, args.n)
        else:
            parser.error("--method recurrence cannot produce coefficients; use closed, coeffs or oracle")
        fields = ("family", "alpha", "beta", "m", "n", "method") + tuple(f"c{j}" for j in range(cv.degree + 1))
        row = {"family": family.kind.value, "alpha": family.alpha, "beta": family.beta,
               "m": args.m, "n": args.n, "method": args.method}
        row.update({f"c{j}": float(c) for j, c in enumerate(cv.coeffs)})
        sys.stdout.write(_emit([row], args.format, fields))
        return 0
    if args.y_steps < 2:
        parser.error(f"--y-steps must be at least 2, got {args.y_steps}")
    if not args.y_min < args.y_max:
        parser.error(f"--y-min must be below --y-max, got {args.y_min} and {args.y_max}")
    rows = [_record_row(_record(family, args.m, args.n, y, args.method))
            for y in _grid(args.y_min, args.y_max, args.y_steps)]
    sys.stdout.write(_emit(rows, args.format, FIELDS))
    return 0


def cmd_verify(parser, args) -> int:
    results = verify.run_all(kind=args.family, tol=args.tol, seed=args.seed, only=args.suite)
    print(verify.format_report(results))
    return 0 if all(r.passed for r in results) else 1


def main(argv: Optional[list] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    handler = {"eval": cmd_eval, "table": cmd_table, "verify": cmd_verify}[args.command]
    try:
        return handler(parser, args)
    except (OrthoCorrError, ArithmeticError, KeyError) as exc:
        print(f"orthocorr: evaluation failed: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
