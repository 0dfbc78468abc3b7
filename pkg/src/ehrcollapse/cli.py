"""Command-line interface.

Subcommands: count, fit, period, check, search, fib, tetra, guess-rec, verify.
Records go to stdout as JSON lines by default; tabular subcommands also
support --format csv.  Exit codes: 0 success, 1 failed verification, 2 usage.
"""

from __future__ import annotations

import argparse
import csv
import json
import multiprocessing
import sys
from fractions import Fraction
from typing import Iterable, Optional

from . import counting, criteria, precursive, quasipoly, sequences, verify
from .arith import QuadNumber, parse_quad
from .polytopes import (
    AdmissiblePair,
    AxisSimplex,
    Interval,
    RationalTriangle2D,
    RationalTriangleParams,
    TrianglePair,
    mcallister_woods_image,
)


def _parse_range(text: str) -> list[int]:
    """'7' -> [7]; '0..9' -> [0, 1, ..., 9]."""
    if ".." in text:
        lo, hi = text.split("..", 1)
        lo_i, hi_i = int(lo), int(hi)
        if hi_i < lo_i:
            raise ValueError(f"empty range {text!r}")
        return list(range(lo_i, hi_i + 1))
    return [int(text)]


def _parse_params(text: str) -> RationalTriangleParams:
    parts = [int(x) for x in text.split(",")]
    if len(parts) != 4:
        raise ValueError(f"expected p,q,r,s but got {text!r}")
    return RationalTriangleParams(*parts)


def _parse_vertex(text: str) -> tuple[Fraction, Fraction]:
    parts = text.split(",")
    if len(parts) != 2:
        raise ValueError(f"expected x,y but got {text!r}")
    return (Fraction(parts[0]), Fraction(parts[1]))


def _frac_str(value: Fraction) -> str:
    return f"{value.numerator}/{value.denominator}"


class _Emitter:
    """Writes records as JSON lines or CSV (header from the first record)."""

    def __init__(self, stream, fmt: str):
        self.stream = stream
        self.fmt = fmt
        self.writer: Optional[csv.DictWriter] = None

    @staticmethod
    def _flatten(record: dict) -> dict:
        flat = {}
        for key, val in record.items():
            if isinstance(val, dict):
                flat.update(val)
            elif isinstance(val, bool):
                flat[key] = "true" if val else "false"
            else:
                flat[key] = val
        return flat

    def emit(self, record: dict) -> None:
        if self.fmt == "csv":
            flat = self._flatten(record)
            if self.writer is None:
                self.writer = csv.DictWriter(self.stream, fieldnames=list(flat))
                self.writer.writeheader()
            self.writer.writerow(flat)
        else:
            self.stream.write(json.dumps(record) + "\n")


def _triangle_object(args, parser):
    chosen = [
        args.params is not None,
        args.alpha is not None or args.beta is not None,
        args.u is not None or args.v is not None,
    ]
    if sum(chosen) != 1:
        parser.error("give exactly one of --params, --alpha/--beta, --u/--v")
    if args.params is not None:
        return args.params
    if args.alpha is not None:
        if args.beta is None:
            parser.error("--alpha requires --beta")
        return AdmissiblePair(args.alpha, args.beta)
    if args.u is None or args.v is None:
        parser.error("--u requires --v")
    return TrianglePair(args.u, args.v)


def _add_triangle_flags(sub) -> None:
    sub.add_argument("--params", type=_parse_params, help="rational data p,q,r,s")
    sub.add_argument("--alpha", type=int, help="admissible leg sum")
    sub.add_argument("--beta", type=int, help="admissible reciprocal-leg sum")
    sub.add_argument("--u", type=parse_quad, help="leg coefficient u ('n', 'n/m', or 'a,b,d')")
    sub.add_argument("--v", type=parse_quad, help="leg coefficient v")


# -- count -------------------------------------------------------------------


def _cmd_count(args, parser) -> int:
    emit = _Emitter(args.output, args.format).emit
    shapes = [
        args.legs is not None,
        args.interval is not None,
        args.vertices is not None,
        args.mw_image is not None,
        args.params is not None or args.alpha is not None or args.u is not None,
    ]
    if sum(shapes) != 1:
        parser.error("give exactly one polytope")
    if args.vertices is not None:
        tri = RationalTriangle2D(tuple(args.vertices))
        emit({"count": counting.count_rational_triangle2d(tri)})
        return 0
    if args.t is None:
        parser.error("this polytope needs --t")
    if args.legs is not None:
        simplex = AxisSimplex(tuple(args.legs))
        for t in args.t:
            emit({"t": t, "count": counting.count_axis_simplex(simplex, t)})
        return 0
    if args.interval is not None:
        iv = Interval(args.interval[0], args.interval[1])
        for t in args.t:
            emit({"t": t, "count": counting.count_interval(iv, t)})
        return 0
    if args.mw_image is not None:
        for t in args.t:
            tri = mcallister_woods_image(args.mw_image, t)
            emit({"p": args.mw_image, "t": t,
                  "count": counting.count_rational_triangle2d(tri)})
        return 0
    obj = _triangle_object(args, parser)
    if args.closed_form and not isinstance(obj, AdmissiblePair):
        parser.error("--closed-form needs --alpha/--beta")
    counts = counting.count_triangle_many(obj, args.t)
    for t, n in zip(args.t, counts):
        record = {"t": t, "count": n}
        if args.interior:
            record["interior"] = counting.count_triangle_interior(obj, t)
        if args.closed_form:
            record["closed_form"] = _frac_str(counting.closed_form_admissible(obj, t))
        emit(record)
    return 0


# -- fit / period --------------------------------------------------------------


def _cmd_fit(args, parser) -> int:
    obj = _triangle_object(args, parser)
    t_max = args.t_max if args.t_max is not None else (args.degree + 4) * args.period - 1
    ts = range(t_max + 1)
    counts = counting.count_triangle_many(obj, ts)
    fit = quasipoly.fit_quasipolynomial(zip(ts, counts), args.period, args.degree)
    record = {
        "period": args.period,
        "degree": args.degree,
        "t_max": t_max,
        "fit": None if fit is None else fit.to_json_dict(),
    }
    args.output.write(json.dumps(record) + "\n")
    return 0


def _cmd_period(args, parser) -> int:
    obj = _triangle_object(args, parser)
    qp, period = quasipoly.minimal_period(obj, degree=args.degree)
    if isinstance(obj, AdmissiblePair):
        record = {"alpha": obj.alpha, "beta": obj.beta, "guaranteed_period": obj.alpha}
        reference = obj.alpha
    elif isinstance(obj, RationalTriangleParams):
        record = {"params": obj.to_json_dict(), "denominator": obj.denominator}
        reference = obj.denominator
    else:
        parser.error("period needs --params or --alpha/--beta")
    record.update({
        "minimal_period": period,
        "collapse": period < reference,
        "quasipolynomial": qp.to_json_dict(),
    })
    args.output.write(json.dumps(record) + "\n")
    return 0


# -- check -------------------------------------------------------------------


def _cmd_check(args, parser) -> int:
    kind = args.criterion
    if kind in ("collapse", "pseudo-integral"):
        if args.params is None:
            parser.error(f"--criterion {kind} needs --params")
        fn = (criteria.check_collapse_criterion if kind == "collapse"
              else criteria.check_pseudo_integral_criterion)
        record = fn(args.params).to_json_dict()
        record["params"] = args.params.to_json_dict()
    elif kind == "reciprocal":
        if args.p is None or args.q is None:
            parser.error("--criterion reciprocal needs --p and --q")
        record = criteria.check_reciprocal_criterion(args.p, args.q).to_json_dict()
        record["params"] = criteria.reciprocal_params(args.p, args.q).to_json_dict()
    elif kind == "classify":
        if args.alpha is None or args.beta is None:
            parser.error("--criterion classify needs --alpha and --beta")
        record = {
            "alpha": args.alpha,
            "beta": args.beta,
            "classification": criteria.classify_admissible(args.alpha, args.beta),
        }
    else:  # beta-equation
        record = {
            "bound": args.bound,
            "solutions": [list(sol) for sol in criteria.solve_beta_equation(args.bound)],
        }
    args.output.write(json.dumps(record) + "\n")
    return 0


# -- search -------------------------------------------------------------------


def _search_record(tup: tuple[int, int, int, int]) -> dict:
    params = RationalTriangleParams(*tup)
    report = criteria.check_collapse_criterion(params)
    _, period = quasipoly.minimal_period(params)
    denom = params.denominator
    if denom % period != 0:
        raise AssertionError(f"minimal period {period} does not divide {denom}")
    return {
        "params": params.to_json_dict(),
        "denominator": denom,
        "minimal_period": period,
        "criterion_predicted": report.holds,
        "collapse": period < denom,
    }


def _cmd_search(args, parser) -> int:
    from math import gcd

    bounds = (
        args.max_p or args.bound,
        args.max_q or args.bound,
        args.max_r or args.bound,
        args.max_s or args.bound,
    )
    if any(b is None for b in bounds):
        parser.error("give --bound or all of --max-p/--max-q/--max-r/--max-s")
    tuples = [
        (p, q, r, s)
        for p in range(1, bounds[0] + 1)
        for q in range(1, bounds[1] + 1)
        if gcd(p, q) == 1
        for r in range(1, bounds[2] + 1)
        for s in range(1, bounds[3] + 1)
        if gcd(r, s) == 1
    ]
    emit = _Emitter(args.output, args.format).emit
    if args.jobs > 1:
        with multiprocessing.Pool(args.jobs) as pool:
            for record in pool.imap(_search_record, tuples, chunksize=32):
                emit(record)
    else:
        for tup in tuples:
            emit(_search_record(tup))
    return 0


# -- fib / tetra ----------------------------------------------------------------


def _cmd_fib(args, parser) -> int:
    emit = _Emitter(args.output, args.format).emit
    for n in args.n:
        record = {"k": args.k, "n": n, "value": sequences.k_fib(args.k, n)}
        if args.triangle:
            if n < 2:
                parser.error("--triangle needs n >= 2")
            record["params"] = sequences.fib_triangle(args.k, n).to_json_dict()
        emit(record)
    return 0


def _cmd_tetra(args, parser) -> int:
    emit = _Emitter(args.output, args.format).emit
    if args.limit == (args.n is not None):
        parser.error("give exactly one of --n, --limit")
    if args.limit:
        simplex = sequences.limit_tetrahedron()
        base = {"limit": True}
    else:
        simplex = sequences.tetra_family(args.n)
        base = {"n": args.n}
    if args.t is None:
        emit({**base, "legs": [leg.to_json_dict() for leg in simplex.legs]})
        return 0
    for t in args.t:
        count = counting.count_axis_simplex(simplex, t)
        cubic = sequences.tetra_polynomial(t)
        emit({**base, "t": t, "count": count, "cubic": int(cubic),
              "matches": count == cubic})
    return 0


# -- guess-rec -------------------------------------------------------------------


def _cmd_guess_rec(args, parser) -> int:
    if args.values is not None:
        values: list = [Fraction(x) for x in args.values.split(",")]
    else:
        obj = _triangle_object(args, parser)
        if args.t_max is None:
            parser.error("counting input needs --t-max")
        values = counting.count_triangle_many(obj, range(args.t_max + 1))
    rec = precursive.guess_recurrence(values, args.max_order, args.max_degree)
    record = {
        "n_values": len(values),
        "max_order": args.max_order,
        "max_degree": args.max_degree,
        "recurrence": None if rec is None else rec.to_json_dict(),
    }
    args.output.write(json.dumps(record) + "\n")
    return 0


# -- verify ---------------------------------------------------------------------


def _cmd_verify(args, parser) -> int:
    results = verify.run_suite(args.suite)
    failed = 0
    for res in results:
        record = {"suite": res.suite, "check": res.name, "pass": res.passed}
        if not res.passed:
            failed += 1
            if res.detail is not None:
                record["counterexample"] = res.detail
        args.output.write(json.dumps(record) + "\n")
    args.output.write(json.dumps({"checks": len(results), "failed": failed}) + "\n")
    return 1 if failed else 0


# -- parser wiring ----------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ehrcollapse",
        description="Exact counting and period analysis for right simplices",
    )
    subs = parser.add_subparsers(dest="command", required=True)

    def common(sub, fmt=False):
        sub.add_argument("--output", type=argparse.FileType("w"), default=sys.stdout)
        if fmt:
            sub.add_argument("--format", choices=("jsonl", "csv"), default="jsonl")

    p_count = subs.add_parser("count", help="exact lattice-point counts of dilates")
    _add_triangle_flags(p_count)
    p_count.add_argument("--legs", type=parse_quad, nargs="+", help="axis simplex legs")
    p_count.add_argument("--interval", type=parse_quad, nargs=2, metavar=("LO", "HI"))
    p_count.add_argument("--vertices", type=_parse_vertex, nargs=3, metavar="X,Y",
                         help="explicit rational triangle (counts once, no --t)")
    p_count.add_argument("--mw-image", type=int, metavar="P",
                         help="unimodular image triangle for parameter P")
    p_count.add_argument("--t", type=_parse_range, help="dilation t or range a..b")
    p_count.add_argument("--interior", action="store_true",
                         help="also count interior points (strict inequalities)")
    p_count.add_argument("--closed-form", action="store_true",
                         help="also evaluate the admissible closed form")
    common(p_count, fmt=True)
    p_count.set_defaults(fn=_cmd_count)

    p_fit = subs.add_parser("fit", help="fit a quasipolynomial at a chosen period")
    _add_triangle_flags(p_fit)
    p_fit.add_argument("--period", type=int, required=True)
    p_fit.add_argument("--degree", type=int, default=2)
    p_fit.add_argument("--t-max", type=int, help="sample t = 0..t_max")
    common(p_fit)
    p_fit.set_defaults(fn=_cmd_fit)

    p_period = subs.add_parser("period", help="minimal verified period")
    _add_triangle_flags(p_period)
    p_period.add_argument("--degree", type=int, default=2)
    common(p_period)
    p_period.set_defaults(fn=_cmd_period)

    p_check = subs.add_parser("check", help="divisibility criteria and classification")
    p_check.add_argument("--criterion", required=True,
                         choices=("collapse", "pseudo-integral", "reciprocal",
                                  "classify", "beta-equation"))
    p_check.add_argument("--params", type=_parse_params)
    p_check.add_argument("--p", type=int)
    p_check.add_argument("--q", type=int)
    p_check.add_argument("--alpha", type=int)
    p_check.add_argument("--beta", type=int)
    p_check.add_argument("--bound", type=int, default=100)
    common(p_check)
    p_check.set_defaults(fn=_cmd_check)

    p_search = subs.add_parser("search", help="sweep rational tuples for collapse")
    p_search.add_argument("--bound", type=int, help="common bound for p,q,r,s")
    p_search.add_argument("--max-p", type=int)
    p_search.add_argument("--max-q", type=int)
    p_search.add_argument("--max-r", type=int)
    p_search.add_argument("--max-s", type=int)
    p_search.add_argument("--jobs", type=int, default=1)
    common(p_search, fmt=True)
    p_search.set_defaults(fn=_cmd_search)

    p_fib = subs.add_parser("fib", help="k-Fibonacci values and triangles")
    p_fib.add_argument("--k", type=int, required=True)
    p_fib.add_argument("--n", type=_parse_range, required=True)
    p_fib.add_argument("--triangle", action="store_true")
    common(p_fib, fmt=True)
    p_fib.set_defaults(fn=_cmd_fib)

    p_tetra = subs.add_parser("tetra", help="the tetrahedra family and its limit")
    p_tetra.add_argument("--n", type=int)
    p_tetra.add_argument("--limit", action="store_true")
    p_tetra.add_argument("--t", type=_parse_range)
    common(p_tetra, fmt=True)
    p_tetra.set_defaults(fn=_cmd_tetra)

    p_guess = subs.add_parser("guess-rec", help="guess a polynomial-coefficient recurrence")
    _add_triangle_flags(p_guess)
    p_guess.add_argument("--values", help="comma-separated sequence values")
    p_guess.add_argument("--t-max", type=int)
    p_guess.add_argument("--max-order", type=int, required=True)
    p_guess.add_argument("--max-degree", type=int, required=True)
    common(p_guess)
    p_guess.set_defaults(fn=_cmd_guess_rec)

    p_verify = subs.add_parser("verify", help="run named self-check suites")
    p_verify.add_argument("--suite", required=True, choices=verify.SUITES)
    common(p_verify)
    p_verify.set_defaults(fn=_cmd_verify)

    return parser


def main(argv: Optional[Iterable[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv if argv is None else list(argv))
    try:
        return args.fn(args, parser)
    except (ValueError, KeyError) as exc:
        parser.exit(2, f"error: {exc}\n")


if __name__ == "__main__":
    sys.exit(main())
