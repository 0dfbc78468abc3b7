"""Named self-check suites behind the `verify` CLI subcommand.

Each check re-derives a documented property from scratch and reports pass/fail
with a counterexample payload on failure.  Checks are deterministic: random
sampling uses a fixed seed.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Optional

from mpmath import mp

from . import counting, criteria, precursive, quasipoly, sequences
from .arith import QuadNumber
from .polytopes import (
    AdmissiblePair,
    AxisSimplex,
    Interval,
    TrianglePair,
    iter_admissible_pairs,
    iter_lowest_term_params,
    mcallister_woods_image,
    mcallister_woods_pair,
    scales_to_admissible,
)

SEED = 20260815


@dataclass
class CheckResult:
    suite: str
    name: str
    passed: bool
    detail: Optional[dict] = field(default=None)


def _random_quad(rng: random.Random) -> QuadNumber:
    a = Fraction(rng.randint(-60, 60), rng.randint(1, 24))
    b = Fraction(rng.randint(-60, 60), rng.randint(1, 24))
    return QuadNumber(a, b, rng.randint(0, 80))


# -- arith ---------------------------------------------------------------


def _check_floor_certificate() -> tuple[bool, Optional[dict]]:
    rng = random.Random(SEED)
    for _ in range(3000):
        x = _random_quad(rng)
        f = x.__floor__()
        if not ((x - f).sign() >= 0 and (x - (f + 1)).sign() < 0):
            return False, {"value": str(x), "floor": f}
    return True, None


def _check_field_axioms() -> tuple[bool, Optional[dict]]:
    rng = random.Random(SEED + 1)
    for _ in range(800):
        d = rng.choice([0, 2, 3, 5, 7, 10])
        xs = [
            QuadNumber(Fraction(rng.randint(-9, 9), rng.randint(1, 6)),
                       Fraction(rng.randint(-9, 9), rng.randint(1, 6)), d)
            for _ in range(3)
        ]
        x, y, z = xs
        if (x + y) * z != x * z + y * z or (x + y) + z != x + (y + z):
            return False, {"x": str(x), "y": str(y), "z": str(z)}
        if x != 0 and x * (1 / x) != 1:
            return False, {"x": str(x)}
    return True, None


def _check_sign_highprec() -> tuple[bool, Optional[dict]]:
    rng = random.Random(SEED + 2)
    with mp.workprec(113):
        for _ in range(2000):
            x = _random_quad(rng)
            approx = mp.mpf(x.a.numerator) / x.a.denominator
            if x.d:
                approx += mp.mpf(x.b.numerator) / x.b.denominator * mp.sqrt(x.d)
            if abs(approx) > mp.mpf("1e-20"):
                float_sign = 1 if approx > 0 else -1
                if x.sign() != float_sign:
                    return False, {"value": str(x), "highprec": float(approx)}
    return True, None


def _check_round_trip() -> tuple[bool, Optional[dict]]:
    rng = random.Random(SEED + 3)
    for _ in range(500):
        x = _random_quad(rng)
        if QuadNumber.from_json_dict(x.to_json_dict()) != x:
            return False, {"value": str(x)}
    return True, None


# -- counting --------------------------------------------------------------


def _check_closed_form() -> tuple[bool, Optional[dict]]:
    for pair in iter_admissible_pairs(60):
        ts = range(12 * pair.alpha + 1)
        counts = counting.count_triangle_many(pair, ts)
        for t, n in zip(ts, counts):
            val = counting.closed_form_admissible(pair, t)
            if val.denominator != 1 or val != n:
                return False, {"alpha": pair.alpha, "beta": pair.beta, "t": t,
                               "count": n, "closed_form": str(val)}
    return True, None


_SAMPLE_PAIRS: Callable[[], list[TrianglePair]] = lambda: [
    AdmissiblePair(3, 3).triangle(),
    AdmissiblePair(2, 4).triangle(),
    TrianglePair(QuadNumber(Fraction(1)), QuadNumber(Fraction(0), Fraction(1), 2)),
    TrianglePair(QuadNumber(Fraction(3, 2)), QuadNumber(Fraction(2, 3))),
]


def _check_leg_swap() -> tuple[bool, Optional[dict]]:
    for pair in _SAMPLE_PAIRS():
        a = counting.count_triangle_many(pair, range(31))
        b = counting.count_triangle_many(pair.swapped(), range(31))
        if a != b:
            return False, {"pair": pair.to_json_dict()}
    return True, None


def _check_monotone() -> tuple[bool, Optional[dict]]:
    for pair in _SAMPLE_PAIRS():
        counts = counting.count_triangle_many(pair, range(40))
        if any(b < a for a, b in zip(counts, counts[1:])):
            return False, {"pair": pair.to_json_dict(), "counts": counts[:10]}
    return True, None


def _check_interval_shift() -> tuple[bool, Optional[dict]]:
    cases = [
        (Interval(QuadNumber(Fraction(0), Fraction(1), 2),
                  QuadNumber(Fraction(3), Fraction(1), 2)), 3),
        (Interval(QuadNumber(Fraction(1, 3), Fraction(1), 5),
                  QuadNumber(Fraction(7, 3), Fraction(1), 5)), 2),
    ]
    for iv, m in cases:
        for t in range(1, 1001):
            if counting.count_interval(iv, t) != m * t:
                return False, {"t": t, "m": m}
    return True, None


def _check_simplex_enumeration() -> tuple[bool, Optional[dict]]:
    simplices = [
        AxisSimplex((QuadNumber(Fraction(1, 2)), QuadNumber(Fraction(10, 3)),
                     QuadNumber(Fraction(3, 5)))),
        sequences.limit_tetrahedron(),
    ]
    for simplex in simplices:
        for t in range(9):
            got = counting.count_axis_simplex(simplex, t)
            want = _enumerate_simplex(simplex, t)
            if got != want:
                return False, {"legs": [str(leg) for leg in simplex.legs],
                               "t": t, "got": got, "want": want}
    return True, None


def _enumerate_simplex(simplex: AxisSimplex, t: int) -> int:
    # sign-based nested enumeration, no floor calls
    def rec(legs: tuple[QuadNumber, ...], rem: QuadNumber) -> int:
        if rem.sign() < 0:
            return 0
        if not legs:
            return 1
        total, x = 0, 0
        while True:
            nxt = rem - QuadNumber.from_value(x) / legs[0]
            if nxt.sign() < 0:
                break
            total += rec(legs[1:], nxt)
            x += 1
        return total

    return rec(simplex.legs, QuadNumber.from_value(t))


def _check_image_counts() -> tuple[bool, Optional[dict]]:
    for p in range(2, 9):
        params = mcallister_woods_pair(p)
        for t in range(1, 21):
            axis = counting.count_triangle(params, t)
            image = counting.count_rational_triangle2d(mcallister_woods_image(p, t))
            if axis != image:
                return False, {"p": p, "t": t, "axis": axis, "image": image}
    return True, None


# -- quasipoly ---------------------------------------------------------------


def _check_golden_polynomial() -> tuple[bool, Optional[dict]]:
    pair = AdmissiblePair(3, 3)
    counts = counting.count_triangle_many(pair, range(201))
    for t, n in enumerate(counts):
        if 2 * n != (t + 1) * (t + 2):
            return False, {"t": t, "count": n}
    qp, period = quasipoly.minimal_period(pair)
    if period != 1:
        return False, {"period": period}
    return True, None


def _check_square_polynomial() -> tuple[bool, Optional[dict]]:
    pair = AdmissiblePair(2, 4)
    counts = counting.count_triangle_many(pair, range(201))
    for t, n in enumerate(counts):
        if n != (t + 1) ** 2:
            return False, {"t": t, "count": n}
    _, period = quasipoly.minimal_period(pair)
    if period != 1:
        return False, {"period": period}
    return True, None


def _check_period_divides_denominator() -> tuple[bool, Optional[dict]]:
    for params in iter_lowest_term_params(5):
        _, period = quasipoly.minimal_period(params)
        if params.denominator % period != 0:
            return False, {"params": params.to_json_dict(), "period": period}
    return True, None


def _check_fit_rejection() -> tuple[bool, Optional[dict]]:
    pair = TrianglePair(QuadNumber(Fraction(1)), QuadNumber(Fraction(0), Fraction(1), 2))
    ts = range(12)
    counts = counting.count_triangle_many(pair, ts)
    fit = quasipoly.fit_quasipolynomial(zip(ts, counts), 3, 2)
    return (fit is None), (None if fit is None else {"fit": fit.to_json_dict()})


def _check_series_numerators() -> tuple[bool, Optional[dict]]:
    golden = counting.count_triangle_many(AdmissiblePair(3, 3), [1, 2])
    square = counting.count_triangle_many(AdmissiblePair(2, 4), [1, 2])
    got = (
        quasipoly.series_numerator(*golden).as_tuple(),
        quasipoly.series_numerator(*square).as_tuple(),
    )
    want = ((1, 0, 0), (1, 1, 0))
    if got != want:
        return False, {"got": [[str(c) for c in row] for row in got]}
    return True, None


def _check_reciprocity_pattern() -> tuple[bool, Optional[dict]]:
    for alpha, beta in ((3, 3), (2, 4), (1, 5), (4, 2), (5, 1)):
        pair = AdmissiblePair(alpha, beta)
        qp, _ = quasipoly.minimal_period(pair)
        for t in range(1, 51):
            rep = quasipoly.reciprocity_report(pair, t, qp)
            want = 1 if rep.alpha_divides_t else 0
            if rep.correction != want:
                return False, {"alpha": alpha, "beta": beta, "t": t,
                               "correction": str(rep.correction)}
    return True, None


def _check_series_nonnegative() -> tuple[bool, Optional[dict]]:
    for pair in iter_admissible_pairs(60):
        if criteria.classify_admissible(pair.alpha, pair.beta) != criteria.PSEUDO_INTEGRAL:
            continue
        i1, i2 = counting.count_triangle_many(pair, [1, 2])
        num = quasipoly.series_numerator(i1, i2)
        if num.a1 < 0 or num.a2 < 0:
            return False, {"alpha": pair.alpha, "beta": pair.beta,
                           "numerator": [str(c) for c in num.as_tuple()]}
    return True, None


def _check_series_monotone() -> tuple[bool, Optional[dict]]:
    inner, outer = AdmissiblePair(3, 3), AdmissiblePair(2, 4)
    # containment certificate across radicands: separate scaled floors
    scale = 10 ** 6
    for small, large in ((inner.u, outer.u), (inner.v, outer.v)):
        leg_s, leg_l = 1 / small, 1 / large
        if (leg_s * scale).__floor__() + 1 > (leg_l * scale).__floor__():
            return False, {"small_leg": str(leg_s), "large_leg": str(leg_l)}
    nums = []
    for pair in (inner, outer):
        i1, i2 = counting.count_triangle_many(pair, [1, 2])
        nums.append(quasipoly.series_numerator(i1, i2).as_tuple())
    if any(a > b for a, b in zip(*nums)):
        return False, {"inner": [str(c) for c in nums[0]],
                       "outer": [str(c) for c in nums[1]]}
    return True, None


# -- criteria ---------------------------------------------------------------


def _check_collapse_soundness() -> tuple[bool, Optional[dict]]:
    for params in iter_lowest_term_params(12):
        report = criteria.check_collapse_criterion(params)
        if not report.holds:
            continue
        _, period = quasipoly.minimal_period(params)
        if params.q % period != 0:
            return False, {"params": params.to_json_dict(), "period": period}
    return True, None


def _check_pseudo_integral_soundness() -> tuple[bool, Optional[dict]]:
    for params in iter_lowest_term_params(12):
        report = criteria.check_pseudo_integral_criterion(params)
        if not report.holds:
            continue
        _, period = quasipoly.minimal_period(params)
        if period != 1:
            return False, {"params": params.to_json_dict(), "period": period}
    return True, None


def _check_reciprocal_iff() -> tuple[bool, Optional[dict]]:
    from math import gcd

    for p in range(1, 13):
        for q in range(1, 13):
            if gcd(p, q) != 1:
                continue
            report = criteria.check_reciprocal_criterion(p, q)
            _, period = quasipoly.minimal_period(criteria.reciprocal_params(p, q))
            if report.holds != (q % period == 0):
                return False, {"p": p, "q": q, "criterion": report.holds,
                               "period": period}
    return True, None


def _check_beta_equation() -> tuple[bool, Optional[dict]]:
    got = criteria.solve_beta_equation(100)
    if got != [(2, 4), (3, 3)]:
        return False, {"got": got}
    return True, None


def _check_classification() -> tuple[bool, Optional[dict]]:
    for pair in iter_admissible_pairs(60):
        label = criteria.classify_admissible(pair.alpha, pair.beta)
        _, period = quasipoly.minimal_period(pair)
        if (label == criteria.PSEUDO_INTEGRAL) != (period == 1):
            return False, {"alpha": pair.alpha, "beta": pair.beta,
                           "label": label, "period": period}
    return True, None


def _check_mcallister_woods() -> tuple[bool, Optional[dict]]:
    for p in range(2, 51):
        report = criteria.check_collapse_criterion(mcallister_woods_pair(p))
        if not (report.holds and report.predicted_period_divisor == 1):
            return False, {"p": p, "verdict": report.verdict}
    for p in range(2, 16):
        params = mcallister_woods_pair(p)
        _, period = quasipoly.minimal_period(params)
        if period != 1:
            return False, {"p": p, "period": period}
        for t in range(1, 51):
            axis = counting.count_triangle(params, t)
            image = counting.count_rational_triangle2d(mcallister_woods_image(p, t))
            if axis != image:
                return False, {"p": p, "t": t, "axis": axis, "image": image}
    return True, None


# -- sequences ---------------------------------------------------------------


def _check_fib_facts() -> tuple[bool, Optional[dict]]:
    # Asserts the computed gcd pattern: gcd(F_n, F_{n-1}) = 1 always, while
    # gcd(F_n, k) = 1 only for odd n (even-indexed terms are multiples of k,
    # starting with F_2 = k).  The blanket all-n coprimality sometimes quoted
    # is wrong for even n when k >= 2; the odd-index form below is what the
    # quasiperiod arguments consume, via the neighbors of an even index.
    for k in range(1, 7):
        for n in range(1, 31):
            g_prev, g_k = sequences.fib_gcds(k, n)
            if g_prev != 1:
                return False, {"k": k, "n": n, "which": "gcd-consecutive"}
            want_k = 1 if (n % 2 == 1 or k == 1) else k
            if g_k != want_k:
                return False, {"k": k, "n": n, "which": "gcd-with-k"}
            if sequences.fib_identity_residual(k, n) != 0:
                return False, {"k": k, "n": n, "which": "identity"}
    return True, None


def _check_fib_quasiperiod() -> tuple[bool, Optional[dict]]:
    for k in range(1, 7):
        for n in range(2, 31, 2):
            f = sequences.k_fib(k, n)
            if f > 30:
                break
            for tri_n in (n, n + 1):
                params = sequences.fib_triangle(k, tri_n)
                ts = range(6 * f)
                counts = counting.count_triangle_many(params, ts)
                fit = quasipoly.fit_quasipolynomial(zip(ts, counts), f, 2)
                if fit is None:
                    return False, {"k": k, "n": tri_n, "quasiperiod": f}
    return True, None


def _check_fib_reciprocal_consistency() -> tuple[bool, Optional[dict]]:
    # even n: F_n^2 + 1 = F_{n-1} F_{n+1}, so both neighbors pass the
    # reciprocal-triangle criterion with q = F_n
    for k in range(1, 7):
        for n in range(2, 31, 2):
            f = sequences.k_fib(k, n)
            for p in (sequences.k_fib(k, n - 1), sequences.k_fib(k, n + 1)):
                report = criteria.check_reciprocal_criterion(p, f)
                if not report.holds:
                    return False, {"k": k, "n": n, "p": p, "q": f}
    return True, None


def _check_a_sequence() -> tuple[bool, Optional[dict]]:
    want = [2, 3, 10, 17, 58, 99, 338]
    got = [sequences.a_sequence(n) for n in range(1, 8)]
    if got != want:
        return False, {"got": got}
    return True, None


def _check_tetra_counts() -> tuple[bool, Optional[dict]]:
    for n in (1, 2, 3):
        simplex = sequences.tetra_family(n)
        for t in range(41):
            got = counting.count_axis_simplex(simplex, t)
            if got != sequences.tetra_polynomial(t):
                return False, {"n": n, "t": t, "got": got}
    return True, None


def _check_tetra_limit() -> tuple[bool, Optional[dict]]:
    simplex = sequences.limit_tetrahedron()
    for t in range(41):
        got = counting.count_axis_simplex(simplex, t)
        if got != sequences.tetra_polynomial(t):
            return False, {"t": t, "got": got}
    return True, None


# -- recurrence ---------------------------------------------------------------


def _check_golden_recurrence() -> tuple[bool, Optional[dict]]:
    counts = counting.count_triangle_many(AdmissiblePair(3, 3), range(61))
    order, degree = precursive.recurrence_from_quasipolynomial_bounds(1, 2)
    rec = precursive.guess_recurrence(counts, order, degree)
    if rec is None or not precursive.verify_recurrence(rec, counts):
        return False, {"found": rec is not None}
    return True, None


def _check_no_recurrence() -> tuple[bool, Optional[dict]]:
    # leg data with integer leg sum 2 but reciprocal-leg sum 5/2
    u = QuadNumber(Fraction(1), Fraction(1, 5), 5)
    v = QuadNumber(Fraction(1), Fraction(-1, 5), 5)
    if scales_to_admissible(Fraction(2), Fraction(5, 2)):
        return False, {"scales": True}
    counts = counting.count_triangle_many(TrianglePair(u, v), range(201))
    rec = precursive.guess_recurrence(counts, 3, 3)
    if rec is not None:
        return False, {"recurrence": rec.to_json_dict()}
    return True, None


_SUITE_CHECKS: dict[str, list[tuple[str, Callable[[], tuple[bool, Optional[dict]]]]]] = {
    "arith": [
        ("floor-sign-certificate", _check_floor_certificate),
        ("field-axioms-sample", _check_field_axioms),
        ("sign-highprec-agreement", _check_sign_highprec),
        ("json-round-trip", _check_round_trip),
    ],
    "closed-form": [
        ("closed-form-matches-counts", _check_closed_form),
        ("golden-triangle-polynomial", _check_golden_polynomial),
        ("square-polynomial-pair", _check_square_polynomial),
        ("leg-swap-symmetry", _check_leg_swap),
        ("monotone-in-t", _check_monotone),
        ("interval-integer-shift", _check_interval_shift),
        ("simplex-matches-enumeration", _check_simplex_enumeration),
        ("unimodular-image-counts", _check_image_counts),
        ("period-divides-denominator", _check_period_divides_denominator),
        ("fit-rejects-non-quasipolynomial", _check_fit_rejection),
    ],
    "criteria": [
        ("collapse-criterion-soundness", _check_collapse_soundness),
        ("pseudo-integral-criterion-soundness", _check_pseudo_integral_soundness),
        ("reciprocal-criterion-iff", _check_reciprocal_iff),
        ("beta-equation-solutions", _check_beta_equation),
        ("classification-matches-period", _check_classification),
        ("mcallister-woods-family", _check_mcallister_woods),
    ],
    "fibonacci": [
        ("fib-gcd-and-identity", _check_fib_facts),
        ("fib-quasiperiod-even-index", _check_fib_quasiperiod),
        ("fib-reciprocal-consistency", _check_fib_reciprocal_consistency),
    ],
    "tetrahedra": [
        ("a-sequence-values", _check_a_sequence),
        ("tetra-cubic-counts", _check_tetra_counts),
        ("tetra-limit-cubic-counts", _check_tetra_limit),
    ],
    "reciprocity": [
        ("reciprocity-correction-pattern", _check_reciprocity_pattern),
        ("series-numerator-values", _check_series_numerators),
        ("series-nonnegative-pseudo-integral", _check_series_nonnegative),
        ("series-monotone-nested-pair", _check_series_monotone),
    ],
    "recurrence": [
        ("golden-counts-recurrence", _check_golden_recurrence),
        ("non-integer-reciprocal-sum-no-recurrence", _check_no_recurrence),
    ],
}

SUITES = list(_SUITE_CHECKS) + ["all"]


def run_suite(name: str) -> list[CheckResult]:
    """Run one suite (or 'all') and return the outcome of every check."""
    if name == "all":
        names = list(_SUITE_CHECKS)
    elif name in _SUITE_CHECKS:
        names = [name]
    else:
        raise KeyError(f"unknown suite {name!r}; choose from {SUITES}")
    results = []
    for suite in names:
        for check_name, fn in _SUITE_CHECKS[suite]:
            passed, detail = fn()
            results.append(CheckResult(suite, check_name, passed, detail))
    return results
