"""Exact lattice-point counts for dilates of the supported polytopes.

Every public function returns exact integers (or Fractions).  Batch triangle
counting reduces the inner floor to integer linear forms and dispatches to the
int64 kernels when an overflow guard passes; otherwise the same formula runs
on Python big integers.  Floors of irrational quantities use integer square
roots, never floating point.
"""

from __future__ import annotations

import math
from fractions import Fraction
from math import ceil, floor, isqrt, lcm
from typing import Iterable, Sequence, Union

import numpy as np
from mpmath import mp

from . import kernels
from .arith import QuadNumber
from .polytopes import (
    AdmissiblePair,
    AxisSimplex,
    Interval,
    RationalTriangle2D,
    RationalTriangleParams,
    TrianglePair,
)

TriangleLike = Union[TrianglePair, AdmissiblePair, RationalTriangleParams]

# kernels multiply three guarded quantities; stay well inside int64
_INT64_GUARD = 1 << 61


def _as_pair(obj: TriangleLike) -> TrianglePair:
    if isinstance(obj, TrianglePair):
        return obj
    if isinstance(obj, (AdmissiblePair, RationalTriangleParams)):
        return obj.triangle()
    raise TypeError(f"expected a triangle-like object, got {type(obj).__name__}")


def count_triangle(obj: TriangleLike, t: int) -> int:
    """Number of integer (x, y) with x, y >= 0 and u*x + v*y <= t."""
    return count_triangle_many(obj, (t,))[0]


def count_triangle_many(obj: TriangleLike, ts: Iterable[int]) -> list[int]:
    """Batch version of count_triangle; one exact count per t."""
    pair = _as_pair(obj)
    t_list = [int(t) for t in ts]
    if not t_list:
        return []
    if any(t < 0 for t in t_list):
        raise ValueError("dilation factors must be >= 0")
    u, v = pair.u, pair.v
    if u < v:
        u, v = v, u  # iterate x along the larger leg coefficient: fewer terms
    if u.is_rational and v.is_rational:
        return _rational_counts(u.as_fraction(), v.as_fraction(), t_list)
    return _quad_counts(u, v, t_list)


def _rational_counts(u: Fraction, v: Fraction, ts: list[int]) -> list[int]:
    q, p = u.numerator, u.denominator
    s, r = v.numerator, v.denominator
    tmax = max(ts)
    # per-term magnitudes: r*(t*p) and accumulated count
    bound_term = r * tmax * p
    bound_acc = (tmax * p // q + 1) * (bound_term // (p * s) + 2)
    if max(bound_term, bound_acc) < _INT64_GUARD:
        out = kernels.rational_counts(p, q, r, s, np.asarray(ts, dtype=np.int64))
        return [int(x) for x in out]
    return _rational_counts_bigint(u, v, ts)


def _rational_counts_bigint(u: Fraction, v: Fraction, ts: list[int]) -> list[int]:
    """Same column sum as the kernels, in unbounded integer arithmetic."""
    q, p = u.numerator, u.denominator
    s, r = v.numerator, v.denominator
    ps = p * s
    result = []
    for t in ts:
        tp = t * p
        xmax = tp // q
        acc = xmax + 1
        for x in range(xmax + 1):
            acc += (r * (tp - q * x)) // ps
        result.append(acc)
    return result


def _quad_linear_forms(u: QuadNumber, v: QuadNumber) -> tuple[int, int, int, int, int, int]:
    """Integer data (at, ax, bt, bx, den, d) with
    (t - u*x)/v = (at*t + ax*x + (bt*t + bx*x)*sqrt(d)) / den."""
    inv_v = QuadNumber.from_value(1) / v
    d = u.d or inv_v.d
    a_u, b_u = u.a, u.b
    a_i, b_i = inv_v.a, inv_v.b
    at = a_i
    ax = -(a_u * a_i + b_u * b_i * d)
    bt = b_i
    bx = -(a_u * b_i + b_u * a_i)
    den = lcm(at.denominator, ax.denominator, bt.denominator, bx.denominator)
    return (
        int(at * den),
        int(ax * den),
        int(bt * den),
        int(bx * den),
        den,
        d,
    )


def _quad_counts(u: QuadNumber, v: QuadNumber, ts: list[int]) -> list[int]:
    at, ax, bt, bx, den, d = _quad_linear_forms(u, v)
    inv_u = QuadNumber.from_value(1) / u
    xmaxs = [math.floor(inv_u * t) for t in ts]
    tmax, xmax_max = max(ts), max(xmaxs)
    a_bound = abs(at) * tmax + abs(ax) * xmax_max
    b_bound = abs(bt) * tmax + abs(bx) * xmax_max
    n_bound = b_bound * b_bound * d
    acc_bound = (xmax_max + 1) * ((a_bound + isqrt(n_bound)) // den + 2)
    if max(n_bound, a_bound + isqrt(n_bound) + 1, acc_bound) < _INT64_GUARD:
        out = kernels.quad_counts(
            at, ax, bt, bx, den, d,
            np.asarray(ts, dtype=np.int64),
            np.asarray(xmaxs, dtype=np.int64),
        )
        return [int(x) for x in out]
    return _quad_counts_bigint(u, v, ts)


def _quad_counts_bigint(u: QuadNumber, v: QuadNumber, ts: list[int]) -> list[int]:
    """Same linear-form floors as the kernels, in unbounded integer arithmetic."""
    at, ax, bt, bx, den, d = _quad_linear_forms(u, v)
    inv_u = QuadNumber.from_value(1) / u
    result = []
    for t in ts:
        xmax = math.floor(inv_u * t)
        acc = xmax + 1
        for x in range(xmax + 1):
            a_val = at * t + ax * x
            b_val = bt * t + bx * x
            root = isqrt(b_val * b_val * d)
            if b_val >= 0:
                acc += (a_val + root) // den
            else:
                acc += (a_val - root - 1) // den
        result.append(acc)
    return result


def count_triangle_interior(obj: TriangleLike, t: int) -> int:
    """Number of integer (x, y) with x, y >= 1 and u*x + v*y < t."""
    pair = _as_pair(obj)
    if t < 0:
        raise ValueError("dilation factor must be >= 0")
    u, v = pair.u, pair.v
    if u < v:
        u, v = v, u
    total = 0
    xtop = math.floor(QuadNumber.from_value(t) / u)
    if u * xtop == t:
        xtop -= 1
    for x in range(1, xtop + 1):
        w = (QuadNumber.from_value(t) - u * x) / v
        k = math.floor(w)
        if w == k:
            k -= 1  # strict inequality: drop boundary point
        if k > 0:
            total += k
    return total


def count_axis_simplex(simplex: AxisSimplex, t: int) -> int:
    """Number of integer points x >= 0 with sum(x_i / L_i) <= t."""
    if t < 0:
        raise ValueError("dilation factor must be >= 0")
    return _simplex_count(simplex.legs, QuadNumber.from_value(t))


def _simplex_count(legs: tuple[QuadNumber, ...], rem: QuadNumber) -> int:
    if rem.sign() < 0:
        return 0
    first = legs[0]
    if len(legs) == 1:
        return math.floor(rem * first) + 1
    if len(legs) == 2 and rem.is_integer():
        one = QuadNumber.from_value(1)
        return count_triangle(TrianglePair(one / legs[0], one / legs[1]), int(rem.as_fraction()))
    total = 0
    for x in range(math.floor(rem * first) + 1):
        total += _simplex_count(legs[1:], rem - QuadNumber.from_value(x) / first)
    return total


def count_interval(interval: Interval, t: int) -> int:
    """Number of integers in [t*lo, t*hi]."""
    if t < 0:
        raise ValueError("dilation factor must be >= 0")
    lo_t = interval.lo * t
    hi_t = interval.hi * t
    n = math.floor(hi_t) - math.floor(lo_t)
    if lo_t.is_integer():
        n += 1
    return n


def count_rational_triangle2d(tri: RationalTriangle2D) -> int:
    """Lattice points inside or on a rational triangle, by exact row scan."""
    verts = tri.vertices
    edges = [(verts[0], verts[1]), (verts[1], verts[2]), (verts[2], verts[0])]
    ys = [v[1] for v in verts]
    total = 0
    for y in range(ceil(min(ys)), floor(max(ys)) + 1):
        xs: list[Fraction] = []
        for (x1, y1), (x2, y2) in edges:
            if y1 == y2:
                if y1 == y:
                    xs.extend((x1, x2))
            elif min(y1, y2) <= y <= max(y1, y2):
                xs.append(x1 + (x2 - x1) * Fraction(y - y1, 1) / (y2 - y1))
        if not xs:
            continue
        row = floor(max(xs)) - ceil(min(xs)) + 1
        if row > 0:
            total += row
    return total


class ClosedFormContext:
    """Residue data entering the admissible-pair closed form."""

    __slots__ = ("z", "sigma")

    def __init__(self, t: int, alpha: int):
        self.z = t % alpha  # in [0, alpha), also for negative t
        self.sigma = 1 if self.z == 0 else 0


def closed_form_admissible(pair: AdmissiblePair, t: int) -> Fraction:
    """Exact count of the admissible triangle's t-th dilate, any integer t:

    (t^2*beta + t*alpha*beta + z*beta*(alpha - z) + 2*alpha*sigma) / (2*alpha)
    with z = t mod alpha and sigma = [alpha divides t].
    """
    a, b = pair.alpha, pair.beta
    ctx = ClosedFormContext(t, a)
    num = t * t * b + t * a * b + ctx.z * b * (a - ctx.z) + 2 * a * ctx.sigma
    return Fraction(num, 2 * a)


def asymptotic_deficit(obj: TriangleLike, t: int) -> float:
    """|count(t) - t^2/(2uv) - (1/u + 1/v)*t/2| / t, evaluated to float.

    The difference is formed exactly as a quadratic-field number; only the
    final conversion uses (high-precision) floating point.
    """
    if t < 1:
        raise ValueError("need t >= 1")
    pair = _as_pair(obj)
    count = count_triangle(pair, t)
    u, v = pair.u, pair.v
    uv = u * v
    main = QuadNumber.from_value(Fraction(t * t, 2)) / uv + (u + v) / uv * Fraction(t, 2)
    diff = abs(QuadNumber.from_value(count) - main)
    return _quad_to_float(diff) / t


def _quad_to_float(x: QuadNumber) -> float:
    with mp.workdps(60):
        val = mp.mpf(x.a.numerator) / x.a.denominator
        if x.d:
            val += mp.mpf(x.b.numerator) / x.b.denominator * mp.sqrt(x.d)
        return float(val)


def counts_table(obj: TriangleLike, t_max: int) -> list[int]:
    """Counts for t = 0..t_max inclusive."""
    return count_triangle_many(obj, range(t_max + 1))
