"""int64 counting kernels.

Hot loops are numba @njit compiled; a pure-numpy implementation of the same
arithmetic is kept as a fallback and can be forced with EHRCOLLAPSE_PURE_NUMPY=1.
Callers are responsible for the int64 range guards (see counting.py); inputs
that might overflow stay on the exact big-integer path and never reach here.

Every kernel is exact: floors come from integer division and integer square
roots (float sqrt only seeds the root, then correction loops make it exact).
"""

from __future__ import annotations

import math
import os

import numpy as np

PURE_NUMPY = os.environ.get("EHRCOLLAPSE_PURE_NUMPY", "") == "1"

HAS_NUMBA = False
if not PURE_NUMPY:
    try:
        from numba import njit

        HAS_NUMBA = True
    except ImportError:  # pragma: no cover - numba is a declared dependency
        pass


# -- rational triangles: count u*x + v*y <= t with u = q/p, v = s/r ----------
#
# per t: sum over x = 0..(t*p)//q of (r*(t*p - q*x)) // (p*s) + 1


def _rational_counts_python(p, q, r, s, ts, out):
    ps = p * s
    for i in range(ts.shape[0]):
        tp = ts[i] * p
        xmax = tp // q
        acc = xmax + 1
        for x in range(xmax + 1):
            acc += (r * (tp - q * x)) // ps
        out[i] = acc


def rational_counts_numpy(p: int, q: int, r: int, s: int, ts: np.ndarray) -> np.ndarray:
    ps = p * s
    out = np.empty(ts.shape[0], dtype=np.int64)
    for i in range(ts.shape[0]):
        tp = int(ts[i]) * p
        xmax = tp // q
        xs = np.arange(xmax + 1, dtype=np.int64)
        out[i] = int(np.sum((r * (tp - q * xs)) // ps)) + xmax + 1
    return out


# -- quadratic triangles ------------------------------------------------------
#
# per (t, x) the inner floor is floor((A + B*sqrt(d)) / den) with
#   A = at * t + ax * x,  B = bt * t + bx * x,  den > 0,
# which equals (A + isqrt(B*B*d)) // den for B >= 0 and
# (A - isqrt(B*B*d) - 1) // den for B < 0 (B*sqrt(d) irrational when B != 0).


def _quad_counts_python(at, ax, bt, bx, den, d, ts, xmaxs, out):
    for i in range(ts.shape[0]):
        t = ts[i]
        acc = xmaxs[i] + 1
        for x in range(xmaxs[i] + 1):
            a_val = at * t + ax * x
            b_val = bt * t + bx * x
            n = b_val * b_val * d
            root = int(math.sqrt(float(n)))
            if root < 0:
                root = 0
            while (root + 1) * (root + 1) <= n:
                root += 1
            while root * root > n:
                root -= 1
            if b_val >= 0:
                acc += (a_val + root) // den
            else:
                acc += (a_val - root - 1) // den
        out[i] = acc


def quad_counts_numpy(at, ax, bt, bx, den, d, ts, xmaxs) -> np.ndarray:
    out = np.empty(ts.shape[0], dtype=np.int64)
    for i in range(ts.shape[0]):
        t = int(ts[i])
        xs = np.arange(int(xmaxs[i]) + 1, dtype=np.int64)
        a_vals = at * t + ax * xs
        b_vals = bt * t + bx * xs
        n = b_vals * b_vals * d
        root = np.sqrt(n.astype(np.float64)).astype(np.int64)
        while True:
            over = root * root > n
            if not over.any():
                break
            root[over] -= 1
        while True:
            under = (root + 1) * (root + 1) <= n
            if not under.any():
                break
            root[under] += 1
        floors = np.where(b_vals >= 0, (a_vals + root) // den, (a_vals - root - 1) // den)
        out[i] = int(np.sum(floors)) + xs.shape[0]
    return out


if HAS_NUMBA:
    _rational_counts_numba = njit(cache=True)(_rational_counts_python)
    _quad_counts_numba = njit(cache=True)(_quad_counts_python)


def rational_counts(p: int, q: int, r: int, s: int, ts: np.ndarray) -> np.ndarray:
    """Counts for the rational triangle u = q/p, v = s/r at each t in ts."""
    if HAS_NUMBA:
        out = np.empty(ts.shape[0], dtype=np.int64)
        _rational_counts_numba(p, q, r, s, ts, out)
        return out
    return rational_counts_numpy(p, q, r, s, ts)


def quad_counts(at, ax, bt, bx, den, d, ts, xmaxs) -> np.ndarray:
    """Counts from integer linear-form data; see module comment for the formula."""
    if HAS_NUMBA:
        out = np.empty(ts.shape[0], dtype=np.int64)
        _quad_counts_numba(at, ax, bt, bx, den, d, ts, xmaxs, out)
        return out
    return quad_counts_numpy(at, ax, bt, bx, den, d, ts, xmaxs)


def warmup() -> None:
    """Trigger JIT compilation on tiny inputs so timings stay honest later."""
    ts = np.array([1], dtype=np.int64)
    rational_counts(1, 1, 1, 1, ts)
    quad_counts(1, -1, 1, -1, 2, 2, ts, np.array([1], dtype=np.int64))
