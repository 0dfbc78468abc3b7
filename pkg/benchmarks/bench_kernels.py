"""Benchmark the counting kernels: interpreted loop vs numpy vs numba.

Each workload is checked for agreement across backends before timing, so the
numbers always describe identical exact arithmetic.  Run with
EHRCOLLAPSE_PURE_NUMPY=1 to see the table the fallback install would produce
(the numba rows disappear).

Usage: python benchmarks/bench_kernels.py [--t-max N] [--repeats R]
"""

import argparse
import math
import time
from fractions import Fraction

import numpy as np

from ehrcollapse import kernels
from ehrcollapse.arith import QuadNumber, quad_sqrt
from ehrcollapse.counting import _quad_linear_forms


def time_best(fn, repeats: int) -> float:
    best = math.inf
    for _ in range(repeats):
        start = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - start)
    return best


def rational_backends(p: int, q: int, r: int, s: int, ts: np.ndarray) -> dict:
    def python():
        out = np.empty(ts.shape[0], dtype=np.int64)
        kernels._rational_counts_python(p, q, r, s, ts, out)
        return out

    backends = {"python": python,
                "numpy": lambda: kernels.rational_counts_numpy(p, q, r, s, ts)}
    if kernels.HAS_NUMBA:
        def numba():
            out = np.empty(ts.shape[0], dtype=np.int64)
            kernels._rational_counts_numba(p, q, r, s, ts, out)
            return out

        backends["numba"] = numba
    return backends


def quad_backends(u: QuadNumber, v: QuadNumber, ts: np.ndarray) -> dict:
    at, ax, bt, bx, den, d = _quad_linear_forms(u, v)
    inv_u = QuadNumber.from_value(1) / u
    xmaxs = np.array([math.floor(inv_u * int(t)) for t in ts], dtype=np.int64)

    def python():
        out = np.empty(ts.shape[0], dtype=np.int64)
        kernels._quad_counts_python(at, ax, bt, bx, den, d, ts, xmaxs, out)
        return out

    backends = {"python": python,
                "numpy": lambda: kernels.quad_counts_numpy(at, ax, bt, bx, den, d, ts, xmaxs)}
    if kernels.HAS_NUMBA:
        def numba():
            out = np.empty(ts.shape[0], dtype=np.int64)
            kernels._quad_counts_numba(at, ax, bt, bx, den, d, ts, xmaxs, out)
            return out

        backends["numba"] = numba
    return backends


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--t-max", type=int, default=2000,
                        help="dilations 0..t_max per workload (default 2000)")
    parser.add_argument("--repeats", type=int, default=3,
                        help="timing repeats, best is reported (default 3)")
    args = parser.parse_args()

    ts = np.arange(args.t_max + 1, dtype=np.int64)
    golden = QuadNumber(Fraction(3, 2), Fraction(1, 2), 5)
    workloads = [
        ("rational 13/7 x 9/11", rational_backends(7, 13, 11, 9, ts)),
        ("golden (3+sqrt5)/2 pair", quad_backends(golden, 1 / golden, ts)),
        ("legs sqrt2 x 1", quad_backends(quad_sqrt(2), QuadNumber.from_value(1), ts)),
    ]

    kernels.warmup()
    print(f"t = 0..{args.t_max}, best of {args.repeats}"
          + ("" if kernels.HAS_NUMBA else "  [pure-numpy mode: numba rows absent]"))
    print(f"{'workload':<26} {'backend':<8} {'time':>10}  {'vs python':>9}")
    for name, backends in workloads:
        results = {label: fn() for label, fn in backends.items()}
        reference = results["python"]
        for label, got in results.items():
            assert np.array_equal(got, reference), (name, label)
        base = time_best(backends["python"], args.repeats)
        for label, fn in backends.items():
            best = time_best(fn, args.repeats)
            print(f"{name:<26} {label:<8} {best * 1e3:>8.2f}ms  {base / best:>8.1f}x")


if __name__ == "__main__":
    main()
