"""Integer sequences that parametrize collapsing families.

* k-Fibonacci numbers F_n(k): F_0 = 0, F_1 = 1, F_n = k*F_{n-1} + F_{n-2};
  consecutive pairs give reciprocal-leg triangles whose period collapses.
* The sequence a_1, a_2, ... = 2, 3, 10, 17, ... with a_n = 6*a_{n-2} - a_{n-4},
  feeding a family of tetrahedra that all share one cubic counting polynomial.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

from .arith import QuadNumber
from .polytopes import AxisSimplex, RationalTriangleParams


def k_fib(k: int, n: int) -> int:
    """F_n(k) with F_0 = 0, F_1 = 1, F_n = k*F_{n-1} + F_{n-2}."""
    if k < 1 or n < 0:
        raise ValueError("need k >= 1 and n >= 0")
    prev, cur = 0, 1
    for _ in range(n):
        prev, cur = cur, k * cur + prev
    return prev


def fib_identity_residual(k: int, n: int) -> int:
    """F_n^2 - k*F_{n-1}*F_n - F_{n-1}^2 + (-1)^n; zero for all k, n >= 1."""
    f_prev, f_n = k_fib(k, n - 1), k_fib(k, n)
    return f_n * f_n - k * f_prev * f_n - f_prev * f_prev + (-1) ** n


def fib_gcds(k: int, n: int) -> tuple[int, int]:
    """(gcd(F_n, F_{n-1}), gcd(F_n, k)) for n >= 1.

    The first gcd is 1 for every k, n.  The second is 1 exactly when n is odd
    or k = 1; even-indexed terms are divisible by k (F_2 = k already), so the
    blanket coprimality sometimes quoted for all n only holds in the odd-index
    form, which is also the only form the quasiperiod arguments need.
    """
    f_prev, f_n = k_fib(k, n - 1), k_fib(k, n)
    return (gcd(f_n, f_prev), gcd(f_n, k))


def fib_triangle(k: int, n: int) -> RationalTriangleParams:
    """Reciprocal-leg triangle with u = F_n(k)/F_{n-1}(k); needs n >= 2."""
    if n < 2:
        raise ValueError("need n >= 2 so that F_{n-1} >= 1")
    f_prev, f_n = k_fib(k, n - 1), k_fib(k, n)
    return RationalTriangleParams(f_prev, f_n, f_n, f_prev)


def a_sequence(n: int) -> int:
    """a_1, a_2, a_3, a_4 = 2, 3, 10, 17 and a_n = 6*a_{n-2} - a_{n-4}."""
    if n < 1:
        raise ValueError("need n >= 1")
    vals = [2, 3, 10, 17]
    while len(vals) < n:
        vals.append(6 * vals[-2] - vals[-4])
    return vals[n - 1]


def tetra_family(n: int) -> AxisSimplex:
    """Tetrahedron with legs (1/2, a_{2n+1}/a_{2n}, 2*a_{2n}/a_{2n+1})."""
    if n < 1:
        raise ValueError("need n >= 1")
    even, odd = a_sequence(2 * n), a_sequence(2 * n + 1)
    return AxisSimplex((
        QuadNumber(Fraction(1, 2)),
        QuadNumber(Fraction(odd, even)),
        QuadNumber(Fraction(2 * even, odd)),
    ))


def limit_tetrahedron() -> AxisSimplex:
    """Limit of the family: legs (1/2, 2 + sqrt(2), 2 - sqrt(2))."""
    return AxisSimplex((
        QuadNumber(Fraction(1, 2)),
        QuadNumber(Fraction(2), Fraction(1), 2),
        QuadNumber(Fraction(2), Fraction(-1), 2),
    ))


def tetra_polynomial(t: int) -> Fraction:
    """t^3/6 + t^2 + 11*t/6 + 1: the shared counting polynomial of the family
    (integer-valued at every integer t)."""
    return Fraction(t ** 3, 6) + t * t + Fraction(11 * t, 6) + 1
