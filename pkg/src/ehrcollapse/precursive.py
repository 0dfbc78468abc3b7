"""Guessing and verifying linear recurrences with polynomial coefficients.

A recurrence of order k and coefficient degree d is a tuple of polynomials
p_0..p_k, not all zero, with sum_j p_j(n+j) * f(n+j) = 0 for every n >= 0.
Guessing fits an exact nullspace on the first half of the available windows
and verifies the candidate on all of them; failure to verify moves on to the
next (order, degree) cell instead of ever returning an unverified answer.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm
from typing import Optional, Sequence, Union

from .linalg import nullspace_vector, rank_mod_p

Value = Union[int, Fraction]


class InsufficientDataError(ValueError):
    """Raised when too few values are given for the requested search bounds."""


@dataclass(frozen=True)
class Recurrence:
    order: int
    degree: int
    polys: tuple[tuple[Fraction, ...], ...]  # polys[j][i]: coefficient of n^i in p_j

    def __post_init__(self) -> None:
        rows = tuple(tuple(Fraction(c) for c in row) for row in self.polys)
        if len(rows) != self.order + 1 or any(len(r) != self.degree + 1 for r in rows):
            raise ValueError("need order+1 polynomials of degree <= degree")
        if all(c == 0 for row in rows for c in row):
            raise ValueError("the zero recurrence is not allowed")
        object.__setattr__(self, "polys", rows)

    def poly_value(self, j: int, n: int) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.polys[j]):
            acc = acc * n + c
        return acc

    def to_json_dict(self) -> dict:
        return {
            "order": self.order,
            "degree": self.degree,
            "polys": [
                [f"{c.numerator}/{c.denominator}" for c in row] for row in self.polys
            ],
        }

    @classmethod
    def from_json_dict(cls, obj: dict) -> "Recurrence":
        return cls(
            int(obj["order"]),
            int(obj["degree"]),
            tuple(tuple(Fraction(c) for c in row) for row in obj["polys"]),
        )


def verify_recurrence(rec: Recurrence, values: Sequence[Value]) -> bool:
    """Whether sum_j p_j(n+j) * f(n+j) = 0 holds at every window in values."""
    k = rec.order
    if len(values) < k + 1:
        return False
    for n in range(len(values) - k):
        acc = Fraction(0)
        for j in range(k + 1):
            acc += rec.poly_value(j, n + j) * values[n + j]
        if acc != 0:
            return False
    return True


def guess_recurrence(
    values: Sequence[Value], max_order: int, max_degree: int
) -> Optional[Recurrence]:
    """Smallest verified recurrence within the bounds, or None.

    Cells (order, degree) are scanned in lexicographic order.  For each cell
    the linear system uses the first half of the windows; an exact canonical
    nullspace vector gives the candidate, which must then verify on the whole
    sequence.  Requires len(values) - 1 >= 2*(max_order+1)*(max_degree+1) +
    max_order so the fit stays overdetermined at the largest cell.
    """
    if max_order < 0 or max_degree < 0:
        raise ValueError("bounds must be >= 0")
    n_top = len(values) - 1
    if n_top < 2 * (max_order + 1) * (max_degree + 1) + max_order:
        raise InsufficientDataError(
            f"{len(values)} values are too few for bounds "
            f"({max_order}, {max_degree})"
        )
    vals = [Fraction(v) for v in values]
    all_int = all(v.denominator == 1 for v in vals)
    for order in range(max_order + 1):
        for degree in range(max_degree + 1):
            ncols = (order + 1) * (degree + 1)
            windows = n_top - order + 1
            n_fit = (windows + 1) // 2
            rows = [
                [(n + j) ** i * vals[n + j]
                 for j in range(order + 1) for i in range(degree + 1)]
                for n in range(n_fit)
            ]
            if all_int:
                int_rows = [[v.numerator for v in row] for row in rows]
                if rank_mod_p(int_rows, ncols) == ncols:
                    continue  # provably trivial nullspace, skip the exact pass
            vec = nullspace_vector(rows, ncols)
            if vec is None:
                continue
            rec = _vector_to_recurrence(vec, order, degree)
            if verify_recurrence(rec, vals):
                return rec
    return None


def _vector_to_recurrence(vec: Sequence[Fraction], order: int, degree: int) -> Recurrence:
    scale = lcm(*[c.denominator for c in vec])
    ints = [int(c * scale) for c in vec]
    g = gcd(*ints)
    if g:
        ints = [c // g for c in ints]
    lead = next(c for c in ints if c)
    if lead < 0:
        ints = [-c for c in ints]
    polys = tuple(
        tuple(Fraction(ints[j * (degree + 1) + i]) for i in range(degree + 1))
        for j in range(order + 1)
    )
    return Recurrence(order, degree, polys)


def recurrence_from_quasipolynomial_bounds(period: int, degree: int) -> tuple[int, int]:
    """Any quasipolynomial sequence of this period and degree satisfies a
    recurrence of order period*(degree+1) with constant coefficients."""
    return period * (degree + 1), 0
