"""Quasipolynomial fitting, minimal periods, and related reports.

A quasipolynomial of period pi and degree k is a family of pi polynomials
("constituents"), one per residue class of t mod pi.  Fitting is exact:
interpolate each constituent through its first degree+1 samples, then demand
that every remaining sample matches exactly; any mismatch returns None rather
than a best-effort answer.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Sequence, Union

from . import counting
from .linalg import solve_square
from .polytopes import AdmissiblePair, RationalTriangleParams, TrianglePair


class InsufficientSamplesError(ValueError):
    """Raised when some residue class has fewer than degree+1 samples."""


class FitFailureError(RuntimeError):
    """Raised when a fit that is guaranteed to exist does not verify."""


@dataclass(frozen=True)
class Quasipolynomial:
    period: int
    degree: int
    coeffs: tuple[tuple[Fraction, ...], ...]  # coeffs[z][i]: coefficient of t^i

    def __post_init__(self) -> None:
        if self.period < 1:
            raise ValueError("period must be >= 1")
        if self.degree < 0:
            raise ValueError("degree must be >= 0")
        rows = tuple(tuple(Fraction(c) for c in row) for row in self.coeffs)
        if len(rows) != self.period or any(len(row) != self.degree + 1 for row in rows):
            raise ValueError("coefficient table must be period x (degree+1)")
        object.__setattr__(self, "coeffs", rows)

    def evaluate(self, t: int) -> Fraction:
        """Exact value at any integer t (negative t uses t mod period >= 0)."""
        acc = Fraction(0)
        for c in reversed(self.coeffs[t % self.period]):
            acc = acc * t + c
        return acc

    def reduce(self) -> "Quasipolynomial":
        """Equivalent quasipolynomial at the least period dividing this one."""
        for cand in _divisors(self.period):
            if all(self.coeffs[z] == self.coeffs[z % cand] for z in range(self.period)):
                return Quasipolynomial(cand, self.degree, self.coeffs[:cand])
        return self  # unreachable: cand == period always matches

    def to_json_dict(self) -> dict:
        return {
            "period": self.period,
            "degree": self.degree,
            "coeffs": [
                [f"{c.numerator}/{c.denominator}" for c in row] for row in self.coeffs
            ],
        }

    @classmethod
    def from_json_dict(cls, obj: dict) -> "Quasipolynomial":
        return cls(
            int(obj["period"]),
            int(obj["degree"]),
            tuple(tuple(Fraction(c) for c in row) for row in obj["coeffs"]),
        )


def _divisors(n: int) -> list[int]:
    return [d for d in range(1, n + 1) if n % d == 0]


Sample = tuple[int, Union[int, Fraction]]


def fit_quasipolynomial(
    samples: Iterable[Sample], period: int, degree: int
) -> Optional[Quasipolynomial]:
    """Exact fit of the samples at the given period and degree.

    Interpolates each residue class through its first degree+1 samples and
    verifies all others; returns None if any sample disagrees.  Raises
    InsufficientSamplesError when a class has fewer than degree+1 samples.
    """
    if period < 1 or degree < 0:
        raise ValueError("need period >= 1 and degree >= 0")
    cleaned = sorted({(int(t), Fraction(y)) for t, y in samples})
    by_res: dict[int, list[Sample]] = {z: [] for z in range(period)}
    for t, y in cleaned:
        by_res[t % period].append((t, y))
    short = [z for z, pts in by_res.items() if len(pts) < degree + 1]
    if short:
        raise InsufficientSamplesError(
            f"residues {short} have fewer than {degree + 1} samples"
        )
    table = []
    for z in range(period):
        pts = by_res[z][: degree + 1]
        matrix = [[Fraction(t) ** i for i in range(degree + 1)] for t, _ in pts]
        sol = solve_square(matrix, [y for _, y in pts])
        if sol is None:
            raise InsufficientSamplesError(f"degenerate sample nodes in residue {z}")
        table.append(tuple(sol))
    qp = Quasipolynomial(period, degree, tuple(table))
    for t, y in cleaned:
        if qp.evaluate(t) != y:
            return None
    return qp


def minimal_period(
    obj: Union[RationalTriangleParams, AdmissiblePair],
    degree: int = 2,
    extra_per_residue: int = 3,
) -> tuple[Quasipolynomial, int]:
    """Fit at the guaranteed period, verify held-out samples, then reduce.

    The guaranteed period is the vertex denominator lcm(q, s) for rational
    parameters and alpha for an admissible pair.  Sampling covers degree+1
    fitting values plus extra_per_residue held-out values per residue class.
    Returns (reduced quasipolynomial, its minimal period).
    """
    if isinstance(obj, AdmissiblePair):
        guaranteed = obj.alpha
    elif isinstance(obj, RationalTriangleParams):
        guaranteed = obj.denominator
    else:
        raise TypeError(f"unsupported type {type(obj).__name__}")
    t_hi = (degree + 1 + extra_per_residue) * guaranteed - 1
    ts = range(t_hi + 1)
    values = counting.count_triangle_many(obj, ts)
    qp = fit_quasipolynomial(zip(ts, values), guaranteed, degree)
    if qp is None:
        raise FitFailureError(
            f"no verified degree-{degree} fit at guaranteed period {guaranteed}"
        )
    reduced = qp.reduce()
    return reduced, reduced.period


@dataclass(frozen=True)
class SeriesNumerator:
    """Numerator 1 + a1*z + a2*z^2 of sum_t I(t) z^t times (1-z)^3, for a
    polynomial counting function of degree <= 2 with I(0) = 1."""

    a0: Fraction
    a1: Fraction
    a2: Fraction

    def as_tuple(self) -> tuple[Fraction, Fraction, Fraction]:
        return (self.a0, self.a1, self.a2)


def series_numerator(i1: Union[int, Fraction], i2: Union[int, Fraction]) -> SeriesNumerator:
    """Numerator coefficients from the counts at t = 1 and t = 2."""
    i1, i2 = Fraction(i1), Fraction(i2)
    return SeriesNumerator(Fraction(1), i1 - 3, 3 - 3 * i1 + i2)


@dataclass(frozen=True)
class ReciprocityReport:
    """Comparison of the fitted quasipolynomial at -t with the open count at t."""

    t: int
    value_at_neg_t: Fraction
    interior_count: int
    correction: Fraction  # value_at_neg_t - interior_count
    alpha_divides_t: bool


def reciprocity_report(
    pair: AdmissiblePair, t: int, qp: Optional[Quasipolynomial] = None
) -> ReciprocityReport:
    if t < 1:
        raise ValueError("need t >= 1")
    if qp is None:
        qp, _ = minimal_period(pair)
    lhs = qp.evaluate(-t)
    interior = counting.count_triangle_interior(pair, t)
    return ReciprocityReport(t, lhs, interior, lhs - interior, t % pair.alpha == 0)
