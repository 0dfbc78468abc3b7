"""Right simplices with rational or quadratic-irrational leg data.

The central object is the triangle T_{u,v} with vertices (0,0), (1/u,0),
(0,1/v); its t-th dilate contains the lattice points (x,y) >= 0 with
u*x + v*y <= t.  Families covered here:

* rational parameter tuples (p,q,r,s) meaning u = q/p, v = s/r in lowest terms
* admissible pairs (alpha, beta): u + v = alpha, 1/u + 1/v = beta are positive
  integers while u/v is irrational
* axis-aligned simplices in any dimension given by their leg lengths
* intervals with quadratic-irrational endpoints
* explicit rational triangles in the plane (used for unimodular images)
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd, isqrt, lcm

from .arith import QuadLike, QuadNumber, RadicandMismatchError


class NotIrrationalError(ValueError):
    """Raised when (alpha, beta) fails to produce an irrational leg ratio."""


@dataclass(frozen=True)
class TrianglePair:
    """Legs of T_{u,v}: the dilate by t counts u*x + v*y <= t over x, y >= 0."""

    u: QuadNumber
    v: QuadNumber
    kind: str = field(init=False)

    def __post_init__(self) -> None:
        u = QuadNumber.from_value(self.u)
        v = QuadNumber.from_value(self.v)
        if u.sign() <= 0 or v.sign() <= 0:
            raise ValueError("both legs must be positive")
        object.__setattr__(self, "u", u)
        object.__setattr__(self, "v", v)
        object.__setattr__(self, "kind", _classify(u, v))

    def swapped(self) -> "TrianglePair":
        return TrianglePair(self.v, self.u)

    def to_json_dict(self) -> dict:
        return {
            "u": self.u.to_json_dict(),
            "v": self.v.to_json_dict(),
            "class": self.kind,
        }


def _classify(u: QuadNumber, v: QuadNumber) -> str:
    if u.is_rational and v.is_rational:
        return "rational"
    try:
        alpha = u + v
        ratio = u / v
    except RadicandMismatchError:
        return "other"
    if alpha.is_integer() and not ratio.is_rational:
        beta = alpha / (u * v)  # 1/u + 1/v = (u+v)/(u*v)
        if beta.is_integer():
            return "admissible"
    return "other"


@dataclass(frozen=True)
class AdmissiblePair:
    """Pair of positive integers (alpha, beta) with u+v = alpha, 1/u+1/v = beta.

    The legs solve x^2*beta - alpha*beta*x + alpha = 0, so
    u, v = (alpha*beta +- sqrt(alpha*beta*(alpha*beta - 4))) / (2*beta),
    and the pair is admissible only when that discriminant is positive and
    not a perfect square (equivalently alpha*beta >= 5).
    """

    alpha: int
    beta: int
    u: QuadNumber = field(init=False)
    v: QuadNumber = field(init=False)

    def __post_init__(self) -> None:
        if self.alpha < 1 or self.beta < 1:
            raise ValueError("alpha and beta must be positive integers")
        m = self.alpha * self.beta
        disc = m * (m - 4)
        if disc <= 0 or isqrt(disc) ** 2 == disc:
            raise NotIrrationalError(
                f"(alpha, beta) = ({self.alpha}, {self.beta}) gives a rational leg ratio"
            )
        u = QuadNumber(Fraction(self.alpha, 2), Fraction(1, 2 * self.beta), disc)
        object.__setattr__(self, "u", u)
        object.__setattr__(self, "v", u.conjugate())

    def triangle(self) -> TrianglePair:
        return TrianglePair(self.u, self.v)


@dataclass(frozen=True)
class RationalTriangleParams:
    """Lowest-term data (p,q,r,s) for the rational triangle with u = q/p, v = s/r."""

    p: int
    q: int
    r: int
    s: int

    def __post_init__(self) -> None:
        for name in ("p", "q", "r", "s"):
            val = getattr(self, name)
            if not isinstance(val, int) or val < 1:
                raise ValueError(f"{name} must be a positive integer, got {val!r}")
        if gcd(self.p, self.q) != 1 or gcd(self.r, self.s) != 1:
            raise ValueError("q/p and s/r must be in lowest terms")

    @classmethod
    def from_fractions(cls, u: Fraction, v: Fraction) -> "RationalTriangleParams":
        u, v = Fraction(u), Fraction(v)
        if u <= 0 or v <= 0:
            raise ValueError("legs must be positive")
        return cls(u.denominator, u.numerator, v.denominator, v.numerator)

    @property
    def u(self) -> Fraction:
        return Fraction(self.q, self.p)

    @property
    def v(self) -> Fraction:
        return Fraction(self.s, self.r)

    @property
    def denominator(self) -> int:
        """lcm of the leg denominators of the triangle's vertices: lcm(q, s)."""
        return lcm(self.q, self.s)

    def triangle(self) -> TrianglePair:
        return TrianglePair(QuadNumber(self.u), QuadNumber(self.v))

    def transpose(self) -> "RationalTriangleParams":
        return RationalTriangleParams(self.r, self.s, self.p, self.q)

    def to_json_dict(self) -> dict[str, int]:
        return {"p": self.p, "q": self.q, "r": self.r, "s": self.s}


@dataclass(frozen=True)
class AxisSimplex:
    """Simplex conv(0, L_1*e_1, ..., L_n*e_n); dilate by t counts
    sum(x_i / L_i) <= t over integer x_i >= 0."""

    legs: tuple[QuadNumber, ...]

    def __post_init__(self) -> None:
        legs = tuple(QuadNumber.from_value(leg) for leg in self.legs)
        if not legs:
            raise ValueError("at least one leg required")
        if any(leg.sign() <= 0 for leg in legs):
            raise ValueError("all legs must be positive")
        object.__setattr__(self, "legs", legs)

    @property
    def dim(self) -> int:
        return len(self.legs)

    def to_json_dict(self) -> dict:
        return {"legs": [leg.to_json_dict() for leg in self.legs]}


@dataclass(frozen=True)
class Interval:
    """Closed segment [lo, hi]; its dilate by t counts integers in [t*lo, t*hi]."""

    lo: QuadNumber
    hi: QuadNumber

    def __post_init__(self) -> None:
        lo = QuadNumber.from_value(self.lo)
        hi = QuadNumber.from_value(self.hi)
        if (hi - lo).sign() <= 0:
            raise ValueError("need lo < hi")
        object.__setattr__(self, "lo", lo)
        object.__setattr__(self, "hi", hi)


Vertex = tuple[Fraction, Fraction]


@dataclass(frozen=True)
class RationalTriangle2D:
    """Arbitrary non-degenerate triangle in the plane with rational vertices."""

    vertices: tuple[Vertex, Vertex, Vertex]

    def __post_init__(self) -> None:
        verts = tuple(
            (Fraction(x), Fraction(y)) for x, y in self.vertices
        )
        if len(verts) != 3:
            raise ValueError("exactly three vertices required")
        (x0, y0), (x1, y1), (x2, y2) = verts
        area2 = (x1 - x0) * (y2 - y0) - (x2 - x0) * (y1 - y0)
        if area2 == 0:
            raise ValueError("degenerate triangle")
        object.__setattr__(self, "vertices", verts)


def mcallister_woods_pair(p: int) -> RationalTriangleParams:
    """The rational triangle with u = p, v = (p-1)/p; denominator p, period 1."""
    if p < 2:
        raise ValueError("need p >= 2")
    return RationalTriangleParams(p, 1, p - 1, p)


def mcallister_woods_image(p: int, t: int) -> RationalTriangle2D:
    """t-th dilate of the unimodular image of the triangle above.

    The lattice-preserving affine map x -> x*[[-1,0],[-p,1]] + (p,0) sends the
    axis triangle (0,0), (p,0), (0,(p-1)/p) to (0,0), (p,0), (1,(p-1)/p), so
    both have equal lattice counts in every dilate.
    """
    if t < 1:
        raise ValueError("need t >= 1")
    return RationalTriangle2D((
        (Fraction(0), Fraction(0)),
        (Fraction(t * p), Fraction(0)),
        (Fraction(t), Fraction(t * (p - 1), p)),
    ))


def iter_admissible_pairs(product_max: int):
    """All admissible pairs with alpha*beta <= product_max, ordered by (alpha, beta)."""
    for alpha in range(1, product_max + 1):
        for beta in range(1, product_max // alpha + 1):
            try:
                yield AdmissiblePair(alpha, beta)
            except NotIrrationalError:
                continue


def iter_lowest_term_params(bound: int):
    """All lowest-term (p, q, r, s) with entries in 1..bound, lexicographic."""
    for p in range(1, bound + 1):
        for q in range(1, bound + 1):
            if gcd(p, q) != 1:
                continue
            for r in range(1, bound + 1):
                for s in range(1, bound + 1):
                    if gcd(r, s) == 1:
                        yield RationalTriangleParams(p, q, r, s)


def scales_to_admissible(alpha_sum: Fraction, beta_sum: Fraction) -> bool:
    """Whether T_{u,v} with u+v = alpha_sum and 1/u+1/v = beta_sum is an
    integer dilate c*T' of some admissible pair's triangle.

    Dilating T' by a positive integer c multiplies the leg sum by c and
    divides the reciprocal sum by c, so it suffices to scan c | beta_sum.
    """
    alpha_sum, beta_sum = Fraction(alpha_sum), Fraction(beta_sum)
    if alpha_sum <= 0 or beta_sum <= 0:
        return False
    c_max = beta_sum.numerator // beta_sum.denominator
    for c in range(1, c_max + 1):
        a_scaled = alpha_sum * c
        b_scaled = beta_sum / c
        if a_scaled.denominator != 1 or b_scaled.denominator != 1:
            continue
        if a_scaled.numerator * b_scaled.numerator >= 5:
            return True
    return False
