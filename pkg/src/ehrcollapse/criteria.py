"""Divisibility criteria predicting period collapse, and the classification
of admissible pairs.

All checks are pure integer arithmetic on the defining data and never count
lattice points themselves; reports state which conditions hold and what period
divisor they predict, leaving empirical confirmation to the callers.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Optional

from .polytopes import AdmissiblePair, NotIrrationalError, RationalTriangleParams

COLLAPSE_PREDICTED = "collapse-predicted"
PSEUDO_INTEGRAL_PREDICTED = "pseudo-integral-predicted"
NO_PREDICTION = "no-prediction"


@dataclass(frozen=True)
class CriterionReport:
    criterion: str
    conditions: tuple[tuple[str, bool], ...]
    predicted_period_divisor: Optional[int]
    verdict: str

    @property
    def holds(self) -> bool:
        return all(ok for _, ok in self.conditions)

    def to_json_dict(self) -> dict:
        return {
            "criterion": self.criterion,
            "conditions": [{"name": name, "holds": ok} for name, ok in self.conditions],
            "predicted_period_divisor": self.predicted_period_divisor,
            "verdict": self.verdict,
        }


def _divisibility_triple(p: int, q: int, r: int, s: int) -> tuple[tuple[str, bool], ...]:
    # conditions on u = q/p, v = s/r predicting that q is a quasiperiod
    c1 = s != 0 and p % s == 0
    c2 = (r * q + 1) % p == 0
    c3 = c2 and gcd((r * q + 1) // p, s) == 1
    return (
        ("s divides p", c1),
        ("p divides r*q + 1", c2),
        ("gcd((r*q + 1)/p, s) = 1", c3),
    )


def check_collapse_criterion(params: RationalTriangleParams) -> CriterionReport:
    """Sufficient condition for q to be a quasiperiod of the counting function
    of the rational triangle with u = q/p, v = s/r."""
    conds = _divisibility_triple(params.p, params.q, params.r, params.s)
    holds = all(ok for _, ok in conds)
    return CriterionReport(
        criterion="collapse",
        conditions=conds,
        predicted_period_divisor=params.q if holds else None,
        verdict=COLLAPSE_PREDICTED if holds else NO_PREDICTION,
    )


def check_pseudo_integral_criterion(params: RationalTriangleParams) -> CriterionReport:
    """Sufficient condition for minimal period 1: the collapse conditions
    together with their counterparts under swapping the two legs' roles."""
    p, q, r, s = params.p, params.q, params.r, params.s
    first = _divisibility_triple(p, q, r, s)
    # second triple: q divides r, r divides s*p + 1, gcd((s*p + 1)/r, q) = 1
    c4 = r % q == 0
    c5 = (s * p + 1) % r == 0
    c6 = c5 and gcd((s * p + 1) // r, q) == 1
    conds = first + (
        ("q divides r", c4),
        ("r divides s*p + 1", c5),
        ("gcd((s*p + 1)/r, q) = 1", c6),
    )
    holds = all(ok for _, ok in conds)
    return CriterionReport(
        criterion="pseudo-integral",
        conditions=conds,
        predicted_period_divisor=1 if holds else None,
        verdict=PSEUDO_INTEGRAL_PREDICTED if holds else NO_PREDICTION,
    )


def reciprocal_params(p: int, q: int) -> RationalTriangleParams:
    """The triangle with reciprocal legs u = q/p, v = p/q."""
    return RationalTriangleParams(p, q, q, p)


def check_reciprocal_criterion(p: int, q: int) -> CriterionReport:
    """For the reciprocal-leg triangle, q is a quasiperiod if and only if
    p divides q^2 + 1 with gcd((q^2 + 1)/p, p) = 1."""
    if p < 1 or q < 1 or gcd(p, q) != 1:
        raise ValueError("need positive coprime p, q")
    c1 = (q * q + 1) % p == 0
    c2 = c1 and gcd((q * q + 1) // p, p) == 1
    conds = (
        ("p divides q^2 + 1", c1),
        ("gcd((q^2 + 1)/p, p) = 1", c2),
    )
    holds = c1 and c2
    return CriterionReport(
        criterion="reciprocal",
        conditions=conds,
        predicted_period_divisor=q if holds else None,
        verdict=COLLAPSE_PREDICTED if holds else NO_PREDICTION,
    )


PSEUDO_INTEGRAL = "pseudo-integral"
PSEUDO_RATIONAL_ONLY = "pseudo-rational-only"
NOT_ADMISSIBLE = "not-admissible"


def classify_admissible(alpha: int, beta: int) -> str:
    """Classification of (alpha, beta): admissible pairs have period 1 exactly
    when alpha = 1 or beta = 2*alpha/(alpha - 1), i.e. (alpha, beta) is
    (3, 3) or (2, 4); all other admissible pairs are pseudo-rational only."""
    try:
        AdmissiblePair(alpha, beta)
    except (NotIrrationalError, ValueError):
        return NOT_ADMISSIBLE
    if alpha == 1 or (alpha, beta) in ((3, 3), (2, 4)):
        return PSEUDO_INTEGRAL
    return PSEUDO_RATIONAL_ONLY


def solve_beta_equation(bound: int = 100) -> list[tuple[int, int]]:
    """All integer pairs with beta = 2*alpha/(alpha - 1), 2 <= alpha <= bound.

    alpha - 1 must divide 2*alpha = 2*(alpha - 1) + 2, hence alpha - 1 | 2,
    so the full solution set is [(2, 4), (3, 3)] for any bound >= 3.
    """
    out = []
    for alpha in range(2, bound + 1):
        if (2 * alpha) % (alpha - 1) == 0:
            out.append((alpha, 2 * alpha // (alpha - 1)))
    return out
