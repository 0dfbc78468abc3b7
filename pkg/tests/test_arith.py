"""Exact quadratic arithmetic: canonical forms, order, floor, serialization."""

from fractions import Fraction
from math import floor, isqrt

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ehrcollapse.arith import (
    QuadNumber,
    RadicandMismatchError,
    parse_quad,
    quad_floor,
    quad_sign,
    quad_sqrt,
)

fractions = st.fractions(
    min_value=Fraction(-50), max_value=Fraction(50), max_denominator=20
)
radicands = st.integers(min_value=0, max_value=120)


@st.composite
def quads(draw, d=None):
    if d is None:
        d = draw(radicands)
    return QuadNumber(draw(fractions), draw(fractions), d)


# -- canonical form ------------------------------------------------------------


def test_normalizes_square_factors():
    x = QuadNumber(Fraction(0), Fraction(1), 8)
    assert (x.a, x.b, x.d) == (Fraction(0), Fraction(2), 2)


def test_normalizes_perfect_square_radicand():
    x = QuadNumber(Fraction(1), Fraction(1, 2), 12)
    assert (x.a, x.b, x.d) == (Fraction(1), Fraction(1), 3)
    y = QuadNumber(Fraction(1), Fraction(3), 4)
    assert y == 7 and y.d == 0


def test_zero_b_clears_radicand():
    assert QuadNumber(Fraction(5, 3), Fraction(0), 7).d == 0


def test_rejects_negative_radicand():
    with pytest.raises(ValueError):
        QuadNumber(Fraction(0), Fraction(1), -2)


@given(quads())
def test_canonical_form_is_stable(x):
    again = QuadNumber(x.a, x.b, x.d)
    assert (again.a, again.b, again.d) == (x.a, x.b, x.d)


@given(quads())
def test_equal_values_hash_equal(x):
    assert hash(QuadNumber(x.a, x.b, x.d)) == hash(x)
    if x.is_rational:
        assert hash(x) == hash(x.a)


# -- field laws ----------------------------------------------------------------


@given(st.data(), st.sampled_from([0, 2, 3, 5, 7, 10, 13]))
def test_field_laws_share_radicand(data, d):
    x = data.draw(quads(d=d))
    y = data.draw(quads(d=d))
    z = data.draw(quads(d=d))
    assert (x + y) + z == x + (y + z)
    assert (x + y) * z == x * z + y * z
    assert x * y == y * x
    assert x - x == 0
    if x != 0:
        assert x * (1 / x) == 1


@given(quads())
def test_conjugate_norm_is_rational(x):
    norm = x * x.conjugate()
    assert norm.is_rational
    assert norm.as_fraction() == x.a * x.a - x.b * x.b * x.d


@given(quads(), st.integers(min_value=0, max_value=6))
def test_pow_matches_repeated_multiplication(x, n):
    out = QuadNumber(Fraction(1))
    for _ in range(n):
        out = out * x
    assert x ** n == out


def test_mixed_radicands_rejected():
    r2 = quad_sqrt(2)
    r3 = quad_sqrt(3)
    with pytest.raises(RadicandMismatchError):
        r2 + r3
    with pytest.raises(RadicandMismatchError):
        r2 * r3
    # rational operands always combine
    assert r2 + 1 == QuadNumber(Fraction(1), Fraction(1), 2)


def test_division_by_zero():
    with pytest.raises(ZeroDivisionError):
        quad_sqrt(2) / QuadNumber(Fraction(0))


# -- order and floor -------------------------------------------------------------


def test_known_signs_and_floors():
    r2 = quad_sqrt(2)
    assert quad_sign(r2 - 1) == 1 and quad_sign(r2 - 2) == -1
    assert quad_floor(r2) == 1
    assert quad_floor(-r2) == -2
    golden_root = QuadNumber(Fraction(3, 2), Fraction(1, 2), 5)  # (3+sqrt 5)/2
    assert quad_floor(golden_root) == 2
    assert quad_floor(QuadNumber(Fraction(7))) == 7
    assert quad_floor(QuadNumber(Fraction(-7, 2))) == -4


@given(quads())
def test_floor_certificate(x):
    f = floor(x)
    assert (x - f).sign() >= 0
    assert (x - (f + 1)).sign() < 0


@given(quads())
def test_ceil_matches_floor(x):
    c = x.__ceil__()
    assert (QuadNumber.from_value(c) - x).sign() >= 0
    assert (QuadNumber.from_value(c - 1) - x).sign() < 0


@given(st.data(), st.sampled_from([0, 2, 3, 5, 7, 10]))
def test_order_is_consistent_with_difference_sign(data, d):
    x = data.draw(quads(d=d))
    y = data.draw(quads(d=d))
    assert (x < y) == ((x - y).sign() < 0)
    assert (x <= y) == ((x - y).sign() <= 0)
    assert (x < y) or (x == y) or (x > y)


@given(quads())
@settings(max_examples=60)
def test_sign_matches_scaled_isqrt(x):
    # independent exact check: compare a and -b*sqrt(d) via squared integers
    num_a = x.a.numerator * x.b.denominator
    num_b = x.b.numerator * x.a.denominator
    lhs, rhs = num_a * abs(num_a), -num_b * abs(num_b) * x.d
    want = (lhs > rhs) - (lhs < rhs) if x.d else (x.a > 0) - (x.a < 0)
    assert x.sign() == want


# -- helpers and serialization ----------------------------------------------------


def test_quad_sqrt_is_exact():
    assert quad_sqrt(Fraction(4, 9)) == Fraction(2, 3)
    half = quad_sqrt(Fraction(1, 2))
    assert half * half == Fraction(1, 2)
    assert half.d == 2
    with pytest.raises(ValueError):
        quad_sqrt(-1)


def test_parse_quad_forms():
    assert parse_quad("7") == 7
    assert parse_quad("5/3") == Fraction(5, 3)
    assert parse_quad("3/2,1/2,5") == QuadNumber(Fraction(3, 2), Fraction(1, 2), 5)
    with pytest.raises(ValueError):
        parse_quad("1,2")


@given(quads())
def test_json_round_trip(x):
    encoded = x.to_json_dict()
    assert all(isinstance(v, str) for v in encoded.values())
    assert QuadNumber.from_json_dict(encoded) == x


def test_isqrt_agreement_on_large_values():
    # the floor path must stay exact far beyond float precision
    big = 10 ** 18
    x = QuadNumber(Fraction(0), Fraction(big), 2)
    assert quad_floor(x) == isqrt(2 * big * big)
