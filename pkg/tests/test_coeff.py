from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from partalg.coeff import (
    DeltaPoly,
    ModeError,
    Ring,
    SYMBOLIC,
    format_rational,
    format_scalar,
    parse_rational,
    ring_add,
    ring_mul,
    scalar_from_json,
    scalar_to_json,
    specialize,
)

d = DeltaPoly.delta()

rationals = st.fractions(max_denominator=50).filter(lambda q: abs(q.numerator) < 10 ** 6)
polys = st.lists(rationals, max_size=5).map(DeltaPoly)


def test_rational_sum():
    assert ring_add(Fraction(1, 2), Fraction(1, 3)) == Fraction(5, 6)


def test_additive_inverse_is_empty():
    z = ring_add(d, -d)
    assert z.coeffs == ()
    assert z == DeltaPoly()


def test_poly_sum():
    assert ring_add(d ** 2 + 1, 3 * d) == DeltaPoly((1, 3, 1))


def test_difference_of_squares():
    assert ring_mul(d - 1, d + 1) == DeltaPoly((-1, 0, 1))


def test_zero_absorbs():
    assert ring_mul(DeltaPoly(), d ** 3 - 7).is_zero()
    assert ring_mul(Fraction(0), Fraction(7, 3)) == 0


def test_specialized_ring():
    ring = Ring(5)
    assert ring.coerce(5) * ring.coerce(2) == 10
    assert ring.delta_value() == 5
    assert not ring.symbolic


def test_specialize_examples():
    assert specialize(d ** 2 - 1, 3) == 8
    assert specialize(d / 2, 1) == Fraction(1, 2)
    assert specialize(DeltaPoly(), Fraction(-7, 3)) == 0


def test_mixed_mode_rejected():
    with pytest.raises(ModeError):
        ring_add(Fraction(1), d)
    with pytest.raises(ModeError):
        ring_mul(d, Fraction(2))


def test_trailing_zeros_stripped():
    assert DeltaPoly((1, 2, 0, 0)).coeffs == (1, 2)
    assert DeltaPoly((1, 2, 0)).degree == 1


def test_text_form():
    assert str(DeltaPoly((1, Fraction(-1, 2), 3))) == "1 - 1/2*d + 3*d^2"
    assert format_rational(Fraction(-3, 6)) == "-1/2"
    assert format_rational(Fraction(4, 2)) == "2"
    assert format_scalar(Fraction(5, 6)) == "5/6"


def test_json_form():
    assert scalar_to_json(Fraction(5, 6)) == {"mode": "rational", "value": "5/6"}
    assert scalar_to_json(DeltaPoly((1, Fraction(-1, 2), 3))) == {"mode": "poly", "coeffs": ["1", "-1/2", "3"]}


@pytest.mark.parametrize("text", ["5/6", "-3", "0", " 7 / 14 "])
def test_parse_rational(text):
    q = parse_rational(text)
    assert parse_rational(format_rational(q)) == q


@pytest.mark.parametrize("text", ["", "1/0", "x", "1.5"])
def test_parse_rational_rejects(text):
    with pytest.raises((ValueError, ZeroDivisionError)):
        parse_rational(text)


def test_symbolic_content():
    assert SYMBOLIC.content(2, Fraction(-1, 2)) == DeltaPoly((2, Fraction(-1, 2)))
    assert Ring(3).content(2, Fraction(-1, 2)) == Fraction(1, 2)


@given(polys, polys, polys)
def test_poly_ring_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert a + b == b + a
    assert a * (b + c) == a * b + a * c
    assert (a * b) * c == a * (b * c)


@given(rationals, rationals, rationals)
def test_rational_ring_axioms(a, b, c):
    assert ring_add(ring_add(a, b), c) == ring_add(a, ring_add(b, c))
    assert ring_mul(a, ring_add(b, c)) == ring_add(ring_mul(a, b), ring_mul(a, c))


@given(polys, polys, rationals)
def test_specialize_is_homomorphism(p, q, x):
    assert specialize(p * q, x) == specialize(p, x) * specialize(q, x)
    assert specialize(p + q, x) == specialize(p, x) + specialize(q, x)


@given(polys, polys)
def test_equality_matches_difference(a, b):
    assert ((a - b).is_zero()) == (a == b)


@given(polys)
def test_json_round_trip(p):
    assert scalar_from_json(scalar_to_json(p)) == p


@given(rationals)
def test_rational_json_round_trip(q):
    assert scalar_from_json(scalar_to_json(q)) == q
    assert parse_rational(format_rational(q)) == q
