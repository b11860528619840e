from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from reidemeister.errors import ParseError
from reidemeister.scalars import (
    GaussRational,
    coerce_to_field,
    format_scalar,
    parse_scalar,
)

rationals = st.fractions(min_value=-10**6, max_value=10**6, max_denominator=10**4)
gaussians = st.builds(GaussRational, rationals, rationals)


@given(gaussians, gaussians, gaussians)
def test_field_laws(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a + b == b + a
    assert a * b == b * a
    assert a * (b + c) == a * b + a * c


@given(gaussians)
def test_conjugation_involution_and_norm(a):
    assert a.conjugate().conjugate() == a
    assert a * a.conjugate() == GaussRational(a.norm())
    assert a.norm() >= 0


@given(gaussians, gaussians)
def test_division_inverts_multiplication(a, b):
    if b == 0:
        with pytest.raises(ZeroDivisionError):
            a / b
    else:
        assert (a / b) * b == a


@given(gaussians)
def test_wire_format_round_trip(a):
    assert parse_scalar(format_scalar(a), "Qi") == a


@given(rationals)
def test_rational_wire_round_trip(q):
    assert parse_scalar(format_scalar(q), "Q") == q


def test_gauss_parse_forms():
    assert parse_scalar("i", "Qi") == GaussRational(0, 1)
    assert parse_scalar("-i", "Qi") == GaussRational(0, -1)
    assert parse_scalar("2-i", "Qi") == GaussRational(2, -1)
    assert parse_scalar("1/2+3/4i", "Qi") == GaussRational(Fraction(1, 2), Fraction(3, 4))
    assert parse_scalar("-3/4i", "Qi") == GaussRational(0, Fraction(-3, 4))
    assert parse_scalar("5", "Qi") == GaussRational(5, 0)


def test_gauss_rejected_in_q_context():
    with pytest.raises(ParseError):
        parse_scalar("1+2i", "Q")


def test_coercion_between_fields():
    assert coerce_to_field(3, "Q") == Fraction(3)
    assert coerce_to_field(Fraction(1, 2), "Qi") == GaussRational(Fraction(1, 2))
    with pytest.raises(ValueError):
        coerce_to_field(GaussRational(1, 1), "Q")
