"""Exact quadratic-field scalars: arithmetic axioms and square roots."""

from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from cremona.errors import IncompatibleField
from cremona.scalars import Scalar

rationals = st.fractions(
    min_value=-100, max_value=100,
).filter(lambda q: abs(q.denominator) <= 50)


def s2(a, b):
    return Scalar(a, b, 2)


def test_perfect_square_discriminant_collapses():
    x = Scalar(1, 1, 4)  # sqrt(4) = 2
    assert x.is_rational() and x == Scalar(3)
    assert Scalar(0, 3, Fraction(9, 4)) == Scalar(Fraction(9, 2))


def test_incompatible_fields_refuse_to_mix():
    with pytest.raises(IncompatibleField):
        Scalar(0, 1, 2) + Scalar(0, 1, 3)


def test_division_and_inverse():
    x = s2(3, 1)
    assert x * x.inverse() == Scalar(1)
    assert (x / x) == Scalar(1)
    with pytest.raises(ZeroDivisionError):
        Scalar(0).inverse()


def test_sqrt_in_field():
    # (1 + sqrt 2)^2 = 3 + 2 sqrt 2
    y = s2(3, 2)
    r = y.sqrt_in_field()
    assert r is not None and r * r == y
    assert Scalar(2).sqrt_in_field(2) * Scalar(2).sqrt_in_field(2) == Scalar(2)
    assert Scalar(3).sqrt_in_field(2) is None


def test_complex_embedding():
    z = Scalar(1, 1, -3).to_complex()
    assert abs(z - (1 + 1j * 3 ** 0.5)) < 1e-12


@given(rationals, rationals, rationals, rationals)
def test_field_axioms(a, b, c, d):
    x, y = s2(a, b), s2(c, d)
    assert x + y == y + x
    assert x * y == y * x
    assert x * (y + Scalar(1)) == x * y + x
    if y:
        assert (x / y) * y == x


@given(rationals, rationals)
def test_square_roundtrip(a, b):
    x = s2(a, b)
    sq = x * x
    r = sq.sqrt_in_field(2)
    assert r is not None and r * r == sq
