"""Homogeneous polynomial layer: parsing, gcd, division, line restriction."""

from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from cremona.errors import NOT_FULLY_SPLIT
from cremona.poly import (
    BiPoly,
    HomPoly,
    LinearForm,
    divide_exact,
    factor_linear_cubic,
    field_roots,
    jacobian_det,
    parse_poly,
    poly_gcd,
    restrict_to_line,
    substitute,
)
from cremona.scalars import Scalar

X, Y, Z = (HomPoly.var(v) for v in "xyz")


def test_parse_round_trip():
    p = parse_poly("x^2 - 2*x*y + y^2 - z^2")
    assert p == (X - Y) ** 2 - Z ** 2
    assert parse_poly("x^2 - y^2") == (X - Y) * (X + Y)


def test_parse_with_radical():
    p = parse_poly("sqrt(2)*x*y + z^2")
    assert p.coefficient((1, 1, 0)) == Scalar(0, 1, 2)


def test_parse_rejects_inhomogeneous():
    with pytest.raises(Exception):
        parse_poly("x^2 + y")


def test_gcd_oracle():
    g = X + Y
    p = g * (X - Z) * 3
    q = g * (Y + Z) * Fraction(1, 2)
    d = poly_gcd(p, q)
    assert divide_exact(p, d) is not None and divide_exact(q, d) is not None
    assert d.degree == 1


def test_divide_exact_detects_remainder():
    assert divide_exact(X * X + Y * Y, X + Y) is None
    assert divide_exact((X + Y) * (X - Y), X + Y) == X - Y


def test_restrict_to_line():
    # x*y on the line z = 0, parametrized by two basis points
    L = LinearForm([0, 0, 1])
    coeffs = restrict_to_line(X * Y, L)
    # binary quadratic s*t (up to the parametrization convention)
    assert sum(1 for c in coeffs if c) == 1


def test_factor_linear_cubic_split():
    facs = factor_linear_cubic(X * Y * Z)
    assert facs is not NOT_FULLY_SPLIT
    assert sorted(m for _f, m in facs) == [1, 1, 1]
    facs2 = factor_linear_cubic(X * X * (X + Y))
    assert sorted(m for _f, m in facs2) == [1, 2]


def test_factor_linear_cubic_obstructed():
    # x^3 + y^3 + z^3 is irreducible over Q in linear factors
    assert factor_linear_cubic(X ** 3 + Y ** 3 - Z ** 3 * 2) is NOT_FULLY_SPLIT


def test_field_roots_quadratic_extension():
    # t^2 - 2 over Q(sqrt 2)
    roots, _complete = field_roots([Scalar(-2), Scalar(0), Scalar(1)], field_d=2)
    r = Scalar(0, 1, 2)
    assert r in roots and -r in roots


def test_jacobian_of_standard_involution():
    J = jacobian_det((Y * Z, X * Z, X * Y))
    assert divide_exact(J, X) is not None
    assert divide_exact(J, Y) is not None
    assert divide_exact(J, Z) is not None


def test_substitute_degree():
    p = substitute(X * Y - Z * Z, (Y * Z, X * Z, X * Y))
    assert p.degree == 4


small = st.integers(min_value=-5, max_value=5)


@settings(max_examples=40, deadline=None)
@given(st.lists(small, min_size=3, max_size=3),
       st.lists(small, min_size=3, max_size=3))
def test_gcd_divides_products(u, v):
    if not any(u) or not any(v):
        return
    a = HomPoly({(1, 0, 0): u[0], (0, 1, 0): u[1], (0, 0, 1): u[2]}, 1)
    b = HomPoly({(1, 0, 0): v[0], (0, 1, 0): v[1], (0, 0, 1): v[2]}, 1)
    p = a * a * b
    q = a * b * b
    d = poly_gcd(p, q)
    assert divide_exact(p, d) is not None
    assert divide_exact(q, d) is not None
    assert d.degree >= 2  # a*b divides both


def test_bipoly_basics():
    x = BiPoly.var("x")
    y = BiPoly.var("y")
    p = (x + y) ** 2
    assert p.degree == 2
    assert p.eval(Scalar(1), Scalar(2)) == Scalar(9)
