"""Rational maps of the plane: composition, inversion, classification."""

import random
from fractions import Fraction

import pytest

from cremona.errors import NOT_CONTRACTED, NOT_FOUND
from cremona.poly import HomPoly, LinearForm, parse_poly
from cremona.ratmap import (
    JonqElement,
    ProjPoint,
    RatMap,
    compose,
    indeterminacy_points_quadratic,
    inverse,
    is_contracted_line,
    iterate,
    jonq_compose,
    jonq_inverse,
    jonq_to_ratmap,
    noether_solve,
    parse_ratmap,
    quadratic_classify,
)
from cremona.scalars import Scalar
from cremona.unipoly import RatFunc

SIGMA = parse_ratmap("y*z : x*z : x*y")
RHO = parse_ratmap("x*y : z^2 : y*z")
TAU = parse_ratmap("x^2 : x*y : y^2 - x*z")


def test_normalize_strips_common_factor():
    f = RatMap.identity()
    x = HomPoly.var("x")
    from cremona.ratmap import normalize
    g = normalize(tuple(c * x for c in f.components))
    assert g.degree == 1 and g.is_identity()
    assert g.removed_factor is not None


def test_projective_point_canonical():
    assert ProjPoint([2, 4, 6]) == ProjPoint([1, 2, 3])
    assert ProjPoint([0, 3, 6]) == ProjPoint([0, 1, 2])


def test_sigma_involution_and_iterate():
    assert compose(SIGMA, SIGMA).is_identity()
    assert iterate(SIGMA, 2).is_identity()
    assert iterate(SIGMA, 3) == SIGMA


def test_inverse_of_quadratics():
    for f in (SIGMA, RHO, TAU):
        g = inverse(f, 2)
        assert g is not NOT_FOUND
        assert compose(f, g).is_identity()
        assert compose(g, f).is_identity()


def test_inverse_not_found_for_non_birational():
    f = parse_ratmap("x^2 : y^2 : z^2")
    assert inverse(f, 1) is NOT_FOUND
    assert inverse(f, 2) is NOT_FOUND


def test_strata():
    assert quadratic_classify(SIGMA).stratum == "Sigma3"
    assert quadratic_classify(RHO).stratum == "Sigma2"
    assert quadratic_classify(TAU).stratum == "Sigma1"


def test_sigma_indeterminacy_points():
    pts, obstructed = indeterminacy_points_quadratic(SIGMA)
    assert not obstructed
    expect = {ProjPoint([1, 0, 0]), ProjPoint([0, 1, 0]), ProjPoint([0, 0, 1])}
    assert set(pts) == expect


def test_contracted_lines_of_sigma():
    for coeffs, target in (
        ([1, 0, 0], ProjPoint([1, 0, 0])),
        ([0, 1, 0], ProjPoint([0, 1, 0])),
        ([0, 0, 1], ProjPoint([0, 0, 1])),
    ):
        assert is_contracted_line(SIGMA, LinearForm(coeffs)) == target
    generic = LinearForm([1, 1, 1])
    assert is_contracted_line(SIGMA, generic) is NOT_CONTRACTED


def test_noether_degree_two_and_jonquieres():
    profiles = noether_solve(2)
    assert [p.multiplicities for p in profiles] == [(1, 1, 1)]
    for nu in range(3, 9):
        want = (nu - 1,) + (1,) * (2 * nu - 2)
        assert want in {p.multiplicities for p in noether_solve(nu)}
    assert (3,) * 7 in {p.multiplicities for p in noether_solve(8)}
    for nu in range(2, 9):
        assert all(p.is_consistent() for p in noether_solve(nu))


def _rf(*coeffs):
    return RatFunc(list(coeffs), [Scalar(1)])


def _random_jonq(rng):
    def rnd():
        return Scalar(Fraction(rng.randint(-3, 3), rng.randint(1, 3)))

    while True:
        A = [[_rf(rnd()) for _ in range(2)] for _ in range(2)]
        if A[0][0] * A[1][1] - A[0][1] * A[1][0]:
            break
    while True:
        B = [[rnd() for _ in range(2)] for _ in range(2)]
        if B[0][0] * B[1][1] - B[0][1] * B[1][0]:
            break
    return JonqElement(A, B)


def test_jonquieres_group_law_matches_map_composition():
    rng = random.Random(7)
    for _ in range(5):
        j1 = _random_jonq(rng)
        j2 = _random_jonq(rng)
        lhs = jonq_to_ratmap(jonq_compose(j1, j2))
        rhs = compose(jonq_to_ratmap(j1), jonq_to_ratmap(j2))
        assert lhs == rhs


def test_jonquieres_inverse():
    rng = random.Random(11)
    for _ in range(5):
        j = _random_jonq(rng)
        prod = jonq_compose(j, jonq_inverse(j))
        assert jonq_to_ratmap(prod).is_identity()


def test_compose_reduces_degree_drop():
    # rho is an involution: the naive degree-4 composite collapses to 1
    h = compose(RHO, RHO)
    assert h.degree == 1
    assert h.removed_factor is not None and h.removed_factor.degree == 3


def test_apply_and_indeterminacy():
    p = ProjPoint([1, 1, 1])
    assert SIGMA.apply(p) == p
    assert SIGMA.apply(ProjPoint([1, 0, 0])) is None


def test_parse_rejects_mixed_degrees():
    with pytest.raises(Exception):
        parse_ratmap("x : y*z : z")
