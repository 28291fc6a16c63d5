"""Lattice reflections, standard elements, Salem/Pisot classification."""

import random

import pytest

from cremona.linalg import mat_mul
from cremona.weyl import (
    BFS_BUDGET,
    char_poly,
    cyclic_permutation,
    cyclotomic,
    group_order_bfs,
    kappa123,
    minkowski,
    poly_roots_numeric,
    preserves_form,
    reflect,
    reflection_matrix,
    salem_classify,
    simple_roots,
    spectral_radius,
    standard_element,
    strip_cyclotomic,
)

LEHMER = [1, 1, 0, -1, -1, -1, -1, -1, 0, 1, 1]


def test_simple_roots_have_square_minus_two():
    for n in (4, 7, 10):
        for a in simple_roots(n):
            assert minkowski(a, a) == -2


def test_reflections_are_involutive_isometries():
    for n in (4, 7):
        for a in simple_roots(n):
            M = reflection_matrix(a)
            assert preserves_form(M)
            size = n + 1
            ident = [[1 if i == j else 0 for j in range(size)]
                     for i in range(size)]
            assert mat_mul(M, M) == ident


def test_reflect_fixes_orthogonal_vectors():
    a = simple_roots(5)[2]  # e2 - e3
    x = [1, 0, 0, 0, 0, 0]
    assert reflect(a, x) == x


def test_standard_element_word_identity():
    for n in (4, 7, 10):
        word = mat_mul(cyclic_permutation(n), kappa123(n))
        assert word == standard_element(n)
        assert preserves_form(standard_element(n))


def test_lehmer_divides_charpoly_n10():
    cp = char_poly(standard_element(10))
    residual, removed = strip_cyclotomic(cp)
    assert residual == LEHMER
    rep = salem_classify(cp)
    assert rep.kind == "Salem"
    assert abs(rep.dominant_root - 1.17628081) < 1e-6


def test_pisot_classification():
    rep = salem_classify([-1, -1, 0, 1])  # t^3 - t - 1
    assert rep.kind == "Pisot"
    assert abs(rep.dominant_root - 1.324717957) < 1e-8


def test_cyclotomic_classification():
    rep = salem_classify(cyclotomic(12))
    assert rep.kind == "Cyclotomic"


def test_spectral_radius_threshold():
    assert spectral_radius(standard_element(8)) == 1.0
    assert spectral_radius(standard_element(9)) == 1.0
    assert spectral_radius(standard_element(10)) > 1.0
    assert spectral_radius(standard_element(11)) > 1.0


def test_coxeter_radius_independent_of_ordering():
    rng = random.Random(5)
    for n in (10, 11):
        gens = [reflection_matrix(a) for a in simple_roots(n)]
        base = None
        for _ in range(4):
            order = list(range(n))
            rng.shuffle(order)
            M = gens[order[0]]
            for i in order[1:]:
                M = mat_mul(M, gens[i])
            r = spectral_radius(M)
            if base is None:
                base = r
            assert abs(r - base) < 1e-8


def test_group_orders_small():
    assert group_order_bfs(3) == 12
    assert group_order_bfs(4) == 120
    assert group_order_bfs(5) == 1920


def test_cyclotomic_polynomials():
    assert cyclotomic(1) == [-1, 1]
    assert cyclotomic(2) == [1, 1]
    assert cyclotomic(6) == [1, -1, 1]
    assert cyclotomic(12) == [1, 0, -1, 0, 1]


def test_poly_roots_refined():
    roots = poly_roots_numeric([1, -3, 1])
    vals = sorted(r.real for r in roots)
    assert abs(vals[1] - (3 + 5 ** 0.5) / 2) < 1e-12


def test_budget_constant_sane():
    assert BFS_BUDGET >= 10 ** 5
