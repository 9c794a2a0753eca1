"""The reference computations agree with values known by hand."""

import sympy

from oracles import (
    T,
    alexander_polynomial,
    brute_characteristic_sublinks,
    brute_coset_count,
    descartes_signature,
    gf2_nullity,
    knot_determinant,
    negative_cf_value,
    sympy_invariant_factors,
)


def test_burau_trefoil_and_figure_eight():
    assert knot_determinant(2, [1, 1, 1]) == 3
    assert knot_determinant(3, [1, 1, 1]) == 0  # split link: trefoil plus a separate unknot
    assert knot_determinant(3, [1, -2, 1, -2]) == 5


def test_burau_torus_knots():
    for m in range(1, 5):
        assert knot_determinant(2, [1] * (2 * m + 1)) == 2 * m + 1
    delta = alexander_polynomial(2, [1, 1, 1])
    assert sympy.expand(delta - (T**2 - T + 1)) == 0


def test_coset_oracles_agree():
    m = [[-2, 1], [1, -2]]
    assert brute_coset_count(m, 3) == 3
    assert sympy_invariant_factors(m, 2) == (0, [3])
    assert sympy_invariant_factors([], 1) == (1, [])
    assert sympy_invariant_factors([[2, 0], [0, 3]], 2) == (0, [6])


def test_signature_oracle():
    assert descartes_signature([[-2, 1], [1, -2]]) == -2
    assert descartes_signature([[0, 1], [1, 0]]) == 0
    assert descartes_signature([[1, 0, 0], [0, 0, 0], [0, 0, 5]]) == 2
    assert descartes_signature([]) == 0


def test_sublink_oracles():
    q = [[-2, 1], [1, -2]]
    assert brute_characteristic_sublinks(q) == [frozenset()]
    assert gf2_nullity(q) == 0
    q = [[0, 0], [0, 0]]
    assert len(brute_characteristic_sublinks(q)) == 4 == 2 ** gf2_nullity(q)


def test_continued_fraction_oracle():
    assert negative_cf_value([-6]) == -6
    assert negative_cf_value([-2, -2, -4]) == sympy.Rational(-10, 7)
    assert negative_cf_value([-4, -2, -4]) == sympy.Rational(-24, 7)
