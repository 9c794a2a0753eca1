import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from braidcover.algebra import (
    FinAbGroup,
    FreeWord,
    Permutation,
    cokernel_group,
    determinant,
    identity_matrix,
    matmul,
    orbits,
    smith_normal_form,
)
from braidcover.errors import ParseError
from oracles import brute_coset_count, random_unimodular, sympy_invariant_factors

perms = st.integers(1, 12).flatmap(lambda k: st.permutations(range(1, k + 1)).map(Permutation))


def same_degree_perms(count):
    return st.integers(1, 12).flatmap(
        lambda k: st.tuples(*[st.permutations(range(1, k + 1)).map(Permutation)] * count)
    )


matrices = st.integers(0, 10).flatmap(
    lambda r: st.integers(0, 10).flatmap(
        lambda c: st.lists(st.lists(st.integers(-20, 20), min_size=c, max_size=c), min_size=r, max_size=r).map(
            lambda rows: (rows, c)
        )
    )
)


# --------------------------------------------------------------------------
# Permutations
# --------------------------------------------------------------------------

class TestPermutation:
    def test_composition_applies_left_first(self):
        p = Permutation.parse("(1 2)", 3)
        q = Permutation.parse("(2 3)", 3)
        assert (p * q)(1) == q(p(1)) == 3
        assert str(p * q) == "(1 3 2)"

    def test_canonical_text(self):
        assert str(Permutation.identity(4)) == "e"
        assert str(Permutation.parse("(4 3)(2 1)", 5)) == "(1 2)(3 4)"
        assert str(Permutation.parse("(3 1 2)", 3)) == "(1 2 3)"

    @pytest.mark.parametrize("bad", ["(1 4)", "(1 1)", "(1 2)(2 3)", "1 2", "(a b)"])
    def test_parse_errors(self, bad):
        with pytest.raises(ParseError):
            Permutation.parse(bad, 3)

    def test_cycle_data(self):
        p = Permutation.parse("(1 2 3)(4 5)", 6)
        assert p.cycle_type() == (3, 2, 1)
        assert p.cycle_count() == 3
        assert not p.is_transposition()
        assert Permutation.parse("(2 5)", 6).is_transposition()
        assert p.support() == frozenset({1, 2, 3, 4, 5})

    def test_orbits(self):
        a = Permutation.parse("(1 2)", 4)
        b = Permutation.parse("(3 4)", 4)
        assert sorted(map(sorted, orbits([a, b], 4))) == [[1, 2], [3, 4]]

    @given(same_degree_perms(3))
    def test_associative(self, ps):
        p, q, r = ps
        assert (p * q) * r == p * (q * r)

    @given(perms)
    def test_inverse(self, p):
        assert (p * p.inverse()).is_identity()
        assert (p.inverse() * p).is_identity()
        assert 1 <= p.cycle_count() <= p.k

    @given(perms)
    def test_text_round_trip(self, p):
        assert Permutation.parse(str(p), p.k) == p


# --------------------------------------------------------------------------
# Free words
# --------------------------------------------------------------------------

class TestFreeWord:
    def test_reduction(self):
        assert FreeWord((1, 2, -2, -1, 3)).letters == (3,)
        assert FreeWord.gen(2, -3).letters == (-2, -2, -2)

    @given(st.lists(st.sampled_from([1, -1, 2, -2, 3, -3]), max_size=20))
    def test_reduced_form_has_no_cancelling_pair(self, letters):
        w = FreeWord(tuple(letters))
        assert all(a != -b for a, b in zip(w.letters, w.letters[1:]))
        assert (w * w.inverse()).letters == ()

    def test_substitute_and_evaluate(self):
        w = FreeWord((1, 2, -1))
        images = [FreeWord((2,)), FreeWord((1,))]
        assert w.substitute(images).letters == (2, 1, -2)
        a, b = Permutation.parse("(1 2)", 3), Permutation.parse("(2 3)", 3)
        assert w.evaluate([a, b]) == a * b * a.inverse()
        assert w.abelianize(3) == [0, 1, 0]


# --------------------------------------------------------------------------
# Smith normal form and cokernels
# --------------------------------------------------------------------------

def check_snf(m, cols):
    d, u, v = smith_normal_form(m, cols=cols)
    rows = len(m)
    assert matmul(matmul(u, m, inner=rows), v, inner=cols) == d
    assert abs(determinant(u)) == 1
    assert abs(determinant(v)) == 1
    diag = [d[i][i] for i in range(min(rows, cols))]
    assert all(d[i][j] == 0 for i in range(rows) for j in range(cols) if i != j)
    assert all(x >= 0 for x in diag)
    for a, b in zip(diag, diag[1:]):
        assert (b == 0) if a == 0 else (b % a == 0)
    return diag


class TestSmithNormalForm:
    def test_diag_2_3(self):
        d, _, _ = smith_normal_form([[2, 0], [0, 3]])
        assert d == [[1, 0], [0, 6]]

    def test_identity_and_zero(self):
        assert smith_normal_form(identity_matrix(2))[0] == identity_matrix(2)
        assert smith_normal_form([[0]])[0] == [[0]]

    def test_empty(self):
        d, u, v = smith_normal_form([], cols=3)
        assert d == [] and u == [] and v == identity_matrix(3)

    @settings(max_examples=100, deadline=None, derandomize=True)
    @given(matrices)
    def test_identities_and_unimodularity(self, mc):
        m, cols = mc
        check_snf(m, cols)

    def test_large_blowup_stays_exact(self):
        rng = random.Random(7)
        m = [[rng.randint(-20, 20) for _ in range(40)] for _ in range(40)]
        diag = check_snf(m, 40)
        assert abs(determinant(m)) == abs(eval("*".join(map(str, diag))))

    @settings(max_examples=60, deadline=None, derandomize=True)
    @given(matrices)
    def test_matches_sympy(self, mc):
        m, cols = mc
        g = cokernel_group(m, cols=cols)
        assert (g.free_rank, list(g.invariant_factors)) == sympy_invariant_factors(m, cols)


class TestCokernel:
    def test_examples(self):
        assert str(cokernel_group([[3]])) == "Z/3"
        assert str(cokernel_group([[-2, 1], [1, -2]])) == "Z/3"
        assert str(cokernel_group([], cols=1)) == "Z"
        assert brute_coset_count([[-2, 1], [1, -2]], 3) == 3

    @settings(max_examples=100, deadline=None, derandomize=True)
    @given(matrices, st.randoms(use_true_random=False))
    def test_row_operation_invariance(self, mc, rng):
        m, cols = mc
        g = cokernel_group(m, cols=cols)
        m2 = [list(r) for r in m]
        if len(m2) >= 2:
            i, j = rng.sample(range(len(m2)), 2)
            m2[i], m2[j] = m2[j], m2[i]
            m2[i] = [-x for x in m2[i]]
            c = rng.randint(-5, 5)
            m2[j] = [a + c * b for a, b in zip(m2[j], m2[i])]
        assert cokernel_group(m2, cols=cols) == g

    @settings(max_examples=50, deadline=None, derandomize=True)
    @given(matrices, st.randoms(use_true_random=False))
    def test_column_change_of_basis(self, mc, rng):
        m, cols = mc
        if not cols:
            return
        w = random_unimodular(cols, rng)
        assert cokernel_group(matmul(m, w, inner=cols), cols=cols) == cokernel_group(m, cols=cols)


class TestFinAbGroup:
    def test_text(self):
        assert str(FinAbGroup(0, ())) == "0"
        assert str(FinAbGroup(2, (2, 4))) == "Z^2 + Z/2 + Z/4"
        for text in ["0", "Z", "Z/3", "Z^2 + Z/2 + Z/4"]:
            assert str(FinAbGroup.parse(text)) == text

    def test_invariants(self):
        with pytest.raises(ValueError):
            FinAbGroup(0, (2, 3))
        with pytest.raises(ValueError):
            FinAbGroup(0, (1,))
        g = FinAbGroup(0, (2, 6))
        assert g.is_finite and g.order() == 12
        assert FinAbGroup(1, ()).order() is None
        assert g.to_json() == {"free_rank": 0, "torsion": [2, 6]}
