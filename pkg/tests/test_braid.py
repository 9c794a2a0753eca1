import pytest
from hypothesis import given
from hypothesis import strategies as st

from braidcover.algebra import FreeWord, Permutation
from braidcover.braid import (
    BraidWord,
    artin_action,
    artin_automorphism,
    braid_permutation,
    closure_components,
    self_linking,
    stabilize,
    writhe,
)
from braidcover.errors import GeneratorOutOfRange, MultiComponentClosure, ParseError


@st.composite
def braids(draw, max_strands=6, max_len=12):
    n = draw(st.integers(2, max_strands))
    letters = draw(st.lists(st.integers(1, n - 1).flatmap(lambda i: st.sampled_from([i, -i])), max_size=max_len))
    return BraidWord(n, tuple(letters))


def test_text_form():
    b = BraidWord.parse("B3: 1 2 -1")
    assert b == BraidWord(3, (1, 2, -1))
    assert str(b) == "B3: 1 2 -1"
    assert BraidWord.parse("B2:") == BraidWord(2, ())
    for bad in ["B3: 3", "B3 1", "B0:", "3: 1"]:
        with pytest.raises(ParseError):
            BraidWord.parse(bad)


def test_permutation_and_components():
    assert braid_permutation(BraidWord(3, (1, 2))) == Permutation.parse("(1 3 2)", 3)
    assert closure_components(BraidWord(4, (1, 2, 3) * 4)) == [(1,), (2,), (3,), (4,)]
    assert len(closure_components(BraidWord(2, ()))) == 2


def test_self_linking_golden():
    assert self_linking(BraidWord(2, (1,))) == -1
    assert self_linking(BraidWord(2, (-1,))) == -3
    assert self_linking(BraidWord(2, (1, 1, 1))) == 1


def test_self_linking_refuses_links():
    with pytest.raises(MultiComponentClosure):
        self_linking(BraidWord(2, (1, 1)))


@given(braids())
def test_stabilization_effects(b):
    if len(closure_components(b)) != 1:
        return
    assert self_linking(stabilize(b, "transverse")) == self_linking(b) - 2
    assert self_linking(stabilize(b, "positive")) == self_linking(b)
    assert writhe(stabilize(b)) == writhe(b) - 1


def test_repeated_transverse_stabilization():
    b = BraidWord(2, (1,))
    for step in range(1, 5):
        b = stabilize(b)
        assert self_linking(b) == -1 - 2 * step


def test_artin_generator_images():
    x1, x2 = FreeWord.gen(1), FreeWord.gen(2)
    images = artin_automorphism(BraidWord(2, (1,)))
    assert images == [x1 * x2 * x1.inverse(), x1]
    images = artin_automorphism(BraidWord(2, (-1,)))
    assert images == [x2, x2.inverse() * x1 * x2]


@given(braids())
def test_artin_word_and_inverse_cancel(b):
    images = artin_automorphism(b * b.inverse())
    assert images == [FreeWord.gen(j) for j in range(1, b.strands + 1)]


@given(braids())
def test_artin_fixes_boundary_word(b):
    top = FreeWord(tuple(range(1, b.strands + 1)))
    assert artin_action(b, top) == top


def test_artin_action_range():
    with pytest.raises(GeneratorOutOfRange):
        artin_action(BraidWord(2, (1,)), [3])
