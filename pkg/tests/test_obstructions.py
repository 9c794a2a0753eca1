import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from braidcover.cover import classify_cover
from braidcover.errors import BadN, InvalidLabeling
from braidcover.obstructions import (
    MoveTrace,
    Status,
    Verdict,
    braidability_verdict,
    cpn_immersion_obstruction,
    cpn_pontryagin_coefficients,
    d3_delta,
    embeddability_verdict,
)
from braidcover.surgery import H1Class, SurgeryDiagram, c1_class
from corpus import knot_locus, l31, labeled, valid_data


def l31_c1(rot):
    return c1_class(SurgeryDiagram.from_pairs([-2], [rot]))


class TestEmbeddability:
    def test_zero_passes(self):
        v = embeddability_verdict(H1Class([0], [[3]]))
        assert v.status is Status.NECESSARY_CONDITIONS_PASS
        assert v.reasons == ("thm:obstruct",)

    def test_l31_obstructed(self):
        v = embeddability_verdict(l31_c1(1))
        assert v.status is Status.OBSTRUCTED and "thm:obstruct" in v.reasons

    def test_nobraid_family_n3(self):
        g = H1Class([1], [[4]])
        assert embeddability_verdict(2 * g).status is Status.OBSTRUCTED

    @given(st.integers(-10, 10), st.integers(1, 12))
    def test_never_guaranteed(self, a, d):
        v = embeddability_verdict(H1Class([a], [[d]]))
        assert v.status is not Status.GUARANTEED
        assert (v.status is Status.OBSTRUCTED) == (a % d != 0)


class TestBraidability:
    def test_cyclic_guaranteed(self):
        v = braidability_verdict(labeled([1, 1, 1], 2, ["(1 2)", "(1 2)"]))
        assert v.status is Status.GUARANTEED and v.reasons == ("cyclicbraid",)

    def test_knot_locus_obstructed(self):
        v = braidability_verdict(knot_locus(), [l31_c1(1), l31_c1(-1)], invertible_locus=True)
        assert v.status is Status.OBSTRUCTED
        assert "thm:obstruct" in v.reasons and "invertible-locus-attested" in v.reasons

    def test_knot_locus_exhaustive_orientations(self):
        # a knot has two orientations; listing both settles it without the flag
        v = braidability_verdict(knot_locus(), [l31_c1(1), l31_c1(-1)])
        assert v.status is Status.OBSTRUCTED
        assert "invertible-locus-attested" not in v.reasons

    def test_full_twist_undecided(self):
        v = braidability_verdict(l31())
        assert v.status is Status.NECESSARY_CONDITIONS_PASS and "HLM" in v.reasons

    def test_partial_orientation_data(self):
        # four components, 16 orientations, only one listed and no attestation
        v = braidability_verdict(l31(), [l31_c1(1)])
        assert v.status is Status.NECESSARY_CONDITIONS_PASS

    def test_zero_class_does_not_obstruct(self):
        v = braidability_verdict(knot_locus(), [l31_c1(1), H1Class([0], [[3]])], invertible_locus=True)
        assert v.status is Status.NECESSARY_CONDITIONS_PASS

    def test_invalid(self):
        with pytest.raises(InvalidLabeling):
            braidability_verdict(labeled([1], 3, ["(1 2)", "(1 3)"]))

    @settings(max_examples=40, deadline=None, derandomize=True)
    @given(valid_data(simple=False, max_fold=4))
    def test_guaranteed_implies_cyclic(self, lb):
        v = braidability_verdict(lb, [H1Class([1], [[3]])], invertible_locus=True)
        if v.status is Status.GUARANTEED:
            assert classify_cover(lb).cyclic
        assert v.reasons


class TestD3Delta:
    @pytest.mark.parametrize(
        "moves, expected",
        [(["stab", "stab"], 2), (["connect"] * 3, 0), ([], 0), (["connect", "stab", "connect"], 1)],
    )
    def test_examples(self, moves, expected):
        assert d3_delta(moves) == expected
        assert d3_delta(MoveTrace(tuple(moves))) == expected

    @given(st.lists(st.sampled_from(["stab", "connect"])), st.lists(st.sampled_from(["stab", "connect"])))
    def test_additive(self, a, b):
        assert d3_delta(MoveTrace(tuple(a)) + MoveTrace(tuple(b))) == d3_delta(a) + d3_delta(b)

    def test_unknown_move(self):
        with pytest.raises(ValueError):
            MoveTrace(("twist",))


class TestCPn:
    @pytest.mark.parametrize("n, coeff", [(2, 3), (4, 5)])
    def test_obstructed(self, n, coeff):
        v = cpn_immersion_obstruction(n)
        assert v.status is Status.OBSTRUCTED
        assert v.details["a2_coefficient"] == coeff
        assert v.reasons == ("trivialnb", "immerse")

    def test_n1(self):
        assert cpn_immersion_obstruction(1).status is Status.NECESSARY_CONDITIONS_PASS

    @pytest.mark.parametrize("n", [0, -3])
    def test_bad_n(self, n):
        with pytest.raises(BadN):
            cpn_immersion_obstruction(n)

    @given(st.integers(1, 60))
    def test_iff_n_at_least_2(self, n):
        v = cpn_immersion_obstruction(n)
        assert (v.status is Status.OBSTRUCTED) == (n >= 2)
        if n >= 2:
            assert v.details["a2_coefficient"] == n + 1

    def test_truncated_expansion(self):
        assert cpn_pontryagin_coefficients(4) == [1, 0, 5, 0, 10]
        assert cpn_pontryagin_coefficients(1) == [1, 0]


def test_verdict_needs_reason():
    with pytest.raises(ValueError):
        Verdict(Status.OBSTRUCTED, ())
