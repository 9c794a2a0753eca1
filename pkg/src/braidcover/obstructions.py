"""
Verdicts on contact embeddability in (S^5, xi_std) and braidability about S^3.

Verdicts are three-valued.  ``OBSTRUCTED`` and ``GUARANTEED`` are only
returned when a theorem applies outright; everything else is
``NECESSARY_CONDITIONS_PASS``.  Reasons are short machine-readable tags
naming the result that was applied:

    thm:obstruct   c_1 of a codimension-2 contact submanifold of a
                   contact manifold with H^2 = 0 vanishes
    cyclicbraid    cyclic branched covers along orientable, null-homologous
                   loci can be braided
    HLM            every closed orientable 3-manifold braids about S^3
                   through some simple 3-fold cover
    nobraid        braided about S^3 => contact embeds in S^5 => c_1 = 0
    immerse        trivial normal bundle of the branch locus gives an
                   immersed braid
    trivialnb      Pontryagin class of CP^n blocks codimension-2 immersions
"""

from __future__ import annotations

import dataclasses
import enum
import math
from typing import Iterable, Literal, Sequence

from .braid import closure_components
from .cover import LabeledBraid, classify_cover
from .errors import BadN
from .surgery import H1Class


class Status(str, enum.Enum):
    OBSTRUCTED = "Obstructed"
    NECESSARY_CONDITIONS_PASS = "NecessaryConditionsPass"
    GUARANTEED = "Guaranteed"


@dataclasses.dataclass(frozen=True)
class Verdict:
    status: Status
    reasons: tuple[str, ...]
    details: dict = dataclasses.field(default_factory=dict, compare=False)

    def __post_init__(self):
        if not self.reasons:
            raise ValueError("a verdict must cite at least one result")

    def to_json(self) -> dict:
        out = {"status": self.status.value, "reasons": list(self.reasons)}
        if self.details:
            out["details"] = self.details
        return out


Move = Literal["stab", "connect"]


@dataclasses.dataclass(frozen=True)
class MoveTrace:
    moves: tuple[Move, ...] = ()

    def __post_init__(self):
        moves = tuple(self.moves)
        for m in moves:
            if m not in ("stab", "connect"):
                raise ValueError(f"unknown move {m!r}")
        object.__setattr__(self, "moves", moves)

    def __add__(self, other: MoveTrace) -> MoveTrace:
        return MoveTrace(self.moves + other.moves)


def embeddability_verdict(c1: H1Class) -> Verdict:
    """Can a contact structure with this c_1 embed in (S^5, xi_std) with codimension 2?

    A nonzero class obstructs.  A zero class is only a necessary condition;
    sufficiency is open in general, so this never returns GUARANTEED.
    """
    if c1.is_zero():
        return Verdict(Status.NECESSARY_CONDITIONS_PASS, ("thm:obstruct",), {"c1_zero": True})
    return Verdict(Status.OBSTRUCTED, ("thm:obstruct",), {"c1_zero": False, "c1": list(c1.canonical())})


def braidability_verdict(
    lb: LabeledBraid,
    c1_for_all_orientations: Sequence[H1Class] | None = None,
    invertible_locus: bool = False,
) -> Verdict:
    """Can this branched cover of S^3 be realized as a braid about S^3?

    ``c1_for_all_orientations`` lists c_1 of the induced contact structure for
    each transverse orientation of the branch locus the caller has computed.
    The list settles every orientation when it has one entry per orientation
    of the locus (2^components), or when the caller attests that the locus
    is isotopic to its reverse (``invertible_locus``).
    """
    report = classify_cover(lb)
    if report.cyclic:
        return Verdict(Status.GUARANTEED, ("cyclicbraid",), {"cyclic": True})
    reasons = []
    if c1_for_all_orientations:
        components = len(closure_components(lb.braid))
        exhaustive = len(c1_for_all_orientations) >= 2 ** components
        all_nonzero = all(not c.is_zero() for c in c1_for_all_orientations)
        if all_nonzero and (invertible_locus or exhaustive):
            reasons = ["nobraid", "thm:obstruct"]
            if invertible_locus:
                reasons.append("invertible-locus-attested")
            return Verdict(Status.OBSTRUCTED, tuple(reasons), {"orientations_checked": len(c1_for_all_orientations)})
        reasons.append("thm:obstruct")
    reasons.append("HLM")
    return Verdict(
        Status.NECESSARY_CONDITIONS_PASS,
        tuple(reasons),
        {"note": "the underlying manifold has some simple 3-fold braiding; this cover is undecided"},
    )


def d3_delta(trace: MoveTrace | Iterable[str]) -> int:
    """Change in d_3 of the cover's contact structure along a move sequence."""
    moves = trace.moves if isinstance(trace, MoveTrace) else MoveTrace(tuple(trace)).moves
    return sum(1 for m in moves if m == "stab")


def cpn_pontryagin_coefficients(n: int) -> list[int]:
    """Coefficients of a^0, a^1, ..., a^n in (1 + a^2)^(n+1) truncated at a^(n+1) = 0."""
    coeffs = [0] * (n + 1)
    for j in range(0, n // 2 + 1):
        coeffs[2 * j] = math.comb(n + 1, j)
    return coeffs


def cpn_immersion_obstruction(n: int) -> Verdict:
    """Does CP^n admit a codimension-2 immersion into Euclidean space?

    The total Pontryagin class is (1 + a^2)^(n+1); an immersion with a
    2-plane normal bundle would force it to be 1, but its a^2 coefficient is
    n + 1, and a^2 is nonzero in H^*(CP^n) once n >= 2.  Hence no branched
    cover of S^(2n) by CP^n has an embedded, orientable branch locus.
    """
    if not isinstance(n, int) or n < 1:
        raise BadN(f"need an integer n >= 1, got {n!r}")
    coeffs = cpn_pontryagin_coefficients(n)
    a2 = coeffs[2] if n >= 2 else 0
    details = {"n": n, "pontryagin": coeffs, "a2_coefficient": a2}
    if a2:
        return Verdict(Status.OBSTRUCTED, ("trivialnb", "immerse"), details)
    return Verdict(Status.NECESSARY_CONDITIONS_PASS, ("trivialnb",), details)
