"""
Permutation-labeled braids as branched-cover data over S^3.

A labeled braid carries one permutation of the sheets {1..k} per bottom
endpoint: the monodromy of the meridian around that strand.  Labels are
transported upward through the crossings (Wirtinger rule)

    sigma_i     : (g, h) -> (h, h^-1 g h)
    sigma_i^-1  : (g, h) -> (g h g^-1, g)

where (g, h) are the labels at positions (i, i+1) just below the crossing.
Both rules preserve the ordered product g_1 g_2 ... g_n, which is the
monodromy around the boundary of a page.  The labeling describes a cover of
the closure iff the labels at the top equal those at the bottom.
"""

from __future__ import annotations

import dataclasses
from typing import Sequence

from .algebra import Permutation, is_transitive, orbits
from .braid import BraidWord, artin_automorphism, braid_permutation, closure_components
from .errors import (
    BadComponentIndex,
    DegreeMismatch,
    InvalidLabeling,
    LabelsDontShareSymbol,
    NotSimple,
    ParseError,
)


@dataclasses.dataclass(frozen=True)
class LabeledBraid:
    braid: BraidWord
    fold: int
    bottom_labels: tuple[Permutation, ...]

    def __post_init__(self):
        labels = tuple(self.bottom_labels)
        object.__setattr__(self, "bottom_labels", labels)
        if self.fold < 2:
            raise ValueError("fold must be at least 2")
        if len(labels) != self.braid.strands:
            raise ValueError(f"{len(labels)} labels for {self.braid.strands} strands")
        for g in labels:
            if g.k != self.fold:
                raise DegreeMismatch(f"label {g} has degree {g.k}, fold is {self.fold}")
            if g.is_identity():
                raise InvalidLabeling("identity label: every strand must be branch locus")

    @property
    def strands(self) -> int:
        return self.braid.strands

    @classmethod
    def build(cls, word: Sequence[int], fold: int, labels: Sequence[str], strands: int | None = None):
        """Convenience constructor from signed letters and cycle-notation labels."""
        n = strands if strands is not None else len(labels)
        return cls(BraidWord(n, tuple(word)), fold, tuple(Permutation.parse(s, fold) for s in labels))


def crossing(letter: int, g: Permutation, h: Permutation) -> tuple[Permutation, Permutation]:
    """Labels just above a crossing, given labels (g, h) just below it."""
    if letter > 0:
        return h, g.conjugate(h)
    return h.conjugate(g.inverse()), g


def labels_at_heights(lb: LabeledBraid) -> list[tuple[Permutation, ...]]:
    """Label tuple below every letter, plus the final top tuple (len(word)+1 entries)."""
    current = list(lb.bottom_labels)
    out = [tuple(current)]
    for a in lb.braid.letters:
        i = abs(a) - 1
        current[i], current[i + 1] = crossing(a, current[i], current[i + 1])
        out.append(tuple(current))
    return out


def propagate(braid: BraidWord, labels: Sequence[Permutation]) -> tuple[Permutation, ...]:
    current = list(labels)
    for a in braid.letters:
        i = abs(a) - 1
        current[i], current[i + 1] = crossing(a, current[i], current[i + 1])
    return tuple(current)


def propagate_and_validate(lb: LabeledBraid) -> tuple[tuple[Permutation, ...], bool]:
    """Sweep the labels bottom to top; valid iff the top tuple equals the bottom tuple.

    Closing the braid glues top position j to bottom position j, so the
    comparison is position by position.
    """
    top = propagate(lb.braid, lb.bottom_labels)
    return top, top == lb.bottom_labels


def is_valid(lb: LabeledBraid) -> bool:
    return propagate_and_validate(lb)[1]


def require_valid(lb: LabeledBraid) -> None:
    if not is_valid(lb):
        raise InvalidLabeling("labels are not consistent around the braid closure")


def artin_fixed(lb: LabeledBraid) -> bool:
    """Independent validity check: is the label tuple fixed by the Artin action evaluated in S_k?"""
    images = artin_automorphism(lb.braid)
    return all(w.evaluate(lb.bottom_labels) == g for w, g in zip(images, lb.bottom_labels))


def boundary_monodromy(labels: Sequence[Permutation]) -> Permutation:
    out = Permutation.identity(labels[0].k)
    for g in labels:
        out = out * g
    return out


def component_labels(lb: LabeledBraid) -> list[Permutation]:
    """Label of each closure component, read at its lowest-index bottom strand."""
    return [lb.bottom_labels[c[0] - 1] for c in closure_components(lb.braid)]


# --------------------------------------------------------------------------
# Classification
# --------------------------------------------------------------------------

@dataclasses.dataclass(frozen=True)
class CoverReport:
    fold: int
    transitive: bool
    simple: bool
    cyclic: bool
    components_of_branch_locus: int
    ramification: tuple[tuple[int, ...], ...]
    multiply_ramified: tuple[bool, ...]

    def to_json(self) -> dict:
        return {
            "fold": self.fold,
            "transitive": self.transitive,
            "simple": self.simple,
            "cyclic": self.cyclic,
            "components_of_branch_locus": self.components_of_branch_locus,
            "ramification": [list(r) for r in self.ramification],
            "multiply_ramified": list(self.multiply_ramified),
        }


def _is_cyclic(labels: Sequence[Permutation], k: int) -> bool:
    # every meridian unwinds by the full fold: one k-cycle c, each label c or c^-1
    c = labels[0]
    if c.cycle_type() != (k,):
        return False
    return all(g == c or g == c.inverse() for g in labels)


def classify_cover(lb: LabeledBraid) -> CoverReport:
    require_valid(lb)
    k = lb.fold
    labels = lb.bottom_labels
    comp = component_labels(lb)
    return CoverReport(
        fold=k,
        transitive=is_transitive(labels, k),
        simple=all(g.is_transposition() for g in labels),
        cyclic=_is_cyclic(labels, k),
        components_of_branch_locus=len(comp),
        ramification=tuple(g.cycle_type() for g in comp),
        multiply_ramified=tuple(sum(1 for c in g.cycle_type() if c > 1) > 1 for g in comp),
    )


# --------------------------------------------------------------------------
# Page surface
# --------------------------------------------------------------------------

@dataclasses.dataclass(frozen=True)
class CoverSurface:
    sheets: int
    euler_char: int
    boundary_count: int
    genus: int
    connected: bool

    def to_json(self) -> dict:
        return dataclasses.asdict(self)


def page_surface(lb: LabeledBraid) -> CoverSurface:
    """The k-fold cover of the disk page branched at the n strand points (Riemann-Hurwitz)."""
    require_valid(lb)
    k = lb.fold
    labels = lb.bottom_labels
    chi = k - sum(k - g.cycle_count() for g in labels)
    boundary = boundary_monodromy(labels).cycle_count()
    genus = 0
    for orbit in orbits(labels, k):
        # restrict to one connected piece of the surface
        size = len(orbit)
        chi_o = size - sum(size - sum(1 for c in g.cycles() if c[0] in orbit) for g in labels)
        b_o = sum(1 for c in boundary_monodromy(labels).cycles() if c[0] in orbit)
        genus += (2 - chi_o - b_o) // 2
    return CoverSurface(k, chi, boundary, genus, is_transitive(labels, k))


# --------------------------------------------------------------------------
# Moves on labeled braids
# --------------------------------------------------------------------------

def _insert(lb: LabeledBraid, height: int, letters: Sequence[int]) -> LabeledBraid:
    word = lb.braid.letters
    return LabeledBraid(
        BraidWord(lb.strands, word[:height] + tuple(letters) + word[height:]),
        lb.fold,
        lb.bottom_labels,
    )


def connect_sites(lb: LabeledBraid, merging_only: bool = True) -> list[tuple[int, int]]:
    """All ``(height, site)`` pairs where :func:`connect_move` applies.

    With ``merging_only`` the list is restricted to sites whose two strands
    lie on different components of the branch locus.
    """
    out = []
    levels = labels_at_heights(lb)
    for height, labels in enumerate(levels[:-1]):
        for site in range(1, lb.strands):
            g, h = labels[site - 1], labels[site]
            if not (g.is_transposition() and h.is_transposition()):
                continue
            if len(g.support() & h.support()) != 1:
                continue
            if merging_only:
                moved = connect_move(lb, site, height)
                if len(closure_components(moved.braid)) >= len(closure_components(lb.braid)):
                    continue
            out.append((height, site))
    return out


def connect_move(lb: LabeledBraid, site: int, height: int = 0) -> LabeledBraid:
    """Band two adjacent branch strands together without changing the cover.

    At ``height`` (number of letters below the site) the strands at positions
    ``site`` and ``site + 1`` must carry transpositions (i j) and (j k).  The
    move inserts sigma_site^3 there; the middle arc of the inserted twist
    carries (i k) and the labels above it are unchanged.  The 3-fold cover of
    the ball around the twist region is a ball for either tangle, and the lift
    of the twist to the disk page is isotopic to the identity, so neither the
    manifold nor the induced contact structure changes.  The number of
    closure components changes by one.
    """
    require_valid(lb)
    if not all(g.is_transposition() for g in lb.bottom_labels):
        raise NotSimple("connect move needs a simple cover (all labels transpositions)")
    if not 1 <= site < lb.strands:
        raise BadComponentIndex(f"site {site} out of range 1..{lb.strands - 1}")
    if not 0 <= height <= len(lb.braid):
        raise BadComponentIndex(f"height {height} out of range 0..{len(lb.braid)}")
    labels = labels_at_heights(lb)[height]
    g, h = labels[site - 1], labels[site]
    if len(g.support() & h.support()) != 1:
        raise LabelsDontShareSymbol(f"labels {g} and {h} must share exactly one symbol")
    return _insert(lb, height, (site,) * 3)


def stabilize_branch_locus(lb: LabeledBraid, component: int) -> LabeledBraid:
    """Transversely stabilize one component of the branch locus.

    The braid is conjugated so that the rightmost strand of the chosen
    component (index into :func:`closure_components`, 0-based) sits at the
    right-hand end,
    then a strand is added with a negative crossing.  The new strand carries
    the label of the strand it continues.
    """
    require_valid(lb)
    comps = closure_components(lb.braid)
    if not 0 <= component < len(comps):
        raise BadComponentIndex(f"component {component} out of range 0..{len(comps) - 1}")
    n = lb.strands
    j = max(comps[component])
    u = BraidWord(n, tuple(range(n - 1, j - 1, -1)))
    conj = u * lb.braid * u.inverse()
    labels = propagate(u.inverse(), lb.bottom_labels)
    stabilized = BraidWord(n + 1, conj.letters + (-n,))
    return LabeledBraid(stabilized, lb.fold, labels + (labels[-1],))


def conjugate(lb: LabeledBraid, by: BraidWord) -> LabeledBraid:
    """Replace the braid b by ``by * b * by^-1``, transporting the labels."""
    labels = propagate(by.inverse(), lb.bottom_labels)
    return LabeledBraid(by * lb.braid * by.inverse(), lb.fold, labels)


def positive_markov(lb: LabeledBraid) -> LabeledBraid:
    """Append a strand and sigma_n; the new strand carries the forced label."""
    n = lb.strands
    return LabeledBraid(BraidWord(n + 1, lb.braid.letters + (n,)), lb.fold, lb.bottom_labels + (lb.bottom_labels[-1],))


# --------------------------------------------------------------------------
# Text file format
# --------------------------------------------------------------------------

def loads(text: str) -> tuple[LabeledBraid, tuple[str, ...]]:
    """Parse a labeled-braid file; returns the datum and its recorded move trace.

    Keys (one per line): ``strands``, ``fold``, ``word``, ``labels`` and an
    optional ``trace`` listing moves already applied.  ``#`` starts a comment.
    """
    fields: dict[str, tuple[int, str]] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, _, rest = line.partition(" ")
        if key not in ("strands", "fold", "word", "labels", "trace"):
            raise ParseError(f"unknown key {key!r}", lineno)
        if key in fields:
            raise ParseError(f"duplicate key {key!r}", lineno)
        fields[key] = (lineno, rest.strip())
    for key in ("strands", "fold", "labels"):
        if key not in fields:
            raise ParseError(f"missing key {key!r}")

    def integer(key):
        lineno, value = fields[key]
        try:
            return int(value)
        except ValueError:
            raise ParseError(f"{key} must be an integer, got {value!r}", lineno) from None

    n, k = integer("strands"), integer("fold")
    if n < 1 or k < 2:
        raise ParseError("need strands >= 1 and fold >= 2", fields["strands" if n < 1 else "fold"][0])
    word_line, word_text = fields.get("word", (0, ""))
    try:
        letters = tuple(int(x) for x in word_text.split())
        braid = BraidWord(n, letters)
    except ValueError as exc:
        raise ParseError(str(exc), word_line) from None
    label_line, label_text = fields["labels"]
    chunks = _split_labels(label_text, label_line)
    if len(chunks) != n:
        raise ParseError(f"expected {n} labels, found {len(chunks)}", label_line)
    try:
        labels = tuple(Permutation.parse(c, k) for c in chunks)
    except ParseError as exc:
        raise ParseError(str(exc), label_line) from None
    try:
        lb = LabeledBraid(braid, k, labels)
    except (ValueError, DegreeMismatch, InvalidLabeling) as exc:
        raise ParseError(str(exc), label_line) from None
    trace = tuple(fields["trace"][1].split()) if "trace" in fields else ()
    for move in trace:
        if move not in ("stab", "connect"):
            raise ParseError(f"unknown move {move!r} in trace", fields["trace"][0])
    return lb, trace


def _split_labels(text: str, lineno: int) -> list[str]:
    chunks, depth, current = [], 0, ""
    for ch in text:
        if ch == "(":
            if depth:
                raise ParseError("nested parentheses in labels", lineno)
            if current.strip() and not current.strip().startswith("("):
                chunks.extend(current.split())
                current = ""
            depth = 1
            current += ch
        elif ch == ")":
            if not depth:
                raise ParseError("unbalanced ')' in labels", lineno)
            depth = 0
            current += ch
        elif ch.isspace() and not depth:
            if current:
                chunks.append(current)
            current = ""
        else:
            current += ch
    if depth:
        raise ParseError("unbalanced '(' in labels", lineno)
    if current:
        chunks.append(current)
    return chunks


def dumps(lb: LabeledBraid, trace: Sequence[str] = ()) -> str:
    lines = [
        f"strands {lb.strands}",
        f"fold {lb.fold}",
        "word " + " ".join(map(str, lb.braid.letters)),
        "labels " + " ".join(str(g) for g in lb.bottom_labels),
    ]
    if trace:
        lines.append("trace " + " ".join(trace))
    return "\n".join(lines).rstrip() + "\n"
