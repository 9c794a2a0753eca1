"""
First homology of the branched cover of a labeled braid closure.

Pipeline: presentation of the link-complement group from the Artin action,
Reidemeister-Schreier rewriting to the stabilizer of sheet 1, one filling
relation per lifted meridian disk, abelianization, Smith normal form.

The right action of a word on sheets is ``s . w``, evaluated letter by
letter with the monodromy labels, matching the left-to-right composition
of :class:`~braidcover.algebra.Permutation`.
"""

from __future__ import annotations

import dataclasses
from collections import deque
from typing import Sequence

from .algebra import FinAbGroup, FreeWord, IntMatrix, Permutation, cokernel_group, is_transitive
from .braid import artin_automorphism, closure_components
from .cover import LabeledBraid, require_valid
from .errors import InvalidLabeling, NotTransitive


@dataclasses.dataclass(frozen=True)
class GroupPresentation:
    generator_count: int
    relators: tuple[FreeWord, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "relators", tuple(self.relators))
        for r in self.relators:
            if r.max_generator() > self.generator_count:
                raise ValueError(f"relator {r} uses a generator beyond {self.generator_count}")

    def relation_matrix(self) -> IntMatrix:
        return [r.abelianize(self.generator_count) for r in self.relators]

    def abelianization(self) -> FinAbGroup:
        return cokernel_group(self.relation_matrix(), cols=self.generator_count)


def complement_presentation(
    lb: LabeledBraid, drop_redundant: bool = False
) -> tuple[GroupPresentation, tuple[Permutation, ...]]:
    """``<x_1..x_n | x_j^-1 beta(x_j)>`` for the closed braid, with the meridian monodromy.

    One of the n relators is a consequence of the others; ``drop_redundant``
    omits the last one.
    """
    require_valid(lb)
    n = lb.strands
    images = artin_automorphism(lb.braid)
    relators = [FreeWord.gen(j + 1).inverse() * images[j] for j in range(n)]
    if drop_redundant and n > 1:
        relators = relators[:-1]
    return GroupPresentation(n, tuple(relators)), lb.bottom_labels


@dataclasses.dataclass(frozen=True)
class CosetTable:
    """Sheets of the cover as cosets of the stabilizer of sheet 1.

    ``transversal[s - 1]`` is a word carrying sheet 1 to sheet s; ``tree``
    holds the (sheet, generator) pairs whose Schreier generator is trivial.
    """

    fold: int
    action: tuple[Permutation, ...]
    transversal: tuple[FreeWord, ...]
    tree: frozenset[tuple[int, int]]

    @classmethod
    def build(cls, monodromy: Sequence[Permutation]) -> CosetTable:
        if not monodromy:
            raise ValueError("need at least one generator")
        k = monodromy[0].k
        if not is_transitive(monodromy, k):
            raise NotTransitive("monodromy does not act transitively on the sheets")
        n = len(monodromy)
        words: dict[int, FreeWord] = {1: FreeWord()}
        tree: set[tuple[int, int]] = set()
        queue = deque([1])
        while queue:
            s = queue.popleft()
            for i in range(1, n + 1):
                t = monodromy[i - 1](s)
                if t not in words:
                    words[t] = words[s] * FreeWord.gen(i)
                    tree.add((s, i))
                    queue.append(t)
            for i in range(1, n + 1):
                t = monodromy[i - 1].inverse()(s)
                if t not in words:
                    words[t] = words[s] * FreeWord.gen(i, -1)
                    tree.add((t, i))
                    queue.append(t)
        return cls(k, tuple(monodromy), tuple(words[s] for s in range(1, k + 1)), frozenset(tree))

    def schreier_generators(self) -> list[tuple[int, int]]:
        """Nontrivial Schreier generators ``(sheet, i)``, i.e. ``t_s x_i t_{s.x_i}^-1``."""
        n = len(self.action)
        return [
            (s, i)
            for s in range(1, self.fold + 1)
            for i in range(1, n + 1)
            if (s, i) not in self.tree
        ]


class SchreierRewriter:
    """Rewrites words of the big group into Schreier generators of the sheet-1 stabilizer."""

    def __init__(self, table: CosetTable):
        self.table = table
        self.generators = table.schreier_generators()
        self.index = {g: j + 1 for j, g in enumerate(self.generators)}
        self._fwd = [g.images for g in table.action]
        self._inv = [g.inverse().images for g in table.action]

    @property
    def generator_count(self) -> int:
        return len(self.generators)

    def rewrite(self, word: FreeWord, start: int = 1) -> tuple[FreeWord, int]:
        """Rewrite ``t_start word t_end^-1``; returns the rewritten word and the end sheet."""
        out: list[int] = []
        c = start
        for a in word.letters:
            i = abs(a)
            if a > 0:
                j = self.index.get((c, i))
                if j:
                    out.append(j)
                c = self._fwd[i - 1][c - 1]
            else:
                c = self._inv[i - 1][c - 1]
                j = self.index.get((c, i))
                if j:
                    out.append(-j)
        return FreeWord(tuple(out)), c

    def rewrite_loop(self, word: FreeWord, start: int) -> FreeWord:
        rewritten, end = self.rewrite(word, start)
        if end != start:
            raise InvalidLabeling(f"word {word} does not lift to a loop at sheet {start}")
        return rewritten


def cover_presentation(pres: GroupPresentation, monodromy: Sequence[Permutation]) -> GroupPresentation:
    """Presentation of the stabilizer of sheet 1 (the unbranched cover's group)."""
    table = CosetTable.build(monodromy)
    rw = SchreierRewriter(table)
    relators = [rw.rewrite_loop(r, s) for s in range(1, table.fold + 1) for r in pres.relators]
    return GroupPresentation(rw.generator_count, tuple(relators))


def filling_words(lb: LabeledBraid, rw: SchreierRewriter) -> list[FreeWord]:
    """One relator per (branch component, cycle of its meridian label).

    A cycle of length d at sheet s means the d-th power of the meridian,
    lifted from s, bounds a disk in the branched cover.
    """
    out = []
    for comp in closure_components(lb.braid):
        j = comp[0]
        for cycle in lb.bottom_labels[j - 1].cycles():
            out.append(rw.rewrite_loop(FreeWord.gen(j, len(cycle)), min(cycle)))
    return out


def branched_h1(lb: LabeledBraid, drop_redundant: bool = False) -> FinAbGroup:
    """H_1 of the k-fold cover of S^3 branched along the closure."""
    pres, monodromy = complement_presentation(lb, drop_redundant=drop_redundant)
    if not is_transitive(monodromy, lb.fold):
        raise NotTransitive("cover is disconnected; H_1 is computed for connected covers only")
    rw = SchreierRewriter(CosetTable.build(monodromy))
    rows = [
        rw.rewrite_loop(r, s).abelianize(rw.generator_count)
        for s in range(1, lb.fold + 1)
        for r in pres.relators
    ]
    rows += [w.abelianize(rw.generator_count) for w in filling_words(lb, rw)]
    return cokernel_group(rows, cols=rw.generator_count)
