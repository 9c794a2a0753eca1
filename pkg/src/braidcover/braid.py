"""
Braid words, their closures as transverse links, and the Artin action.

Strands are numbered 1..n left to right at the bottom and words are read
bottom to top.  Letter ``i > 0`` is the positive crossing sigma_i between
positions i and i+1, letter ``-i`` its inverse.  Words are never reduced:
braid equality (the word problem) is not implemented.
"""

from __future__ import annotations

import dataclasses
import re
from typing import Literal, Sequence

from .algebra import FreeWord, Permutation
from .errors import GeneratorOutOfRange, MultiComponentClosure, ParseError


@dataclasses.dataclass(frozen=True)
class BraidWord:
    strands: int
    letters: tuple[int, ...] = ()

    def __post_init__(self):
        letters = tuple(int(a) for a in self.letters)
        if self.strands < 1:
            raise ValueError("a braid needs at least one strand")
        for a in letters:
            if a == 0 or abs(a) >= self.strands:
                raise ValueError(f"letter {a} invalid in B{self.strands}")
        object.__setattr__(self, "letters", letters)

    def __mul__(self, other: BraidWord) -> BraidWord:
        n = max(self.strands, other.strands)
        return BraidWord(n, self.letters + other.letters)

    def __pow__(self, m: int) -> BraidWord:
        base = self if m >= 0 else self.inverse()
        return BraidWord(self.strands, base.letters * abs(m))

    def inverse(self) -> BraidWord:
        return BraidWord(self.strands, tuple(-a for a in reversed(self.letters)))

    def __len__(self) -> int:
        return len(self.letters)

    def __str__(self) -> str:
        return f"B{self.strands}: " + " ".join(map(str, self.letters))

    @classmethod
    def parse(cls, text: str) -> BraidWord:
        """Parse the text form ``"B3: 1 2 -1"``."""
        m = re.fullmatch(r"\s*B(\d+)\s*:\s*((?:[-+]?\d+\s*)*)", text)
        if not m:
            raise ParseError(f"bad braid text {text!r}")
        try:
            return cls(int(m.group(1)), tuple(int(x) for x in m.group(2).split()))
        except ValueError as exc:
            raise ParseError(str(exc)) from None

    @classmethod
    def full_twist(cls, n: int) -> BraidWord:
        return cls(n, tuple(range(1, n)) * n)


def braid_permutation(b: BraidWord) -> Permutation:
    """Permutation sending a bottom position to the top position of the same strand."""
    perm = Permutation.identity(b.strands)
    for a in b.letters:
        i = abs(a)
        perm = perm * Permutation.transposition(b.strands, i, i + 1)
    return perm


def writhe(b: BraidWord) -> int:
    return sum(1 if a > 0 else -1 for a in b.letters)


def closure_components(b: BraidWord) -> list[tuple[int, ...]]:
    """Strand positions grouped by the link component of the closure.

    Components are ordered by their lowest strand index.
    """
    return braid_permutation(b).cycles()


def self_linking(b: BraidWord) -> int:
    """Self-linking number of the transverse closure, ``writhe - strands``.

    Only defined here for knots; the formula does not split over components.
    """
    if len(closure_components(b)) != 1:
        raise MultiComponentClosure(
            f"closure of {b} has {len(closure_components(b))} components"
        )
    return writhe(b) - b.strands


def stabilize(b: BraidWord, kind: Literal["positive", "transverse"] = "transverse") -> BraidWord:
    """Markov stabilization at the right-hand end.

    ``transverse`` appends sigma_n^-1 (lowers the self-linking number by 2);
    ``positive`` appends sigma_n and preserves it.
    """
    n = b.strands
    if kind == "transverse":
        return BraidWord(n + 1, b.letters + (-n,))
    if kind == "positive":
        return BraidWord(n + 1, b.letters + (n,))
    raise ValueError(f"unknown stabilization kind {kind!r}")


def _generator_images(n: int, letter: int) -> list[FreeWord]:
    i = abs(letter)
    images = [FreeWord.gen(j) for j in range(1, n + 1)]
    xi, xj = FreeWord.gen(i), FreeWord.gen(i + 1)
    if letter > 0:
        images[i - 1] = xi * xj * xi.inverse()
        images[i] = xi
    else:
        images[i - 1] = xj
        images[i] = xj.inverse() * xi * xj
    return images


def artin_automorphism(b: BraidWord) -> list[FreeWord]:
    """Images of x_1..x_n under the braid's action on the free group.

    sigma_i sends x_i to x_i x_{i+1} x_i^-1 and x_{i+1} to x_i.  Letters are
    applied in word order: the result for ``b = s_1 ... s_m`` is
    ``s_m o ... o s_1``.
    """
    n = b.strands
    images = [FreeWord.gen(j) for j in range(1, n + 1)]
    for a in b.letters:
        step = _generator_images(n, a)
        images = [w.substitute(step) for w in images]
    return images


def artin_action(b: BraidWord, w: FreeWord | Sequence[int]) -> FreeWord:
    if not isinstance(w, FreeWord):
        w = FreeWord(tuple(w))
    if w.max_generator() > b.strands:
        raise GeneratorOutOfRange(f"word uses x{w.max_generator()} but braid has {b.strands} strands")
    return w.substitute(artin_automorphism(b))
