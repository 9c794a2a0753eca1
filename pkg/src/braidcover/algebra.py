"""
Exact integer and permutation primitives.

Permutations act on {1..k} and compose left-to-right: ``(p * q)(i) == q(p(i))``.
That is the order in which a braid word is read (bottom to top), and the
order in which a word in a free group is evaluated under a monodromy map.

Integer matrices are plain lists of lists of Python ints, so entry growth
during elimination is never truncated.  Relation matrices are read row-wise:
each row is one relation among the column generators.
"""

from __future__ import annotations

import dataclasses
import math
import re
from typing import Iterable, Sequence

from .errors import ParseError

IntMatrix = list[list[int]]


# --------------------------------------------------------------------------
# Permutations
# --------------------------------------------------------------------------

@dataclasses.dataclass(frozen=True)
class Permutation:
    """A permutation of {1..k} in one-line notation."""

    images: tuple[int, ...]

    def __post_init__(self):
        images = tuple(int(x) for x in self.images)
        if sorted(images) != list(range(1, len(images) + 1)):
            raise ValueError(f"not a permutation of 1..{len(images)}: {images}")
        object.__setattr__(self, "images", images)

    @property
    def k(self) -> int:
        return len(self.images)

    @classmethod
    def identity(cls, k: int) -> Permutation:
        return cls(tuple(range(1, k + 1)))

    @classmethod
    def from_cycles(cls, k: int, cycles: Iterable[Sequence[int]]) -> Permutation:
        images = list(range(1, k + 1))
        seen: set[int] = set()
        for cycle in cycles:
            for a in cycle:
                if not 1 <= a <= k:
                    raise ValueError(f"symbol {a} out of range 1..{k}")
                if a in seen:
                    raise ValueError(f"symbol {a} repeated")
                seen.add(a)
            for a, b in zip(cycle, tuple(cycle[1:]) + tuple(cycle[:1])):
                images[a - 1] = b
        return cls(tuple(images))

    @classmethod
    def transposition(cls, k: int, a: int, b: int) -> Permutation:
        return cls.from_cycles(k, [(a, b)])

    @classmethod
    def parse(cls, text: str, k: int) -> Permutation:
        """Parse cycle notation such as ``"(1 2)(3 4)"``; ``"e"`` is the identity."""
        s = text.strip()
        if s in ("e", "()"):
            return cls.identity(k)
        if not re.fullmatch(r"(\(\s*\d+(?:[\s,]+\d+)*\s*\)\s*)+", s):
            raise ParseError(f"bad cycle notation {text!r}")
        cycles = [
            tuple(int(x) for x in re.split(r"[\s,]+", body.strip()))
            for body in re.findall(r"\(([^)]*)\)", s)
        ]
        try:
            return cls.from_cycles(k, cycles)
        except ValueError as exc:
            raise ParseError(f"{exc} in {text!r}") from None

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    def __mul__(self, other: Permutation) -> Permutation:
        if other.k != self.k:
            raise ValueError("degree mismatch")
        return Permutation(tuple(other.images[x - 1] for x in self.images))

    def __pow__(self, n: int) -> Permutation:
        base = self if n >= 0 else self.inverse()
        out = Permutation.identity(self.k)
        for _ in range(abs(n)):
            out = out * base
        return out

    def inverse(self) -> Permutation:
        inv = [0] * self.k
        for i, x in enumerate(self.images, start=1):
            inv[x - 1] = i
        return Permutation(tuple(inv))

    def conjugate(self, by: Permutation) -> Permutation:
        """``by^-1 * self * by`` (relabel the symbols of self through ``by``)."""
        return by.inverse() * self * by

    def is_identity(self) -> bool:
        return all(x == i for i, x in enumerate(self.images, start=1))

    def cycles(self, include_fixed: bool = True) -> list[tuple[int, ...]]:
        """Cycles, each starting at its smallest element, sorted by that element."""
        seen: set[int] = set()
        out = []
        for start in range(1, self.k + 1):
            if start in seen:
                continue
            cycle = [start]
            seen.add(start)
            x = self(start)
            while x != start:
                cycle.append(x)
                seen.add(x)
                x = self(x)
            if include_fixed or len(cycle) > 1:
                out.append(tuple(cycle))
        return out

    def cycle_count(self) -> int:
        return len(self.cycles())

    def cycle_type(self) -> tuple[int, ...]:
        """Cycle lengths including fixed points, in decreasing order."""
        return tuple(sorted((len(c) for c in self.cycles()), reverse=True))

    def is_transposition(self) -> bool:
        return self.cycle_type()[:2] == (2, 1) or self.cycle_type() == (2,)

    def support(self) -> frozenset[int]:
        return frozenset(i for i, x in enumerate(self.images, start=1) if x != i)

    def __str__(self) -> str:
        cycles = self.cycles(include_fixed=False)
        if not cycles:
            return "e"
        return "".join("(" + " ".join(map(str, c)) + ")" for c in cycles)

    def __repr__(self) -> str:
        return f"Permutation({self}, k={self.k})"


def orbits(gens: Sequence[Permutation], k: int) -> list[frozenset[int]]:
    """Orbits of the group generated by ``gens`` on {1..k}."""
    parent = list(range(k + 1))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for g in gens:
        for i in range(1, k + 1):
            a, b = find(i), find(g(i))
            if a != b:
                parent[max(a, b)] = min(a, b)
    groups: dict[int, set[int]] = {}
    for i in range(1, k + 1):
        groups.setdefault(find(i), set()).add(i)
    return [frozenset(s) for _, s in sorted(groups.items())]


def is_transitive(gens: Sequence[Permutation], k: int) -> bool:
    return len(orbits(gens, k)) == 1


# --------------------------------------------------------------------------
# Free-group words
# --------------------------------------------------------------------------

@dataclasses.dataclass(frozen=True)
class FreeWord:
    """A word in generators x_1, x_2, ...; letter ``-i`` is the inverse of x_i.

    Words are freely reduced on construction.
    """

    letters: tuple[int, ...] = ()

    def __post_init__(self):
        stack: list[int] = []
        for a in self.letters:
            a = int(a)
            if a == 0:
                raise ValueError("letter 0 is not a generator")
            if stack and stack[-1] == -a:
                stack.pop()
            else:
                stack.append(a)
        object.__setattr__(self, "letters", tuple(stack))

    @classmethod
    def gen(cls, i: int, power: int = 1) -> FreeWord:
        return cls((i if power > 0 else -i,) * abs(power))

    def __mul__(self, other: FreeWord) -> FreeWord:
        return FreeWord(self.letters + other.letters)

    def __pow__(self, n: int) -> FreeWord:
        base = self.letters if n >= 0 else self.inverse().letters
        return FreeWord(base * abs(n))

    def inverse(self) -> FreeWord:
        return FreeWord(tuple(-a for a in reversed(self.letters)))

    def __len__(self) -> int:
        return len(self.letters)

    def max_generator(self) -> int:
        return max((abs(a) for a in self.letters), default=0)

    def substitute(self, images: Sequence[FreeWord]) -> FreeWord:
        """Apply the endomorphism x_i -> images[i-1]."""
        fwd = [img.letters for img in images]
        inv = [tuple(-b for b in reversed(img)) for img in fwd]
        out: list[int] = []
        for a in self.letters:
            out.extend(fwd[a - 1] if a > 0 else inv[-a - 1])
        return FreeWord(tuple(out))

    def evaluate(self, values: Sequence[Permutation]) -> Permutation:
        """Image under the homomorphism x_i -> values[i-1]."""
        out = Permutation.identity(values[0].k) if values else None
        for a in self.letters:
            v = values[abs(a) - 1]
            out = out * (v if a > 0 else v.inverse())
        return out

    def abelianize(self, n: int) -> list[int]:
        vec = [0] * n
        for a in self.letters:
            vec[abs(a) - 1] += 1 if a > 0 else -1
        return vec

    def __str__(self) -> str:
        if not self.letters:
            return "1"
        return " ".join(f"x{a}" if a > 0 else f"x{-a}^-1" for a in self.letters)


# --------------------------------------------------------------------------
# Integer matrices, Smith normal form, cokernels
# --------------------------------------------------------------------------

def identity_matrix(n: int) -> IntMatrix:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def matmul(a: IntMatrix, b: IntMatrix, inner: int | None = None) -> IntMatrix:
    if inner is None:
        inner = len(b)
    cols = len(b[0]) if b else 0
    return [[sum(row[t] * b[t][j] for t in range(inner)) for j in range(cols)] for row in a]


def determinant(m: IntMatrix) -> int:
    """Exact determinant by fraction-free (Bareiss) elimination."""
    n = len(m)
    if n == 0:
        return 1
    a = [list(r) for r in m]
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def smith_normal_form(m: IntMatrix, cols: int | None = None) -> tuple[IntMatrix, IntMatrix, IntMatrix]:
    """Return ``(D, U, V)`` with ``U @ m @ V == D``, U and V unimodular, D in Smith form.

    ``cols`` is only needed for a matrix with zero rows, whose column count
    cannot be read from the data.
    """
    rows = len(m)
    ncols = len(m[0]) if rows else (cols or 0)
    a = [list(map(int, r)) for r in m]
    u = identity_matrix(rows)
    v = identity_matrix(ncols)

    def swap_rows(i, j):
        a[i], a[j] = a[j], a[i]
        u[i], u[j] = u[j], u[i]

    def swap_cols(i, j):
        for r in a:
            r[i], r[j] = r[j], r[i]
        for r in v:
            r[i], r[j] = r[j], r[i]

    def add_row(src, dst, c):  # row[dst] += c * row[src]
        a[dst] = [x + c * y for x, y in zip(a[dst], a[src])]
        u[dst] = [x + c * y for x, y in zip(u[dst], u[src])]

    def add_col(src, dst, c):  # col[dst] += c * col[src]
        for r in a:
            r[dst] += c * r[src]
        for r in v:
            r[dst] += c * r[src]

    for t in range(min(rows, ncols)):
        while True:
            pivot = None
            for i in range(t, rows):
                for j in range(t, ncols):
                    if a[i][j] and (pivot is None or abs(a[i][j]) < abs(a[pivot[0]][pivot[1]])):
                        pivot = (i, j)
            if pivot is None:
                break
            swap_rows(t, pivot[0])
            swap_cols(t, pivot[1])
            p = a[t][t]
            dirty = False
            for i in range(t + 1, rows):
                if a[i][t]:
                    add_row(t, i, -(a[i][t] // p))
                    dirty = dirty or a[i][t] != 0
            for j in range(t + 1, ncols):
                if a[t][j]:
                    add_col(t, j, -(a[t][j] // p))
                    dirty = dirty or a[t][j] != 0
            if dirty:
                continue
            bad = next(
                (i for i in range(t + 1, rows) for j in range(t + 1, ncols) if a[i][j] % p),
                None,
            )
            if bad is None:
                break
            add_row(bad, t, 1)
        if t < rows and t < ncols and a[t][t] < 0:
            a[t] = [-x for x in a[t]]
            u[t] = [-x for x in u[t]]
    return a, u, v


def _diagonal(d: IntMatrix) -> list[int]:
    return [d[i][i] for i in range(min(len(d), len(d[0]) if d else 0))]


@dataclasses.dataclass(frozen=True)
class FinAbGroup:
    """Finitely generated abelian group Z^free_rank + Z/d_1 + ... with d_i | d_{i+1}."""

    free_rank: int = 0
    invariant_factors: tuple[int, ...] = ()

    def __post_init__(self):
        factors = tuple(int(d) for d in self.invariant_factors)
        if self.free_rank < 0 or any(d < 2 for d in factors):
            raise ValueError("free rank must be >= 0 and invariant factors >= 2")
        if any(b % a for a, b in zip(factors, factors[1:])):
            raise ValueError(f"invariant factors {factors} do not form a divisibility chain")
        object.__setattr__(self, "invariant_factors", factors)

    @property
    def is_finite(self) -> bool:
        return self.free_rank == 0

    @property
    def is_trivial(self) -> bool:
        return self.free_rank == 0 and not self.invariant_factors

    def order(self) -> int | None:
        """Group order, or None when the group is infinite."""
        return math.prod(self.invariant_factors) if self.is_finite else None

    def to_json(self) -> dict:
        return {"free_rank": self.free_rank, "torsion": list(self.invariant_factors)}

    def __str__(self) -> str:
        parts = []
        if self.free_rank == 1:
            parts.append("Z")
        elif self.free_rank > 1:
            parts.append(f"Z^{self.free_rank}")
        parts += [f"Z/{d}" for d in self.invariant_factors]
        return " + ".join(parts) if parts else "0"

    @classmethod
    def parse(cls, text: str) -> FinAbGroup:
        text = text.strip()
        if text == "0":
            return cls()
        rank, factors = 0, []
        for part in text.split("+"):
            part = part.strip()
            if part == "Z":
                rank += 1
            elif m := re.fullmatch(r"Z\^(\d+)", part):
                rank += int(m.group(1))
            elif m := re.fullmatch(r"Z/(\d+)", part):
                factors.append(int(m.group(1)))
            else:
                raise ParseError(f"bad group {text!r}")
        return cls(rank, tuple(factors))


def cokernel_group(m: IntMatrix, cols: int | None = None) -> FinAbGroup:
    """``Z^cols`` modulo the lattice spanned by the rows of ``m``."""
    ncols = len(m[0]) if m else (cols or 0)
    if not m:
        return FinAbGroup(ncols)
    d, _, _ = smith_normal_form(m)
    diag = _diagonal(d)
    rank = sum(1 for x in diag if x)
    return FinAbGroup(ncols - rank, tuple(x for x in diag if x > 1))
