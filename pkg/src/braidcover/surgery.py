"""
Contact invariants of Legendrian surgery diagrams in (S^3, xi_std).

A diagram is a Legendrian link given numerically: Thurston-Bennequin
invariant and rotation number per component plus pairwise linking numbers.
Legendrian surgery attaches 2-handles with framing tb - 1, so the linking
matrix Q has diagonal tb_i - 1.  Homology classes of the surgered manifold
are integer vectors over the meridians mu_i modulo the lattice spanned by
Q's rows (Q is symmetric, so rows and columns span the same lattice).

All arithmetic is exact: ints and :class:`fractions.Fraction`.
"""

from __future__ import annotations

import dataclasses
import itertools
import math
from fractions import Fraction
from typing import Iterable, Sequence

from .algebra import FinAbGroup, IntMatrix, cokernel_group, smith_normal_form
from .errors import AsymmetricInput, BadPQ, ChernClassNotTorsion, InputError, NotCharacteristic, ParseError


@dataclasses.dataclass(frozen=True)
class SurgeryDiagram:
    tb: tuple[int, ...]
    rot: tuple[int, ...]
    linking: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        n = len(self.tb)
        tb = tuple(int(x) for x in self.tb)
        rot = tuple(int(x) for x in self.rot)
        lk = tuple(tuple(int(x) for x in row) for row in self.linking) if n else ()
        if len(rot) != n or len(lk) != n or any(len(row) != n for row in lk):
            raise ValueError("tb, rot and linking must all have one entry per component")
        for i in range(n):
            for j in range(i + 1, n):
                if lk[i][j] != lk[j][i]:
                    raise AsymmetricInput(f"lk(K{i + 1},K{j + 1}) = {lk[i][j]} but lk(K{j + 1},K{i + 1}) = {lk[j][i]}")
            if (tb[i] + rot[i]) % 2 == 0:
                raise InputError(f"K{i + 1}: tb + rot must be odd for a null-homologous Legendrian knot")
        object.__setattr__(self, "tb", tb)
        object.__setattr__(self, "rot", rot)
        object.__setattr__(self, "linking", lk)

    @classmethod
    def from_pairs(cls, tb: Sequence[int], rot: Sequence[int], pairs: dict[tuple[int, int], int] | None = None):
        """Build from 0-based unordered pairs ``{(i, j): lk}``; unlisted pairs are 0."""
        n = len(tb)
        lk = [[0] * n for _ in range(n)]
        for (i, j), v in (pairs or {}).items():
            lk[i][j] = lk[j][i] = v
        return cls(tuple(tb), tuple(rot), tuple(map(tuple, lk)))

    @classmethod
    def empty(cls) -> SurgeryDiagram:
        return cls((), (), ())

    @property
    def size(self) -> int:
        return len(self.tb)

    @property
    def framings(self) -> tuple[int, ...]:
        return tuple(t - 1 for t in self.tb)


def linking_matrix(d: SurgeryDiagram) -> IntMatrix:
    n = d.size
    return [[d.tb[i] - 1 if i == j else d.linking[i][j] for j in range(n)] for i in range(n)]


def disjoint_union(a: SurgeryDiagram, b: SurgeryDiagram) -> SurgeryDiagram:
    """Split union of two diagrams (the surgered manifolds connect-sum)."""
    n, m = a.size, b.size
    lk = [[0] * (n + m) for _ in range(n + m)]
    for i in range(n):
        lk[i][:n] = a.linking[i]
    for i in range(m):
        lk[n + i][n:] = b.linking[i]
    return SurgeryDiagram(a.tb + b.tb, a.rot + b.rot, tuple(map(tuple, lk)))


# --------------------------------------------------------------------------
# Exact rational linear algebra
# --------------------------------------------------------------------------

def signature(q: IntMatrix) -> int:
    """Signature of a symmetric integer matrix by congruence diagonalization over Q."""
    a = [[Fraction(x) for x in row] for row in q]
    sig = 0
    while a:
        n = len(a)
        p = next((i for i in range(n) if a[i][i] != 0), None)
        if p is None:
            off = next(((i, j) for i in range(n) for j in range(n) if a[i][j] != 0), None)
            if off is None:
                break
            i, j = off
            # row_i += row_j and col_i += col_j makes a[i][i] = 2 a[i][j] != 0
            a[i] = [x + y for x, y in zip(a[i], a[j])]
            for row in a:
                row[i] += row[j]
            p = i
        piv = a[p][p]
        sig += 1 if piv > 0 else -1
        rest = [r for r in range(n) if r != p]
        a = [[a[r][c] - a[r][p] * a[p][c] / piv for c in rest] for r in rest]
    return sig


def solve_rational(q: IntMatrix, rhs: Sequence[int]) -> tuple[list[Fraction] | None, list[list[Fraction]]]:
    """Solve ``q z = rhs`` over Q.

    Returns one solution (None if inconsistent) and a basis of the null space.
    """
    n = len(q)
    cols = len(q[0]) if q else 0
    aug = [[Fraction(x) for x in row] + [Fraction(b)] for row, b in zip(q, rhs)]
    pivots = []
    r = 0
    for c in range(cols):
        p = next((i for i in range(r, n) if aug[i][c] != 0), None)
        if p is None:
            continue
        aug[r], aug[p] = aug[p], aug[r]
        lead = aug[r][c]
        aug[r] = [x / lead for x in aug[r]]
        for i in range(n):
            if i != r and aug[i][c] != 0:
                f = aug[i][c]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[r])]
        pivots.append(c)
        r += 1
    if any(all(x == 0 for x in row[:-1]) and row[-1] != 0 for row in aug):
        solution = None
    else:
        solution = [Fraction(0)] * cols
        for i, c in enumerate(pivots):
            solution[c] = aug[i][-1]
    free = [c for c in range(cols) if c not in pivots]
    kernel = []
    for f in free:
        v = [Fraction(0)] * cols
        v[f] = Fraction(1)
        for i, c in enumerate(pivots):
            v[c] = -aug[i][f]
        kernel.append(v)
    return solution, kernel


def c1_squared(d: SurgeryDiagram) -> Fraction:
    """``r^T z`` with ``Q z = r``; raises when c_1 of the boundary is not torsion."""
    if d.size == 0:
        return Fraction(0)
    z, _ = solve_rational(linking_matrix(d), d.rot)
    if z is None:
        raise ChernClassNotTorsion("rotation vector is not in the rational span of the linking matrix")
    return sum((Fraction(r) * x for r, x in zip(d.rot, z)), Fraction(0))


def d3_invariant(d: SurgeryDiagram) -> Fraction:
    """Three-dimensional invariant ``(c_1^2 - 3 sigma - 2 (chi - 1)) / 4`` of the surgered structure."""
    c1sq = c1_squared(d)
    sigma = signature(linking_matrix(d))
    chi = 1 + d.size
    return (c1sq - 3 * sigma - 2 * (chi - 1)) / 4


# --------------------------------------------------------------------------
# Homology classes
# --------------------------------------------------------------------------

class H1Class:
    """An integer vector over meridians, read modulo the row lattice of a relation matrix."""

    def __init__(self, coefficients: Sequence[int], relations: IntMatrix):
        self.coefficients = tuple(int(c) for c in coefficients)
        self.relations = [list(map(int, r)) for r in relations]
        n = len(self.coefficients)
        if any(len(r) != n for r in self.relations):
            raise ValueError("relation matrix width must match the coefficient count")
        d, _, v = smith_normal_form(self.relations, cols=n)
        self._diag = [d[i][i] if i < len(d) else 0 for i in range(n)]
        self._v = v

    @property
    def size(self) -> int:
        return len(self.coefficients)

    def group(self) -> FinAbGroup:
        return cokernel_group(self.relations, cols=self.size)

    def canonical(self) -> tuple[int, ...]:
        """Coordinates in the invariant-factor basis: free part first, then torsion (reduced)."""
        n = self.size
        y = [sum(self.coefficients[t] * self._v[t][j] for t in range(n)) for j in range(n)]
        free = [y[j] for j in range(n) if self._diag[j] == 0]
        torsion = [y[j] % self._diag[j] for j in range(n) if self._diag[j] > 1]
        return tuple(free + torsion)

    def is_zero(self) -> bool:
        return not any(self.canonical())

    def _same_modulus(self, other: H1Class) -> None:
        if self.relations != other.relations:
            raise ValueError("classes live in different groups")

    def __eq__(self, other):
        if not isinstance(other, H1Class):
            return NotImplemented
        self._same_modulus(other)
        return (self - other).is_zero()

    def __hash__(self):
        return hash((self.canonical(), tuple(map(tuple, self.relations))))

    def __add__(self, other: H1Class) -> H1Class:
        self._same_modulus(other)
        return H1Class([a + b for a, b in zip(self.coefficients, other.coefficients)], self.relations)

    def __neg__(self) -> H1Class:
        return H1Class([-a for a in self.coefficients], self.relations)

    def __sub__(self, other: H1Class) -> H1Class:
        return self + (-other)

    def __rmul__(self, m: int) -> H1Class:
        return H1Class([m * a for a in self.coefficients], self.relations)

    def to_json(self) -> dict:
        return {
            "meridians": list(self.coefficients),
            "canonical": list(self.canonical()),
            "group": self.group().to_json(),
            "zero": self.is_zero(),
        }

    def __str__(self) -> str:
        terms = [f"{c}*mu{i + 1}" for i, c in enumerate(self.coefficients) if c]
        raw = " + ".join(terms) if terms else "0"
        return f"{raw} = {list(self.canonical())} in {self.group()}"

    def __repr__(self) -> str:
        return f"H1Class({list(self.coefficients)})"


def c1_class(d: SurgeryDiagram) -> H1Class:
    """Poincare dual of c_1 of the surgered contact structure: ``sum rot_i mu_i``."""
    return H1Class(d.rot, linking_matrix(d))


# --------------------------------------------------------------------------
# Spin structures and the Gamma invariant
# --------------------------------------------------------------------------

def linking_with(d: SurgeryDiagram, i: int, sublink: Iterable[int]) -> int:
    """lk(K_i, L'), counting the framing of K_i when K_i belongs to L'."""
    q = linking_matrix(d)
    return sum(q[i][j] for j in sublink)


def is_characteristic(d: SurgeryDiagram, sublink: Iterable[int]) -> bool:
    sub = frozenset(sublink)
    return all((d.framings[i] - linking_with(d, i, sub)) % 2 == 0 for i in range(d.size))


def _gf2_solve(rows: list[int], rhs: list[int], n: int) -> tuple[int | None, list[int]]:
    """Solve a GF(2) system given as row bitmasks; returns a solution mask and a kernel basis."""
    rows, rhs = list(rows), list(rhs)
    pivots: list[int] = []
    r = 0
    for c in range(n):
        p = next((i for i in range(r, len(rows)) if rows[i] >> c & 1), None)
        if p is None:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        rhs[r], rhs[p] = rhs[p], rhs[r]
        for i in range(len(rows)):
            if i != r and rows[i] >> c & 1:
                rows[i] ^= rows[r]
                rhs[i] ^= rhs[r]
        pivots.append(c)
        r += 1
    if any(rows[i] == 0 and rhs[i] for i in range(len(rows))):
        return None, []
    sol = 0
    for i, c in enumerate(pivots):
        if rhs[i]:
            sol |= 1 << c
    kernel = []
    for f in (c for c in range(n) if c not in pivots):
        v = 1 << f
        for i, c in enumerate(pivots):
            if rows[i] >> f & 1:
                v |= 1 << c
        kernel.append(v)
    return sol, kernel


def characteristic_sublinks(d: SurgeryDiagram) -> list[frozenset[int]]:
    """All characteristic sublinks (0-based component indices), sorted by size then members.

    These correspond one-to-one with spin structures on the surgered manifold.
    """
    n = d.size
    q = linking_matrix(d)
    rows = [sum((q[i][j] & 1) << j for j in range(n)) for i in range(n)]
    rhs = [q[i][i] & 1 for i in range(n)]
    sol, kernel = _gf2_solve(rows, rhs, n)
    if sol is None:
        return []
    out = []
    for bits in itertools.product((0, 1), repeat=len(kernel)):
        mask = sol
        for b, v in zip(bits, kernel):
            if b:
                mask ^= v
        out.append(frozenset(j for j in range(n) if mask >> j & 1))
    return sorted(out, key=lambda s: (len(s), sorted(s)))


def gamma_invariant(d: SurgeryDiagram, sublink: Iterable[int]) -> H1Class:
    """Gamma of the Legendrian-surgery structure at the spin structure of ``sublink``.

    The meridian coefficients are ``(rot_i + lk(K_i, L')) / 2``.
    """
    sub = frozenset(sublink)
    if not is_characteristic(d, sub):
        raise NotCharacteristic(f"sublink {sorted(sub)} is not characteristic")
    coeffs = []
    for i in range(d.size):
        total = d.rot[i] + linking_with(d, i, sub)
        assert total % 2 == 0, "rot + tb odd and the characteristic condition force evenness"
        coeffs.append(total // 2)
    return H1Class(coeffs, linking_matrix(d))


# --------------------------------------------------------------------------
# Lens spaces
# --------------------------------------------------------------------------

@dataclasses.dataclass(frozen=True)
class ContFrac:
    """Negative continued fraction ``a_1 - 1/(a_2 - 1/(... - 1/a_n))`` with every a_i <= -2."""

    coefficients: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "coefficients", tuple(int(a) for a in self.coefficients))
        if not self.coefficients or any(a > -2 for a in self.coefficients):
            raise ValueError("coefficients must be nonempty and all <= -2")

    def value(self) -> Fraction:
        x = Fraction(self.coefficients[-1])
        for a in reversed(self.coefficients[:-1]):
            x = a - 1 / x
        return x

    def __iter__(self):
        return iter(self.coefficients)

    def __len__(self):
        return len(self.coefficients)

    def __str__(self) -> str:
        return "[" + ", ".join(map(str, self.coefficients)) + "]"


def continued_fraction(p: int, q: int) -> ContFrac:
    """Expansion of -p/q for coprime p > q >= 1."""
    if not (p > q >= 1 and math.gcd(p, q) == 1):
        raise BadPQ(f"need coprime p > q >= 1, got ({p}, {q})")
    coeffs = []
    num, den = p, q  # x = num/den; step: c = ceil(x), x <- 1/(c - x)
    while True:
        c = -(-num // den)
        coeffs.append(-c)
        if c * den == num:
            break
        num, den = den, c * den - num
    return ContFrac(tuple(coeffs))


def rolled_up_framings(cf: ContFrac | Sequence[int]) -> list[int]:
    """Framings ``b_k = 2(k-1) + a_1 + ... + a_k`` of the nested (rolled-up) diagram."""
    out, total = [], 0
    for k, a in enumerate(cf, start=1):
        total += a
        out.append(2 * (k - 1) + total)
    return out


def lens_space_chain(p: int, q: int, rot: Sequence[int] | None = None) -> SurgeryDiagram:
    """Legendrian linear chain of unknots for L(p, q): framing a_i, adjacent links linked once.

    Each unknot has tb = a_i + 1; rotation numbers default to 0, which needs
    every a_i even.
    """
    cf = continued_fraction(p, q)
    n = len(cf)
    rot = tuple(rot) if rot is not None else (0,) * n
    pairs = {(i, i + 1): 1 for i in range(n - 1)}
    return SurgeryDiagram.from_pairs([a + 1 for a in cf], rot, pairs)


def parallel_unknots(count: int, tb: int = -1, rot: int = 0) -> SurgeryDiagram:
    """``count`` Legendrian push-offs of one unknot; push-offs link ``tb`` times."""
    pairs = {(i, j): tb for i in range(count) for j in range(i + 1, count)}
    return SurgeryDiagram.from_pairs([tb] * count, [rot] * count, pairs)


# --------------------------------------------------------------------------
# Text file format
# --------------------------------------------------------------------------

def loads(text: str) -> SurgeryDiagram:
    """Parse the surgery text format (``components``, ``tb``, ``rot``, ``lk i j v`` lines)."""
    n = None
    tb = rot = None
    pairs: dict[tuple[int, int], int] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, *vals = line.split()
        try:
            nums = [int(v) for v in vals]
        except ValueError:
            raise ParseError(f"non-integer value in {line!r}", lineno) from None
        if key == "components":
            if len(nums) != 1 or nums[0] < 0:
                raise ParseError("components takes one nonnegative integer", lineno)
            n = nums[0]
        elif key in ("tb", "rot"):
            if n is None:
                raise ParseError("'components' must come first", lineno)
            if len(nums) != n:
                raise ParseError(f"{key} needs {n} values, got {len(nums)}", lineno)
            if key == "tb":
                tb = nums
            else:
                rot = nums
        elif key == "lk":
            if n is None:
                raise ParseError("'components' must come first", lineno)
            if len(nums) != 3:
                raise ParseError("lk takes 'i j value'", lineno)
            i, j, v = nums
            if not (1 <= i <= n and 1 <= j <= n) or i == j:
                raise ParseError(f"bad component pair ({i}, {j})", lineno)
            key_ = (min(i, j) - 1, max(i, j) - 1)
            if key_ in pairs and pairs[key_] != v:
                raise ParseError(f"conflicting lk for pair ({i}, {j})", lineno)
            pairs[key_] = v
        else:
            raise ParseError(f"unknown key {key!r}", lineno)
    if n is None:
        raise ParseError("missing 'components'")
    if n and (tb is None or rot is None):
        raise ParseError("missing 'tb' or 'rot'")
    try:
        return SurgeryDiagram.from_pairs(tb or [], rot or [], pairs)
    except ValueError as exc:
        raise ParseError(str(exc)) from None


def dumps(d: SurgeryDiagram) -> str:
    lines = [f"components {d.size}"]
    if d.size:
        lines.append("tb " + " ".join(map(str, d.tb)))
        lines.append("rot " + " ".join(map(str, d.rot)))
    for i in range(d.size):
        for j in range(i + 1, d.size):
            if d.linking[i][j]:
                lines.append(f"lk {i + 1} {j + 1} {d.linking[i][j]}")
    return "\n".join(lines) + "\n"
