"""Golden labeled braids and random valid data."""

from __future__ import annotations

import random

from hypothesis import strategies as st

from braidcover import BraidWord, LabeledBraid
from braidcover.algebra import Permutation, is_transitive
from braidcover.cover import propagate


def labeled(word, fold, labels, strands=None):
    return LabeledBraid.build(word, fold, labels, strands=strands)


def l31():
    """Full twist on four strands, the simple 3-fold cover giving L(3,1)."""
    return labeled([1, 2, 3] * 4, 3, ["(1 2)", "(1 2)", "(2 3)", "(2 3)"])


def nobraid_family(n: int):
    """Full twist on 2n strands, labels (1 2),(1 2),(2 3),(2 3),...; cover L(n+1,1)."""
    labels = []
    for j in range(1, n + 1):
        labels += [f"({j} {j + 1})"] * 2
    return labeled(list(range(1, 2 * n)) * (2 * n), n + 1, labels)


CONNECT_TO_KNOT = [(0, 2), (1, 1), (1, 3)]  # (height, site)


def knot_locus():
    from braidcover import connect_move

    lb = l31()
    for height, site in CONNECT_TO_KNOT:
        lb = connect_move(lb, site, height=height)
    return lb


def golden_corpus():
    return {
        "l31": l31(),
        "knot-locus": knot_locus(),
        "sigma1": labeled([1], 2, ["(1 2)", "(1 2)"]),
        "unlink": labeled([], 2, ["(1 2)", "(1 2)"], strands=2),
        "trefoil": labeled([1, 1, 1], 2, ["(1 2)", "(1 2)"]),
        "figure-eight": labeled([1, -2, 1, -2], 2, ["(1 2)"] * 3),
        "nobraid-2": nobraid_family(2),
        "nobraid-3": nobraid_family(3),
    }


def random_valid_datum(rng: random.Random, max_strands=8, max_fold=3, max_len=40, simple=True):
    """A random transitive labeled braid.

    Pick a word w and labels L; propagation through w permutes the finite set
    of label tuples, so some power w^m returns L to itself.
    """
    while True:
        n = rng.randint(2, max_strands)
        k = rng.randint(2, max_fold)
        w = tuple(rng.choice((1, -1)) * rng.randint(1, n - 1) for _ in range(rng.randint(1, 6)))
        if simple:
            pool = [Permutation.transposition(k, a, b) for a in range(1, k + 1) for b in range(a + 1, k + 1)]
        else:
            pool = [Permutation(p) for p in _all_perms(k) if list(p) != list(range(1, k + 1))]
        labels = tuple(rng.choice(pool) for _ in range(n))
        if not is_transitive(labels, k):
            continue
        bw = BraidWord(n, w)
        cur, m = propagate(bw, labels), 1
        while cur != labels and (m + 1) * len(w) <= max_len:
            cur, m = propagate(bw, cur), m + 1
        if cur == labels:
            return LabeledBraid(bw**m, k, labels)


def _all_perms(k):
    import itertools

    return itertools.permutations(range(1, k + 1))


@st.composite
def valid_data(draw, max_strands=8, max_fold=3, max_len=40, simple=True):
    seed = draw(st.integers(min_value=0, max_value=2**32 - 1))
    return random_valid_datum(random.Random(seed), max_strands, max_fold, max_len, simple)
