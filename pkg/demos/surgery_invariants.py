"""
Contact surgery invariants of lens spaces
=========================================

Legendrian surgery on a chain of unknots gives a lens space.  The
continued fraction of -p/q fixes the framings, and the rotation numbers pick
out a contact structure.  We read off d_3, the Chern class and the Gompf
invariant for a few of them.
"""

from braidcover import (
    SurgeryDiagram,
    c1_class,
    characteristic_sublinks,
    continued_fraction,
    d3_invariant,
    gamma_invariant,
    lens_space_chain,
    linking_matrix,
    rolled_up_framings,
    signature,
)

for p, q in [(3, 1), (10, 7), (24, 7)]:
    cf = continued_fraction(p, q)
    print(f"-{p}/{q} = {cf}   rolled up: {rolled_up_framings(cf)}")

# L(3,1) as a single unknot with tb = -2; rot = 1 and rot = -1 are the two tight structures
for rot in (1, -1):
    d = SurgeryDiagram.from_pairs([-2], [rot])
    c1 = c1_class(d)
    print(f"rot {rot:+d}: d3 = {d3_invariant(d)}, c1 = {c1.canonical()} in {c1.group()}")

# a longer chain, with its spin structures
d = lens_space_chain(10, 7)
q = linking_matrix(d)
print("linking matrix:", q, "signature:", signature(q))
print("H1:", c1_class(d).group(), "d3:", d3_invariant(d))
for s in characteristic_sublinks(d):
    g = gamma_invariant(d, s)
    print("spin structure", sorted(s), "gamma:", g.canonical(), "zero:", g.is_zero())
