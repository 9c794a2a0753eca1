"""
Which covers braid, and which contact manifolds embed in S^5
============================================================

A contact 3-manifold that sits in (S^5, xi_std) with codimension two has
vanishing c_1.  Both tight structures on L(3,1) have c_1 nonzero, so
neither embeds, and the 3-fold cover over the knot locus of the previous demo
cannot be braided.
"""

from braidcover import (
    LabeledBraid,
    SurgeryDiagram,
    braidability_verdict,
    c1_class,
    connect_move,
    cpn_immersion_obstruction,
    embeddability_verdict,
)

c1_plus = c1_class(SurgeryDiagram.from_pairs([-2], [1]))
c1_minus = c1_class(SurgeryDiagram.from_pairs([-2], [-1]))
print("embedding L(3,1), rot +1:", embeddability_verdict(c1_plus).status.value)

lb = LabeledBraid.build([1, 2, 3] * 4, 3, ["(1 2)", "(1 2)", "(2 3)", "(2 3)"])
v = braidability_verdict(lb)
print("full twist:", v.status.value, v.reasons)
for height, site in [(0, 2), (1, 1), (1, 3)]:
    lb = connect_move(lb, site, height=height)

# a knot has two orientations, and we supply c_1 for both
verdict = braidability_verdict(lb, [c1_plus, c1_minus])
print("knot locus:", verdict.status.value, verdict.reasons)

# cyclic covers always braid
trefoil = LabeledBraid.build([1, 1, 1], 2, ["(1 2)", "(1 2)"])
print("double cover over the trefoil:", braidability_verdict(trefoil).status.value)

# CP^n has no immersion into C^{n+1} with trivial normal bundle once n >= 2
for n in (1, 2, 3):
    v = cpn_immersion_obstruction(n)
    print(f"CP^{n}:", v.status.value, v.details.get("pontryagin", ""))
