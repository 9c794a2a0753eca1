"""
A three-fold cover of S^3 branched along a braid
=================================================

The full twist on four strands, labeled by transpositions in S_3, closes up
to a four-component link.  Its simple 3-fold branched cover is the lens
space L(3,1).  Connect moves merge the components one at a time until the
branch locus is a knot, and the cover does not change.
"""

from braidcover import (
    LabeledBraid,
    branched_h1,
    classify_cover,
    closure_components,
    connect_move,
    page_surface,
    propagate_and_validate,
    self_linking,
)

# the labeled braid
full_twist = LabeledBraid.build([1, 2, 3] * 4, 3, ["(1 2)", "(1 2)", "(2 3)", "(2 3)"])
top, valid = propagate_and_validate(full_twist)
print("labels at the top:", " ".join(map(str, top)), "valid:", valid)

# the cover and one page of its open book
report = classify_cover(full_twist)
print("transitive:", report.transitive, "simple:", report.simple, "cyclic:", report.cyclic)
print("page:", page_surface(full_twist))
print("H1 of the cover:", branched_h1(full_twist))

# merge the four components into one
lb = full_twist
for height, site in [(0, 2), (1, 1), (1, 3)]:
    lb = connect_move(lb, site, height=height)
    print(f"connect at site {site}, height {height}:", len(closure_components(lb.braid)), "component(s)")

print("knot locus:", lb.braid)
print("self-linking of the knot:", self_linking(lb.braid))
print("H1 of the cover, again:", branched_h1(lb))
