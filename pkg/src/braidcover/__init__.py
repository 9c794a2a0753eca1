"""Permutation-labeled braids as branched covers of S^3, with the invariants
of the covering 3-manifold and its contact structure."""

from .algebra import (
    FinAbGroup,
    FreeWord,
    Permutation,
    cokernel_group,
    determinant,
    smith_normal_form,
)
from .braid import (
    BraidWord,
    artin_action,
    braid_permutation,
    closure_components,
    self_linking,
    stabilize,
    writhe,
)
from .cover import (
    CoverReport,
    CoverSurface,
    LabeledBraid,
    classify_cover,
    connect_move,
    connect_sites,
    page_surface,
    positive_markov,
    propagate_and_validate,
    stabilize_branch_locus,
)
from .errors import *  # noqa: F401,F403
from .homology import (
    CosetTable,
    GroupPresentation,
    branched_h1,
    complement_presentation,
    cover_presentation,
)
from .obstructions import (
    MoveTrace,
    Status,
    Verdict,
    braidability_verdict,
    cpn_immersion_obstruction,
    d3_delta,
    embeddability_verdict,
)
from .surgery import (
    ContFrac,
    H1Class,
    SurgeryDiagram,
    c1_class,
    characteristic_sublinks,
    continued_fraction,
    d3_invariant,
    disjoint_union,
    gamma_invariant,
    lens_space_chain,
    linking_matrix,
    rolled_up_framings,
    signature,
)

__version__ = "0.1.0"
