"""Dismantlable-lattice blocks, edge-labeled graphs, and their equivalence.

The package builds fundamental basic blocks (RC-lattices whose doubly
irreducible removals each drop the nullity by one, with distinct adjunct
pairs), realizes the dictionary-order bijection between vertex pairs and edge
labels, maps blocks to labeled digraphs without isolated vertices and back,
and verifies that the two counting recurrences and direct enumeration agree.
"""

from ._kernel import active_implementation, compiled_available
from .correspondence import (
    AssociatedClass,
    EquivalenceReport,
    LabeledArc,
    PsiMap,
    phi,
    phi_inverse,
    psi,
    verify_equivalence,
)
from .counting import (
    BFileDiff,
    BFileMismatch,
    CountTable,
    count_d,
    count_d_oracle,
    count_f,
    diff_bfile,
    emit_triangle,
)
from .errors import (
    DisjointnessError,
    EnumerationCapError,
    ExtractionUnsupportedError,
    InvalidAdjunctPairError,
    MalformedPosetError,
    NotALatticeError,
    OrientationError,
    UncoveredVertexError,
)
from .fbb import (
    AdjunctRepresentation,
    AdjunctTerm,
    CompleteFbb,
    Fbb,
    adjunct,
    build_cf,
    build_fbb,
    extract_adjunct_representation,
    is_basic_block_universal,
    is_fundamental_basic_block,
    nullity_bounds,
)
from .graphs import (
    DEFAULT_ENUM_CAP,
    DirectedLabeledGraph,
    LabeledGraph,
    check_bounds,
    enumerate_d,
    forget_orientation,
    has_isolated_vertex,
    isolated_vertices,
    orient,
)
from .labeling import PairChain, block_end, label_edges, pair_count, rank, unrank
from .poset import (
    CoverGraph,
    Poset,
    ReducibilityReport,
    classify,
    cover_graph,
    dismantling_order,
    is_dismantlable,
    is_lattice,
    is_rc_lattice,
    nullity,
    remove_element,
    transitive_order,
)

__version__ = "0.1.0"

__all__ = [
    "AdjunctRepresentation",
    "AdjunctTerm",
    "AssociatedClass",
    "BFileDiff",
    "BFileMismatch",
    "CompleteFbb",
    "CountTable",
    "CoverGraph",
    "DEFAULT_ENUM_CAP",
    "DirectedLabeledGraph",
    "DisjointnessError",
    "EnumerationCapError",
    "EquivalenceReport",
    "ExtractionUnsupportedError",
    "Fbb",
    "InvalidAdjunctPairError",
    "LabeledArc",
    "LabeledGraph",
    "MalformedPosetError",
    "NotALatticeError",
    "OrientationError",
    "PairChain",
    "Poset",
    "PsiMap",
    "ReducibilityReport",
    "UncoveredVertexError",
    "active_implementation",
    "adjunct",
    "block_end",
    "build_cf",
    "build_fbb",
    "check_bounds",
    "classify",
    "compiled_available",
    "count_d",
    "count_d_oracle",
    "count_f",
    "cover_graph",
    "diff_bfile",
    "dismantling_order",
    "emit_triangle",
    "enumerate_d",
    "extract_adjunct_representation",
    "forget_orientation",
    "has_isolated_vertex",
    "is_basic_block_universal",
    "is_dismantlable",
    "is_fundamental_basic_block",
    "is_lattice",
    "is_rc_lattice",
    "isolated_vertices",
    "label_edges",
    "nullity",
    "nullity_bounds",
    "orient",
    "pair_count",
    "phi",
    "phi_inverse",
    "psi",
    "rank",
    "remove_element",
    "transitive_order",
    "unrank",
    "verify_equivalence",
]
