"""Graph decompositions into parts of bounded radius.

The package decomposes finite graphs into induced parts of small radius
arranged along a path, cycle, subdivided star, or tree, certifies the
impossibility of such decompositions by fat subdivisions of small patterns,
and converts bounded-width decompositions to and from quasi-isometries onto
their decomposition graphs.  Everything is exact and deterministic: widths
and distances are integers (or :data:`INFINITY`), certificates have
canonical text encodings, and an exhaustive oracle cross-checks the
constructions on tiny graphs.
"""

from .constructors import (
    Decomposed,
    DecomposeOutcome,
    Obstructed,
    ball_decomposition,
    decompose_cycle,
    decompose_path,
    decompose_star,
)
from .decomposition import (
    DECOMPOSITION_CLASSES,
    DecompositionMetrics,
    GraphDecomposition,
    VerifyReport,
    format_decomposition,
    make_decomposition,
    metrics,
    parse_decomposition,
    radial_width,
    verify,
)
from .errors import FormatError, InputError, InternalInvariantError, PreconditionError
from .exact import (
    AtMost,
    ExactCaps,
    ExactResult,
    ExceedsAll,
    Inconclusive,
    exact_width,
    exact_width_at_most,
)
from .generators import basic, subdivide, subdivide_with_paths, tree_of_wheels
from .graph import (
    INFINITY,
    Distance,
    Graph,
    distance,
    format_graph,
    graph_radius,
    parse_graph,
    part_radius,
)
from .metric import (
    QIReport,
    QuasiIsometry,
    dec_to_qi,
    format_quasi_isometry,
    parse_quasi_isometry,
    qi_to_dec,
    quasi_geodesic_constant,
    verify_quasi_isometry,
)
from .obstructions import (
    PATTERNS,
    FindResult,
    Pattern,
    SearchCaps,
    SubdivisionWitness,
    WitnessReport,
    find_subdivision,
    format_witness,
    long_geodesic_cycle,
    lower_bounds,
    parse_witness,
    verify_witness,
)

__all__ = [
    "AtMost",
    "DECOMPOSITION_CLASSES",
    "Decomposed",
    "DecomposeOutcome",
    "DecompositionMetrics",
    "Distance",
    "ExactCaps",
    "ExactResult",
    "ExceedsAll",
    "FindResult",
    "FormatError",
    "Graph",
    "GraphDecomposition",
    "INFINITY",
    "Inconclusive",
    "InputError",
    "InternalInvariantError",
    "Obstructed",
    "PATTERNS",
    "Pattern",
    "PreconditionError",
    "QIReport",
    "QuasiIsometry",
    "SearchCaps",
    "SubdivisionWitness",
    "VerifyReport",
    "WitnessReport",
    "ball_decomposition",
    "basic",
    "dec_to_qi",
    "decompose_cycle",
    "decompose_path",
    "decompose_star",
    "distance",
    "exact_width",
    "exact_width_at_most",
    "find_subdivision",
    "format_decomposition",
    "format_graph",
    "format_quasi_isometry",
    "format_witness",
    "graph_radius",
    "long_geodesic_cycle",
    "lower_bounds",
    "make_decomposition",
    "metrics",
    "parse_decomposition",
    "parse_graph",
    "parse_quasi_isometry",
    "parse_witness",
    "part_radius",
    "qi_to_dec",
    "quasi_geodesic_constant",
    "radial_width",
    "subdivide",
    "subdivide_with_paths",
    "tree_of_wheels",
    "verify",
    "verify_quasi_isometry",
    "verify_witness",
]

__version__ = "0.1.0"
