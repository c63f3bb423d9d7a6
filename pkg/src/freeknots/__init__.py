"""Free knots: framed 4-graphs modulo three Reidemeister moves.

Diagrams are multi-circle double-occurrence words; the flagship invariant
is a smoothing state sum valued in diagrams modulo only the second move,
where equality is decidable through a unique irreducible representative.
"""

from .bracket import (
    DEFAULT_BRACKET_BUDGET,
    G0_CLASS,
    CertificateRefusal,
    MinimalityCertificate,
    Nontriviality,
    Z2GClass,
    bracket,
    minimality_certificate,
    nontriviality_test,
    reduce_r2,
    smoothing_states,
    smoothing_survivors,
    z2g_equal,
)
from .diagram import (
    CENSUS_LIMIT,
    G0,
    FramedDiagram,
    InterlacementMatrix,
    canonical_code,
    canonically_equal,
    census,
    build_diagram,
    interlacement,
    parse_gauss,
    smooth,
    to_text,
    unicursal_count,
)
from .errors import (
    BudgetExceededError,
    FreeKnotError,
    GaussSyntaxError,
    LabelCountError,
    MultiComponentError,
    ParseError,
    StaleSiteError,
    UnknownChordError,
    WrongComponentCountError,
)
from .interlace import (
    SimpleGraph,
    are_isomorphic,
    from_interlacement,
    graph,
    graph_is_irreducibly_odd,
    realizable_bruteforce,
    wheel_graph,
)
from .moves import (
    MoveKind,
    MoveSite,
    apply,
    enumerate_add,
    find_all_sites,
    find_r1_del,
    find_r2_del,
    find_r3,
    random_walk,
    random_walk_with_sites,
)
from .parity import (
    BunchPartition,
    OddnessReport,
    ParityVector,
    bunches,
    filtration_index,
    incidence_set,
    is_irreducibly_odd,
    link_crossing_parity,
    parity_vector,
    project_odd,
)

__version__ = "0.1.0"

__all__ = [
    "BudgetExceededError",
    "BunchPartition",
    "CENSUS_LIMIT",
    "CertificateRefusal",
    "DEFAULT_BRACKET_BUDGET",
    "FramedDiagram",
    "FreeKnotError",
    "G0",
    "G0_CLASS",
    "GaussSyntaxError",
    "InterlacementMatrix",
    "LabelCountError",
    "MinimalityCertificate",
    "MoveKind",
    "MoveSite",
    "MultiComponentError",
    "Nontriviality",
    "OddnessReport",
    "ParityVector",
    "ParseError",
    "SimpleGraph",
    "StaleSiteError",
    "UnknownChordError",
    "WrongComponentCountError",
    "Z2GClass",
    "apply",
    "are_isomorphic",
    "bracket",
    "bunches",
    "canonical_code",
    "canonically_equal",
    "census",
    "build_diagram",
    "enumerate_add",
    "filtration_index",
    "find_all_sites",
    "find_r1_del",
    "find_r2_del",
    "find_r3",
    "from_interlacement",
    "graph",
    "graph_is_irreducibly_odd",
    "incidence_set",
    "interlacement",
    "is_irreducibly_odd",
    "link_crossing_parity",
    "minimality_certificate",
    "nontriviality_test",
    "parity_vector",
    "parse_gauss",
    "project_odd",
    "random_walk",
    "random_walk_with_sites",
    "realizable_bruteforce",
    "reduce_r2",
    "smooth",
    "smoothing_states",
    "smoothing_survivors",
    "to_text",
    "unicursal_count",
    "wheel_graph",
    "z2g_equal",
]
