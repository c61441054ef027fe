"""S-packing edge-colorings of subcubic multigraphs."""

from .graph import (
    INF,
    GraphError,
    MultiGraph,
    canonical_form,
    connected,
    degree,
    edge_distance,
    girth,
    is_subcubic,
    maximum_matching,
    sees,
    sees_adjacency,
)
from .packing import (
    UNCOLORED,
    PackingSpec,
    Violation,
    ViolationKind,
    availability,
    parse_spec,
    seen_classes,
    used_at_vertex,
    verify,
)
from .sdr import find_sdr, hall_violator, has_sdr
from .solver import (
    SolveOptions,
    SolveResult,
    Status,
    brute_force_oracle,
    extend,
    matching_first_heuristic,
    solve,
)

__version__ = "0.1.0"
