"""Identifying codes on graphs: verification, constructions, exact search
and round-based fault location.

A code is a vertex subset whose view of the graph (balls intersected with
the code, at one or several radii) tells every vertex apart.  The package
checks codes against the identifying, weak, light and general (p, radii)
families, carries closed formulas and validated constructions for optimal
codes on cycles, searches arbitrary small graphs exhaustively, builds the
extremal graphs for fixed-size weak codes, and simulates the round-by-round
fault-location process the families model.
"""

from .families import (
    DominationResult,
    FamilyKind,
    FamilySpec,
    RadiusCertificate,
    VerificationReport,
    Witness,
    WitnessKind,
)
from .graphs import (
    INFINITE,
    DistanceMatrix,
    Graph,
    GraphParseError,
    ball,
    build_cycle,
    build_path,
    cycle_order,
    distances,
    from_edges,
    graph_from_spec,
    parse_graph,
    serialize_graph,
)
from .verification import (
    CodeChecker,
    check_code,
    is_dominating,
    min_radius_set,
    separates,
)
from .cycles import (
    ConstructionFailedError,
    CycleDecomposition,
    CycleFamily,
    UnsupportedRegimeError,
    construct_code,
    decompose,
    formula_size,
    lower_bound,
)
from .solver import (
    SearchLimitError,
    SolveOptions,
    SolveResult,
    SolveStats,
    TheoremRow,
    min_code,
    verify_theorem_table,
)
from .extremal import ExtremalInstance, build_extremal, w_max
from .rounds import (
    AlarmHistory,
    DetectionMode,
    DetectionOutcome,
    Scenario,
    UniversalReport,
    alarm_set,
    detection_universal,
    run_detection,
)

__version__ = "0.1.0"

__all__ = [
    "AlarmHistory",
    "CodeChecker",
    "ConstructionFailedError",
    "CycleDecomposition",
    "CycleFamily",
    "DetectionMode",
    "DetectionOutcome",
    "DistanceMatrix",
    "DominationResult",
    "ExtremalInstance",
    "FamilyKind",
    "FamilySpec",
    "Graph",
    "GraphParseError",
    "INFINITE",
    "RadiusCertificate",
    "Scenario",
    "SearchLimitError",
    "SolveOptions",
    "SolveResult",
    "SolveStats",
    "TheoremRow",
    "UniversalReport",
    "UnsupportedRegimeError",
    "VerificationReport",
    "Witness",
    "WitnessKind",
    "alarm_set",
    "ball",
    "build_cycle",
    "build_extremal",
    "build_path",
    "check_code",
    "construct_code",
    "cycle_order",
    "decompose",
    "detection_universal",
    "distances",
    "formula_size",
    "from_edges",
    "graph_from_spec",
    "is_dominating",
    "lower_bound",
    "min_code",
    "min_radius_set",
    "parse_graph",
    "run_detection",
    "separates",
    "serialize_graph",
    "verify_theorem_table",
    "w_max",
    "__version__",
]
