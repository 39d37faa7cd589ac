"""EFL graphs: construction, closed-form colorings, clique decompositions,
and exact desk-scale colorability search."""

from .core import (
    EflGraph,
    GeneralVertex,
    Rejection,
    SharedVertex,
    TwoCliqueEflGraph,
    UnsharedVertex,
    adjacency,
    build_from_pairs,
    build_maximal,
    validate,
    vertex_key,
)
from .coloring import (
    FullColoring,
    ProperCheck,
    SharedColoring,
    check_proper,
    clique_color_sets,
    color_shared,
    color_shared_even,
    color_shared_odd,
    extend_to_full,
    round_robin_edge_coloring,
)
from .decomposition import (
    CliqueCapacityError,
    CliqueDecomposition,
    DecompositionColoring,
    HostGraph,
    check_decomposition_coloring,
    complete_host,
    decomposition_to_efl,
    efl_to_decomposition,
    intersection_graph,
    transport_coloring,
    validate_decomposition,
)
from .solver import (
    BudgetExhausted,
    ChromaticResult,
    SearchConfig,
    SearchOutcome,
    Status,
    SweepInstance,
    SweepReport,
    chromatic_number,
    color_decomposition,
    enumerate_two_r_decompositions,
    greedy_baseline,
    sweep_two_r_decompositions,
)

__version__ = "0.1.0"
