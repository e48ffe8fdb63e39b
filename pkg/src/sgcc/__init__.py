"""Short circuit covers of signed graphs.

Data model and signature tools live in ``graph``, cycle and circuit
machinery in ``circuits``, the cycle-tree cover constructions in
``cycletree``, the end-to-end pipelines in ``cover``, exact ground truth
in ``oracle``, and instance generators in ``generate``.
"""

from .circuits import (
    Barbell,
    Circuit,
    CircuitFamily,
    Cycle,
    classify_cycle,
    enumerate_circuits,
    family_from_text,
    family_to_text,
    fundamental_cycles,
    make_barbell,
    signed_girth,
    symmetric_difference_cycles,
    two_disjoint_paths,
)
from .cover import (
    CoverReport,
    StructuralReport,
    bridgeless_cycle_cover,
    check_cutedge_coverage,
    cover_even,
    cover_main,
    structural_checks,
    verify_cover,
)
from .cycletree import (
    CycleTree,
    boundary_walk_order,
    cycle_tree_cover,
    extract_cycle_tree,
    leaf_once_cover,
    minimize_cycle_count,
)
from .errors import (
    BoundViolationError,
    BudgetExceededError,
    GraphFormatError,
    NoCircuitCoverError,
    PreconditionError,
)
from .generate import join_blocks_with_two_cut, random_cubic_signed_graph, random_cycle_tree
from .graph import (
    SignatureSummary,
    SignedGraph,
    is_two_edge_connected,
    minimize_signature,
    negativeness,
    parse_signed_graph,
    positive_subgraph,
    serialize_signed_graph,
    switch,
)
from .oracle import (
    CdcResult,
    NoCdcInstance,
    OracleResult,
    barbell_cdc_property,
    cdc_exists,
    exact_scc,
    gen_no_cdc,
)

__all__ = [name for name in dir() if not name.startswith("_")]
