"""k-connected m-fold dominating sets by i-block expansion."""

from .augment import Solution, SolverTrace, solve
from .blocks import Block, block_closure, find_any_block, is_inseparable
from .connectivity import (
    VertexCut,
    find_i_separator,
    global_vertex_connectivity,
    is_k_connected,
    local_vertex_connectivity,
    min_vertex_cut,
    separator_splitting_set,
)
from .domination import CdsCertificate, greedy_1m_cds, is_m_fold_dominating, verify_km_cds
from .graph import (
    Graph,
    NodeSet,
    Path,
    components_after_removal,
    induced_subgraph,
    open_neighborhood,
    shortest_path_between_sets,
)
from .graphio import emit_graph, parse_graph
from .oracle import brute_force_connectivity, enumerate_blocks, exact_min_km_cds

__version__ = "0.1.0"
