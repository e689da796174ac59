"""Wirelength laboratory for embedding complete multipartite graphs into trees.

The package builds balanced complete multipartite guest graphs, chains of
rooted complete binary trees (optionally with sibling edges) as hosts, and
computes minimum wirelengths three independent ways: routed shortest paths,
cut-congestion accounting, and closed formulas, with exhaustive search as
the ground truth on small instances.
"""

from treebed.embedding import (
    CutConditionReport,
    CutReport,
    Embedding,
    WirelengthReport,
    build_report,
    congestion_lemma_value,
    cut_congestion,
    edge_congestion,
    identity_embedding,
    route,
    verify_cut_conditions,
    wirelength_direct,
    wirelength_via_partition,
)
from treebed.errors import (
    BudgetExceededError,
    ConsistencyError,
    CoverageError,
    UnlabeledHostError,
)
from treebed.formulas import (
    branch_cut_congestion,
    chain_cut_congestion,
    closed_form_wirelength,
    interval_boundary_congestion,
    pair_cut_congestion,
    wl_binary,
    wl_binary_chain,
    wl_sibling,
    wl_sibling_chain,
)
from treebed.graphs import (
    Graph,
    Guest,
    build_complete_multipartite,
    build_guest,
    induced_edge_count,
)
from treebed.hosts import (
    LAYOUT_VARIANTS,
    EdgeCut,
    HostTree,
    build_host,
    cut_family,
    inorder_labeling,
    sibling_layout_labeling,
)
from treebed.isoperimetric import (
    MspResult,
    is_optimal_set,
    max_subgraph_edges_bruteforce,
    max_subgraph_edges_closed_form,
)
from treebed.search import (
    SearchResult,
    exhaustive_min_wirelength,
    local_search_min,
)

__version__ = "0.1.0"

__all__ = [
    "BudgetExceededError",
    "ConsistencyError",
    "CoverageError",
    "CutConditionReport",
    "CutReport",
    "EdgeCut",
    "Embedding",
    "Graph",
    "Guest",
    "HostTree",
    "LAYOUT_VARIANTS",
    "MspResult",
    "SearchResult",
    "UnlabeledHostError",
    "WirelengthReport",
    "branch_cut_congestion",
    "build_complete_multipartite",
    "build_guest",
    "build_host",
    "build_report",
    "chain_cut_congestion",
    "closed_form_wirelength",
    "congestion_lemma_value",
    "cut_congestion",
    "cut_family",
    "edge_congestion",
    "exhaustive_min_wirelength",
    "identity_embedding",
    "induced_edge_count",
    "inorder_labeling",
    "interval_boundary_congestion",
    "is_optimal_set",
    "local_search_min",
    "max_subgraph_edges_bruteforce",
    "max_subgraph_edges_closed_form",
    "pair_cut_congestion",
    "route",
    "sibling_layout_labeling",
    "verify_cut_conditions",
    "wirelength_direct",
    "wirelength_via_partition",
    "wl_binary",
    "wl_binary_chain",
    "wl_sibling",
    "wl_sibling_chain",
]
