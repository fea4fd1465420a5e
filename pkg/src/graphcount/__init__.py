"""Exact substructure counting on simple graphs.

The package pairs hand-built message-passing counting programs (run on
labeled rooted subgraphs with exact integer arithmetic) with independent
brute-force oracles, and adds color-refinement tests that realize the
distinguishing-power hierarchy between plain neighbor refinement, per-root
subgraph refinement, and pair (root, branching-neighbor) refinement.
"""

from .counting import (
    CountReport,
    InsufficientHopsError,
    PatternCounts,
    corpus_cycle_stats,
    count,
    count_chordal_cycle_node,
    count_clique4_node,
    count_cycle3_node,
    count_cycle4_node,
    count_cycle5_node,
    count_cycle6_node,
    count_path2_node,
    count_path3_node,
    count_path4_edge,
    count_path4_node,
    count_tailed_triangle_node,
    count_triangle_rectangle_node,
    count_walks,
)
from .extraction import (
    ExtractionPolicy,
    RootedSubgraph,
    ego,
    extract_bag_i2,
    extract_bag_subgraph_mpnn,
    extract_rooted,
    node_deletion,
)
from .graph import (
    Graph,
    GraphFormatError,
    GraphValidationError,
    UNREACHABLE,
    disjoint_union,
    from_edges,
    load_graph,
    parse_edgelist,
    parse_graph6,
    permute,
    save_graph,
    shortest_path_distances,
)
from .refinement import (
    ColorPartition,
    GraphFingerprint,
    distinguish,
    fingerprint,
    i2_node_colors,
    i2_wl,
    subgraph_node_colors,
    subgraph_wl,
    wl1,
)

__version__ = "0.1.0"

__all__ = [
    "ColorPartition",
    "CountReport",
    "ExtractionPolicy",
    "Graph",
    "GraphFingerprint",
    "GraphFormatError",
    "GraphValidationError",
    "InsufficientHopsError",
    "PatternCounts",
    "RootedSubgraph",
    "UNREACHABLE",
    "corpus_cycle_stats",
    "count",
    "count_chordal_cycle_node",
    "count_clique4_node",
    "count_cycle3_node",
    "count_cycle4_node",
    "count_cycle5_node",
    "count_cycle6_node",
    "count_path2_node",
    "count_path3_node",
    "count_path4_edge",
    "count_path4_node",
    "count_tailed_triangle_node",
    "count_triangle_rectangle_node",
    "count_walks",
    "disjoint_union",
    "distinguish",
    "ego",
    "extract_bag_i2",
    "extract_bag_subgraph_mpnn",
    "extract_rooted",
    "fingerprint",
    "from_edges",
    "i2_node_colors",
    "i2_wl",
    "load_graph",
    "node_deletion",
    "parse_edgelist",
    "parse_graph6",
    "permute",
    "save_graph",
    "shortest_path_distances",
    "subgraph_node_colors",
    "subgraph_wl",
    "wl1",
]
