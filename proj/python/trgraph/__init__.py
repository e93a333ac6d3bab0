"""Transitive-partition toolkit: exact, chain-graph and atom-based solvers."""

from trgraph._core import (
    Graph,
    biclique_minus_edge,
    build_elimination_order,
    build_reduction,
    canonical_form,
    certify_lower_bound,
    chain_transitivity,
    classify_tr3,
    coloring_to_partition,
    complete_bipartite,
    complete_graph,
    cycle_graph,
    find_subgraph,
    format_edge_list,
    generate_catalog,
    grundy_exact,
    is_bisimplicial,
    isomorphic,
    parse_edge_list,
    partition_to_coloring,
    path_graph,
    transitivity_exact,
    validate_transitive,
    verify_elimination,
)

__all__ = [
    "Graph",
    "biclique_minus_edge",
    "build_elimination_order",
    "build_reduction",
    "canonical_form",
    "certify_lower_bound",
    "chain_transitivity",
    "classify_tr3",
    "coloring_to_partition",
    "complete_bipartite",
    "complete_graph",
    "cycle_graph",
    "find_subgraph",
    "format_edge_list",
    "generate_catalog",
    "grundy_exact",
    "is_bisimplicial",
    "isomorphic",
    "parse_edge_list",
    "partition_to_coloring",
    "path_graph",
    "transitivity_exact",
    "validate_transitive",
    "verify_elimination",
]
