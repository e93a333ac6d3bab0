#pragma once

#include <optional>
#include <vector>

#include "trgraph/graph.hpp"

namespace trgraph {

/// Injective map from pattern vertex ids to host vertex ids preserving
/// pattern edges (monomorphism; host may have extra edges).
struct Embedding {
    std::vector<int> map;
};

/// Backtracking over pattern vertices in descending-degree order with degree
/// and remaining-candidate pruning. Deterministic given the fixed vertex
/// orders. With induced=true, non-edges between mapped pattern vertices must
/// also be non-edges in the host.
std::optional<Embedding> find_subgraph(const Graph& pattern, const Graph& host,
                                       bool induced = false);

}  // namespace trgraph
