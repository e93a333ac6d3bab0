#pragma once

#include <optional>

#include "trgraph/graph.hpp"
#include "trgraph/partition.hpp"

namespace trgraph {

inline constexpr int kDefaultExactBound = 16;

struct TransitivityResult {
    int value = 0;
    OrderedPartition witness;
};

/// Exact Tr(G) by branch and bound: k runs downward from the degree-profile
/// cap (at most Δ+1, at most `limit`), assigning vertices in descending
/// degree order with conservative domination-feasibility and non-empty-block
/// pruning. Feasibility is monotone downward in k, so the first k that
/// admits a transitive k-partition is the maximum. Throws when
/// g.vertex_count() > bound.
TransitivityResult transitivity_exact(const Graph& g, std::optional<int> limit = std::nullopt,
                                      int bound = kDefaultExactBound);

struct GrundyResult {
    int value = 0;
    OrderedPartition witness;
};

/// Exact Grundy number: same search with the independence constraint added
/// (no vertex may share a block with a neighbor).
GrundyResult grundy_exact(const Graph& g, int bound = kDefaultExactBound);

}  // namespace trgraph
