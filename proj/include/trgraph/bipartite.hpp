#pragma once

#include <vector>

#include "trgraph/graph.hpp"

namespace trgraph {

struct Bipartition {
    std::vector<int> side_x;
    std::vector<int> side_y;
};

/// Result of 2-coloring by breadth-first layering. On refusal `odd_cycle`
/// holds a closed odd walk (consecutive vertices adjacent, ends adjacent).
struct BipartiteResult {
    bool ok = false;
    Bipartition part;
    std::vector<int> odd_cycle;
};

/// BFS layering per component; component roots and isolated vertices go to
/// side X. Deterministic.
BipartiteResult recognize_bipartite(const Graph& g);

bool is_valid_bipartition(const Graph& g, const Bipartition& b);

/// Orders with nested neighborhoods: N(x_{i+1}) ⊆ N(x_i) along order_x and
/// likewise along order_y.
struct ChainOrdering {
    std::vector<int> order_x;
    std::vector<int> order_y;
};

/// On refusal, (u, v) is a same-side pair with incomparable neighborhoods;
/// side is 'X' or 'Y'.
struct ChainResult {
    bool ok = false;
    ChainOrdering ordering;
    char side = '?';
    int u = -1;
    int v = -1;
};

/// Stable-sorts each side by non-increasing degree (ties by id), then
/// verifies the nesting in one pass. Throws std::invalid_argument when b is
/// not a valid bipartition of g.
ChainResult recognize_chain(const Graph& g, const Bipartition& b);

}  // namespace trgraph
