#pragma once

#include <optional>
#include <vector>

#include "trgraph/graph.hpp"

namespace trgraph {

/// Ordered vertex partition V_1..V_k; blocks are non-empty, disjoint and
/// cover all vertices.
struct OrderedPartition {
    std::vector<std::vector<int>> blocks;

    int block_count() const { return static_cast<int>(blocks.size()); }
    bool operator==(const OrderedPartition& other) const = default;
};

/// First failing domination requirement: vertex `vertex` of block j has no
/// neighbor in block i (blocks 1-based, i < j).
struct Violation {
    int i = 0;
    int j = 0;
    int vertex = 0;
    bool operator==(const Violation& other) const = default;
};

/// Checks that every block V_i dominates every later block V_j (i < j):
/// each vertex of V_j must have a neighbor in V_i. Returns the least
/// (i, j, vertex) violation, or nullopt when the partition is transitive.
/// Structural defects (empty block, overlap, uncovered vertex, id out of
/// range) throw std::invalid_argument.
std::optional<Violation> validate_transitive(const Graph& g, const OrderedPartition& p);

}  // namespace trgraph
