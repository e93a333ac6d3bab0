#pragma once

#include <string>

#include "trgraph/graph.hpp"

namespace trgraph {

inline constexpr int kDefaultCanonicalBound = 12;

/// Canonical byte string: equal strings iff the graphs are isomorphic.
/// Iterated degree refinement fixes the class of each position, then an
/// exhaustive search over class-preserving orderings maximizes the packed
/// adjacency matrix. Throws std::invalid_argument for graphs above `bound`
/// vertices (hard cap 32).
std::string canonical_form(const Graph& g, int bound = kDefaultCanonicalBound);

bool isomorphic(const Graph& a, const Graph& b, int bound = kDefaultCanonicalBound);

}  // namespace trgraph
