#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "trgraph/bipartite.hpp"
#include "trgraph/graph.hpp"
#include "trgraph/partition.hpp"

// Independent brute-force oracles. These deliberately share no code with the
// library implementations they check.
namespace trgraph::testsupport {

// Edge bitmask of the graph under the identity labeling (pairs (i,j), i<j,
// in lexicographic order).
uint64_t edge_bits(const Graph& g);

// Minimum edge bitmask over all vertex permutations; equal values iff
// isomorphic. n <= 8.
uint64_t canonical_bits(const Graph& g);
Graph graph_from_bits(int n, uint64_t bits);

bool isomorphic_bruteforce(const Graph& a, const Graph& b);

// Tries every injective map pattern -> host.
bool monomorphism_exists_bruteforce(const Graph& pattern, const Graph& host,
                                    bool induced = false);

// Plain double-loop transitivity check; returns the least (i, j, vertex)
// violation with 1-based blocks.
std::optional<Violation> validate_naive(const Graph& g, const OrderedPartition& p);

// Enumerates all k^n block assignments, k from n downward. n <= 6.
int transitivity_bruteforce(const Graph& g);

// Maximum greedy-coloring value over all n! vertex orderings. n <= 8.
int grundy_bruteforce(const Graph& g);

std::optional<std::vector<int>> find_proper_3coloring(const Graph& g);

// Whether any ordering pair of the given bipartition has nested
// neighborhoods (factorial scan; sides <= 6).
bool chain_orderable_bruteforce(const Graph& g, const Bipartition& b);

}  // namespace trgraph::testsupport
