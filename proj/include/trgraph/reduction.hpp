#pragma once

#include <string>
#include <unordered_map>
#include <vector>

#include "trgraph/graph.hpp"
#include "trgraph/partition.hpp"

namespace trgraph {

/// 3-coloring instance G mapped to a transitivity instance (G', k = m+5).
///
/// Gadgets: two pendant paths x-w-v-z and x'-w'-v'-z' per source vertex, per
/// source edge, and for each of the three anchors a, b, e; one biclique
/// vertex per source edge on each side (e_j, e'_j) plus the anchor pair
/// (e, e'). A = {e_1..e_m, e} and B = {e'_1..e'_m, e'} induce K_{m+1,m+1}.
/// G' has 10m+8n+26 vertices and m^2+14m+6n+25 edges.
struct ReductionInstance {
    Graph g_prime;
    int k = 0;  // m + 5
    int source_n = 0;
    int source_m = 0;
    std::vector<Edge> source_edges;        // e_1..e_m, lexicographic
    std::vector<std::string> labels;       // vertex id -> gadget name
    std::unordered_map<std::string, int> ids;
    std::vector<int> a_set;                // e_1..e_m, e
    std::vector<int> b_set;                // e'_1..e'_m, e'

    int id(const std::string& name) const;
};

ReductionInstance build_reduction(const Graph& g);

/// Lemma-style forward map: a proper 3-coloring of the source yields a
/// transitive (m+5)-partition of G'. v_i and v'_i go to block g(v_i); the
/// edge-gadget centers go to the color both endpoints miss; biclique
/// vertices fill blocks 4..m+5. Path companions x, w, z follow a fixed
/// per-color placement table, certified by the validator on every call.
/// Throws std::invalid_argument when the coloring is not proper.
OrderedPartition coloring_to_partition(const ReductionInstance& inst,
                                       const std::vector<int>& coloring);

/// Reverse map: color of source vertex i = index of the block of G' holding
/// v_i. The partition is validated first (>= m+5 blocks, transitive); a
/// v_i in a block above 3, or an improper extracted coloring, signals a
/// non-conformant partition and throws.
std::vector<int> partition_to_coloring(const ReductionInstance& inst, const OrderedPartition& p);

/// True iff N(u) ∪ N(v) induces a complete bipartite subgraph, i.e. every
/// vertex of N(u) is adjacent to every vertex of N(v). Throws when (u, v)
/// is not an edge.
bool is_bisimplicial(const Graph& g, int u, int v);

struct EdgeElimOrder {
    std::vector<Edge> edges;
};

/// Pendant edges of every path gadget in label order, then the biclique
/// matching (e_j, e'_j) and finally (e, e'). Verified before returning.
EdgeElimOrder build_elimination_order(const ReductionInstance& inst);

struct ElimVerdict {
    bool ok = false;
    int failed_index = 0;  // 1-based; 0 when ok
    std::string reason;
};

/// Checks a perfect edge elimination ordering: each edge must be present and
/// bisimplicial in the graph remaining before its endpoints are removed, and
/// no edge may survive the full sequence.
ElimVerdict verify_elimination(const Graph& g, const EdgeElimOrder& order);

/// Labels sidecar: one "name id" line per vertex, in id order.
std::string format_labels(const ReductionInstance& inst);

/// Elimination order file: one "u v" line per edge.
std::string format_elim_order(const EdgeElimOrder& order);
EdgeElimOrder parse_elim_order(const std::string& text);

}  // namespace trgraph
