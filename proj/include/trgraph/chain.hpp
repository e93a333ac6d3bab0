#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "trgraph/bipartite.hpp"
#include "trgraph/graph.hpp"
#include "trgraph/partition.hpp"

namespace trgraph {

enum class BicliqueKind { Full, MinusEdge };

/// Maximum biclique index of a chain graph. The first t vertices of each
/// chain order induce exactly K_{t,t} (Full) or K_{t,t} minus the edge
/// between the last vertex of each block (MinusEdge); no larger index
/// qualifies. Transitivity of the graph is t + 1.
struct ChainCertificate {
    int t = 0;
    BicliqueKind kind = BicliqueKind::Full;
    std::vector<int> x_block;
    std::vector<int> y_block;
    int transitivity = 0;
};

struct NotBipartiteError : std::runtime_error {
    explicit NotBipartiteError(std::vector<int> cycle)
        : std::runtime_error("graph is not bipartite"), odd_cycle(std::move(cycle)) {}
    std::vector<int> odd_cycle;
};

struct NotChainError : std::runtime_error {
    NotChainError(char side_, int u_, int v_)
        : std::runtime_error("graph is not a bipartite chain graph"), side(side_), u(u_), v(v_) {}
    char side;
    int u;
    int v;
};

/// Walks the diagonal of the chain ordering: advance i while (x_i, y_i) is
/// an edge; with j the first miss, report t = j (MinusEdge) when both
/// (x_j, y_{j-1}) and (x_{j-1}, y_j) exist, else t = j - 1 (Full).
/// Out-of-range index tests count as "edge absent". O(n + m) overall.
/// Throws std::invalid_argument when the ordering is not a chain ordering
/// of g or when g has no edges.
ChainCertificate max_index(const Graph& g, const ChainOrdering& ordering);

/// Transitive (t+1)-partition realizing the certificate: the top block is
/// {x_1}, then {y_1}, then pairs {x_a, y_a} walking back down the orders;
/// block 1 absorbs x_t, y_t and every remaining vertex. Works for both
/// certificate kinds since the missing edge of K_{t,t}-e sits inside
/// block 1. Validated before returning.
OrderedPartition build_witness(const Graph& g, const ChainCertificate& cert);

struct ChainSolveResult {
    int value = 0;
    OrderedPartition witness;
    std::optional<ChainCertificate> certificate;  // absent for edgeless input
};

/// Recognizes the input (throws NotBipartiteError / NotChainError with a
/// witness otherwise), then solves via max_index + build_witness. Edgeless
/// graphs have transitivity 1 and carry no certificate.
ChainSolveResult chain_transitivity(const Graph& g);

/// Header line "t kind Tr", then the x block ids, then the y block ids.
std::string format_certificate(const ChainCertificate& cert);

}  // namespace trgraph
