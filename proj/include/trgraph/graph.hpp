#pragma once

#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

namespace trgraph {

using Edge = std::pair<int, int>;

/// Undirected simple graph on vertex ids 0..n-1. Adjacency is stored in
/// compressed sparse row form, sorted per vertex; instances are immutable
/// after construction.
class Graph {
public:
    Graph() = default;

    explicit Graph(int n) : offsets_(check_order(n) + 1, 0) {}

    /// Builds a graph from an edge list. Throws std::invalid_argument on
    /// self-loops, duplicate edges or out-of-range endpoints.
    Graph(int n, const std::vector<Edge>& edges);

    int vertex_count() const { return static_cast<int>(offsets_.size()) - 1; }
    int edge_count() const { return m_; }

    std::span<const int> neighbors(int v) const {
        return {flat_.data() + offsets_[v], flat_.data() + offsets_[v + 1]};
    }
    int degree(int v) const { return offsets_[v + 1] - offsets_[v]; }
    int max_degree() const;

    bool has_edge(int u, int v) const;

    /// All edges as (u, v) with u < v, sorted lexicographically.
    std::vector<Edge> edges() const;

    bool operator==(const Graph& other) const = default;

private:
    static int check_order(int n) {
        if (n < 0) throw std::invalid_argument("vertex count must be non-negative");
        return n;
    }

    std::vector<int> offsets_;  // size n+1
    std::vector<int> flat_;     // size 2m, sorted within each vertex segment
    int m_ = 0;
};

// Fixed graph families used across solvers and tests.
Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);
Graph complete_bipartite(int a, int b);
/// K_{t,t} with the edge between the last vertex of each side removed.
Graph biclique_minus_edge(int t);

}  // namespace trgraph
