#include "trgraph/graph.hpp"

#include <algorithm>
#include <string>

namespace trgraph {

Graph::Graph(int n, const std::vector<Edge>& edges) : offsets_(check_order(n) + 1, 0) {
    for (const auto& [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw std::invalid_argument("edge endpoint out of range: " + std::to_string(u) +
                                        " " + std::to_string(v));
        if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
        ++offsets_[u + 1];
        ++offsets_[v + 1];
    }
    for (int v = 0; v < n; ++v) offsets_[v + 1] += offsets_[v];
    flat_.resize(edges.size() * 2);
    std::vector<int> cursor(offsets_.begin(), offsets_.end() - 1);
    for (const auto& [u, v] : edges) {
        flat_[cursor[u]++] = v;
        flat_[cursor[v]++] = u;
    }
    for (int v = 0; v < n; ++v) {
        auto* first = flat_.data() + offsets_[v];
        auto* last = flat_.data() + offsets_[v + 1];
        std::sort(first, last);
        if (std::adjacent_find(first, last) != last)
            throw std::invalid_argument("duplicate edge at vertex " + std::to_string(v));
    }
    m_ = static_cast<int>(edges.size());
}

int Graph::max_degree() const {
    int d = 0;
    for (int v = 0; v < vertex_count(); ++v) d = std::max(d, degree(v));
    return d;
}

bool Graph::has_edge(int u, int v) const {
    auto nb = neighbors(u);
    return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(m_);
    for (int u = 0; u < vertex_count(); ++u)
        for (int v : neighbors(u))
            if (u < v) out.emplace_back(u, v);
    return out;
}

Graph path_graph(int n) {
    std::vector<Edge> e;
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    return Graph(n, e);
}

Graph cycle_graph(int n) {
    if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
    std::vector<Edge> e;
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    e.emplace_back(0, n - 1);
    return Graph(n, e);
}

Graph complete_graph(int n) {
    std::vector<Edge> e;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) e.emplace_back(u, v);
    return Graph(n, e);
}

Graph complete_bipartite(int a, int b) {
    std::vector<Edge> e;
    for (int u = 0; u < a; ++u)
        for (int v = 0; v < b; ++v) e.emplace_back(u, a + v);
    return Graph(a + b, e);
}

Graph biclique_minus_edge(int t) {
    if (t < 1) throw std::invalid_argument("biclique index must be positive");
    std::vector<Edge> e;
    for (int u = 0; u < t; ++u)
        for (int v = 0; v < t; ++v)
            if (!(u == t - 1 && v == t - 1)) e.emplace_back(u, t + v);
    return Graph(2 * t, e);
}

}  // namespace trgraph
