#include "trgraph/bipartite.hpp"

#include <algorithm>
#include <stdexcept>

namespace trgraph {

namespace {

// Re-runs BFS from `root` tracking parents to extract a closed odd walk for
// the conflict edge (u, v). Only taken on refusal, so the main scan stays
// parent-free.
std::vector<int> odd_cycle_witness(const Graph& g, int root, int u, int v) {
    const int n = g.vertex_count();
    std::vector<int> parent(n, -2);
    parent[root] = -1;
    std::vector<int> queue{root};
    for (size_t head = 0; head < queue.size(); ++head) {
        int a = queue[head];
        for (int b : g.neighbors(a))
            if (parent[b] == -2) {
                parent[b] = a;
                queue.push_back(b);
            }
    }
    std::vector<int> pu, pv;
    for (int a = u; a != -1; a = parent[a]) pu.push_back(a);
    for (int a = v; a != -1; a = parent[a]) pv.push_back(a);
    while (pu.size() > 1 && pv.size() > 1 && pu[pu.size() - 2] == pv[pv.size() - 2]) {
        pu.pop_back();
        pv.pop_back();
    }
    // pu = u..lca, pv = v..lca; walk u..lca then back down to v.
    std::vector<int> cycle(pu.begin(), pu.end());
    pv.pop_back();
    for (auto it = pv.rbegin(); it != pv.rend(); ++it) cycle.push_back(*it);
    return cycle;
}

}  // namespace

BipartiteResult recognize_bipartite(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<signed char> color(n, -1);
    std::vector<int> queue;
    queue.reserve(n);

    for (int root = 0; root < n; ++root) {
        if (color[root] != -1) continue;
        color[root] = 0;
        queue.clear();
        queue.push_back(root);
        for (size_t head = 0; head < queue.size(); ++head) {
            int u = queue[head];
            for (int v : g.neighbors(u)) {
                if (color[v] == -1) {
                    color[v] = static_cast<signed char>(1 - color[u]);
                    queue.push_back(v);
                } else if (color[v] == color[u]) {
                    BipartiteResult res;
                    res.ok = false;
                    res.odd_cycle = odd_cycle_witness(g, root, u, v);
                    return res;
                }
            }
        }
    }

    BipartiteResult res;
    res.ok = true;
    for (int v = 0; v < n; ++v)
        (color[v] == 0 ? res.part.side_x : res.part.side_y).push_back(v);
    return res;
}

bool is_valid_bipartition(const Graph& g, const Bipartition& b) {
    const int n = g.vertex_count();
    std::vector<int> side(n, -1);
    for (int v : b.side_x) {
        if (v < 0 || v >= n || side[v] != -1) return false;
        side[v] = 0;
    }
    for (int v : b.side_y) {
        if (v < 0 || v >= n || side[v] != -1) return false;
        side[v] = 1;
    }
    for (int v = 0; v < n; ++v)
        if (side[v] == -1) return false;
    for (const auto& [u, v] : g.edges())
        if (side[u] == side[v]) return false;
    return true;
}

namespace {

// Counting sort by non-increasing degree with ties in ascending id order.
std::vector<int> degree_sorted(const Graph& g, const std::vector<int>& side) {
    int maxdeg = 0;
    for (int v : side) maxdeg = std::max(maxdeg, g.degree(v));
    std::vector<int> count(maxdeg + 2, 0);
    for (int v : side) ++count[maxdeg - g.degree(v) + 1];
    for (size_t i = 1; i < count.size(); ++i) count[i] += count[i - 1];
    std::vector<char> member(g.vertex_count(), 0);
    for (int v : side) member[v] = 1;
    std::vector<int> order(side.size());
    for (int v = 0; v < g.vertex_count(); ++v)
        if (member[v]) order[count[maxdeg - g.degree(v)]++] = v;
    return order;
}

// Checks that each vertex of `order` sees exactly a prefix of `other` (by
// rank). Ranks are unique, so a neighborhood of size d is a prefix iff its
// largest rank is d-1. On failure returns the offending vertex and the rank
// of a skipped smaller-rank vertex: those two `other`-side vertices have
// incomparable neighborhoods.
bool check_prefix(const Graph& g, const std::vector<int>& order, const std::vector<int>& rank,
                  const std::vector<int>& other, int* bad_u, int* bad_v) {
    std::vector<char> mark(other.size(), 0);
    for (int x : order) {
        int deg = g.degree(x);
        if (deg == 0) continue;
        int max_rank = -1;
        for (int y : g.neighbors(x)) {
            mark[rank[y]] = 1;
            max_rank = std::max(max_rank, rank[y]);
        }
        if (max_rank >= deg) {
            int hole = -1;
            for (int r = 0; r < deg; ++r)
                if (!mark[r]) { hole = r; break; }
            for (int y : g.neighbors(x)) mark[rank[y]] = 0;
            *bad_u = other[hole];
            *bad_v = other[max_rank];
            return false;
        }
        for (int y : g.neighbors(x)) mark[rank[y]] = 0;
    }
    return true;
}

}  // namespace

ChainResult recognize_chain(const Graph& g, const Bipartition& b) {
    if (!is_valid_bipartition(g, b))
        throw std::invalid_argument("not a valid bipartition of the graph");

    ChainResult res;
    res.ordering.order_x = degree_sorted(g, b.side_x);
    res.ordering.order_y = degree_sorted(g, b.side_y);

    std::vector<int> rank(g.vertex_count(), -1);
    for (size_t i = 0; i < res.ordering.order_y.size(); ++i)
        rank[res.ordering.order_y[i]] = static_cast<int>(i);

    // Prefix structure of X-neighborhoods against the Y order implies both
    // nesting chains, so one pass suffices.
    int bad_u = -1, bad_v = -1;
    if (!check_prefix(g, res.ordering.order_x, rank, res.ordering.order_y, &bad_u, &bad_v)) {
        res.ok = false;
        res.side = 'Y';
        res.u = bad_u;
        res.v = bad_v;
        return res;
    }
    res.ok = true;
    return res;
}

}  // namespace trgraph
