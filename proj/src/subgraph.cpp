#include "trgraph/subgraph.hpp"

#include <algorithm>

namespace trgraph {

namespace {

struct Matcher {
    const Graph& pattern;
    const Graph& host;
    bool induced;
    std::vector<int> order;      // pattern vertices, descending degree
    std::vector<int> map;        // pattern -> host or -1
    std::vector<char> used;      // host vertex taken

    bool feasible(int a, int v) const {
        if (host.degree(v) < pattern.degree(a)) return false;
        for (int b : pattern.neighbors(a))
            if (map[b] != -1 && !host.has_edge(v, map[b])) return false;
        if (induced) {
            for (int b = 0; b < pattern.vertex_count(); ++b)
                if (b != a && map[b] != -1 && !pattern.has_edge(a, b) && host.has_edge(v, map[b]))
                    return false;
        }
        return true;
    }

    // Every unmapped pattern vertex must keep at least one feasible host
    // candidate.
    bool candidates_remain() const {
        for (int b = 0; b < pattern.vertex_count(); ++b) {
            if (map[b] != -1) continue;
            bool any = false;
            for (int v = 0; v < host.vertex_count(); ++v)
                if (!used[v] && feasible(b, v)) { any = true; break; }
            if (!any) return false;
        }
        return true;
    }

    bool dfs(size_t depth) {
        if (depth == order.size()) return true;
        int a = order[depth];
        for (int v = 0; v < host.vertex_count(); ++v) {
            if (used[v] || !feasible(a, v)) continue;
            map[a] = v;
            used[v] = 1;
            if (candidates_remain() && dfs(depth + 1)) return true;
            map[a] = -1;
            used[v] = 0;
        }
        return false;
    }
};

}  // namespace

std::optional<Embedding> find_subgraph(const Graph& pattern, const Graph& host, bool induced) {
    const int np = pattern.vertex_count();
    if (np > host.vertex_count()) return std::nullopt;
    if (pattern.edge_count() > host.edge_count()) return std::nullopt;
    if (np == 0) return Embedding{};

    Matcher m{pattern, host, induced, {}, std::vector<int>(np, -1),
              std::vector<char>(host.vertex_count(), 0)};
    m.order.resize(np);
    for (int v = 0; v < np; ++v) m.order[v] = v;
    std::stable_sort(m.order.begin(), m.order.end(), [&](int a, int b) {
        if (pattern.degree(a) != pattern.degree(b)) return pattern.degree(a) > pattern.degree(b);
        return a < b;
    });

    if (!m.dfs(0)) return std::nullopt;
    return Embedding{std::move(m.map)};
}

}  // namespace trgraph
