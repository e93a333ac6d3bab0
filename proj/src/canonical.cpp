#include "trgraph/canonical.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <stdexcept>

namespace trgraph {

namespace {

// Iterated neighborhood refinement. Colors are ranks of (color, sorted
// neighbor colors) signatures, so they are identical across isomorphic
// graphs.
std::vector<int> refine_colors(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<int> color(n);
    for (int v = 0; v < n; ++v) color[v] = g.degree(v);

    int classes = 0;
    for (int round = 0; round < n; ++round) {
        std::vector<std::pair<std::vector<int>, int>> sigs(n);
        for (int v = 0; v < n; ++v) {
            std::vector<int> s;
            s.reserve(g.degree(v) + 1);
            s.push_back(color[v]);
            for (int u : g.neighbors(v)) s.push_back(color[u]);
            std::sort(s.begin() + 1, s.end());
            sigs[v] = {std::move(s), v};
        }
        auto sorted = sigs;
        std::sort(sorted.begin(), sorted.end());
        int next = -1;
        std::vector<int> fresh(n);
        const std::vector<int>* prev = nullptr;
        for (const auto& [sig, v] : sorted) {
            if (!prev || *prev != sig) ++next;
            fresh[v] = next;
            prev = &sig;
        }
        color = std::move(fresh);
        if (next + 1 == classes) break;  // partition stable: no class split
        classes = next + 1;
    }
    return color;
}

struct CanonSearch {
    int n = 0;
    std::vector<uint32_t> adj;       // adjacency masks
    std::vector<int> pos_color;      // required color per position
    std::vector<int> color;          // refined color per vertex
    std::vector<uint32_t> twin;      // twin[v]: vertices interchangeable with v
    std::vector<int> perm;           // perm[pos] = vertex
    uint32_t used = 0;
    std::vector<uint32_t> cur, best; // row value per position
    bool has_best = false;
    uint64_t gen = 0;

    // Row bits give earlier positions higher weight, so rows compare
    // lexicographically as integers.
    uint32_t row_value(int v, int pos) const {
        uint32_t r = 0;
        for (int t = 0; t < pos; ++t)
            if (adj[v] >> perm[t] & 1u) r |= 1u << (31 - t);
        return r;
    }

    void dfs(int pos, bool tight) {
        if (pos == n) {
            if (!has_best || cur > best) {
                best = cur;
                has_best = true;
                ++gen;
            }
            return;
        }
        std::vector<std::pair<uint32_t, int>> cands;
        for (int v = 0; v < n; ++v)
            if (!(used >> v & 1u) && color[v] == pos_color[pos])
                cands.emplace_back(row_value(v, pos), v);
        std::sort(cands.begin(), cands.end(),
                  [](const auto& a, const auto& b) {
                      if (a.first != b.first) return a.first > b.first;
                      return a.second < b.second;
                  });
        bool tl = tight;
        uint32_t tried = 0;
        for (const auto& [r, v] : cands) {
            if (twin[v] & tried) continue;  // sibling subtree already explored
            if (has_best && tl && r < best[pos]) break;  // sorted: rest smaller
            tried |= 1u << v;
            bool child_tight = has_best && tl && r == best[pos];
            cur[pos] = r;
            perm[pos] = v;
            used |= 1u << v;
            uint64_t g0 = gen;
            dfs(pos + 1, child_tight);
            used &= ~(1u << v);
            if (gen != g0) tl = true;  // new best shares our prefix
        }
    }
};

}  // namespace

std::string canonical_form(const Graph& g, int bound) {
    const int n = g.vertex_count();
    if (bound > 32) bound = 32;
    if (n > bound)
        throw std::invalid_argument("canonical_form: graph above small-graph bound");
    if (n == 0) return "0:";

    CanonSearch s;
    s.n = n;
    s.adj.assign(n, 0);
    for (const auto& [u, v] : g.edges()) {
        s.adj[u] |= 1u << v;
        s.adj[v] |= 1u << u;
    }
    s.color = refine_colors(g);

    std::vector<int> by_color(n);
    for (int v = 0; v < n; ++v) by_color[v] = v;
    std::sort(by_color.begin(), by_color.end(), [&](int a, int b) {
        if (s.color[a] != s.color[b]) return s.color[a] < s.color[b];
        return a < b;
    });
    s.pos_color.resize(n);
    for (int p = 0; p < n; ++p) s.pos_color[p] = s.color[by_color[p]];

    // Static twins: swapping u and v is an automorphism.
    s.twin.assign(n, 0);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            uint32_t mu = s.adj[u] & ~(1u << v);
            uint32_t mv = s.adj[v] & ~(1u << u);
            if (mu == mv) {
                s.twin[u] |= 1u << v;
                s.twin[v] |= 1u << u;
            }
        }

    s.perm.assign(n, -1);
    s.cur.assign(n, 0);
    s.dfs(0, false);

    std::string out = std::to_string(n) + ":";
    for (int p = 0; p < n; ++p) {
        char buf[9];
        std::snprintf(buf, sizeof(buf), "%08x", s.best[p]);
        out += buf;
    }
    return out;
}

bool isomorphic(const Graph& a, const Graph& b, int bound) {
    if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
    return canonical_form(a, bound) == canonical_form(b, bound);
}

}  // namespace trgraph
