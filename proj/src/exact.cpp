#include "trgraph/exact.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>

namespace trgraph {

namespace {

constexpr int kHardCap = 30;

// Branch-and-bound search for one fixed block count k. Blocks are 1-based;
// bit b-1 of a mask stands for block b.
struct BlockSearch {
    int n = 0;
    int k = 0;
    bool independent = false;  // Grundy mode
    std::vector<uint64_t> adj;
    std::vector<int> order;        // assignment order: descending degree
    std::vector<int> block;        // 0 = unassigned
    std::vector<uint64_t> covered; // blocks holding an assigned neighbor
    std::vector<int> free_nbrs;    // unassigned neighbor count
    std::vector<int> block_size;
    int empty_blocks = 0;

    static uint64_t low_mask(int bits) { return bits >= 64 ? ~0ull : (1ull << bits) - 1; }

    // Blocks below block[v] that v still needs a neighbor in must be
    // coverable by its unassigned neighbors.
    bool vertex_ok(int v) const {
        uint64_t need = low_mask(block[v] - 1) & ~covered[v];
        return std::popcount(need) <= free_nbrs[v];
    }

    bool dfs(size_t depth) {
        if (depth == order.size()) return true;
        int v = order[depth];
        int remaining_after = n - static_cast<int>(depth) - 1;
        int cap = std::min(k, std::popcount(adj[v]) + 1);
        for (int b = cap; b >= 1; --b) {
            if (independent && (covered[v] >> (b - 1) & 1ull)) continue;
            uint64_t need = low_mask(b - 1) & ~covered[v];
            if (std::popcount(need) > free_nbrs[v]) continue;

            block[v] = b;
            if (block_size[b]++ == 0) --empty_blocks;

            bool ok = empty_blocks <= remaining_after;
            if (ok) {
                for (uint64_t m = adj[v]; m; m &= m - 1) {
                    int u = std::countr_zero(m);
                    covered[u] |= 1ull << (b - 1);
                    --free_nbrs[u];
                    if (block[u] != 0 && !vertex_ok(u)) ok = false;
                }
                if (ok && dfs(depth + 1)) return true;
                block[v] = 0;
                if (--block_size[b] == 0) ++empty_blocks;
                for (uint64_t m = adj[v]; m; m &= m - 1) {
                    int u = std::countr_zero(m);
                    ++free_nbrs[u];
                    covered[u] = recompute_covered(u);
                }
            } else {
                block[v] = 0;
                if (--block_size[b] == 0) ++empty_blocks;
            }
        }
        return false;
    }

    // covered[] cannot be popped with a plain mask clear: another neighbor
    // may still sit in block b.
    uint64_t recompute_covered(int u) const {
        uint64_t c = 0;
        for (uint64_t m = adj[u]; m; m &= m - 1) {
            int w = std::countr_zero(m);
            if (block[w] != 0) c |= 1ull << (block[w] - 1);
        }
        return c;
    }
};

// In any transitive k-partition, picking one vertex from each of blocks
// k, k-1, ..., 1 yields distinct vertices of degree >= k-1, k-2, ..., 0.
// Largest k consistent with the sorted degree sequence.
int degree_profile_cap(const Graph& g) {
    std::vector<int> degs(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) degs[v] = g.degree(v);
    std::sort(degs.rbegin(), degs.rend());
    int best = 0;
    for (int k = 1; k <= g.vertex_count(); ++k) {
        bool ok = true;
        for (int i = 0; i < k && ok; ++i)
            if (degs[i] < k - 1 - i) ok = false;
        if (ok) best = k;
    }
    return best;
}

OrderedPartition collect_blocks(const std::vector<int>& block, int k) {
    OrderedPartition p;
    p.blocks.resize(k);
    for (size_t v = 0; v < block.size(); ++v) p.blocks[block[v] - 1].push_back(static_cast<int>(v));
    return p;
}

std::optional<std::vector<int>> solve_for_k(const Graph& g, int k, bool independent) {
    const int n = g.vertex_count();
    BlockSearch s;
    s.n = n;
    s.k = k;
    s.independent = independent;
    s.adj.assign(n, 0);
    for (const auto& [u, v] : g.edges()) {
        s.adj[u] |= 1ull << v;
        s.adj[v] |= 1ull << u;
    }
    s.order.resize(n);
    for (int v = 0; v < n; ++v) s.order[v] = v;
    std::stable_sort(s.order.begin(), s.order.end(), [&](int a, int b) {
        if (g.degree(a) != g.degree(b)) return g.degree(a) > g.degree(b);
        return a < b;
    });
    s.block.assign(n, 0);
    s.covered.assign(n, 0);
    s.free_nbrs.resize(n);
    for (int v = 0; v < n; ++v) s.free_nbrs[v] = g.degree(v);
    s.block_size.assign(k + 1, 0);
    s.empty_blocks = k;
    if (!s.dfs(0)) return std::nullopt;
    return s.block;
}

int checked_start(const Graph& g, std::optional<int> limit, int bound, const char* what) {
    if (bound > kHardCap) bound = kHardCap;
    if (g.vertex_count() > bound)
        throw std::invalid_argument(std::string(what) + ": graph above search bound");
    int start = degree_profile_cap(g);
    if (limit) start = std::min(start, std::max(0, *limit));
    return start;
}

}  // namespace

TransitivityResult transitivity_exact(const Graph& g, std::optional<int> limit, int bound) {
    int start = checked_start(g, limit, bound, "transitivity_exact");
    if (g.vertex_count() == 0) return {0, {}};
    for (int k = start; k >= 1; --k) {
        if (auto block = solve_for_k(g, k, false))
            return {k, collect_blocks(*block, k)};
    }
    return {1, collect_blocks(std::vector<int>(g.vertex_count(), 1), 1)};
}

GrundyResult grundy_exact(const Graph& g, int bound) {
    int start = checked_start(g, std::nullopt, bound, "grundy_exact");
    if (g.vertex_count() == 0) return {0, {}};
    for (int k = start; k >= 1; --k) {
        if (auto block = solve_for_k(g, k, true))
            return {k, collect_blocks(*block, k)};
    }
    return {1, collect_blocks(std::vector<int>(g.vertex_count(), 1), 1)};
}

}  // namespace trgraph
