#include "trgraph/partition.hpp"

#include <string>
#include <tuple>

namespace trgraph {

std::optional<Violation> validate_transitive(const Graph& g, const OrderedPartition& p) {
    const int n = g.vertex_count();
    const int k = p.block_count();
    std::vector<int> block_of(n, 0);  // 1-based block index
    for (int b = 0; b < k; ++b) {
        if (p.blocks[b].empty())
            throw std::invalid_argument("empty block " + std::to_string(b + 1));
        for (int v : p.blocks[b]) {
            if (v < 0 || v >= n)
                throw std::invalid_argument("vertex id out of range: " + std::to_string(v));
            if (block_of[v] != 0)
                throw std::invalid_argument("vertex " + std::to_string(v) +
                                            " appears in more than one block");
            block_of[v] = b + 1;
        }
    }
    for (int v = 0; v < n; ++v)
        if (block_of[v] == 0)
            throw std::invalid_argument("vertex " + std::to_string(v) + " not covered");

    // For each vertex, the smallest earlier block with no neighbor in it.
    // The least violation orders by (i, j, vertex).
    std::optional<Violation> best;
    std::vector<char> seen(k + 1, 0);
    for (int j = 2; j <= k; ++j) {
        for (int v : p.blocks[j - 1]) {
            for (int u : g.neighbors(v)) seen[block_of[u]] = 1;
            int missing = 0;
            for (int i = 1; i < j; ++i)
                if (!seen[i]) { missing = i; break; }
            for (int u : g.neighbors(v)) seen[block_of[u]] = 0;
            if (missing == 0) continue;
            Violation cand{missing, j, v};
            if (!best || std::tie(cand.i, cand.j, cand.vertex) <
                             std::tie(best->i, best->j, best->vertex))
                best = cand;
        }
    }
    return best;
}

}  // namespace trgraph
