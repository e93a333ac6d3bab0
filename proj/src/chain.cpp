#include "trgraph/chain.hpp"

#include <algorithm>
#include <sstream>

#include "trgraph/partition.hpp"

namespace trgraph {

namespace {

// Verifies that `ordering` is a chain ordering of g covering every vertex:
// each N(x) must be a prefix of order_y and degrees must not increase along
// order_x. Fills degx with the degree sequence along order_x.
void verify_chain_ordering(const Graph& g, const ChainOrdering& ordering,
                           std::vector<int>& degx) {
    const int n = g.vertex_count();
    std::vector<int> rank(n, -1);
    std::vector<char> on_x(n, 0);
    size_t total = ordering.order_x.size() + ordering.order_y.size();
    if (static_cast<int>(total) != n)
        throw std::invalid_argument("chain ordering does not cover the graph");
    for (size_t i = 0; i < ordering.order_y.size(); ++i) {
        int y = ordering.order_y[i];
        if (y < 0 || y >= n || rank[y] != -1)
            throw std::invalid_argument("invalid chain ordering (Y side)");
        rank[y] = static_cast<int>(i);
    }
    for (int x : ordering.order_x) {
        if (x < 0 || x >= n || rank[x] != -1 || on_x[x])
            throw std::invalid_argument("invalid chain ordering (X side)");
        on_x[x] = 1;
    }

    degx.clear();
    degx.reserve(ordering.order_x.size());
    int prev = -1;
    for (int x : ordering.order_x) {
        int deg = g.degree(x);
        int max_rank = -1;
        for (int y : g.neighbors(x)) {
            if (rank[y] == -1)
                throw std::invalid_argument("edge inside one side of the ordering");
            max_rank = std::max(max_rank, rank[y]);
        }
        if (max_rank != deg - 1)
            throw std::invalid_argument("ordering violates nested neighborhoods");
        if (prev != -1 && deg > prev)
            throw std::invalid_argument("ordering violates nested neighborhoods");
        prev = deg;
        degx.push_back(deg);
    }
    for (int y : ordering.order_y)
        for (int x : g.neighbors(y))
            if (!on_x[x]) throw std::invalid_argument("edge inside one side of the ordering");
}

}  // namespace

ChainCertificate max_index(const Graph& g, const ChainOrdering& ordering) {
    if (g.edge_count() == 0)
        throw std::invalid_argument("max_index: graph has no edges (transitivity is 1)");
    std::vector<int> degx;
    verify_chain_ordering(g, ordering, degx);

    const int a = static_cast<int>(ordering.order_x.size());
    const int b = static_cast<int>(ordering.order_y.size());
    // Prefix structure makes the edge test (x_i, y_j) a degree comparison.
    auto edge = [&](int i, int j) {  // 1-based
        return i >= 1 && j >= 1 && i <= a && j <= b && degx[i - 1] >= j;
    };

    int i = 1;
    while (edge(i, i)) ++i;
    int j = i;

    ChainCertificate cert;
    if (edge(j, j - 1) && edge(j - 1, j)) {
        cert.t = j;
        cert.kind = BicliqueKind::MinusEdge;
    } else {
        cert.t = j - 1;
        cert.kind = BicliqueKind::Full;
    }
    cert.transitivity = cert.t + 1;
    cert.x_block.assign(ordering.order_x.begin(), ordering.order_x.begin() + cert.t);
    cert.y_block.assign(ordering.order_y.begin(), ordering.order_y.begin() + cert.t);
    return cert;
}

OrderedPartition build_witness(const Graph& g, const ChainCertificate& cert) {
    const int t = cert.t;
    const int n = g.vertex_count();
    if (t < 1 || static_cast<int>(cert.x_block.size()) != t ||
        static_cast<int>(cert.y_block.size()) != t)
        throw std::invalid_argument("certificate inconsistent with graph: bad index blocks");

    std::vector<char> in_blocks(n, 0);
    auto claim = [&](int v) {
        if (v < 0 || v >= n || in_blocks[v])
            throw std::invalid_argument("certificate inconsistent with graph: bad vertex ids");
        in_blocks[v] = 1;
    };
    for (int v : cert.x_block) claim(v);
    for (int v : cert.y_block) claim(v);

    for (int i = 0; i < t; ++i)
        for (int j = 0; j < t; ++j) {
            bool expect = !(cert.kind == BicliqueKind::MinusEdge && i == t - 1 && j == t - 1);
            if (g.has_edge(cert.x_block[i], cert.y_block[j]) != expect)
                throw std::invalid_argument("certificate inconsistent with graph: biclique mismatch");
        }

    OrderedPartition p;
    p.blocks.assign(t + 1, {});
    p.blocks[t] = {cert.x_block[0]};                 // V_{t+1}
    if (t >= 2) p.blocks[t - 1] = {cert.y_block[0]};  // V_t
    for (int j = 2; j <= t - 1; ++j)
        p.blocks[j - 1] = {cert.x_block[t - j], cert.y_block[t - j]};

    std::vector<char> placed(n, 0);
    for (int j = 1; j <= t; ++j)
        for (int v : p.blocks[j])
            placed[v] = 1;
    for (int v = 0; v < n; ++v)
        if (!placed[v]) p.blocks[0].push_back(v);

    if (auto bad = validate_transitive(g, p))
        throw std::logic_error("build_witness produced an invalid partition at block pair (" +
                               std::to_string(bad->i) + ", " + std::to_string(bad->j) + ")");
    return p;
}

ChainSolveResult chain_transitivity(const Graph& g) {
    if (g.vertex_count() == 0) return {0, {}, std::nullopt};

    auto bip = recognize_bipartite(g);
    if (!bip.ok) throw NotBipartiteError(bip.odd_cycle);
    auto chain = recognize_chain(g, bip.part);
    if (!chain.ok) throw NotChainError(chain.side, chain.u, chain.v);

    if (g.edge_count() == 0) {
        OrderedPartition all;
        all.blocks.emplace_back();
        for (int v = 0; v < g.vertex_count(); ++v) all.blocks[0].push_back(v);
        return {1, std::move(all), std::nullopt};
    }

    ChainCertificate cert = max_index(g, chain.ordering);
    OrderedPartition witness = build_witness(g, cert);
    return {cert.transitivity, std::move(witness), std::move(cert)};
}

std::string format_certificate(const ChainCertificate& cert) {
    std::ostringstream out;
    out << cert.t << ' ' << (cert.kind == BicliqueKind::Full ? "FULL" : "MINUS_EDGE") << ' '
        << cert.transitivity << '\n';
    for (size_t i = 0; i < cert.x_block.size(); ++i)
        out << cert.x_block[i] << (i + 1 < cert.x_block.size() ? ' ' : '\n');
    for (size_t i = 0; i < cert.y_block.size(); ++i)
        out << cert.y_block[i] << (i + 1 < cert.y_block.size() ? ' ' : '\n');
    return out.str();
}

}  // namespace trgraph
