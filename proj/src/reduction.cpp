#include "trgraph/reduction.hpp"

#include <algorithm>
#include <array>
#include <sstream>
#include <stdexcept>

#include "trgraph/io.hpp"

namespace trgraph {

namespace {

// Block of the x, w, v, z path vertices per color q of v. Each row keeps the
// path self-dominating: every path vertex in block 2 has a path neighbor in
// block 1, and one in block 3 has path neighbors in blocks 1 and 2.
constexpr std::array<std::array<int, 4>, 3> kCompanionBlocks = {{
    {1, 2, 1, 2},  // q = 1
    {2, 1, 2, 1},  // q = 2
    {1, 2, 3, 1},  // q = 3
}};

struct Builder {
    ReductionInstance inst;
    std::vector<Edge> edges;

    int add_vertex(const std::string& name) {
        int id = static_cast<int>(inst.labels.size());
        inst.labels.push_back(name);
        inst.ids.emplace(name, id);
        return id;
    }

    // Path of length three x-w-v-z with pendant ends x and z; returns the
    // id of v. `stem` already carries the prime marker, e.g. "pa" -> xpa.
    int add_path(const std::string& stem) {
        int x = add_vertex("x" + stem);
        int w = add_vertex("w" + stem);
        int v = add_vertex("v" + stem);
        int z = add_vertex("z" + stem);
        edges.emplace_back(x, w);
        edges.emplace_back(w, v);
        edges.emplace_back(v, z);
        return v;
    }
};

}  // namespace

int ReductionInstance::id(const std::string& name) const {
    auto it = ids.find(name);
    if (it == ids.end()) throw std::invalid_argument("unknown gadget label: " + name);
    return it->second;
}

ReductionInstance build_reduction(const Graph& g) {
    const int n = g.vertex_count();
    Builder b;
    b.inst.source_n = n;
    b.inst.source_m = g.edge_count();
    b.inst.source_edges = g.edges();  // lexicographic enumeration e_1..e_m
    const int m = b.inst.source_m;
    b.inst.k = m + 5;

    for (int i = 1; i <= n; ++i) {
        b.add_path(std::to_string(i));
        b.add_path("p" + std::to_string(i));
    }
    for (int j = 1; j <= m; ++j) {
        b.add_path("e" + std::to_string(j));
        b.add_path("pe" + std::to_string(j));
    }
    for (const char* stem : {"a", "pa", "b", "pb", "e", "pe"}) b.add_path(stem);

    for (int j = 1; j <= m; ++j) b.inst.a_set.push_back(b.add_vertex("e" + std::to_string(j)));
    b.inst.a_set.push_back(b.add_vertex("e"));
    for (int j = 1; j <= m; ++j) b.inst.b_set.push_back(b.add_vertex("ep" + std::to_string(j)));
    b.inst.b_set.push_back(b.add_vertex("ep"));

    for (int av : b.inst.a_set)
        for (int bv : b.inst.b_set) b.edges.emplace_back(av, bv);

    for (int j = 1; j <= m; ++j) {
        const auto& [u, v] = b.inst.source_edges[j - 1];
        int ej = b.inst.id("e" + std::to_string(j));
        int epj = b.inst.id("ep" + std::to_string(j));
        b.edges.emplace_back(b.inst.id("v" + std::to_string(u + 1)), ej);
        b.edges.emplace_back(b.inst.id("v" + std::to_string(v + 1)), ej);
        b.edges.emplace_back(b.inst.id("ve" + std::to_string(j)), ej);
        b.edges.emplace_back(b.inst.id("vp" + std::to_string(u + 1)), epj);
        b.edges.emplace_back(b.inst.id("vp" + std::to_string(v + 1)), epj);
        b.edges.emplace_back(b.inst.id("vpe" + std::to_string(j)), epj);
    }
    int e = b.inst.id("e"), ep = b.inst.id("ep");
    b.edges.emplace_back(b.inst.id("va"), e);
    b.edges.emplace_back(b.inst.id("vb"), e);
    b.edges.emplace_back(b.inst.id("ve"), e);
    b.edges.emplace_back(b.inst.id("vpa"), ep);
    b.edges.emplace_back(b.inst.id("vpb"), ep);
    b.edges.emplace_back(b.inst.id("vpe"), ep);

    b.inst.g_prime = Graph(static_cast<int>(b.inst.labels.size()), b.edges);

    // Closed-form size check; a mismatch is a construction bug.
    long long expect_v = 10LL * m + 8LL * n + 26;
    long long expect_e = 1LL * m * m + 14LL * m + 6LL * n + 25;
    if (b.inst.g_prime.vertex_count() != expect_v || b.inst.g_prime.edge_count() != expect_e)
        throw std::logic_error("reduction construction does not match the closed-form counts");
    return std::move(b.inst);
}

namespace {

void check_proper_coloring(const Graph& g, const std::vector<int>& coloring) {
    if (static_cast<int>(coloring.size()) != g.vertex_count())
        throw std::invalid_argument("coloring size does not match source graph");
    for (int c : coloring)
        if (c < 1 || c > 3) throw std::invalid_argument("colors must be in {1, 2, 3}");
    for (const auto& [u, v] : g.edges())
        if (coloring[u] == coloring[v])
            throw std::invalid_argument("coloring is not proper at edge (" + std::to_string(u) +
                                        ", " + std::to_string(v) + ")");
}

}  // namespace

OrderedPartition coloring_to_partition(const ReductionInstance& inst,
                                       const std::vector<int>& coloring) {
    Graph source(inst.source_n, inst.source_edges);
    check_proper_coloring(source, coloring);

    OrderedPartition p;
    p.blocks.resize(inst.k);
    auto put = [&](const std::string& name, int block) {
        p.blocks[block - 1].push_back(inst.id(name));
    };
    auto put_path = [&](const std::string& stem, int q) {
        const auto& row = kCompanionBlocks[q - 1];
        put("x" + stem, row[0]);
        put("w" + stem, row[1]);
        put("v" + stem, row[2]);
        put("z" + stem, row[3]);
    };

    for (int i = 1; i <= inst.source_n; ++i) {
        int q = coloring[i - 1];
        put_path(std::to_string(i), q);
        put_path("p" + std::to_string(i), q);
    }
    for (int j = 1; j <= inst.source_m; ++j) {
        const auto& [u, v] = inst.source_edges[j - 1];
        int l = 6 - coloring[u] - coloring[v];
        put_path("e" + std::to_string(j), l);
        put_path("pe" + std::to_string(j), l);
    }
    put_path("a", 1);
    put_path("pa", 1);
    put_path("b", 2);
    put_path("pb", 2);
    put_path("e", 3);
    put_path("pe", 3);

    for (int j = 1; j <= inst.source_m; ++j) {
        put("e" + std::to_string(j), 3 + j);
        put("ep" + std::to_string(j), 3 + j);
    }
    put("e", inst.source_m + 4);
    put("ep", inst.source_m + 5);

    for (auto& block : p.blocks) std::sort(block.begin(), block.end());
    if (auto bad = validate_transitive(inst.g_prime, p))
        throw std::logic_error("forward map produced an invalid partition at (" +
                               std::to_string(bad->i) + ", " + std::to_string(bad->j) + ", " +
                               std::to_string(bad->vertex) + ")");
    return p;
}

std::vector<int> partition_to_coloring(const ReductionInstance& inst, const OrderedPartition& p) {
    if (p.block_count() < inst.k)
        throw std::invalid_argument("partition has fewer than m+5 blocks");
    if (auto bad = validate_transitive(inst.g_prime, p))
        throw std::invalid_argument("partition is not transitive at (" + std::to_string(bad->i) +
                                    ", " + std::to_string(bad->j) + ", " +
                                    std::to_string(bad->vertex) + ")");

    std::vector<int> block_of(inst.g_prime.vertex_count(), 0);
    for (int b = 0; b < p.block_count(); ++b)
        for (int v : p.blocks[b]) block_of[v] = b + 1;

    std::vector<int> coloring(inst.source_n, 0);
    for (int i = 1; i <= inst.source_n; ++i) {
        int blk = block_of[inst.id("v" + std::to_string(i))];
        if (blk > 3)
            throw std::runtime_error(
                "vertex gadget v" + std::to_string(i) + " sits in block " + std::to_string(blk) +
                " > 3; the partition does not have the normalized shape — re-validate the input");
        coloring[i - 1] = blk;
    }

    Graph source(inst.source_n, inst.source_edges);
    for (const auto& [u, v] : source.edges())
        if (coloring[u] == coloring[v])
            throw std::logic_error("extracted coloring is improper: internal soundness failure");
    return coloring;
}

bool is_bisimplicial(const Graph& g, int u, int v) {
    if (!g.has_edge(u, v)) throw std::invalid_argument("is_bisimplicial: edge not present");
    for (int a : g.neighbors(u))
        for (int b : g.neighbors(v))
            if (a != b && !g.has_edge(a, b)) return false;
    return true;
}

EdgeElimOrder build_elimination_order(const ReductionInstance& inst) {
    EdgeElimOrder order;
    // x-w and v-z are the pendant edges of every path gadget; paths appear
    // in label (vertex id) order.
    for (size_t id = 0; id < inst.labels.size(); ++id) {
        const std::string& name = inst.labels[id];
        if (name[0] != 'x') continue;
        std::string stem = name.substr(1);
        order.edges.emplace_back(inst.id("x" + stem), inst.id("w" + stem));
        order.edges.emplace_back(inst.id("v" + stem), inst.id("z" + stem));
    }
    for (int j = 1; j <= inst.source_m; ++j)
        order.edges.emplace_back(inst.id("e" + std::to_string(j)),
                                 inst.id("ep" + std::to_string(j)));
    order.edges.emplace_back(inst.id("e"), inst.id("ep"));

    auto verdict = verify_elimination(inst.g_prime, order);
    if (!verdict.ok)
        throw std::logic_error("constructed elimination order rejected at index " +
                               std::to_string(verdict.failed_index) + ": " + verdict.reason);
    return order;
}

ElimVerdict verify_elimination(const Graph& g, const EdgeElimOrder& order) {
    const int n = g.vertex_count();
    std::vector<char> removed(n, 0);

    // Bisimpliciality in the reduced graph: neighborhoods filtered to the
    // surviving vertices.
    auto reduced_bisimplicial = [&](int u, int v) {
        for (int a : g.neighbors(u)) {
            if (removed[a]) continue;
            for (int b : g.neighbors(v)) {
                if (removed[b]) continue;
                if (a != b && !g.has_edge(a, b)) return false;
            }
        }
        return true;
    };

    for (size_t idx = 0; idx < order.edges.size(); ++idx) {
        auto [u, v] = order.edges[idx];
        int index = static_cast<int>(idx) + 1;
        if (u < 0 || u >= n || v < 0 || v >= n)
            return {false, index, "vertex id out of range"};
        if (removed[u] || removed[v])
            return {false, index, "endpoint already removed"};
        if (!g.has_edge(u, v))
            return {false, index, "not an edge"};
        if (!reduced_bisimplicial(u, v))
            return {false, index, "edge (" + std::to_string(u) + ", " + std::to_string(v) +
                                      ") is not bisimplicial in the reduced graph"};
        removed[u] = 1;
        removed[v] = 1;
    }

    for (const auto& [u, v] : g.edges())
        if (!removed[u] && !removed[v])
            return {false, static_cast<int>(order.edges.size()) + 1,
                    "edges remain after the sequence, e.g. (" + std::to_string(u) + ", " +
                        std::to_string(v) + ")"};
    return {true, 0, ""};
}

std::string format_labels(const ReductionInstance& inst) {
    std::ostringstream out;
    for (size_t id = 0; id < inst.labels.size(); ++id) out << inst.labels[id] << ' ' << id << '\n';
    return out.str();
}

std::string format_elim_order(const EdgeElimOrder& order) {
    std::ostringstream out;
    for (const auto& [u, v] : order.edges) out << u << ' ' << v << '\n';
    return out.str();
}

EdgeElimOrder parse_elim_order(const std::string& text) {
    EdgeElimOrder order;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        std::istringstream ss(line);
        long long u, v;
        std::string rest;
        if (!(ss >> u >> v) || (ss >> rest))
            throw ParseError("malformed elimination line " + std::to_string(lineno));
        order.edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    }
    return order;
}

}  // namespace trgraph
