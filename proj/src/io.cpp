#include "trgraph/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace trgraph {

namespace {

// Strict "int int" line parse; rejects trailing garbage.
bool parse_int_pair(const std::string& line, long long& a, long long& b) {
    std::istringstream ss(line);
    if (!(ss >> a >> b)) return false;
    std::string rest;
    if (ss >> rest) return false;
    return true;
}

}  // namespace

Graph parse_edge_list(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    auto next_line = [&](std::string& out) {
        while (std::getline(in, line)) {
            ++lineno;
            if (!line.empty() && line.back() == '\r') line.pop_back();
            if (line.empty()) continue;
            out = line;
            return true;
        }
        return false;
    };

    std::string header;
    if (!next_line(header)) throw ParseError("empty graph document");
    long long n = 0, m = 0;
    if (!parse_int_pair(header, n, m) || n < 0 || m < 0)
        throw ParseError("malformed header line " + std::to_string(lineno) + ": '" + header + "'");

    std::vector<Edge> edges;
    edges.reserve(static_cast<size_t>(m));
    for (long long i = 0; i < m; ++i) {
        std::string el;
        if (!next_line(el))
            throw ParseError("expected " + std::to_string(m) + " edges, got " + std::to_string(i));
        long long u = 0, v = 0;
        if (!parse_int_pair(el, u, v))
            throw ParseError("malformed edge line " + std::to_string(lineno) + ": '" + el + "'");
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw ParseError("vertex id out of range on line " + std::to_string(lineno));
        if (u == v) throw ParseError("self-loop on line " + std::to_string(lineno));
        edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    }
    std::string extra;
    if (next_line(extra)) throw ParseError("trailing content after edge list: '" + extra + "'");

    auto key = [](const Edge& e) {
        return std::make_pair(std::min(e.first, e.second), std::max(e.first, e.second));
    };
    std::vector<std::pair<int, int>> keys(edges.size());
    std::transform(edges.begin(), edges.end(), keys.begin(), key);
    std::sort(keys.begin(), keys.end());
    if (std::adjacent_find(keys.begin(), keys.end()) != keys.end())
        throw ParseError("duplicate edge in edge list");

    return Graph(static_cast<int>(n), edges);
}

Graph load_graph_file(const std::string& path) { return parse_edge_list(read_file(path)); }

std::string format_edge_list(const Graph& g) {
    std::ostringstream out;
    out << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
    return out.str();
}

OrderedPartition parse_partition(const std::string& text) {
    OrderedPartition p;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        std::istringstream ss(line);
        std::vector<int> block;
        long long v;
        while (ss >> v) {
            if (v < 0) throw ParseError("negative vertex id on line " + std::to_string(lineno));
            block.push_back(static_cast<int>(v));
        }
        if (!ss.eof())
            throw ParseError("malformed partition line " + std::to_string(lineno) + ": '" + line + "'");
        if (block.empty()) throw ParseError("empty block on line " + std::to_string(lineno));
        p.blocks.push_back(std::move(block));
    }
    if (p.blocks.empty()) throw ParseError("empty partition document");
    return p;
}

OrderedPartition load_partition_file(const std::string& path) {
    return parse_partition(read_file(path));
}

std::string format_partition(const OrderedPartition& p) {
    std::ostringstream out;
    for (const auto& block : p.blocks) {
        std::vector<int> ids(block);
        std::sort(ids.begin(), ids.end());
        for (size_t i = 0; i < ids.size(); ++i) {
            if (i) out << ' ';
            out << ids[i];
        }
        out << '\n';
    }
    return out.str();
}

std::string read_file(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw ParseError("cannot open file: " + path);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw ParseError("cannot write file: " + path);
    f << content;
}

}  // namespace trgraph
