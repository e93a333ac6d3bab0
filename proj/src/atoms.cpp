#include "trgraph/atoms.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>

#include "trgraph/canonical.hpp"
#include "trgraph/io.hpp"

namespace trgraph {

namespace {

// Atoms of order t have at most 2^(t-1) vertices.
int canon_bound(int vertices) { return std::max(kDefaultCanonicalBound, vertices); }

void append_combination(std::vector<int>& w, int n, int r,
                        const std::function<void(const std::vector<int>&)>& fn) {
    if (static_cast<int>(w.size()) == r) {
        fn(w);
        return;
    }
    int start = w.empty() ? 0 : w.back() + 1;
    for (int v = start; v <= n - (r - static_cast<int>(w.size())); ++v) {
        w.push_back(v);
        append_combination(w, n, r, fn);
        w.pop_back();
    }
}

Atom k1_atom() { return Atom{Graph(1), {{0}}}; }

}  // namespace

std::vector<Atom> expand_atom(const Atom& h, int r) {
    const int n = h.graph.vertex_count();
    if (r < 1 || r > n) throw std::invalid_argument("expand_atom: r out of range");

    const auto base_edges = h.graph.edges();
    std::map<std::string, Atom> dedup;

    std::vector<int> w;
    append_combination(w, n, r, [&](const std::vector<int>& chosen) {
        std::vector<int> rest;
        for (int v = 0; v < n; ++v)
            if (!std::binary_search(chosen.begin(), chosen.end(), v)) rest.push_back(v);

        // Attachment functions enumerated as a mixed-radix counter.
        std::vector<int> attach(rest.size(), 0);
        while (true) {
            std::vector<Edge> edges(base_edges);
            for (int p = 0; p < r; ++p) edges.emplace_back(chosen[p], n + p);
            for (size_t q = 0; q < rest.size(); ++q) edges.emplace_back(rest[q], n + attach[q]);
            Graph g2(n + r, edges);

            std::vector<std::vector<int>> levels;
            levels.emplace_back();
            for (int p = 0; p < r; ++p) levels.back().push_back(n + p);
            for (const auto& lvl : h.levels) levels.push_back(lvl);

            std::string key = canonical_form(g2, canon_bound(n + r));
            dedup.try_emplace(std::move(key), Atom{std::move(g2), std::move(levels)});

            size_t pos = 0;
            while (pos < attach.size() && attach[pos] == r - 1) attach[pos++] = 0;
            if (pos == attach.size()) break;
            ++attach[pos];
        }
    });

    std::vector<Atom> out;
    out.reserve(dedup.size());
    for (auto& [form, atom] : dedup) out.push_back(std::move(atom));
    return out;
}

AtomCatalog generate_catalog(int t, int bound) {
    if (t < 1 || t > bound)
        throw std::invalid_argument("generate_catalog: order out of range");

    std::vector<Atom> current = {k1_atom()};
    for (int step = 2; step <= t; ++step) {
        std::map<std::string, Atom> dedup;
        for (const Atom& parent : current) {
            int n = parent.graph.vertex_count();
            for (int r = 1; r <= n; ++r) {
                for (Atom& child : expand_atom(parent, r)) {
                    std::string key = canonical_form(child.graph,
                                                     canon_bound(child.graph.vertex_count()));
                    dedup.try_emplace(std::move(key), std::move(child));
                }
            }
        }
        current.clear();
        current.reserve(dedup.size());
        // map order is (canonical form); re-sort by (vertex count, form).
        std::vector<std::pair<std::pair<int, std::string>, Atom>> sorted;
        for (auto& [form, atom] : dedup)
            sorted.push_back({{atom.graph.vertex_count(), form}, std::move(atom)});
        std::sort(sorted.begin(), sorted.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        for (auto& [key, atom] : sorted) current.push_back(std::move(atom));
    }
    return AtomCatalog{t, std::move(current)};
}

AtomCatalog min_catalog(const AtomCatalog& cat) {
    const int count = cat.size();
    std::vector<char> drop(count, 0);
    for (int i = 0; i < count; ++i)
        for (int j = 0; j < count; ++j) {
            if (i == j) continue;
            if (find_subgraph(cat.atoms[j].graph, cat.atoms[i].graph)) {
                drop[i] = 1;  // atom i contains atom j
                break;
            }
        }
    AtomCatalog out;
    out.t = cat.t;
    for (int i = 0; i < count; ++i)
        if (!drop[i]) out.atoms.push_back(cat.atoms[i]);
    return out;
}

std::optional<AtomCertificate> certify_lower_bound(const Graph& g, const AtomCatalog& catalog) {
    for (int idx = 0; idx < catalog.size(); ++idx) {
        const Atom& atom = catalog.atoms[idx];
        auto emb = find_subgraph(atom.graph, g);
        if (!emb) continue;

        OrderedPartition p;
        p.blocks.resize(atom.order());
        std::vector<char> placed(g.vertex_count(), 0);
        for (int lvl = 0; lvl < atom.order(); ++lvl)
            for (int v : atom.levels[lvl]) {
                p.blocks[lvl].push_back(emb->map[v]);
                placed[emb->map[v]] = 1;
            }
        for (int v = 0; v < g.vertex_count(); ++v)
            if (!placed[v]) p.blocks[0].push_back(v);
        for (auto& block : p.blocks) std::sort(block.begin(), block.end());

        if (auto bad = validate_transitive(g, p))
            throw std::logic_error("atom embedding produced an invalid partition");
        return AtomCertificate{idx, std::move(*emb), std::move(p)};
    }
    return std::nullopt;
}

std::optional<AtomCertificate> certify_lower_bound(const Graph& g, int t, int bound) {
    return certify_lower_bound(g, min_catalog(generate_catalog(t, bound)));
}

Tr3Class classify_tr3(const Graph& g, const AtomCatalog& min3, const AtomCatalog& min4) {
    if (certify_lower_bound(g, min4)) return Tr3Class::AtLeast4;
    if (certify_lower_bound(g, min3)) return Tr3Class::Exactly3;
    return Tr3Class::Below3;
}

Tr3Class classify_tr3(const Graph& g) {
    return classify_tr3(g, min_catalog(generate_catalog(3)), min_catalog(generate_catalog(4)));
}

bool contains_tr3_induced_family(const Graph& g) {
    return find_subgraph(complete_graph(3), g, true) || find_subgraph(path_graph(4), g, true) ||
           find_subgraph(cycle_graph(4), g, true);
}

std::string format_catalog(const AtomCatalog& cat) {
    std::ostringstream out;
    out << cat.t << ' ' << cat.size() << '\n';
    for (const Atom& atom : cat.atoms) {
        out << format_edge_list(atom.graph);
        out << "levels ";
        for (size_t lvl = 0; lvl < atom.levels.size(); ++lvl) {
            if (lvl) out << ';';
            std::vector<int> ids(atom.levels[lvl]);
            std::sort(ids.begin(), ids.end());
            for (size_t i = 0; i < ids.size(); ++i) {
                if (i) out << ' ';
                out << ids[i];
            }
        }
        out << '\n';
    }
    return out.str();
}

AtomCatalog parse_catalog(const std::string& text) {
    std::istringstream in(text);
    AtomCatalog cat;
    int count = 0;
    if (!(in >> cat.t >> count) || cat.t < 1 || count < 0)
        throw ParseError("malformed catalog header");
    std::string line;
    std::getline(in, line);
    for (int a = 0; a < count; ++a) {
        int n = 0, m = 0;
        if (!(in >> n >> m)) throw ParseError("malformed atom header");
        std::getline(in, line);
        std::ostringstream doc;
        doc << n << ' ' << m << '\n';
        for (int e = 0; e < m; ++e) {
            if (!std::getline(in, line)) throw ParseError("truncated atom edges");
            doc << line << '\n';
        }
        Atom atom;
        atom.graph = parse_edge_list(doc.str());
        if (!std::getline(in, line) || line.rfind("levels", 0) != 0)
            throw ParseError("missing levels line");
        std::string body = line.size() > 7 ? line.substr(7) : "";
        std::istringstream levels(body);
        std::string group;
        while (std::getline(levels, group, ';')) {
            std::istringstream gs(group);
            std::vector<int> ids;
            int v;
            while (gs >> v) ids.push_back(v);
            if (ids.empty()) throw ParseError("empty level in catalog");
            atom.levels.push_back(std::move(ids));
        }
        if (atom.levels.empty()) throw ParseError("atom without levels");
        cat.atoms.push_back(std::move(atom));
    }
    return cat;
}

}  // namespace trgraph
