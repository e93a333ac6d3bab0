#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "trgraph/atoms.hpp"
#include "trgraph/bipartite.hpp"
#include "trgraph/canonical.hpp"
#include "trgraph/chain.hpp"
#include "trgraph/exact.hpp"
#include "trgraph/io.hpp"
#include "trgraph/reduction.hpp"
#include "trgraph/subgraph.hpp"

namespace py = pybind11;
using namespace trgraph;

namespace {

OrderedPartition to_partition(const std::vector<std::vector<int>>& blocks) {
    return OrderedPartition{blocks};
}

py::object violation_or_none(const std::optional<Violation>& v) {
    if (!v) return py::none();
    return py::make_tuple(v->i, v->j, v->vertex);
}

py::dict certificate_dict(const ChainCertificate& c) {
    py::dict d;
    d["t"] = c.t;
    d["kind"] = c.kind == BicliqueKind::Full ? "FULL" : "MINUS_EDGE";
    d["x_block"] = c.x_block;
    d["y_block"] = c.y_block;
    d["transitivity"] = c.transitivity;
    return d;
}

py::dict atom_dict(const Atom& a) {
    py::dict d;
    d["n"] = a.graph.vertex_count();
    d["edges"] = a.graph.edges();
    d["levels"] = a.levels;
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "transitive-partition toolkit core";

    py::class_<Graph>(m, "Graph")
        .def(py::init<int, const std::vector<Edge>&>(), py::arg("n"), py::arg("edges"))
        .def_property_readonly("n", &Graph::vertex_count)
        .def_property_readonly("m", &Graph::edge_count)
        .def("degree", &Graph::degree)
        .def("has_edge", &Graph::has_edge)
        .def("neighbors",
             [](const Graph& g, int v) {
                 auto nb = g.neighbors(v);
                 return std::vector<int>(nb.begin(), nb.end());
             })
        .def("edges", &Graph::edges)
        .def("__repr__", [](const Graph& g) {
            return "Graph(n=" + std::to_string(g.vertex_count()) +
                   ", m=" + std::to_string(g.edge_count()) + ")";
        });

    m.def("parse_edge_list", &parse_edge_list);
    m.def("format_edge_list", &format_edge_list);
    m.def("path_graph", &path_graph);
    m.def("cycle_graph", &cycle_graph);
    m.def("complete_graph", &complete_graph);
    m.def("complete_bipartite", &complete_bipartite);
    m.def("biclique_minus_edge", &biclique_minus_edge);

    m.def("canonical_form", &canonical_form, py::arg("g"), py::arg("bound") = kDefaultCanonicalBound);
    m.def("isomorphic", &isomorphic, py::arg("a"), py::arg("b"),
          py::arg("bound") = kDefaultCanonicalBound);

    m.def(
        "find_subgraph",
        [](const Graph& pattern, const Graph& host, bool induced) -> py::object {
            auto emb = find_subgraph(pattern, host, induced);
            if (!emb) return py::none();
            return py::cast(emb->map);
        },
        py::arg("pattern"), py::arg("host"), py::arg("induced") = false);

    m.def("validate_transitive",
          [](const Graph& g, const std::vector<std::vector<int>>& blocks) {
              return violation_or_none(validate_transitive(g, to_partition(blocks)));
          });

    m.def(
        "transitivity_exact",
        [](const Graph& g, py::object limit, int bound) {
            std::optional<int> lim;
            if (!limit.is_none()) lim = limit.cast<int>();
            auto res = transitivity_exact(g, lim, bound);
            return py::make_tuple(res.value, res.witness.blocks);
        },
        py::arg("g"), py::arg("limit") = py::none(), py::arg("bound") = kDefaultExactBound);

    m.def(
        "grundy_exact",
        [](const Graph& g, int bound) {
            auto res = grundy_exact(g, bound);
            return py::make_tuple(res.value, res.witness.blocks);
        },
        py::arg("g"), py::arg("bound") = kDefaultExactBound);

    m.def("chain_transitivity", [](const Graph& g) {
        py::dict d;
        ChainSolveResult res = chain_transitivity(g);
        d["value"] = res.value;
        d["witness"] = res.witness.blocks;
        d["certificate"] = res.certificate ? certificate_dict(*res.certificate) : py::object(py::none());
        return d;
    });

    m.def(
        "generate_catalog",
        [](int t, bool minimal) {
            AtomCatalog cat = generate_catalog(t, std::max(t, kDefaultAtomBound));
            if (minimal) cat = min_catalog(cat);
            py::list out;
            for (const Atom& a : cat.atoms) out.append(atom_dict(a));
            return out;
        },
        py::arg("t"), py::arg("minimal") = false);

    m.def(
        "certify_lower_bound",
        [](const Graph& g, int t) -> py::object {
            auto cert = certify_lower_bound(g, t, std::max(t, kDefaultAtomBound));
            if (!cert) return py::none();
            py::dict d;
            d["atom_index"] = cert->atom_index;
            d["embedding"] = cert->embedding.map;
            d["partition"] = cert->partition.blocks;
            return d;
        },
        py::arg("g"), py::arg("t"));

    m.def("classify_tr3", [](const Graph& g) {
        switch (classify_tr3(g)) {
            case Tr3Class::Below3: return "Tr<3";
            case Tr3Class::Exactly3: return "Tr=3";
            default: return "Tr>=4";
        }
    });

    py::class_<ReductionInstance>(m, "ReductionInstance")
        .def_readonly("k", &ReductionInstance::k)
        .def_readonly("labels", &ReductionInstance::labels)
        .def_readonly("a_set", &ReductionInstance::a_set)
        .def_readonly("b_set", &ReductionInstance::b_set)
        .def_readonly("g_prime", &ReductionInstance::g_prime)
        .def("id", &ReductionInstance::id);

    m.def("build_reduction", &build_reduction);
    m.def("coloring_to_partition",
          [](const ReductionInstance& inst, const std::vector<int>& coloring) {
              return coloring_to_partition(inst, coloring).blocks;
          });
    m.def("partition_to_coloring",
          [](const ReductionInstance& inst, const std::vector<std::vector<int>>& blocks) {
              return partition_to_coloring(inst, to_partition(blocks));
          });
    m.def("is_bisimplicial", &is_bisimplicial);
    m.def("build_elimination_order",
          [](const ReductionInstance& inst) { return build_elimination_order(inst).edges; });
    m.def("verify_elimination", [](const Graph& g, const std::vector<Edge>& edges) {
        auto verdict = verify_elimination(g, EdgeElimOrder{edges});
        return py::make_tuple(verdict.ok, verdict.failed_index, verdict.reason);
    });
}
