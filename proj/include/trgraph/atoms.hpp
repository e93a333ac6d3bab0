#pragma once

#include <optional>
#include <string>
#include <vector>

#include "trgraph/graph.hpp"
#include "trgraph/partition.hpp"
#include "trgraph/subgraph.hpp"

namespace trgraph {

inline constexpr int kDefaultAtomBound = 5;

/// A t-atom together with its level decomposition. levels[0] (L_1) is the
/// most recently added independent set and becomes block V_1 of the atom's
/// own transitive t-partition; levels back to the single-vertex root.
/// Removing L_1 leaves a (t-1)-atom.
struct Atom {
    Graph graph;
    std::vector<std::vector<int>> levels;

    int order() const { return static_cast<int>(levels.size()); }
};

/// Complete catalog of pairwise non-isomorphic t-atoms, sorted by
/// (vertex count, canonical form).
struct AtomCatalog {
    int t = 0;
    std::vector<Atom> atoms;

    int size() const { return static_cast<int>(atoms.size()); }
};

/// One expansion step: choose W ⊆ V(h) with |W| = r, add r new vertices
/// matched one-to-one onto W (a single canonical matching; the new vertices
/// are interchangeable), then attach every vertex of V(h)∖W to exactly one
/// new vertex, over all r^{|V(h)|-r} attachment functions. The new vertices
/// form level L_1. Results are deduplicated up to isomorphism.
std::vector<Atom> expand_atom(const Atom& h, int r);

/// Catalog for order t, built recursively from the (t-1) catalog.
/// t = 1 yields {K_1}, t = 2 yields {K_2}, t = 3 yields {K_3, P_4}.
AtomCatalog generate_catalog(int t, int bound = kDefaultAtomBound);

/// Subgraph-minimal subset: drops every atom that contains another catalog
/// member as a subgraph. Containment-equivalent for screening.
AtomCatalog min_catalog(const AtomCatalog& cat);

/// Witness that Tr(g) >= t: an embedded atom from the minimal t-catalog and
/// the transitive t-partition it induces (block V_i is the image of level
/// L_i; V_1 additionally absorbs every vertex outside the embedding).
struct AtomCertificate {
    int atom_index = -1;  // index into the catalog that was scanned
    Embedding embedding;
    OrderedPartition partition;
};

std::optional<AtomCertificate> certify_lower_bound(const Graph& g, const AtomCatalog& catalog);
std::optional<AtomCertificate> certify_lower_bound(const Graph& g, int t,
                                                   int bound = kDefaultAtomBound);

enum class Tr3Class { Below3, Exactly3, AtLeast4 };

/// Trichotomy via atom screening: Tr >= 3 iff K_3 or P_4 embeds, Tr >= 4 iff
/// a member of the minimal 4-catalog embeds.
Tr3Class classify_tr3(const Graph& g);
Tr3Class classify_tr3(const Graph& g, const AtomCatalog& min3, const AtomCatalog& min4);

/// Induced-subgraph form of the Tr >= 3 test: some of K_3, P_4, C_4 appears
/// as an induced subgraph. Equivalent to the subgraph screening.
bool contains_tr3_induced_family(const Graph& g);

/// Catalog file: header "t count", then per atom a "n m" line, its edges,
/// and one "levels" line (level blocks separated by ';'). Byte-stable.
std::string format_catalog(const AtomCatalog& cat);
AtomCatalog parse_catalog(const std::string& text);

}  // namespace trgraph
