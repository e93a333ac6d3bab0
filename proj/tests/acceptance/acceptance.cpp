// Acceptance suite: one line per criterion, nonzero exit on any failure.
#include <chrono>
#include <cstdio>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "support/census.hpp"
#include "support/oracles.hpp"
#include "support/random_graphs.hpp"
#include "trgraph/atoms.hpp"
#include "trgraph/canonical.hpp"
#include "trgraph/chain.hpp"
#include "trgraph/exact.hpp"
#include "trgraph/reduction.hpp"

using namespace trgraph;
namespace ts = trgraph::testsupport;
using Clock = std::chrono::steady_clock;

namespace {

int g_failures = 0;

void report(int number, const std::string& title, bool pass, const std::string& detail) {
    std::printf("criterion %2d (%s): %s%s%s\n", number, title.c_str(), pass ? "PASS" : "FAIL",
                detail.empty() ? "" : " — ", detail.c_str());
    std::fflush(stdout);
    if (!pass) ++g_failures;
}

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

// ---------------------------------------------------------------- criterion 1
void criterion_biclique_transitivity() {
    auto t0 = Clock::now();
    bool ok = true;
    std::string detail;
    for (int t = 1; t <= 4; ++t) {
        int full = transitivity_exact(complete_bipartite(t, t)).value;
        if (full != t + 1) {
            ok = false;
            detail += "K_{" + std::to_string(t) + "," + std::to_string(t) + "} gave " +
                      std::to_string(full) + "; ";
        }
    }
    // the minus-edge law holds for t >= 2; K_{1,1}-e is edgeless with Tr = 1
    for (int t = 2; t <= 4; ++t) {
        int minus = transitivity_exact(biclique_minus_edge(t)).value;
        if (minus != t + 1) {
            ok = false;
            detail += "K_{t,t}-e at t=" + std::to_string(t) + " gave " + std::to_string(minus) +
                      "; ";
        }
    }
    int degenerate = transitivity_exact(biclique_minus_edge(1)).value;
    if (degenerate != 1) {
        ok = false;
        detail += "K_{1,1}-e gave " + std::to_string(degenerate) + "; ";
    }
    char buf[128];
    std::snprintf(buf, sizeof(buf), "t=1..4 full, t=2..4 minus-edge, K_{1,1}-e = 1; %.2fs",
                  seconds_since(t0));
    report(1, "biclique transitivity", ok && seconds_since(t0) < 60.0, detail + buf);
}

// ---------------------------------------------------------------- criterion 2
void criterion_chain_oracle_equivalence() {
    int checked = 0, mismatches = 0;
    for (int a = 1; a <= 4; ++a)
        for (int b = 1; b <= 4; ++b)
            for (const Graph& g : ts::enumerate_chain_graphs(a, b)) {
                ++checked;
                if (chain_transitivity(g).value != transitivity_exact(g).value) ++mismatches;
            }
    int exhaustive = checked;

    std::mt19937 rng(20240601);
    std::uniform_real_distribution<double> dens(0.05, 0.95);
    for (int it = 0; it < 500; ++it) {
        int nx = 1 + static_cast<int>(rng() % 7);
        int ny = 1 + static_cast<int>(rng() % 7);
        Graph g = ts::random_chain_graph(nx, ny, dens(rng), rng);
        ++checked;
        auto res = chain_transitivity(g);
        if (res.value != transitivity_exact(g).value) ++mismatches;
        if (validate_transitive(g, res.witness)) ++mismatches;
    }
    report(2, "chain-solver oracle equivalence", mismatches == 0,
           std::to_string(exhaustive) + " exhaustive + 500 random chain graphs, " +
               std::to_string(mismatches) + " mismatches");
}

// ---------------------------------------------------------------- criterion 3
double solve_chain_end_to_end(const Graph& g) {
    auto t0 = Clock::now();
    auto res = chain_transitivity(g);  // recognition + MaxIndex + witness (validated inside)
    if (validate_transitive(g, res.witness)) std::abort();
    return seconds_since(t0);
}

// Amortized solve time: average of a burst, minimum over reps. The absolute
// times sit in the low milliseconds, so single-shot readings are too noisy
// for ratio checks.
double timed_solve(const Graph& g, int burst = 5, int reps = 4) {
    double best = 1e9;
    for (int rep = 0; rep < reps; ++rep) {
        double total = 0;
        for (int i = 0; i < burst; ++i) total += solve_chain_end_to_end(g);
        best = std::min(best, total / burst);
    }
    return best;
}

void criterion_chain_linearity() {
    std::mt19937 rng(77);
    // warmup
    solve_chain_end_to_end(ts::random_chain_graph_edges(5000, 5000, 10000, rng));

    Graph big = ts::random_chain_graph_edges(50000, 50000, 100000, rng);
    double big_time = solve_chain_end_to_end(big);

    std::vector<int> sizes = {20000, 40000, 80000, 160000, 320000};
    std::vector<double> times;
    for (int n : sizes) {
        Graph g = ts::random_chain_graph_edges(n / 2, n / 2, n, rng);
        times.push_back(timed_solve(g));
    }
    double worst_ratio = 0;
    for (size_t i = 1; i < times.size(); ++i)
        worst_ratio = std::max(worst_ratio, times[i] / times[i - 1]);

    char buf[160];
    std::snprintf(buf, sizeof(buf),
                  "1e5 vertices in %.3fs; sizes 2e4..3.2e5 doubling ratios up to %.2f", big_time,
                  worst_ratio);
    report(3, "chain-solver linearity", big_time < 1.0 && worst_ratio < 2.5, buf);
}

// ---------------------------------------------------------------- criterion 4
void criterion_atom_catalogs() {
    bool ok = true;
    std::string detail;

    auto c1 = generate_catalog(1);
    ok &= c1.size() == 1 && canonical_form(c1.atoms[0].graph) == canonical_form(Graph(1));
    auto c2 = generate_catalog(2);
    ok &= c2.size() == 1 && canonical_form(c2.atoms[0].graph) == canonical_form(complete_graph(2));
    auto c3 = generate_catalog(3);
    std::set<std::string> forms3;
    for (const Atom& a : c3.atoms) forms3.insert(canonical_form(a.graph));
    ok &= c3.size() == 2 &&
          forms3 == std::set<std::string>{canonical_form(complete_graph(3)),
                                          canonical_form(path_graph(4))};
    if (!ok) detail += "small catalogs wrong; ";

    auto c4 = generate_catalog(4);
    auto m4 = min_catalog(c4);
    std::set<std::string> kept;
    for (const Atom& a : m4.atoms) kept.insert(canonical_form(a.graph, 16));
    int dropped = 0;
    for (const Atom& a : c4.atoms) {
        bool contains_other = false;
        for (const Atom& b : c4.atoms) {
            if (&a == &b) continue;
            if (find_subgraph(b.graph, a.graph)) { contains_other = true; break; }
        }
        dropped += contains_other;
        bool is_kept = kept.count(canonical_form(a.graph, 16)) > 0;
        if (is_kept == contains_other) {
            ok = false;
            detail += "min-catalog membership disagrees with pairwise containment; ";
            break;
        }
    }
    if (dropped < 1) {
        ok = false;
        detail += "no redundant order-4 atom found; ";
    }
    detail += "|A_4| = " + std::to_string(c4.size()) + ", pruned " + std::to_string(dropped) +
              " atoms that contain another member";
    report(4, "atom catalogs", ok, detail);
}

// ---------------------------------------------------------------- criterion 5
void criterion_theorem4_equivalence() {
    auto t0 = Clock::now();
    auto m2 = min_catalog(generate_catalog(2));
    auto m3 = min_catalog(generate_catalog(3));
    auto m4 = min_catalog(generate_catalog(4));
    const AtomCatalog* cats[3] = {&m2, &m3, &m4};

    long long checked = 0, counterexamples = 0;
    auto screen = [&](const Graph& g) {
        int tr = transitivity_exact(g).value;
        for (int t = 2; t <= 4; ++t) {
            ++checked;
            auto cert = certify_lower_bound(g, *cats[t - 2]);
            if ((tr >= t) != cert.has_value()) ++counterexamples;
            if (cert && validate_transitive(g, cert->partition)) ++counterexamples;
        }
    };

    for (int n = 1; n <= 6; ++n)
        for (const Graph& g : ts::small_graph_census(n)) screen(g);

    std::mt19937 rng(20240602);
    std::uniform_real_distribution<double> dens(0.1, 0.8);
    for (int it = 0; it < 500; ++it) screen(ts::random_graph(9, dens(rng), rng));

    char buf[160];
    std::snprintf(buf, sizeof(buf),
                  "census n<=6 plus 500 random n=9, %lld screenings, %lld counterexamples; %.1fs",
                  checked, counterexamples, seconds_since(t0));
    report(5, "Theorem-4 equivalence", counterexamples == 0 && seconds_since(t0) < 600.0, buf);
}

// ---------------------------------------------------------------- criterion 6
void criterion_classifier() {
    auto m3 = min_catalog(generate_catalog(3));
    auto m4 = min_catalog(generate_catalog(4));
    int wrong = 0, induced_mismatch = 0, total = 0;
    for (int n = 1; n <= 6; ++n)
        for (const Graph& g : ts::small_graph_census(n)) {
            ++total;
            int tr = transitivity_exact(g).value;
            Tr3Class want =
                tr < 3 ? Tr3Class::Below3 : (tr == 3 ? Tr3Class::Exactly3 : Tr3Class::AtLeast4);
            if (classify_tr3(g, m3, m4) != want) ++wrong;
            bool sub = certify_lower_bound(g, m3).has_value();
            if (sub != contains_tr3_induced_family(g)) ++induced_mismatch;
        }
    report(6, "Tr=3 classifier + induced cross-check", wrong == 0 && induced_mismatch == 0,
           std::to_string(total) + " census graphs, " + std::to_string(wrong) +
               " classifier errors, " + std::to_string(induced_mismatch) +
               " subgraph/induced screening mismatches");
}

// ---------------------------------------------------------------- criterion 7
void criterion_reduction_structure() {
    std::mt19937 rng(20240603);
    std::uniform_real_distribution<double> dens(0.1, 0.9);
    int bad = 0;
    for (int it = 0; it < 100; ++it) {
        int n = 1 + static_cast<int>(rng() % 10);
        Graph g = ts::random_graph(n, dens(rng), rng);
        auto inst = build_reduction(g);
        int m = g.edge_count();
        if (inst.g_prime.vertex_count() != 10 * m + 8 * n + 26) ++bad;
        if (inst.g_prime.edge_count() != m * m + 14 * m + 6 * n + 25) ++bad;
        if (inst.k != m + 5) ++bad;
        // A u B induces K_{m+1,m+1} edge-exactly
        for (int a : inst.a_set)
            for (int a2 : inst.a_set)
                if (a != a2 && inst.g_prime.has_edge(a, a2)) ++bad;
        for (int b : inst.b_set)
            for (int b2 : inst.b_set)
                if (b != b2 && inst.g_prime.has_edge(b, b2)) ++bad;
        for (int a : inst.a_set)
            for (int b : inst.b_set)
                if (!inst.g_prime.has_edge(a, b)) ++bad;
    }
    report(7, "reduction structure", bad == 0,
           "100 random sources n<=10, " + std::to_string(bad) + " violations");
}

// ---------------------------------------------------------------- criterion 8
void criterion_forward_map() {
    int colorable = 0, failures = 0;
    for (int n = 1; n <= 6; ++n)
        for (const Graph& g : ts::small_graph_census(n)) {
            auto coloring = ts::find_proper_3coloring(g);
            if (!coloring) continue;
            ++colorable;
            auto inst = build_reduction(g);
            try {
                auto p = coloring_to_partition(inst, *coloring);
                if (p.block_count() != g.edge_count() + 5) ++failures;
                if (validate_transitive(inst.g_prime, p)) ++failures;
                auto extracted = partition_to_coloring(inst, p);
                if (extracted != *coloring) ++failures;
            } catch (const std::exception&) {
                ++failures;
            }
        }
    report(8, "forward map executable (Lemma-1 direction)", failures == 0,
           std::to_string(colorable) + " 3-colorable census sources, " +
               std::to_string(failures) +
               " failures; converse direction is certified by the extraction-map tests only "
               "(G' exceeds exact-solver scale)");
}

// ---------------------------------------------------------------- criterion 9
void criterion_elimination_orders() {
    int bad = 0, checked = 0;
    for (int n = 1; n <= 5; ++n)
        for (const Graph& g : ts::small_graph_census(n)) {
            auto inst = build_reduction(g);
            ++checked;
            EdgeElimOrder order;
            try {
                order = build_elimination_order(inst);  // verified inside
            } catch (const std::exception&) {
                ++bad;
                continue;
            }
            // deliberately reordered: the biclique matching first
            int match = inst.source_m + 1;
            EdgeElimOrder tampered;
            tampered.edges.insert(tampered.edges.end(), order.edges.end() - match,
                                  order.edges.end());
            tampered.edges.insert(tampered.edges.end(), order.edges.begin(),
                                  order.edges.end() - match);
            auto verdict = verify_elimination(inst.g_prime, tampered);
            if (verdict.ok || verdict.failed_index != 1) ++bad;
        }
    report(9, "perfect edge elimination orders", bad == 0,
           std::to_string(checked) + " instances, " + std::to_string(bad) + " failures");
}

// --------------------------------------------------------------- criterion 10
void criterion_inequality_suite() {
    int bad = 0, census_count = 0;
    for (int n = 1; n <= 6; ++n)
        for (const Graph& g : ts::small_graph_census(n)) {
            ++census_count;
            int tr = transitivity_exact(g).value;
            int gamma = grundy_exact(g).value;
            if (!(gamma <= tr && tr <= g.max_degree() + 1)) ++bad;
        }
    std::mt19937 rng(20240604);
    int tree_bad = 0;
    for (int it = 0; it < 200; ++it) {
        int n = 2 + static_cast<int>(rng() % 9);
        Graph t = ts::random_tree(n, rng);
        if (transitivity_exact(t).value != grundy_exact(t).value) ++tree_bad;
    }
    report(10, "inequality suite", bad == 0 && tree_bad == 0,
           std::to_string(census_count) + " census graphs (Gamma <= Tr <= Delta+1, " +
               std::to_string(bad) + " bad), 200 random trees (Tr = Gamma, " +
               std::to_string(tree_bad) + " bad)");
}

}  // namespace

int main() {
    criterion_biclique_transitivity();
    criterion_chain_oracle_equivalence();
    criterion_chain_linearity();
    criterion_atom_catalogs();
    criterion_theorem4_equivalence();
    criterion_classifier();
    criterion_reduction_structure();
    criterion_forward_map();
    criterion_elimination_orders();
    criterion_inequality_suite();

    if (g_failures == 0)
        std::printf("ACCEPTANCE: all 10 criteria PASS\n");
    else
        std::printf("ACCEPTANCE: %d criterion(s) FAILED\n", g_failures);
    return g_failures == 0 ? 0 : 1;
}
