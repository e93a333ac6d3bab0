#include "support/random_graphs.hpp"

#include <algorithm>

namespace trgraph::testsupport {

Graph random_graph(int n, double p, Rng& rng) {
    std::bernoulli_distribution coin(p);
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng)) edges.emplace_back(u, v);
    return Graph(n, edges);
}

Graph random_tree(int n, Rng& rng) {
    if (n <= 1) return Graph(std::max(n, 0));
    if (n == 2) return Graph(2, {{0, 1}});
    std::uniform_int_distribution<int> pick(0, n - 1);
    std::vector<int> pruefer(n - 2);
    for (int& x : pruefer) x = pick(rng);

    std::vector<int> deg(n, 1);
    for (int x : pruefer) ++deg[x];
    std::vector<Edge> edges;
    std::vector<char> used(n, 0);
    for (int x : pruefer) {
        for (int leaf = 0; leaf < n; ++leaf) {
            if (deg[leaf] == 1 && !used[leaf]) {
                edges.emplace_back(std::min(leaf, x), std::max(leaf, x));
                used[leaf] = 1;
                --deg[x];
                break;
            }
        }
    }
    std::vector<int> last;
    for (int v = 0; v < n; ++v)
        if (!used[v] && deg[v] == 1) last.push_back(v);
    edges.emplace_back(last[0], last[1]);
    return Graph(n, edges);
}

namespace {

Graph chain_from_degrees(int nx, int ny, std::vector<int> degs) {
    std::sort(degs.rbegin(), degs.rend());
    std::vector<Edge> edges;
    for (int i = 0; i < nx; ++i)
        for (int j = 0; j < degs[i]; ++j) edges.emplace_back(i, nx + j);
    return Graph(nx + ny, edges);
}

}  // namespace

Graph random_chain_graph(int nx, int ny, double p, Rng& rng) {
    std::binomial_distribution<int> deg(ny, p);
    std::vector<int> degs(nx);
    for (int& d : degs) d = deg(rng);
    return chain_from_degrees(nx, ny, std::move(degs));
}

Graph random_chain_graph_edges(int nx, int ny, long long target_m, Rng& rng) {
    double p = std::clamp(static_cast<double>(target_m) / (static_cast<double>(nx) * ny), 0.0, 1.0);
    return random_chain_graph(nx, ny, p, rng);
}

}  // namespace trgraph::testsupport
