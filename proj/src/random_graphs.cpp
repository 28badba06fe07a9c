#include "permiso/random_graphs.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "permiso/degree_profile.hpp"

namespace permiso {

std::vector<int> random_permutation(Rng& rng, int n) {
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    return perm;
}

Graph random_connected_graph(Rng& rng, int n, double extra_edge_prob) {
    std::vector<std::pair<int, int>> edges;
    std::set<std::pair<int, int>> present;
    for (int v = 1; v < n; ++v) {
        int u = static_cast<int>(std::uniform_int_distribution<>(0, v - 1)(rng));
        edges.emplace_back(u, v);
        present.emplace(u, v);
    }
    std::bernoulli_distribution flip(extra_edge_prob);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!present.contains({u, v}) && flip(rng)) edges.emplace_back(u, v);
    return Graph::from_edges(n, edges);
}

std::optional<Graph> random_permissible_graph(Rng& rng, int n, int max_attempts) {
    constexpr double kDensities[] = {0.15, 0.25, 0.35, 0.5};
    for (int attempt = 0; attempt < max_attempts; ++attempt) {
        Graph g = random_connected_graph(rng, n, kDensities[attempt % 4]);
        if (check_permissible(g).permissible) return g;
    }
    return std::nullopt;
}

Graph double_edge_swap(Rng& rng, const Graph& g, int swaps) {
    std::vector<std::pair<int, int>> edges = g.edges();
    if (edges.size() < 2) return g;
    std::set<std::pair<int, int>> present(edges.begin(), edges.end());
    auto has = [&](int u, int v) { return present.contains(std::minmax(u, v)); };
    std::uniform_int_distribution<size_t> pick(0, edges.size() - 1);
    std::bernoulli_distribution coin(0.5);
    int done = 0;
    for (int attempt = 0; attempt < 200 * swaps && done < swaps; ++attempt) {
        size_t ei = pick(rng);
        size_t ej = pick(rng);
        if (ei == ej) continue;
        auto [a, b] = edges[ei];
        auto [c, d] = edges[ej];
        if (coin(rng)) std::swap(c, d);
        if (a == c || a == d || b == c || b == d) continue;
        if (has(a, d) || has(c, b)) continue;
        present.erase(std::minmax(a, b));
        present.erase(std::minmax(c, d));
        present.insert(std::minmax(a, d));
        present.insert(std::minmax(c, b));
        edges[ei] = std::minmax(a, d);
        edges[ej] = std::minmax(c, b);
        ++done;
    }
    return Graph::from_edges(g.n(), edges, g.labels());
}

}  // namespace permiso
