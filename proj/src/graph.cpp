#include "permiso/graph.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <stdexcept>
#include <string>

namespace permiso {

namespace {

std::string pair_text(int u, int v) {
    return "(" + std::to_string(u) + ", " + std::to_string(v) + ")";
}

}  // namespace

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges,
                        std::vector<std::string> labels) {
    if (n < 0) throw std::invalid_argument("graph: vertex count must be non-negative");
    Graph g;
    g.n_ = n;
    g.adj_.resize(static_cast<size_t>(n));
    std::set<std::pair<int, int>> seen;
    for (const auto& [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw std::invalid_argument("graph: edge endpoint out of range " + pair_text(u, v));
        if (u == v) throw std::invalid_argument("graph: self-loop at vertex " + std::to_string(u));
        std::pair<int, int> key = std::minmax(u, v);
        if (!seen.insert(key).second)
            throw std::invalid_argument("graph: duplicate edge " + pair_text(u, v));
        g.adj_[u].push_back(v);
        g.adj_[v].push_back(u);
    }
    for (auto& nbrs : g.adj_) std::sort(nbrs.begin(), nbrs.end());
    g.edge_count_ = static_cast<int>(seen.size());
    if (labels.empty() && n > 0) {
        g.labels_.reserve(n);
        for (int v = 0; v < n; ++v) g.labels_.push_back(std::to_string(v));
    } else {
        if (static_cast<int>(labels.size()) != n)
            throw std::invalid_argument("graph: expected " + std::to_string(n) + " labels, got " +
                                        std::to_string(labels.size()));
        g.labels_ = std::move(labels);
    }
    return g;
}

bool Graph::has_edge(int u, int v) const {
    return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(edge_count_);
    for (int u = 0; u < n_; ++u)
        for (int v : adj_[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

std::vector<int> Graph::degree_multiset() const {
    std::vector<int> degrees;
    degrees.reserve(n_);
    for (int v = 0; v < n_; ++v) degrees.push_back(degree(v));
    std::sort(degrees.begin(), degrees.end());
    return degrees;
}

Graph Graph::permuted(const std::vector<int>& perm) const {
    if (static_cast<int>(perm.size()) != n_)
        throw std::invalid_argument("permuted: permutation size mismatch");
    std::vector<char> hit(n_, 0);
    for (int p : perm) {
        if (p < 0 || p >= n_ || hit[p]) throw std::invalid_argument("permuted: not a permutation");
        hit[p] = 1;
    }
    std::vector<std::pair<int, int>> mapped;
    mapped.reserve(edge_count_);
    for (auto [u, v] : edges()) mapped.emplace_back(perm[u], perm[v]);
    std::vector<std::string> moved_labels(n_);
    for (int v = 0; v < n_; ++v) moved_labels[perm[v]] = labels_[v];
    return from_edges(n_, mapped, std::move(moved_labels));
}

bool is_connected(const Graph& g) {
    if (g.n() <= 1) return true;
    std::vector<char> visited(g.n(), 0);
    std::queue<int> queue;
    queue.push(0);
    visited[0] = 1;
    int reached = 1;
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop();
        for (int w : g.neighbors(v)) {
            if (!visited[w]) {
                visited[w] = 1;
                ++reached;
                queue.push(w);
            }
        }
    }
    return reached == g.n();
}

bool is_tree(const Graph& g) {
    return is_connected(g) && g.edge_count() == g.n() - 1;
}

}  // namespace permiso
