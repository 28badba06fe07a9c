#pragma once

#include <string>
#include <utility>
#include <vector>

namespace permiso {

// Immutable simple undirected graph. Vertices are 0..n-1 internally; an
// external display label is kept per vertex for reporting.
class Graph {
public:
    Graph() = default;

    // Builds a graph from an edge list over vertices 0..n-1. Throws
    // std::invalid_argument on self-loops, duplicate edges, out-of-range
    // endpoints, or a label vector whose size is not n. An empty label
    // vector selects the default labels "0".."n-1".
    static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges,
                            std::vector<std::string> labels = {});

    int n() const { return n_; }
    int edge_count() const { return edge_count_; }
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }
    bool has_edge(int u, int v) const;
    const std::string& label(int v) const { return labels_[v]; }
    const std::vector<std::string>& labels() const { return labels_; }

    // Edges as (u, v) pairs with u < v, sorted.
    std::vector<std::pair<int, int>> edges() const;

    // Degrees sorted ascending.
    std::vector<int> degree_multiset() const;

    // Relabels vertex v as perm[v]; display labels travel with their vertices.
    Graph permuted(const std::vector<int>& perm) const;

    bool operator==(const Graph&) const = default;

private:
    int n_ = 0;
    int edge_count_ = 0;
    std::vector<std::vector<int>> adj_;
    std::vector<std::string> labels_;
};

// True iff every vertex is reachable from vertex 0. Vacuously true for n <= 1.
bool is_connected(const Graph& g);

// Connected with exactly n-1 edges.
bool is_tree(const Graph& g);

}  // namespace permiso
