#pragma once

#include <optional>
#include <random>
#include <vector>

#include "permiso/graph.hpp"

namespace permiso {

using Rng = std::mt19937_64;

std::vector<int> random_permutation(Rng& rng, int n);

// Random recursive spanning tree plus independent extra edges, each present
// with probability extra_edge_prob. Connected by construction.
Graph random_connected_graph(Rng& rng, int n, double extra_edge_prob);

// Rejection-samples connected graphs (cycling through several densities)
// until one passes check_permissible; nullopt once max_attempts is spent.
std::optional<Graph> random_permissible_graph(Rng& rng, int n, int max_attempts = 20000);

// Degree-preserving rewiring: up to `swaps` successful double edge swaps
// (a-b, c-d -> a-d, c-b). Returns the graph unchanged if no swap applies.
Graph double_edge_swap(Rng& rng, const Graph& g, int swaps);

}  // namespace permiso
