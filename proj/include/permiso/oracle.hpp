#pragma once

#include <optional>
#include <vector>

#include "permiso/graph.hpp"
#include "permiso/isomorphism.hpp"

namespace permiso {

// Exhaustive backtracking search for an edge-preserving bijection, pruned
// by degree compatibility and partial adjacency consistency. Returns the
// lexicographically smallest mapping (in g1 vertex order) or nullopt.
// Throws std::invalid_argument when either graph has more than 10 vertices.
std::optional<IsoMapping> oracle_isomorphism(const Graph& g1, const Graph& g2);

// Every edge-preserving bijection, in ascending lexicographic order.
// Throws std::invalid_argument when either graph has more than 8 vertices.
std::vector<IsoMapping> oracle_all_isomorphisms(const Graph& g1, const Graph& g2);

}  // namespace permiso
