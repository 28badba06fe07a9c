#pragma once

#include <compare>
#include <optional>
#include <utility>
#include <vector>

#include "permiso/graph.hpp"

namespace permiso {

// Label-free identity of a neighbor: its degree plus the ascending degree
// multiset of its own neighborhood. Ordered by degree first, then
// lexicographically on the multiset.
struct NeighborKey {
    int degree = 0;
    std::vector<int> neighbor_degrees;

    auto operator<=>(const NeighborKey&) const = default;
};

NeighborKey neighbor_key(const Graph& g, int x);

// Neighborhood degree list of a vertex in canonical key order.
struct NeighborProfile {
    int vertex = -1;
    std::vector<std::pair<int, int>> entries;  // (neighbor, neighbor degree)
    std::vector<NeighborKey> keys;             // parallel to entries, ascending
};

// Entries sorted ascending by key; equal keys fall back to vertex id
// (a tie can only occur when the graph is not permissible).
NeighborProfile compute_dsv(const Graph& g, int v);

enum class PermissibilityReason { Permissible, NotConnected, DuplicateNeighborKey };

struct DuplicateWitness {
    int vertex;  // the vertex whose neighborhood clashes
    int first;   // two distinct neighbors of it with equal keys
    int second;
};

struct PermissibilityVerdict {
    bool permissible = false;
    PermissibilityReason reason = PermissibilityReason::Permissible;
    std::optional<DuplicateWitness> witness;
};

// A graph qualifies iff it is connected and, for every vertex, the keys of
// its neighbors are pairwise distinct. Deterministic and label-invariant;
// disconnected input is a NotConnected verdict, not an error.
PermissibilityVerdict check_permissible(const Graph& g);

}  // namespace permiso
