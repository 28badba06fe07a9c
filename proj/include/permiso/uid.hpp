#pragma once

#include <vector>

#include "permiso/graph.hpp"

namespace permiso {

inline constexpr int kSeparator = -2;        // (-2,-2) closes every expansion round
inline constexpr int kAlreadyExpanded = -1;  // degree slot of a revisited frontier vertex

struct UidToken {
    int vertex;
    int degree;

    bool operator==(const UidToken&) const = default;
};

// Canonical encoding of a vertex's breadth-layered neighborhood expansion.
struct Uid {
    int root = -1;
    std::vector<UidToken> tokens;

    bool operator==(const Uid&) const = default;
};

// Expands the graph layer by layer from `root`: each round walks the current
// frontier in order, emitting the full neighbor profile of a vertex seen for
// the first time (and queueing those neighbors for the next round) or an
// (x, -1) marker for a repeat, then a round separator. Emission stops after
// the round that expands the last vertex. Requires a connected graph;
// throws std::invalid_argument otherwise.
Uid generate_uid(const Graph& g, int root);

// The degree components of the token sequence, in order.
std::vector<int> uid_degree_signature(const Uid& u);

// UIDs for every root 0..n-1. threads > 1 computes them concurrently; the
// result does not depend on the thread count.
std::vector<Uid> generate_all_uids(const Graph& g, int threads = 1);

}  // namespace permiso
