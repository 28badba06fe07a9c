#pragma once

#include <cstdint>
#include <vector>

#include "permiso/graph.hpp"

namespace permiso {

// Per-n counts of isomorphism classes.
struct CensusRow {
    int n = 0;
    std::int64_t total = 0;
    std::int64_t connected = 0;
    std::int64_t trees = 0;
    std::int64_t permissible = 0;

    double fraction() const {
        return total == 0 ? 0.0 : static_cast<double>(permissible) / static_cast<double>(total);
    }

    bool operator==(const CensusRow&) const = default;
};

// Upper-triangle adjacency bits in column order (for j = 1..n-1, for
// i = 0..j-1, bit x(i,j)) packed into a 64-bit word with the first bit
// most significant, so numeric order equals lexicographic bit order.
inline int triangle_bit_count(int n) { return n * (n - 1) / 2; }
std::uint64_t edge_bit(int n, int i, int j);
Graph graph_from_mask(int n, std::uint64_t mask);
std::uint64_t mask_from_graph(const Graph& g);

// Lexicographically smallest adjacency bit string over all vertex
// permutations. Equal codes iff isomorphic. Enforces n <= 8.
std::uint64_t canonical_code(const Graph& g);

// One representative per isomorphism class on n vertices, sorted by code;
// each representative's own bit string equals its canonical code.
// Enforces 1 <= n <= 7. threads > 1 splits the labeled-mask scan into
// static ranges; the result does not depend on the thread count.
std::vector<Graph> enumerate_classes(int n, int threads = 1);

// Counts over enumerate_classes(n).
CensusRow census_row(int n, int threads = 1);

// Known counts beyond the enumerator's practical range, kept as reference
// constants only.
inline constexpr CensusRow kReferenceCensusRows[] = {
    {8, 12346, 11117, 23, 1024},
    {9, 274668, 261080, 47, 29285},
};

}  // namespace permiso
