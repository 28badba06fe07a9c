#pragma once

#include <string>
#include <string_view>

#include "permiso/graph.hpp"

namespace permiso {

// Parses a single graph6 record: header byte n+63 (0 <= n <= 62), then the
// column-ordered upper-triangle adjacency bits packed six per byte
// (MSB first, value = chunk + 63, zero padded). One trailing newline is
// tolerated. Throws std::invalid_argument on bytes outside 63..126, a
// record length inconsistent with n, nonzero padding, or the long form.
Graph parse_graph6(std::string_view record);

// Inverse of parse_graph6; throws std::invalid_argument for n > 62.
std::string encode_graph6(const Graph& g);

// Text edge list: the first content line is the vertex count n, then one
// "u v" line per edge with 1 <= u,v <= n. '#' starts a comment and blank
// lines are ignored. A "# labels: a b c ..." comment attaches display
// labels (one distinct token per vertex); labels default to "1".."n".
Graph parse_edge_list(std::string_view text);

}  // namespace permiso
