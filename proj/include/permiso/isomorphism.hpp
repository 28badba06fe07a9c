#pragma once

#include <optional>
#include <vector>

#include "permiso/degree_profile.hpp"
#include "permiso/graph.hpp"
#include "permiso/uid.hpp"

namespace permiso {

// Vertex bijection between two graphs on the same vertex count.
struct IsoMapping {
    std::vector<int> forward;
    std::vector<int> backward;

    // Validates that `forward` is a bijection on 0..n-1 and derives the
    // inverse; throws std::invalid_argument otherwise.
    static IsoMapping from_forward(std::vector<int> forward);

    bool operator==(const IsoMapping&) const = default;
};

// Positional comparison of two UIDs from graphs with n vertices each.
// Degree tokens must agree exactly and separators must align; the vertex
// tokens are collected into an association that must stay consistent and
// injective. Returns the forward association (unreached slots stay -1),
// or nullopt if the UIDs do not match.
std::optional<std::vector<int>> compare_uid(const Uid& a, const Uid& b, int n);

// True iff m maps edges to edges and non-edges to non-edges.
bool verify_mapping(const Graph& g1, const Graph& g2, const IsoMapping& m);

enum class IsoVerdict { Isomorphic, NotIsomorphic, Inapplicable };
enum class GraphSide { First, Second };

struct IsoResult {
    IsoVerdict verdict = IsoVerdict::NotIsomorphic;
    std::optional<IsoMapping> mapping;                    // set iff Isomorphic
    std::optional<GraphSide> inapplicable_side;           // set iff Inapplicable
    std::optional<PermissibilityVerdict> permissibility;  // verdict of the failing side
};

// UID-driven isomorphism decision for two permissible graphs. After quick
// rejection on vertex count, edge count and degree multiset, fixes `root`
// in g1 and compares its UID against every degree-compatible counterpart
// in g2 in ascending id order; a mapping is returned only after full edge
// verification, so an Isomorphic verdict is sound unconditionally.
IsoResult find_isomorphism(const Graph& g1, const Graph& g2, int root = 0);

}  // namespace permiso
