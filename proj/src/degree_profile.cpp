#include "permiso/degree_profile.hpp"

#include <algorithm>

namespace permiso {

NeighborKey neighbor_key(const Graph& g, int x) {
    NeighborKey key;
    key.degree = g.degree(x);
    key.neighbor_degrees.reserve(key.degree);
    for (int y : g.neighbors(x)) key.neighbor_degrees.push_back(g.degree(y));
    std::sort(key.neighbor_degrees.begin(), key.neighbor_degrees.end());
    return key;
}

NeighborProfile compute_dsv(const Graph& g, int v) {
    NeighborProfile profile;
    profile.vertex = v;
    std::vector<std::pair<NeighborKey, int>> order;
    order.reserve(g.degree(v));
    for (int x : g.neighbors(v)) order.emplace_back(neighbor_key(g, x), x);
    std::sort(order.begin(), order.end());
    profile.entries.reserve(order.size());
    profile.keys.reserve(order.size());
    for (auto& [key, x] : order) {
        profile.entries.emplace_back(x, key.degree);
        profile.keys.push_back(std::move(key));
    }
    return profile;
}

PermissibilityVerdict check_permissible(const Graph& g) {
    if (!is_connected(g))
        return {false, PermissibilityReason::NotConnected, std::nullopt};
    std::vector<NeighborKey> keys(g.n());
    for (int v = 0; v < g.n(); ++v) keys[v] = neighbor_key(g, v);
    for (int v = 0; v < g.n(); ++v) {
        std::vector<int> nbrs = g.neighbors(v);
        std::sort(nbrs.begin(), nbrs.end(),
                  [&](int a, int b) { return std::tie(keys[a], a) < std::tie(keys[b], b); });
        for (size_t i = 0; i + 1 < nbrs.size(); ++i) {
            if (keys[nbrs[i]] == keys[nbrs[i + 1]])
                return {false, PermissibilityReason::DuplicateNeighborKey,
                        DuplicateWitness{v, nbrs[i], nbrs[i + 1]}};
        }
    }
    return {true, PermissibilityReason::Permissible, std::nullopt};
}

}  // namespace permiso
