#include "permiso/oracle.hpp"

#include <array>
#include <cstdint>
#include <stdexcept>

namespace permiso {

namespace {

constexpr int kFirstLimit = 10;
constexpr int kAllLimit = 8;

struct PermutationSearch {
    int n = 0;
    std::array<std::uint16_t, kFirstLimit> adj1{};
    std::array<std::uint16_t, kFirstLimit> adj2{};
    std::array<int, kFirstLimit> deg1{};
    std::array<int, kFirstLimit> deg2{};
    std::array<int, kFirstLimit> image{};
    std::uint32_t used = 0;
    bool collect_all = false;
    std::vector<std::vector<int>> found;

    // Assigns g1 vertices in ascending order, trying g2 candidates in
    // ascending order, so completions arrive lexicographically sorted.
    bool dfs(int v) {
        if (v == n) {
            found.emplace_back(image.begin(), image.begin() + n);
            return !collect_all;
        }
        std::uint16_t assigned_image = 0;
        std::uint16_t neighbor_image = 0;
        for (int u = 0; u < v; ++u) {
            assigned_image |= static_cast<std::uint16_t>(1u << image[u]);
            if (adj1[v] >> u & 1) neighbor_image |= static_cast<std::uint16_t>(1u << image[u]);
        }
        for (int w = 0; w < n; ++w) {
            if (used >> w & 1) continue;
            if (deg1[v] != deg2[w]) continue;
            if ((adj2[w] & assigned_image) != neighbor_image) continue;
            image[v] = w;
            used |= 1u << w;
            bool done = dfs(v + 1);
            used &= ~(1u << w);
            if (done) return true;
        }
        return false;
    }
};

std::vector<std::vector<int>> search(const Graph& g1, const Graph& g2, bool collect_all,
                                     int limit, const char* op) {
    if (g1.n() > limit || g2.n() > limit)
        throw std::invalid_argument(std::string(op) + ": practical bound is n <= " +
                                    std::to_string(limit));
    if (g1.n() != g2.n() || g1.edge_count() != g2.edge_count() ||
        g1.degree_multiset() != g2.degree_multiset())
        return {};
    PermutationSearch s;
    s.n = g1.n();
    s.collect_all = collect_all;
    for (int v = 0; v < s.n; ++v) {
        s.deg1[v] = g1.degree(v);
        s.deg2[v] = g2.degree(v);
        for (int w : g1.neighbors(v)) s.adj1[v] |= static_cast<std::uint16_t>(1u << w);
        for (int w : g2.neighbors(v)) s.adj2[v] |= static_cast<std::uint16_t>(1u << w);
    }
    s.dfs(0);
    return std::move(s.found);
}

}  // namespace

std::optional<IsoMapping> oracle_isomorphism(const Graph& g1, const Graph& g2) {
    auto found = search(g1, g2, false, kFirstLimit, "oracle_isomorphism");
    if (found.empty()) return std::nullopt;
    return IsoMapping::from_forward(std::move(found.front()));
}

std::vector<IsoMapping> oracle_all_isomorphisms(const Graph& g1, const Graph& g2) {
    auto found = search(g1, g2, true, kAllLimit, "oracle_all_isomorphisms");
    std::vector<IsoMapping> mappings;
    mappings.reserve(found.size());
    for (auto& forward : found) mappings.push_back(IsoMapping::from_forward(std::move(forward)));
    return mappings;
}

}  // namespace permiso
