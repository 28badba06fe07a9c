#include "permiso/isomorphism.hpp"

#include <algorithm>
#include <stdexcept>

namespace permiso {

IsoMapping IsoMapping::from_forward(std::vector<int> forward) {
    const int n = static_cast<int>(forward.size());
    std::vector<int> backward(n, -1);
    for (int u = 0; u < n; ++u) {
        int w = forward[u];
        if (w < 0 || w >= n || backward[w] != -1)
            throw std::invalid_argument("IsoMapping: forward is not a bijection");
        backward[w] = u;
    }
    return {std::move(forward), std::move(backward)};
}

std::optional<std::vector<int>> compare_uid(const Uid& a, const Uid& b, int n) {
    if (a.tokens.size() != b.tokens.size()) return std::nullopt;
    std::vector<int> forward(n, -1);
    std::vector<int> backward(n, -1);
    for (size_t k = 0; k < a.tokens.size(); ++k) {
        const auto& [va, da] = a.tokens[k];
        const auto& [vb, db] = b.tokens[k];
        if (da != db) return std::nullopt;
        if (da == kSeparator) {
            if (va != kSeparator || vb != kSeparator) return std::nullopt;
            continue;
        }
        if (va < 0 || va >= n || vb < 0 || vb >= n) return std::nullopt;
        if (forward[va] == -1 && backward[vb] == -1) {
            forward[va] = vb;
            backward[vb] = va;
        } else if (forward[va] != vb || backward[vb] != va) {
            return std::nullopt;
        }
    }
    return forward;
}

bool verify_mapping(const Graph& g1, const Graph& g2, const IsoMapping& m) {
    const int n = g1.n();
    if (g2.n() != n || static_cast<int>(m.forward.size()) != n) return false;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (g1.has_edge(u, v) != g2.has_edge(m.forward[u], m.forward[v])) return false;
    return true;
}

IsoResult find_isomorphism(const Graph& g1, const Graph& g2, int root) {
    PermissibilityVerdict p1 = check_permissible(g1);
    if (!p1.permissible) return {IsoVerdict::Inapplicable, std::nullopt, GraphSide::First, p1};
    PermissibilityVerdict p2 = check_permissible(g2);
    if (!p2.permissible) return {IsoVerdict::Inapplicable, std::nullopt, GraphSide::Second, p2};
    if (g1.n() != g2.n() || g1.edge_count() != g2.edge_count() ||
        g1.degree_multiset() != g2.degree_multiset())
        return {IsoVerdict::NotIsomorphic, std::nullopt, std::nullopt, std::nullopt};
    const int n = g1.n();
    if (n == 0)
        return {IsoVerdict::Isomorphic, IsoMapping{}, std::nullopt, std::nullopt};
    if (root < 0 || root >= n) throw std::invalid_argument("find_isomorphism: root out of range");
    const Uid uid1 = generate_uid(g1, root);
    for (int w = 0; w < n; ++w) {
        if (g2.degree(w) != g1.degree(root)) continue;
        auto assoc = compare_uid(uid1, generate_uid(g2, w), n);
        if (!assoc) continue;
        if (std::any_of(assoc->begin(), assoc->end(), [](int x) { return x < 0; })) continue;
        IsoMapping mapping = IsoMapping::from_forward(std::move(*assoc));
        if (verify_mapping(g1, g2, mapping))
            return {IsoVerdict::Isomorphic, std::move(mapping), std::nullopt, std::nullopt};
    }
    return {IsoVerdict::NotIsomorphic, std::nullopt, std::nullopt, std::nullopt};
}

}  // namespace permiso
