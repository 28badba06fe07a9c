#include "permiso/census.hpp"

#include <array>
#include <stdexcept>
#include <thread>
#include <utility>

#include "permiso/degree_profile.hpp"

namespace permiso {

namespace {

constexpr int kCodeLimit = 8;
constexpr int kEnumerateLimit = 7;

// Column j of the bit string, as an integer with x(0,j) most significant.
std::array<std::uint8_t, kCodeLimit> reference_columns(int n, std::uint64_t mask) {
    std::array<std::uint8_t, kCodeLimit> col{};
    const int m = triangle_bit_count(n);
    for (int j = 1; j < n; ++j)
        col[j] = static_cast<std::uint8_t>(mask >> (m - j * (j - 1) / 2 - j) & ((1u << j) - 1));
    return col;
}

std::array<std::uint16_t, kCodeLimit> adjacency_rows(int n, std::uint64_t mask) {
    std::array<std::uint16_t, kCodeLimit> adj{};
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i)
            if (mask & edge_bit(n, i, j)) {
                adj[i] |= static_cast<std::uint16_t>(1u << j);
                adj[j] |= static_cast<std::uint16_t>(1u << i);
            }
    return adj;
}

// Walks relabelings whose partial code equals the reference prefix, column
// by column; any column that comes out smaller proves the reference
// labeling is not the lexicographic minimum.
bool smaller_relabeling_exists(int n, const std::array<std::uint16_t, kCodeLimit>& adj,
                               const std::array<std::uint8_t, kCodeLimit>& ref,
                               std::array<std::int8_t, kCodeLimit>& chosen, int depth,
                               std::uint32_t used) {
    if (depth == n) return false;
    for (int u = 0; u < n; ++u) {
        if (used >> u & 1) continue;
        unsigned col = 0;
        for (int i = 0; i < depth; ++i) col = col << 1 | (adj[u] >> chosen[i] & 1u);
        if (col < ref[depth]) return true;
        if (col > ref[depth]) continue;
        chosen[depth] = static_cast<std::int8_t>(u);
        if (smaller_relabeling_exists(n, adj, ref, chosen, depth + 1, used | 1u << u)) return true;
    }
    return false;
}

bool is_canonical_mask(int n, std::uint64_t mask) {
    auto adj = adjacency_rows(n, mask);
    auto ref = reference_columns(n, mask);
    std::array<std::int8_t, kCodeLimit> chosen{};
    return !smaller_relabeling_exists(n, adj, ref, chosen, 0, 0);
}

}  // namespace

std::uint64_t edge_bit(int n, int i, int j) {
    if (i > j) std::swap(i, j);
    return std::uint64_t{1} << (triangle_bit_count(n) - 1 - (j * (j - 1) / 2 + i));
}

Graph graph_from_mask(int n, std::uint64_t mask) {
    std::vector<std::pair<int, int>> edges;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i)
            if (mask & edge_bit(n, i, j)) edges.emplace_back(i, j);
    return Graph::from_edges(n, edges);
}

std::uint64_t mask_from_graph(const Graph& g) {
    std::uint64_t mask = 0;
    for (auto [u, v] : g.edges()) mask |= edge_bit(g.n(), u, v);
    return mask;
}

std::uint64_t canonical_code(const Graph& g) {
    const int n = g.n();
    if (n > kCodeLimit) throw std::invalid_argument("canonical_code: n > 8 not supported");
    std::array<std::uint16_t, kCodeLimit> adj{};
    for (int v = 0; v < n; ++v)
        for (int w : g.neighbors(v)) adj[v] |= static_cast<std::uint16_t>(1u << w);
    // Level-by-level minimization: keep every prefix that attains the
    // minimal column, since lexicographic order is decided column-first.
    struct Prefix {
        std::array<std::int8_t, kCodeLimit> chosen{};
        std::uint32_t used = 0;
    };
    std::vector<Prefix> frontier{Prefix{}};
    std::vector<Prefix> next;
    std::uint64_t code = 0;
    for (int depth = 0; depth < n; ++depth) {
        unsigned best = ~0u;
        next.clear();
        for (const Prefix& p : frontier) {
            for (int u = 0; u < n; ++u) {
                if (p.used >> u & 1) continue;
                unsigned col = 0;
                for (int i = 0; i < depth; ++i) col = col << 1 | (adj[u] >> p.chosen[i] & 1u);
                if (col > best) continue;
                if (col < best) {
                    best = col;
                    next.clear();
                }
                Prefix q = p;
                q.chosen[depth] = static_cast<std::int8_t>(u);
                q.used |= 1u << u;
                next.push_back(q);
            }
        }
        code = code << depth | best;
        frontier.swap(next);
    }
    return code;
}

std::vector<Graph> enumerate_classes(int n, int threads) {
    if (n < 1 || n > kEnumerateLimit)
        throw std::invalid_argument("enumerate_classes: n must be in 1..7");
    const std::uint64_t total = std::uint64_t{1} << triangle_bit_count(n);
    std::vector<std::uint64_t> canonical;
    if (threads <= 1) {
        for (std::uint64_t mask = 0; mask < total; ++mask)
            if (is_canonical_mask(n, mask)) canonical.push_back(mask);
    } else {
        const auto worker_count = static_cast<std::uint64_t>(threads);
        std::vector<std::vector<std::uint64_t>> parts(worker_count);
        std::vector<std::thread> pool;
        pool.reserve(worker_count);
        const std::uint64_t chunk = (total + worker_count - 1) / worker_count;
        for (std::uint64_t t = 0; t < worker_count; ++t) {
            pool.emplace_back([&, t] {
                const std::uint64_t lo = t * chunk;
                const std::uint64_t hi = std::min(total, lo + chunk);
                for (std::uint64_t mask = lo; mask < hi; ++mask)
                    if (is_canonical_mask(n, mask)) parts[t].push_back(mask);
            });
        }
        for (auto& worker : pool) worker.join();
        for (auto& part : parts) canonical.insert(canonical.end(), part.begin(), part.end());
    }
    std::vector<Graph> classes;
    classes.reserve(canonical.size());
    for (std::uint64_t mask : canonical) classes.push_back(graph_from_mask(n, mask));
    return classes;
}

CensusRow census_row(int n, int threads) {
    CensusRow row;
    row.n = n;
    for (const Graph& g : enumerate_classes(n, threads)) {
        ++row.total;
        if (is_connected(g)) ++row.connected;
        if (is_tree(g)) ++row.trees;
        if (check_permissible(g).permissible) ++row.permissible;
    }
    return row;
}

}  // namespace permiso
