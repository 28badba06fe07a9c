#include "permiso/uid.hpp"

#include <stdexcept>
#include <thread>

#include "permiso/degree_profile.hpp"

namespace permiso {

Uid generate_uid(const Graph& g, int root) {
    if (root < 0 || root >= g.n())
        throw std::invalid_argument("generate_uid: root out of range");
    Uid uid;
    uid.root = root;
    uid.tokens.push_back({root, g.degree(root)});
    uid.tokens.push_back({kSeparator, kSeparator});
    std::vector<char> expanded(g.n(), 0);
    int remaining = g.n();
    std::vector<int> frontier{root};
    std::vector<int> next;
    while (remaining > 0) {
        if (frontier.empty())
            throw std::invalid_argument("generate_uid: graph is not connected");
        next.clear();
        for (int x : frontier) {
            if (expanded[x]) {
                uid.tokens.push_back({x, kAlreadyExpanded});
                continue;
            }
            expanded[x] = 1;
            --remaining;
            for (auto [y, dy] : compute_dsv(g, x).entries) {
                uid.tokens.push_back({y, dy});
                next.push_back(y);
            }
        }
        uid.tokens.push_back({kSeparator, kSeparator});
        frontier.swap(next);
    }
    return uid;
}

std::vector<int> uid_degree_signature(const Uid& u) {
    std::vector<int> signature;
    signature.reserve(u.tokens.size());
    for (const UidToken& t : u.tokens) signature.push_back(t.degree);
    return signature;
}

std::vector<Uid> generate_all_uids(const Graph& g, int threads) {
    std::vector<Uid> uids(g.n());
    if (threads <= 1 || g.n() <= 1) {
        for (int v = 0; v < g.n(); ++v) uids[v] = generate_uid(g, v);
        return uids;
    }
    threads = std::min(threads, g.n());
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (int t = 0; t < threads; ++t) {
        pool.emplace_back([&, t] {
            for (int v = t; v < g.n(); v += threads) uids[v] = generate_uid(g, v);
        });
    }
    for (auto& worker : pool) worker.join();
    return uids;
}

}  // namespace permiso
