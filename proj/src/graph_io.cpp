#include "permiso/graph_io.hpp"

#include <cctype>
#include <charconv>
#include <optional>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

namespace permiso {

namespace {

constexpr int kBias = 63;
constexpr int kMaxByte = 126;

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

std::vector<std::string> split_tokens(std::string_view s) {
    std::vector<std::string> tokens;
    size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
        size_t start = i;
        while (i < s.size() && !std::isspace(static_cast<unsigned char>(s[i]))) ++i;
        if (i > start) tokens.emplace_back(s.substr(start, i - start));
    }
    return tokens;
}

std::optional<long> parse_int(std::string_view token) {
    long value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size()) return std::nullopt;
    return value;
}

[[noreturn]] void fail_line(int lineno, const std::string& what) {
    throw std::invalid_argument("edge list: line " + std::to_string(lineno) + ": " + what);
}

}  // namespace

Graph parse_graph6(std::string_view record) {
    if (record.ends_with("\r\n"))
        record.remove_suffix(2);
    else if (record.ends_with("\n"))
        record.remove_suffix(1);
    if (record.empty()) throw std::invalid_argument("graph6: empty record");
    for (size_t i = 0; i < record.size(); ++i) {
        unsigned char c = static_cast<unsigned char>(record[i]);
        if (c < kBias || c > kMaxByte)
            throw std::invalid_argument("graph6: byte " + std::to_string(i) + " has value " +
                                        std::to_string(c) + ", outside 63..126");
    }
    int n = record[0] - kBias;
    if (n == 63) throw std::invalid_argument("graph6: long form (n > 62) not supported");
    int bits = n * (n - 1) / 2;
    size_t body = static_cast<size_t>((bits + 5) / 6);
    if (record.size() - 1 != body)
        throw std::invalid_argument("graph6: record has " + std::to_string(record.size() - 1) +
                                    " body bytes, expected " + std::to_string(body) + " for n=" +
                                    std::to_string(n));
    auto bit_at = [&](int k) { return (record[1 + k / 6] - kBias) >> (5 - k % 6) & 1; };
    std::vector<std::pair<int, int>> edges;
    int k = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++k)
            if (bit_at(k)) edges.emplace_back(i, j);
    for (; k < static_cast<int>(body * 6); ++k)
        if (bit_at(k)) throw std::invalid_argument("graph6: nonzero padding bit");
    return Graph::from_edges(n, edges);
}

std::string encode_graph6(const Graph& g) {
    int n = g.n();
    if (n > 62) throw std::invalid_argument("graph6: n > 62 not supported");
    int bits = n * (n - 1) / 2;
    std::string out(1 + static_cast<size_t>((bits + 5) / 6), static_cast<char>(kBias));
    out[0] = static_cast<char>(kBias + n);
    int k = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++k)
            if (g.has_edge(i, j)) out[1 + k / 6] += static_cast<char>(1 << (5 - k % 6));
    return out;
}

Graph parse_edge_list(std::string_view text) {
    std::vector<std::string> labels;
    bool have_labels = false;
    long n = -1;
    std::vector<std::pair<int, int>> edges;
    std::set<std::pair<int, int>> seen;
    int lineno = 0;
    size_t pos = 0;
    while (pos <= text.size()) {
        size_t end = text.find('\n', pos);
        std::string_view line =
            text.substr(pos, end == std::string_view::npos ? std::string_view::npos : end - pos);
        pos = end == std::string_view::npos ? text.size() + 1 : end + 1;
        ++lineno;
        std::string_view t = trim(line);
        if (!t.empty() && t.front() == '#') {
            std::string_view rest = trim(t.substr(1));
            if (rest.starts_with("labels:")) {
                labels = split_tokens(rest.substr(7));
                have_labels = true;
            }
            continue;
        }
        if (size_t hash = t.find('#'); hash != std::string_view::npos) t = trim(t.substr(0, hash));
        if (t.empty()) continue;
        std::vector<std::string> tokens = split_tokens(t);
        if (n < 0) {
            if (tokens.size() != 1) fail_line(lineno, "expected the vertex count alone");
            auto value = parse_int(tokens[0]);
            if (!value || *value < 0) fail_line(lineno, "invalid vertex count '" + tokens[0] + "'");
            n = *value;
            continue;
        }
        if (tokens.size() != 2) fail_line(lineno, "expected 'u v'");
        auto u = parse_int(tokens[0]);
        auto v = parse_int(tokens[1]);
        if (!u || !v) fail_line(lineno, "invalid vertex label");
        if (*u < 1 || *u > n || *v < 1 || *v > n)
            fail_line(lineno, "vertex label out of range 1.." + std::to_string(n));
        if (*u == *v) fail_line(lineno, "self-loop at vertex " + tokens[0]);
        std::pair<int, int> key = std::minmax(static_cast<int>(*u), static_cast<int>(*v));
        if (!seen.insert(key).second)
            fail_line(lineno, "duplicate edge " + tokens[0] + " " + tokens[1]);
        edges.emplace_back(static_cast<int>(*u) - 1, static_cast<int>(*v) - 1);
    }
    if (n < 0) throw std::invalid_argument("edge list: missing vertex count");
    if (have_labels) {
        if (static_cast<long>(labels.size()) != n)
            throw std::invalid_argument("edge list: labels directive has " +
                                        std::to_string(labels.size()) + " entries for " +
                                        std::to_string(n) + " vertices");
        std::set<std::string> distinct(labels.begin(), labels.end());
        if (static_cast<long>(distinct.size()) != n)
            throw std::invalid_argument("edge list: labels directive has duplicate labels");
    } else {
        labels.reserve(static_cast<size_t>(n));
        for (long v = 1; v <= n; ++v) labels.push_back(std::to_string(v));
    }
    return Graph::from_edges(static_cast<int>(n), edges, std::move(labels));
}

}  // namespace permiso
