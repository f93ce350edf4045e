#pragma once

#include <istream>
#include <string>
#include <string_view>
#include <vector>

#include "error.hpp"
#include "graph.hpp"

namespace intpart::graph6 {

namespace detail {

inline constexpr int kBias = 63;

inline bool printable(char c) {
    const int v = static_cast<unsigned char>(c);
    return v >= kBias && v <= kBias + 63;
}

}  // namespace detail

/// Decodes one graph6 string. An optional ">>graph6<<" prefix and trailing newline are accepted.
inline Graph decode(std::string_view text) {
    using K = ParseError::Kind;
    constexpr std::string_view kPrefix = ">>graph6<<";
    if (text.substr(0, kPrefix.size()) == kPrefix) text.remove_prefix(kPrefix.size());
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);

    if (text.empty()) throw ParseError(K::BadHeader, "graph6: empty input");
    if (!detail::printable(text[0])) throw ParseError(K::BadHeader, "graph6: invalid order byte");

    std::size_t pos = 0;
    long n = 0;
    if (text[0] != '~') {
        n = text[0] - detail::kBias;
        pos = 1;
    } else {
        if (text.size() >= 2 && text[1] == '~') {
            throw ParseError(K::TooLarge, "graph6: 8-byte order header exceeds 64 vertices");
        }
        if (text.size() < 4) throw ParseError(K::BadHeader, "graph6: truncated order header");
        for (std::size_t i = 1; i <= 3; ++i) {
            if (!detail::printable(text[i])) throw ParseError(K::BadHeader, "graph6: invalid order byte");
            n = (n << 6) | (text[i] - detail::kBias);
        }
        if (n < 63) throw ParseError(K::BadHeader, "graph6: non-canonical long order header");
        pos = 4;
    }
    if (n > kMaxVertices) {
        throw ParseError(K::TooLarge, "graph6: order " + std::to_string(n) + " exceeds 64");
    }

    const long bits = n * (n - 1) / 2;
    const std::size_t body_len = static_cast<std::size_t>((bits + 5) / 6);
    const std::string_view body = text.substr(pos);
    if (body.size() < body_len) throw ParseError(K::TruncatedBody, "graph6: truncated adjacency body");
    if (body.size() > body_len) throw ParseError(K::BadBody, "graph6: trailing bytes after adjacency body");

    Graph g(static_cast<int>(n));
    long k = 0;
    for (std::size_t b = 0; b < body_len; ++b) {
        if (!detail::printable(body[b])) throw ParseError(K::BadBody, "graph6: invalid body byte");
        const int chunk = body[b] - detail::kBias;
        for (int s = 5; s >= 0; --s, ++k) {
            const bool set = (chunk >> s) & 1;
            if (k >= bits) {
                if (set) throw ParseError(K::BadBody, "graph6: nonzero padding bits");
                continue;
            }
            if (!set) continue;
            // bit k enumerates the upper triangle column by column: (0,1),(0,2),(1,2),(0,3),...
            int j = 1;
            long base = 0;
            while (base + j <= k) {
                base += j;
                ++j;
            }
            g.add_edge(static_cast<int>(k - base), j);
        }
    }
    return g;
}

inline std::string encode(const Graph& g) {
    const int n = g.order();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + detail::kBias));
    } else {
        out.push_back('~');
        for (int s = 12; s >= 0; s -= 6) out.push_back(static_cast<char>(((n >> s) & 63) + detail::kBias));
    }
    int chunk = 0;
    int filled = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            chunk = (chunk << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(chunk + detail::kBias));
                chunk = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0) out.push_back(static_cast<char>((chunk << (6 - filled)) + detail::kBias));
    return out;
}

/// Reads one graph per nonblank line.
inline std::vector<Graph> read_all(std::istream& in) {
    std::vector<Graph> out;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line == "\r") continue;
        out.push_back(decode(line));
    }
    return out;
}

}  // namespace intpart::graph6
