#pragma once

#include <bit>
#include <cstdint>
#include <utility>
#include <vector>

#include <intpart/graph.hpp>

namespace fixtures {

// Two copies of K4 with one edge subdivided each; the subdivision vertices 4 and 9 are joined
// by the only bridge.
inline intpart::Graph bridged_double_k4() {
    intpart::Graph g(10);
    for (int base : {0, 5}) {
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j)
                if (!(i == 0 && j == 1)) g.add_edge(base + i, base + j);
        g.add_edge(base + 4, base);
        g.add_edge(base + 4, base + 1);
    }
    g.add_edge(4, 9);
    return g;
}

// Reference edge list, kept independent of Graph's own bookkeeping.
inline std::vector<std::pair<int, int>> edge_pairs(const intpart::Graph& g) {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < g.order(); ++u)
        for (int v = u + 1; v < g.order(); ++v)
            if (g.adjacent(u, v)) out.emplace_back(u, v);
    return out;
}

// Straight from the definitions: a vertex on A needs num/den of its neighbors on its own side
// (internal) or the other side (external); a vertex on B needs (den-num)/den.
inline bool satisfies(const intpart::Graph& g, std::uint64_t a, bool internal, long num, long den) {
    const int n = g.order();
    for (int v = 0; v < n; ++v) {
        long deg = 0;
        long same = 0;
        for (int u = 0; u < n; ++u) {
            if (u == v || !g.adjacent(u, v)) continue;
            ++deg;
            same += ((a >> u) & 1U) == ((a >> v) & 1U);
        }
        const long t = (a >> v) & 1U ? num : den - num;
        const long count = internal ? same : deg - same;
        if (count * den < t * deg) return false;
    }
    return true;
}

// Brute-force search over every nontrivial side A using the same definitions. Returns the lowest
// qualifying mask, or 0.
inline std::uint64_t brute_force_partition(const intpart::Graph& g, bool internal, long num, long den,
                                           int size_a = -1) {
    const int n = g.order();
    const auto edges = edge_pairs(g);
    std::vector<int> deg(n, 0);
    for (const auto& [u, v] : edges) {
        ++deg[u];
        ++deg[v];
    }
    const std::uint64_t full = n == 64 ? ~0ULL : (1ULL << n) - 1;
    for (std::uint64_t a = 1; a < full; ++a) {
        if (size_a >= 0 && std::popcount(a) != size_a) continue;
        std::vector<int> same(n, 0);
        for (const auto& [u, v] : edges) {
            if (((a >> u) & 1U) == ((a >> v) & 1U)) {
                ++same[u];
                ++same[v];
            }
        }
        bool ok = true;
        for (int v = 0; v < n && ok; ++v) {
            const long t = (a >> v) & 1U ? num : den - num;
            const long count = internal ? same[v] : deg[v] - same[v];
            ok = count * den >= t * deg[v];
        }
        if (ok) return a;
    }
    return 0;
}

// Minimum cut over all sides of size k, by enumerating every mask.
inline int brute_force_min_cut(const intpart::Graph& g, int k) {
    const auto edges = edge_pairs(g);
    int best = -1;
    for (std::uint64_t a = 0; a < (1ULL << g.order()); ++a) {
        if (std::popcount(a) != k) continue;
        int cut = 0;
        for (const auto& [u, v] : edges) cut += ((a >> u) & 1U) != ((a >> v) & 1U);
        if (best < 0 || cut < best) best = cut;
    }
    return best;
}

}  // namespace fixtures
