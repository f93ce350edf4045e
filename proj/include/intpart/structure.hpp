#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "error.hpp"
#include "graph.hpp"

namespace intpart {

struct GraphStructure {
    std::vector<VertexSet> components;  // ordered by lowest vertex
    std::vector<Edge> bridges;          // sorted
};

/// Vertices reachable from v inside the vertex set `within`.
inline Mask reachable(const Graph& g, int v, Mask within) {
    Mask seen = bit(v) & within;
    Mask frontier = seen;
    while (frontier) {
        Mask next = 0;
        for_each_bit(frontier, [&](int u) { next |= g.neighbors(u); });
        frontier = next & within & ~seen;
        seen |= frontier;
    }
    return seen;
}

inline std::vector<VertexSet> connected_components(const Graph& g, Mask within) {
    std::vector<VertexSet> out;
    Mask left = within;
    while (left) {
        const Mask c = reachable(g, lowest(left), left);
        out.emplace_back(c);
        left &= ~c;
    }
    return out;
}

inline std::vector<VertexSet> connected_components(const Graph& g) {
    return connected_components(g, g.vertices());
}

inline bool is_connected(const Graph& g) { return g.order() == 0 || connected_components(g).size() == 1; }

namespace detail {

struct LowLink {
    const Graph& g;
    std::array<int, kMaxVertices> disc{};
    std::array<int, kMaxVertices> low{};
    int timer = 0;
    std::vector<Edge> bridges;

    explicit LowLink(const Graph& graph) : g(graph) { disc.fill(-1); }

    void dfs(int v, int parent) {
        disc[v] = low[v] = timer++;
        for_each_bit(g.neighbors(v), [&](int w) {
            if (w == parent) return;  // simple graph: a single parent edge
            if (disc[w] < 0) {
                dfs(w, v);
                low[v] = std::min(low[v], low[w]);
                if (low[w] > disc[v]) bridges.emplace_back(v, w);
            } else {
                low[v] = std::min(low[v], disc[w]);
            }
        });
    }
};

}  // namespace detail

/// Connected components and bridges (Tarjan low-link).
inline GraphStructure structure(const Graph& g) {
    GraphStructure out;
    out.components = connected_components(g);
    detail::LowLink ll(g);
    for (int v = 0; v < g.order(); ++v) {
        if (ll.disc[v] < 0) ll.dfs(v, -1);
    }
    out.bridges = std::move(ll.bridges);
    std::sort(out.bridges.begin(), out.bridges.end());
    return out;
}

inline bool is_bridge(const Graph& g, Edge e) {
    if (!g.adjacent(e.u, e.v)) return false;
    Graph h = g;
    h.remove_edge(e.u, e.v);
    return !(reachable(h, e.u, h.vertices()) & bit(e.v));
}

namespace detail {

class IndependentSetSearch {
public:
    explicit IndependentSetSearch(const Graph& g) : g_(g) {}

    Mask run() {
        best_ = 0;
        best_size_ = 0;
        expand(g_.vertices(), 0, 0);
        return best_;
    }

private:
    // Upper bound: greedy clique cover of the candidate set (each clique contributes at most one vertex).
    int clique_cover_bound(Mask cand) const {
        int cliques = 0;
        while (cand) {
            const int v = lowest(cand);
            Mask clique = bit(v);
            Mask pool = cand & g_.neighbors(v);
            while (pool) {
                const int w = lowest(pool);
                clique |= bit(w);
                pool &= g_.neighbors(w);
            }
            cand &= ~clique;
            ++cliques;
        }
        return cliques;
    }

    void expand(Mask cand, Mask chosen, int size) {
        // Vertices with no remaining candidate neighbor are always taken.
        for (;;) {
            Mask free = 0;
            for_each_bit(cand, [&](int v) {
                if (!(g_.neighbors(v) & cand)) free |= bit(v);
            });
            if (!free) break;
            chosen |= free;
            size += popcount(free);
            cand &= ~free;
        }
        if (size > best_size_) {
            best_size_ = size;
            best_ = chosen;
        }
        if (!cand) return;
        if (size + clique_cover_bound(cand) <= best_size_) return;

        int pivot = lowest(cand);
        int best_deg = -1;
        for_each_bit(cand, [&](int v) {
            const int dv = popcount(g_.neighbors(v) & cand);
            if (dv > best_deg) {
                best_deg = dv;
                pivot = v;
            }
        });
        expand(cand & ~bit(pivot) & ~g_.neighbors(pivot), chosen | bit(pivot), size + 1);
        expand(cand & ~bit(pivot), chosen, size);
    }

    const Graph& g_;
    Mask best_ = 0;
    int best_size_ = 0;
};

}  // namespace detail

/// Maximum independent set by branch and bound (clique-cover bound). Guarded to n <= max_order.
inline VertexSet max_independent_set(const Graph& g, int max_order = 40) {
    if (g.order() > max_order) {
        throw GuardError("max_independent_set: order " + std::to_string(g.order()) + " exceeds guard " +
                         std::to_string(max_order));
    }
    return VertexSet(detail::IndependentSetSearch(g).run());
}

inline bool is_independent(const Graph& g, Mask s) {
    bool ok = true;
    for_each_bit(s, [&](int v) { ok = ok && !(g.neighbors(v) & s); });
    return ok;
}

/// 2-coloring check.
inline bool is_bipartite(const Graph& g) {
    std::array<int, kMaxVertices> color{};
    color.fill(-1);
    for (int s = 0; s < g.order(); ++s) {
        if (color[s] >= 0) continue;
        color[s] = 0;
        std::vector<int> stack{s};
        while (!stack.empty()) {
            const int v = stack.back();
            stack.pop_back();
            bool ok = true;
            for_each_bit(g.neighbors(v), [&](int w) {
                if (color[w] < 0) {
                    color[w] = 1 - color[v];
                    stack.push_back(w);
                } else if (color[w] == color[v]) {
                    ok = false;
                }
            });
            if (!ok) return false;
        }
    }
    return true;
}

}  // namespace intpart
