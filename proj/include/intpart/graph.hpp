#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"

namespace intpart {

using Mask = std::uint64_t;

inline constexpr int kMaxVertices = 64;

/// Mask with the lowest n bits set.
constexpr Mask low_bits(int n) noexcept {
    return n >= 64 ? ~Mask{0} : ((Mask{1} << n) - 1);
}

constexpr Mask bit(int v) noexcept { return Mask{1} << v; }

constexpr int popcount(Mask m) noexcept { return std::popcount(m); }

/// Index of the lowest set bit; m must be nonzero.
constexpr int lowest(Mask m) noexcept { return std::countr_zero(m); }

/// Calls fn(v) for every set bit v of m, lowest first.
template <class Fn>
constexpr void for_each_bit(Mask m, Fn&& fn) {
    while (m) {
        fn(lowest(m));
        m &= m - 1;
    }
}

/// A set of vertices, stored as a bitmask over indices 0..63.
struct VertexSet {
    Mask mask = 0;

    constexpr VertexSet() = default;
    constexpr explicit VertexSet(Mask m) : mask(m) {}

    constexpr int size() const noexcept { return popcount(mask); }
    constexpr bool empty() const noexcept { return mask == 0; }
    constexpr bool contains(int v) const noexcept { return (mask >> v) & 1U; }

    std::vector<int> vertices() const {
        std::vector<int> out;
        for_each_bit(mask, [&](int v) { out.push_back(v); });
        return out;
    }

    friend constexpr bool operator==(VertexSet, VertexSet) = default;
};

/// Undirected edge with u < v.
struct Edge {
    int u = 0;
    int v = 0;

    constexpr Edge() = default;
    constexpr Edge(int a, int b) : u(a < b ? a : b), v(a < b ? b : a) {}

    friend constexpr bool operator==(const Edge&, const Edge&) = default;
    friend constexpr auto operator<=>(const Edge&, const Edge&) = default;
};

/// Simple undirected graph on at most 64 vertices. Row i of the adjacency is the neighbor mask of i.
class Graph {
public:
    Graph() = default;

    explicit Graph(int n) : n_(n) {
        if (n < 0 || n > kMaxVertices) {
            throw ParameterError("graph order " + std::to_string(n) + " outside 0.." +
                                 std::to_string(kMaxVertices));
        }
    }

    Graph(int n, const std::vector<Edge>& edges) : Graph(n) {
        for (const auto& e : edges) add_edge(e.u, e.v);
    }

    /// Builds a graph from raw rows, validating symmetry, loops and width.
    static Graph from_rows(int n, const std::vector<Mask>& rows) {
        Graph g(n);
        if (static_cast<int>(rows.size()) != n) throw DimensionError("row count does not match order");
        for (int i = 0; i < n; ++i) g.adj_[i] = rows[i];
        if (auto why = g.validate(); !why.empty()) throw ParameterError(why);
        return g;
    }

    int order() const noexcept { return n_; }
    Mask vertices() const noexcept { return low_bits(n_); }

    Mask neighbors(int v) const noexcept { return adj_[v]; }
    int degree(int v) const noexcept { return popcount(adj_[v]); }
    bool adjacent(int u, int v) const noexcept { return (adj_[u] >> v) & 1U; }

    /// d_S(v): number of neighbors of v inside s.
    int degree_in(int v, Mask s) const noexcept { return popcount(adj_[v] & s); }

    void add_edge(int u, int v) {
        check_vertex(u);
        check_vertex(v);
        if (u == v) throw ParameterError("self-loop at vertex " + std::to_string(u));
        adj_[u] |= bit(v);
        adj_[v] |= bit(u);
    }

    void remove_edge(int u, int v) {
        check_vertex(u);
        check_vertex(v);
        adj_[u] &= ~bit(v);
        adj_[v] &= ~bit(u);
    }

    int edge_count() const noexcept {
        int total = 0;
        for (int i = 0; i < n_; ++i) total += degree(i);
        return total / 2;
    }

    std::vector<Edge> edges() const {
        std::vector<Edge> out;
        for (int i = 0; i < n_; ++i) {
            for_each_bit(adj_[i] & ~low_bits(i + 1), [&](int j) { out.emplace_back(i, j); });
        }
        return out;
    }

    int min_degree() const noexcept {
        int best = n_ == 0 ? 0 : degree(0);
        for (int i = 1; i < n_; ++i) best = std::min(best, degree(i));
        return best;
    }

    int max_degree() const noexcept {
        int best = 0;
        for (int i = 0; i < n_; ++i) best = std::max(best, degree(i));
        return best;
    }

    /// Common degree if the graph is regular, otherwise -1. The empty graph counts as 0-regular.
    int regular_degree() const noexcept {
        if (n_ == 0) return 0;
        const int d = degree(0);
        for (int i = 1; i < n_; ++i) {
            if (degree(i) != d) return -1;
        }
        return d;
    }

    bool is_regular() const noexcept { return regular_degree() >= 0; }

    /// Empty string if the adjacency rows are a valid simple graph, else a description of the defect.
    std::string validate() const {
        const Mask all = vertices();
        for (int i = 0; i < n_; ++i) {
            if (adj_[i] & ~all) return "row " + std::to_string(i) + " has bits above n-1";
            if (adj_[i] & bit(i)) return "loop at vertex " + std::to_string(i);
            Mask m = adj_[i];
            while (m) {
                const int j = lowest(m);
                m &= m - 1;
                if (!((adj_[j] >> i) & 1U)) {
                    return "asymmetric edge " + std::to_string(i) + "-" + std::to_string(j);
                }
            }
        }
        for (int i = n_; i < kMaxVertices; ++i) {
            if (adj_[i] != 0) return "row beyond order is nonempty";
        }
        return {};
    }

    /// Subgraph induced by s, relabelled 0..|s|-1 in increasing vertex order.
    Graph induced(Mask s) const {
        std::array<int, kMaxVertices> index{};
        int k = 0;
        for_each_bit(s, [&](int v) { index[v] = k++; });
        Graph h(k);
        for_each_bit(s, [&](int v) {
            for_each_bit(adj_[v] & s, [&](int w) {
                if (v < w) h.add_edge(index[v], index[w]);
            });
        });
        return h;
    }

    friend bool operator==(const Graph& a, const Graph& b) {
        if (a.n_ != b.n_) return false;
        for (int i = 0; i < a.n_; ++i) {
            if (a.adj_[i] != b.adj_[i]) return false;
        }
        return true;
    }

private:
    void check_vertex(int v) const {
        if (v < 0 || v >= n_) {
            throw DimensionError("vertex " + std::to_string(v) + " outside graph of order " +
                                 std::to_string(n_));
        }
    }

    int n_ = 0;
    std::array<Mask, kMaxVertices> adj_{};
};

/// Complement graph: ij is an edge iff i != j and ij is not an edge of g.
inline Graph complement(const Graph& g) {
    const int n = g.order();
    std::vector<Mask> rows(n);
    for (int i = 0; i < n; ++i) rows[i] = ~g.neighbors(i) & g.vertices() & ~bit(i);
    return Graph::from_rows(n, rows);
}

/// Disjoint union; vertices of b are shifted by a.order().
inline Graph disjoint_union(const Graph& a, const Graph& b) {
    const int n = a.order() + b.order();
    if (n > kMaxVertices) throw ParameterError("disjoint union exceeds 64 vertices");
    Graph g(n);
    for (const auto& e : a.edges()) g.add_edge(e.u, e.v);
    for (const auto& e : b.edges()) g.add_edge(e.u + a.order(), e.v + a.order());
    return g;
}

/// Throws DimensionError unless every bit of s lies below g.order().
inline void check_within(const Graph& g, Mask s) {
    if (s & ~g.vertices()) {
        throw DimensionError("vertex set has bits outside graph of order " + std::to_string(g.order()));
    }
}

}  // namespace intpart
