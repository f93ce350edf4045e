#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "../error.hpp"
#include "../graph.hpp"
#include "../partition.hpp"

namespace intpart {

enum class EdgeClass { Class1, Class2 };

inline std::string to_string(EdgeClass c) { return c == EdgeClass::Class1 ? "Class1" : "Class2"; }

/// Proper d-edge-coloring of a d-regular graph (d = 3 or 4), or a Class2 verdict.
struct EdgeColoring {
    int degree = 0;
    EdgeClass verdict = EdgeClass::Class2;
    std::vector<Edge> edges;  // sorted
    std::vector<int> colors;  // parallel to edges; empty for Class2
    std::uint64_t nodes = 0;

    /// Color of edge uv, or -1 when absent/uncolored.
    int color_of(int u, int v) const {
        const Edge e(u, v);
        const auto it = std::lower_bound(edges.begin(), edges.end(), e);
        if (it == edges.end() || !(*it == e) || colors.empty()) return -1;
        return colors[static_cast<std::size_t>(it - edges.begin())];
    }

    bool is_proper(const Graph& g) const {
        if (colors.size() != edges.size()) return false;
        std::array<unsigned, kMaxVertices> used{};
        for (std::size_t i = 0; i < edges.size(); ++i) {
            const int c = colors[i];
            if (c < 0 || c >= degree || !g.adjacent(edges[i].u, edges[i].v)) return false;
            const unsigned m = 1U << c;
            if ((used[edges[i].u] & m) || (used[edges[i].v] & m)) return false;
            used[edges[i].u] |= m;
            used[edges[i].v] |= m;
        }
        return static_cast<int>(edges.size()) == g.edge_count();
    }
};

inline constexpr std::uint64_t kDefaultColoringBudget = 200'000'000ULL;

namespace detail {

class EdgeColorer {
public:
    EdgeColorer(const Graph& g, int d, std::uint64_t budget) : g_(g), d_(d), budget_(budget) {
        edges_ = g.edges();
        colors_.assign(edges_.size(), -1);
        for (std::size_t i = 0; i < edges_.size(); ++i) {
            incident_[edges_[i].u].push_back(static_cast<int>(i));
            incident_[edges_[i].v].push_back(static_cast<int>(i));
        }
    }

    bool run() {
        // Any proper coloring can be permuted so the edges at vertex 0 get colors 0..d-1.
        if (!edges_.empty()) {
            const int v = edges_.front().u;
            int c = 0;
            for (int e : incident_[v]) {
                if (!assign(e, c++)) return false;
            }
        }
        return search(static_cast<int>(edges_.size()) - remaining());
    }

    std::uint64_t nodes() const noexcept { return nodes_; }
    const std::vector<Edge>& edges() const noexcept { return edges_; }
    const std::vector<int>& colors() const noexcept { return colors_; }

private:
    int remaining() const {
        return static_cast<int>(std::count(colors_.begin(), colors_.end(), -1));
    }

    unsigned available(int e) const {
        const unsigned all = (1U << d_) - 1;
        return all & ~(used_[edges_[e].u] | used_[edges_[e].v]);
    }

    bool assign(int e, int c) {
        const unsigned m = 1U << c;
        if ((used_[edges_[e].u] & m) || (used_[edges_[e].v] & m)) return false;
        colors_[e] = c;
        used_[edges_[e].u] |= m;
        used_[edges_[e].v] |= m;
        return true;
    }

    void unassign(int e) {
        const unsigned m = 1U << colors_[e];
        used_[edges_[e].u] &= ~m;
        used_[edges_[e].v] &= ~m;
        colors_[e] = -1;
    }

    bool search(int colored) {
        if (colored == static_cast<int>(edges_.size())) return true;
        if (++nodes_ > budget_) throw BudgetError("edge coloring: node budget exhausted");
        // most constrained uncolored edge first
        int pick = -1;
        int fewest = d_ + 1;
        for (std::size_t e = 0; e < edges_.size(); ++e) {
            if (colors_[e] >= 0) continue;
            const int k = std::popcount(available(static_cast<int>(e)));
            if (k < fewest) {
                fewest = k;
                pick = static_cast<int>(e);
                if (k == 0) return false;
            }
        }
        unsigned avail = available(pick);
        while (avail) {
            const int c = std::countr_zero(avail);
            avail &= avail - 1;
            assign(pick, c);
            if (search(colored + 1)) return true;
            unassign(pick);
        }
        return false;
    }

    const Graph& g_;
    int d_;
    std::uint64_t budget_;
    std::uint64_t nodes_ = 0;
    std::vector<Edge> edges_;
    std::vector<int> colors_;
    std::array<unsigned, kMaxVertices> used_{};
    std::array<std::vector<int>, kMaxVertices> incident_{};
};

}  // namespace detail

/// Exhaustive backtracking d-edge-coloring (most-constrained edge first). Class2 is reported only
/// after the search space is exhausted, so it is a certificate.
inline EdgeColoring edge_color_cubic(const Graph& g, std::uint64_t budget = kDefaultColoringBudget) {
    const int d = g.regular_degree();
    if (d != 3 && d != 4) throw ParameterError("edge_color_cubic: graph must be 3- or 4-regular");
    detail::EdgeColorer colorer(g, d, budget);
    EdgeColoring out;
    out.degree = d;
    out.edges = colorer.edges();
    const bool ok = colorer.run();
    out.nodes = colorer.nodes();
    if (ok) {
        out.verdict = EdgeClass::Class1;
        out.colors = colorer.colors();
    }
    return out;
}

/// Bisection from the 2-factor formed by color classes c1 and c2: each (even) alternating cycle is
/// walked from its lowest vertex and its vertices are assigned A, B, A, ... along the cycle.
/// When `forbidden` is given, its color must differ from c1 and c2.
inline Partition bisection_from_two_colors(const Graph& g, const EdgeColoring& coloring, int c1, int c2,
                                           std::optional<Edge> forbidden = std::nullopt) {
    if (coloring.verdict != EdgeClass::Class1 || !coloring.is_proper(g)) {
        throw ParameterError("bisection_from_two_colors: coloring is not a proper class-1 coloring of g");
    }
    if (c1 == c2 || c1 < 0 || c2 < 0 || c1 >= coloring.degree || c2 >= coloring.degree) {
        throw ParameterError("bisection_from_two_colors: need two distinct valid colors");
    }
    if (forbidden) {
        const int fc = coloring.color_of(forbidden->u, forbidden->v);
        if (fc < 0) throw ParameterError("bisection_from_two_colors: forbidden edge is not in the graph");
        if (fc == c1 || fc == c2) {
            throw ParameterError("bisection_from_two_colors: forbidden edge carries one of the chosen colors");
        }
    }
    const int n = g.order();
    std::array<std::array<int, 2>, kMaxVertices> mate{};
    for (auto& m : mate) m = {-1, -1};
    for (std::size_t i = 0; i < coloring.edges.size(); ++i) {
        const int c = coloring.colors[i];
        if (c != c1 && c != c2) continue;
        const int slot = c == c1 ? 0 : 1;
        const auto& e = coloring.edges[i];
        mate[e.u][slot] = e.v;
        mate[e.v][slot] = e.u;
    }
    for (int v = 0; v < n; ++v) {
        if (mate[v][0] < 0 || mate[v][1] < 0) {
            throw InvariantViolation("bisection_from_two_colors: colors do not form a 2-factor");
        }
    }
    Mask a = 0;
    Mask seen = 0;
    for (int s = 0; s < n; ++s) {
        if (seen & bit(s)) continue;
        int v = s;
        int slot = 0;
        int len = 0;
        do {
            seen |= bit(v);
            if (len % 2 == 0) a |= bit(v);
            v = mate[v][slot];
            slot ^= 1;
            ++len;
        } while (v != s);
        if (len % 2 != 0) throw InvariantViolation("bisection_from_two_colors: odd alternating cycle");
    }
    return Partition(a, n);
}

}  // namespace intpart
