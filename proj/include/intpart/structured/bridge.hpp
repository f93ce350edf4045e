#pragma once

#include <algorithm>
#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "../error.hpp"
#include "../graph.hpp"
#include "../partition.hpp"
#include "../structure.hpp"
#include "edge_coloring.hpp"

namespace intpart {

enum class BridgeRule {
    AddEdge,            // degree-2 pair not adjacent: join them, side finished
    CommonNeighbor,     // adjacent pair with a shared third neighbor w: drop pair, w and w's last neighbor
    DistinctNeighbors,  // adjacent pair with distinct third neighbors: drop the pair
};

inline std::string to_string(BridgeRule r) {
    switch (r) {
        case BridgeRule::AddEdge: return "add_edge";
        case BridgeRule::CommonNeighbor: return "common_neighbor";
        case BridgeRule::DistinctNeighbors: return "distinct_neighbors";
    }
    return "?";
}

/// One loop iteration of the decomposition, in original vertex labels.
struct BridgeLogEntry {
    int side = 1;                  // 1 or 2
    BridgeRule rule = BridgeRule::AddEdge;
    Edge degree_two;               // the two degree-2 vertices when the rule fired
    std::vector<int> deleted;      // vertices removed by this rule
    Mask degree_two_after = 0;     // degree-2 vertices left afterwards (0 once the side is cubic)
};

/// Result of eliminating one bridge of a cubic graph: two smaller cubic graphs, each containing
/// exactly one edge that is not in the original graph.
struct BridgeDecomposition {
    Edge bridge;                          // (b1, b2) with b1 < b2
    Graph g1;
    Graph g2;
    std::vector<int> vertices1;           // local index -> original vertex
    std::vector<int> vertices2;
    Edge marked1;                         // local labels in g1
    Edge marked2;                         // local labels in g2
    std::vector<std::pair<int, int>> deleted_pairs;  // original labels, in deletion order
    std::vector<BridgeLogEntry> log;
};

namespace detail {

inline Mask degree_two_vertices(const Graph& h, Mask side) {
    Mask out = 0;
    for_each_bit(side, [&](int v) {
        if (h.degree_in(v, side) == 2) out |= bit(v);
    });
    return out;
}

// Runs the loop on one side; `h` holds the current edges (original labels) restricted to `side`.
inline void reduce_side(Graph& h, Mask& side, int side_id, BridgeDecomposition& dec, Edge& marked) {
    for (;;) {
        Mask two = degree_two_vertices(h, side);
        if (popcount(two) != 2) {
            throw InvariantViolation("bridge decomposition: side " + std::to_string(side_id) + " has " +
                                     std::to_string(popcount(two)) + " degree-2 vertices");
        }
        const int x = lowest(two);
        const int y = lowest(two & (two - 1));
        BridgeLogEntry entry;
        entry.side = side_id;
        entry.degree_two = Edge(x, y);
        if (!h.adjacent(x, y)) {
            h.add_edge(x, y);
            marked = Edge(x, y);
            entry.rule = BridgeRule::AddEdge;
            dec.log.push_back(entry);
            return;
        }
        const int xn = lowest(h.neighbors(x) & side & ~bit(y));
        const int yn = lowest(h.neighbors(y) & side & ~bit(x));
        side &= ~(bit(x) | bit(y));
        dec.deleted_pairs.emplace_back(x, y);
        entry.deleted = {x, y};
        if (xn == yn) {
            const int w = xn;
            const Mask rest = h.neighbors(w) & side & ~bit(x) & ~bit(y);
            if (popcount(rest) != 1) throw InvariantViolation("bridge decomposition: common neighbor is not cubic");
            const int z = lowest(rest);
            side &= ~(bit(w) | bit(z));
            dec.deleted_pairs.emplace_back(w, z);
            entry.deleted.push_back(w);
            entry.deleted.push_back(z);
            entry.rule = BridgeRule::CommonNeighbor;
        } else {
            entry.rule = BridgeRule::DistinctNeighbors;
        }
        entry.degree_two_after = degree_two_vertices(h, side);
        dec.log.push_back(entry);
        if (!side) throw InvariantViolation("bridge decomposition: side emptied");
    }
}

}  // namespace detail

/// Eliminates `bridge` from cubic g: deletes its endpoints, then per side repeatedly applies the
/// three rules (join a non-adjacent degree-2 pair; otherwise remove the pair, plus their common
/// neighbor and that neighbor's last neighbor when they share one) until the side is cubic.
inline BridgeDecomposition bridge_decompose_cubic(const Graph& g, Edge bridge) {
    if (g.regular_degree() != 3) throw ParameterError("bridge_decompose_cubic: graph is not cubic");
    if (!is_bridge(g, bridge)) throw ParameterError("bridge_decompose_cubic: edge is not a bridge");
    BridgeDecomposition dec;
    dec.bridge = bridge;
    Graph h = g;
    h.remove_edge(bridge.u, bridge.v);
    const Mask side1_full = reachable(h, bridge.u, h.vertices());
    const Mask side2_full = reachable(h, bridge.v, h.vertices());
    Mask side1 = side1_full & ~bit(bridge.u);
    Mask side2 = side2_full & ~bit(bridge.v);
    detail::reduce_side(h, side1, 1, dec, dec.marked1);
    detail::reduce_side(h, side2, 2, dec, dec.marked2);

    const auto finish = [&](Mask side, std::vector<int>& labels, Graph& out, Edge& marked) {
        labels.clear();
        for_each_bit(side, [&](int v) { labels.push_back(v); });
        out = h.induced(side);
        const auto local = [&](int v) {
            return static_cast<int>(std::lower_bound(labels.begin(), labels.end(), v) - labels.begin());
        };
        marked = Edge(local(marked.u), local(marked.v));
        if (out.regular_degree() != 3) throw InvariantViolation("bridge decomposition: part is not cubic");
    };
    finish(side1, dec.vertices1, dec.g1, dec.marked1);
    finish(side2, dec.vertices2, dec.g2, dec.marked2);
    return dec;
}

namespace detail {

// Orientation search for the composed bisection. Variables: flip of each part's bisection,
// side of b1 (b2 opposite), and side of the first vertex of each deleted pair (partner opposite).
// The first value tried for every variable is the default (no flip, lower index on A).
class CompositionSearch {
public:
    CompositionSearch(const Graph& g, const BridgeDecomposition& dec, Mask part1_a, Mask part2_a)
        : g_(g) {
        Mask v1 = 0;
        Mask v2 = 0;
        for (int v : dec.vertices1) v1 |= bit(v);
        for (int v : dec.vertices2) v2 |= bit(v);
        groups_.push_back({part1_a, v1 & ~part1_a});
        groups_.push_back({part2_a, v2 & ~part2_a});
        groups_.push_back({bit(dec.bridge.u), bit(dec.bridge.v)});
        for (const auto& [x, y] : dec.deleted_pairs) {
            const int lo = std::min(x, y);
            const int hi = std::max(x, y);
            groups_.push_back({bit(lo), bit(hi)});
        }
    }

    std::optional<Mask> run() {
        if (descend(0, 0, 0)) return result_;
        return std::nullopt;
    }

private:
    struct Group {
        Mask first;   // goes to A by default
        Mask second;  // goes to B by default
    };

    bool settled_ok(Mask a, Mask assigned) const {
        const Mask b = assigned & ~a;
        bool ok = true;
        for_each_bit(assigned, [&](int v) {
            if (!ok || (g_.neighbors(v) & ~assigned)) return;
            const int other = g_.degree_in(v, (a >> v) & 1U ? b : a);
            ok = 2 * other >= g_.degree(v);
        });
        return ok;
    }

    bool descend(std::size_t i, Mask a, Mask assigned) {
        if (i == groups_.size()) {
            result_ = a;
            return true;
        }
        const auto& grp = groups_[i];
        const Mask next_assigned = assigned | grp.first | grp.second;
        for (int flip = 0; flip < 2; ++flip) {
            const Mask na = a | (flip ? grp.second : grp.first);
            if (settled_ok(na, next_assigned) && descend(i + 1, na, next_assigned)) return true;
        }
        return false;
    }

    const Graph& g_;
    std::vector<Group> groups_;
    Mask result_ = 0;
};

}  // namespace detail

/// External bisection of g assembled from class-1 colorings of both parts: each part is bisected
/// along the two colors not used by its marked edge, the bridge endpoints and every deleted pair
/// are split across the sides, and part flips / pair orientations are chosen (defaults first) so
/// that every vertex has at least two neighbors on the other side.
inline Partition compose_bisection_across_bridge(const Graph& g, const BridgeDecomposition& dec) {
    const auto part_bisection = [](const Graph& part, Edge marked, const std::vector<int>& labels) {
        const auto coloring = edge_color_cubic(part);
        if (coloring.verdict != EdgeClass::Class1) {
            throw InapplicableError("compose_bisection_across_bridge: a part is class-2");
        }
        const int mc = coloring.color_of(marked.u, marked.v);
        int c[2];
        int k = 0;
        for (int col = 0; col < 3; ++col)
            if (col != mc) c[k++] = col;
        const Partition local = bisection_from_two_colors(part, coloring, c[0], c[1], marked);
        Mask a = 0;
        for_each_bit(local.a, [&](int v) { a |= bit(labels[v]); });
        return a;
    };
    const Mask a1 = part_bisection(dec.g1, dec.marked1, dec.vertices1);
    const Mask a2 = part_bisection(dec.g2, dec.marked2, dec.vertices2);
    detail::CompositionSearch search(g, dec, a1, a2);
    const auto a = search.run();
    if (!a) throw InvariantViolation("compose_bisection_across_bridge: no orientation yields an external bisection");
    const Partition p(*a, g.order());
    const auto r = classify(g, p, Ratio::half());
    if (!r.flags.q_external || !r.flags.bisection) {
        throw InvariantViolation("compose_bisection_across_bridge: result is not an external bisection");
    }
    return p;
}

}  // namespace intpart
