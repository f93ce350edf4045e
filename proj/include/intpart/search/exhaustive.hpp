#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "../graph.hpp"
#include "../partition.hpp"
#include "../ratio.hpp"
#include "outcome.hpp"

namespace intpart {

enum class PartitionKind { Internal, External };

/// What a pruned enumeration is looking for.
struct PartitionQuery {
    PartitionKind kind = PartitionKind::Internal;
    Ratio q = Ratio::half();
    std::optional<int> size_a;  // require |A| == size_a
    std::uint64_t node_budget = kDefaultNodeBudget;
};

namespace detail {

/// Vertex order for the enumeration: breadth-first from vertex 0, restarting at the lowest
/// unvisited vertex for each further component.
inline std::vector<int> bfs_order(const Graph& g) {
    std::vector<int> order;
    Mask seen = 0;
    for (int s = 0; s < g.order(); ++s) {
        if (seen & bit(s)) continue;
        seen |= bit(s);
        std::size_t head = order.size();
        order.push_back(s);
        while (head < order.size()) {
            const int v = order[head++];
            for_each_bit(g.neighbors(v) & ~seen, [&](int w) {
                seen |= bit(w);
                order.push_back(w);
            });
        }
    }
    return order;
}

/// Depth-first enumeration of two-sided splits with per-vertex degree thresholds. A branch dies as
/// soon as some decided vertex cannot reach its threshold even if every undecided neighbor lands
/// on the side it counts.
class PartitionEnumerator {
public:
    PartitionEnumerator(const Graph& g, const PartitionQuery& query) : g_(g), query_(query), n_(g.order()) {
        const Ratio qa = query.q;
        const Ratio qb = query.q.complement();
        for (int v = 0; v < n_; ++v) {
            const long deg = g.degree(v);
            need_a_[v] = static_cast<int>((qa.num() * deg + qa.den() - 1) / qa.den());
            need_b_[v] = static_cast<int>((qb.num() * deg + qb.den() - 1) / qb.den());
        }
        order_ = bfs_order(g);
        const bool half = query.q == Ratio::half();
        fix_first_ = half && (!query.size_a || 2 * *query.size_a == n_);
    }

    /// Calls fn(Mask a) for every qualifying split; fn returns false to stop.
    /// Returns false if the node budget ran out.
    template <class Fn>
    bool run(Fn&& fn) {
        nodes_ = 0;
        stopped_ = false;
        budget_hit_ = false;
        if (n_ < 2) return true;
        if (query_.size_a && (*query_.size_a <= 0 || *query_.size_a >= n_)) return true;
        descend(0, 0, 0, g_.vertices(), fn);
        return !budget_hit_;
    }

    std::uint64_t nodes() const noexcept { return nodes_; }

private:
    // Neighbors of v that count toward its threshold, given that v sits on side A (or B).
    Mask counting_side(bool v_in_a, Mask a, Mask b) const {
        const bool own = query_.kind == PartitionKind::Internal;
        return (v_in_a == own) ? a : b;
    }

    bool can_reach(int v, bool v_in_a, Mask a, Mask b, Mask undecided) const {
        const int need = v_in_a ? need_a_[v] : need_b_[v];
        return popcount(g_.neighbors(v) & (counting_side(v_in_a, a, b) | undecided)) >= need;
    }

    // After placing x, only x and its decided neighbors on the side that x does not count for can break.
    bool consistent(int x, bool x_in_a, Mask a, Mask b, Mask undecided) const {
        if (!can_reach(x, x_in_a, a, b, undecided)) return false;
        const bool internal = query_.kind == PartitionKind::Internal;
        // internal: neighbors on the other side lost a potential own-side neighbor;
        // external: neighbors on the same side lost a potential other-side neighbor.
        const bool hurt_in_a = internal ? !x_in_a : x_in_a;
        const Mask hurt = g_.neighbors(x) & (hurt_in_a ? a : b);
        Mask m = hurt;
        while (m) {
            const int w = lowest(m);
            m &= m - 1;
            if (!can_reach(w, hurt_in_a, a, b, undecided)) return false;
        }
        return true;
    }

    template <class Fn>
    void descend(std::size_t depth, Mask a, Mask b, Mask undecided, Fn& fn) {
        if (stopped_) return;
        if (depth == order_.size()) {
            if (a && b) {
                if (!fn(a)) stopped_ = true;
            }
            return;
        }
        const int x = order_[depth];
        const Mask rest = undecided & ~bit(x);
        for (int side = 0; side < 2; ++side) {
            const bool to_a = side == 0;
            if (!to_a && depth == 0 && fix_first_) break;
            if (++nodes_ > query_.node_budget) {
                budget_hit_ = true;
                stopped_ = true;
                return;
            }
            const Mask na = to_a ? (a | bit(x)) : a;
            const Mask nb = to_a ? b : (b | bit(x));
            if (query_.size_a) {
                if (popcount(na) > *query_.size_a || popcount(nb) > n_ - *query_.size_a) continue;
            }
            if (!consistent(x, to_a, na, nb, rest)) continue;
            descend(depth + 1, na, nb, rest, fn);
            if (stopped_) return;
        }
    }

    const Graph& g_;
    PartitionQuery query_;
    int n_;
    std::array<int, kMaxVertices> need_a_{};
    std::array<int, kMaxVertices> need_b_{};
    std::vector<int> order_;
    bool fix_first_ = false;
    std::uint64_t nodes_ = 0;
    bool stopped_ = false;
    bool budget_hit_ = false;
};

}  // namespace detail

/// Exhaustive pruned search for a partition matching the query. Found partitions are verified
/// by classify; ExhaustedNone is a certificate of nonexistence.
inline SearchOutcome find_partition_exhaustive(const Graph& g, const PartitionQuery& query) {
    detail::Stopwatch clock;
    detail::PartitionEnumerator e(g, query);
    std::optional<Mask> hit;
    const bool complete = e.run([&](Mask a) {
        hit = a;
        return false;
    });
    SearchOutcome out;
    out.stats.nodes = e.nodes();
    if (hit) {
        out.status = SearchStatus::Found;
        out.partition = Partition(*hit, g.order());
        const auto report = classify(g, *out.partition, query.q);
        const bool ok = query.kind == PartitionKind::Internal ? report.flags.q_internal : report.flags.q_external;
        if (!ok) throw InvariantViolation("exhaustive search returned a partition that does not verify");
    } else if (!complete) {
        out.status = SearchStatus::BudgetExceeded;
    } else {
        out.status = SearchStatus::ExhaustedNone;
        out.certified = true;
    }
    out.stats.elapsed_us = clock.elapsed_us();
    return out;
}

/// Exhaustive q-internal search with the default vertex-0 symmetry reduction at q = 1/2.
inline SearchOutcome find_internal_exhaustive(const Graph& g, const Ratio& q = Ratio::half(),
                                              std::uint64_t node_budget = kDefaultNodeBudget) {
    PartitionQuery query;
    query.kind = PartitionKind::Internal;
    query.q = q;
    query.node_budget = node_budget;
    return find_partition_exhaustive(g, query);
}

/// Reference enumerator without pruning: tries every nontrivial mask in increasing order.
/// Test oracle for the pruned search; only for small n.
inline std::optional<Partition> find_partition_naive(const Graph& g, PartitionKind kind, const Ratio& q,
                                                     std::optional<int> size_a = std::nullopt) {
    const int n = g.order();
    if (n > 24) throw GuardError("naive partition enumeration limited to 24 vertices");
    const Mask all = g.vertices();
    for (Mask a = 1; a < all; ++a) {
        if (size_a && popcount(a) != *size_a) continue;
        const auto r = classify(g, Partition(a, n), q);
        if (kind == PartitionKind::Internal ? r.flags.q_internal : r.flags.q_external) return Partition(a, n);
    }
    return std::nullopt;
}

}  // namespace intpart
