#pragma once

#include <string>

#include "../error.hpp"
#include "../graph.hpp"
#include "../partition.hpp"
#include "../ratio.hpp"

namespace intpart {

enum class TransferDirection { InternalToExternal, ExternalToInternal };

namespace detail {

inline void require_exact(const Partition& p, const Ratio& q) {
    if (static_cast<long>(p.size_a()) * q.den() != q.num() * p.n) {
        throw ContractError("partition is not exact: |A| != q n");
    }
}

}  // namespace detail

/// Moves a partition across the complement and checks the guaranteed flags.
///
/// InternalToExternal: p is an exact q-internal partition of g (|A| = qn); the same split is
/// (1-q)-external in the complement. ExternalToInternal: p is a (1-q)-external partition of g with
/// |A| = qn, and q * d_comp(v) is an integer for every v; the same split is q-internal in the
/// complement. Returns the complement's report (at 1-q and q respectively).
inline PartitionReport complement_transfer(const Graph& g, const Partition& p, const Ratio& q,
                                           TransferDirection direction) {
    check_partition(g, p);
    if (p.trivial()) throw ContractError("partition is trivial");
    detail::require_exact(p, q);
    const Graph comp = complement(g);
    if (direction == TransferDirection::InternalToExternal) {
        const auto before = classify(g, p, q);
        if (!before.flags.q_internal) {
            throw ContractError("partition is not q-internal", before.first_internal_violation);
        }
        auto after = classify(comp, p, q.complement());
        if (!after.flags.q_external) {
            throw InvariantViolation("exact q-internal partition is not (1-q)-external in the complement at vertex " +
                                     std::to_string(after.first_external_violation));
        }
        return after;
    }
    const auto before = classify(g, p, q.complement());
    if (!before.flags.q_external) {
        throw ContractError("partition is not (1-q)-external", before.first_external_violation);
    }
    for (int v = 0; v < comp.order(); ++v) {
        if (!q.integral_at(comp.degree(v))) throw ContractError("complement partition is not integral", v);
    }
    auto after = classify(comp, p, q);
    if (!after.flags.q_internal) {
        throw InvariantViolation("integral exact (1-q)-external partition is not q-internal in the complement at vertex " +
                                 std::to_string(after.first_internal_violation));
    }
    return after;
}

}  // namespace intpart
