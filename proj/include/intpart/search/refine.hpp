#pragma once

#include <cstdint>

#include "../error.hpp"
#include "../graph.hpp"
#include "../partition.hpp"
#include "min_cut.hpp"
#include "outcome.hpp"

namespace intpart {

/// Moves vertices with outdegree > d/2 out of a side that is not d/2-cohesive until the partition
/// is internal (Found) or a side empties (ExhaustedNone for this start; not a certificate).
/// When neither side is cohesive, side B is drained first. Every move lowers the cut by >= 2.
inline SearchOutcome refine_to_internal(const Graph& g, const Partition& start) {
    check_partition(g, start);
    const int d = g.regular_degree();
    if (d < 0) throw ParameterError("refine_to_internal: graph is not regular");
    if (d % 2 != 0) throw ParameterError("refine_to_internal: degree must be even");
    if (start.trivial()) throw ParameterError("refine_to_internal: start partition is trivial");

    detail::Stopwatch clock;
    const int half = d / 2;
    const Mask all = g.vertices();
    Mask a = start.a;
    SearchOutcome out;
    for (;;) {
        const Mask b = all & ~a;
        if (!a || !b) {
            out.status = SearchStatus::ExhaustedNone;
            break;
        }
        const bool a_ok = min_internal_degree(g, a) >= half;
        const bool b_ok = min_internal_degree(g, b) >= half;
        if (a_ok && b_ok) {
            out.status = SearchStatus::Found;
            out.partition = Partition(a, g.order());
            break;
        }
        const Mask drain = !b_ok ? b : a;
        const Mask other = all & ~drain;
        int mover = -1;
        for (Mask m = drain; m; m &= m - 1) {
            const int v = lowest(m);
            if (g.degree_in(v, other) > half) {
                mover = v;
                break;
            }
        }
        if (mover < 0) throw InvariantViolation("refine_to_internal: non-cohesive side has no mover");
        a ^= bit(mover);
        ++out.stats.moves;
    }
    out.stats.elapsed_us = clock.elapsed_us();
    return out;
}

struct RefineStartOptions {
    std::uint64_t exact_subset_limit = 3'000'000;  // use the exact min-cut near-bisection up to this many subsets
    std::uint64_t seed = 0;                        // seed for the descent start
};

/// Minimum-cut near-bisection: exact when C(n, floor(n/2)) is within the limit, else swap descent.
inline Partition default_refine_start(const Graph& g, RefineStartOptions options = {}) {
    const int n = g.order();
    if (n < 2) throw ParameterError("refine start needs at least 2 vertices");
    const int k = n / 2;
    if (options.seed == 0 && binomial(n, k) <= options.exact_subset_limit) {
        return min_cut_exact(g, k, options.exact_subset_limit).partition;
    }
    return min_cut_descent(g, k, options.seed).partition;
}

}  // namespace intpart
