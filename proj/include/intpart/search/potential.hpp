#pragma once

#include <cstdint>

#include "../error.hpp"
#include "../graph.hpp"
#include "../partition.hpp"
#include "../ratio.hpp"

namespace intpart {

/// den * w(A,B), where w(A,B) = |E(A,B)| - q sum_{x in A} d(x) - (1-q) sum_{x in B} d(x).
/// With these weights every local maximum under single-vertex moves is q-external with q on side A.
inline long scaled_potential(const Graph& g, Mask a, const Ratio& q) {
    const Mask b = g.vertices() & ~a;
    long sum_a = 0;
    long sum_b = 0;
    for_each_bit(a, [&](int v) { sum_a += g.degree(v); });
    for_each_bit(b, [&](int v) { sum_b += g.degree(v); });
    return q.den() * static_cast<long>(cut_size(g, a)) - q.num() * sum_a - (q.den() - q.num()) * sum_b;
}

struct PotentialResult {
    Partition partition;
    std::uint64_t moves = 0;
    long final_potential = 0;  // den * w
    Mask isolated = 0;         // isolated vertices (left on side A)
};

/// Hill-climbs single-vertex moves that strictly increase w, starting from A = V and taking the
/// lowest-index improving vertex each step. A local maximum of w is q-external; without isolated
/// vertices it is also nontrivial.
inline PotentialResult find_q_external_potential(const Graph& g, const Ratio& q) {
    const int n = g.order();
    const long num = q.num();
    const long den = q.den();
    PotentialResult out;
    Mask a = g.vertices();
    long w = scaled_potential(g, a, q);
    for (int v = 0; v < n; ++v) {
        if (g.degree(v) == 0) out.isolated |= bit(v);
    }
    for (;;) {
        const Mask b = g.vertices() & ~a;
        int mover = -1;
        long gain = 0;
        for (int v = 0; v < n && mover < 0; ++v) {
            const long deg = g.degree(v);
            if (a & bit(v)) {
                // leaving A raises den*w by 2(num*deg - den*d_B(v))
                const long gv = 2 * (num * deg - den * g.degree_in(v, b));
                if (gv > 0) {
                    mover = v;
                    gain = gv;
                }
            } else {
                const long gv = 2 * ((den - num) * deg - den * g.degree_in(v, a));
                if (gv > 0) {
                    mover = v;
                    gain = gv;
                }
            }
        }
        if (mover < 0) break;
        a ^= bit(mover);
        const long next = scaled_potential(g, a, q);
        if (next != w + gain || next <= w) throw InvariantViolation("potential did not increase by the predicted gain");
        w = next;
        ++out.moves;
    }
    out.partition = Partition(a, n);
    out.final_potential = w;
    return out;
}

}  // namespace intpart
