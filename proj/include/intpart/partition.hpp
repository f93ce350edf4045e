#pragma once

#include <cstdint>
#include <cstdio>
#include <string>
#include <string_view>
#include <vector>

#include "error.hpp"
#include "graph.hpp"
#include "ratio.hpp"

namespace intpart {

/// Two-sided split of n vertices; side A is stored, side B is its complement.
struct Partition {
    Mask a = 0;
    int n = 0;

    Partition() = default;
    Partition(Mask side_a, int order) : a(side_a), n(order) {
        if (order < 0 || order > kMaxVertices) throw DimensionError("partition order outside 0..64");
        if (side_a & ~low_bits(order)) throw DimensionError("partition mask has bits above n-1");
    }

    Mask b() const noexcept { return low_bits(n) & ~a; }
    int size_a() const noexcept { return popcount(a); }
    int size_b() const noexcept { return n - popcount(a); }
    bool in_a(int v) const noexcept { return (a >> v) & 1U; }
    bool trivial() const noexcept { return a == 0 || a == low_bits(n); }

    /// Same split with the sides exchanged.
    Partition swapped() const { return Partition(b(), n); }

    /// "0x" followed by lowercase hex digits of the A mask.
    std::string hex() const {
        char buf[24];
        std::snprintf(buf, sizeof buf, "0x%llx", static_cast<unsigned long long>(a));
        return buf;
    }

    static Partition from_hex(std::string_view text, int order) {
        if (text.substr(0, 2) == "0x" || text.substr(0, 2) == "0X") text.remove_prefix(2);
        if (text.empty() || text.size() > 16) {
            throw ParseError(ParseError::Kind::BadSyntax, "partition mask must be 1..16 hex digits");
        }
        Mask m = 0;
        for (char c : text) {
            int v = 0;
            if (c >= '0' && c <= '9') {
                v = c - '0';
            } else if (c >= 'a' && c <= 'f') {
                v = c - 'a' + 10;
            } else if (c >= 'A' && c <= 'F') {
                v = c - 'A' + 10;
            } else {
                throw ParseError(ParseError::Kind::BadSyntax, "partition mask: invalid hex digit");
            }
            m = (m << 4) | static_cast<Mask>(v);
        }
        return Partition(m, order);
    }

    friend bool operator==(const Partition&, const Partition&) = default;
};

inline void check_partition(const Graph& g, const Partition& p) {
    if (p.n != g.order()) {
        throw DimensionError("partition over " + std::to_string(p.n) + " vertices used with graph of order " +
                             std::to_string(g.order()));
    }
}

/// |E(A,B)|.
inline int cut_size(const Graph& g, Mask a) {
    int cut = 0;
    const Mask b = g.vertices() & ~a;
    for_each_bit(a, [&](int v) { cut += g.degree_in(v, b); });
    return cut;
}

struct PartitionFlags {
    bool q_internal = false;
    bool q_external = false;
    bool integral = false;
    bool exact = false;
    bool near_exact = false;
    bool bisection = false;
    bool near_bisection = false;

    friend bool operator==(const PartitionFlags&, const PartitionFlags&) = default;
};

/// Degrees and classification of one partition of one graph at one threshold q.
/// The threshold q applies to side A, 1-q to side B.
struct PartitionReport {
    Partition partition;
    Ratio q;
    int cut = 0;
    std::vector<int> indeg;   // neighbors on the vertex's own side
    std::vector<int> outdeg;  // neighbors on the opposite side
    bool trivial = false;
    PartitionFlags flags;
    int first_internal_violation = -1;  // lowest vertex breaking the q-internal condition
    int first_external_violation = -1;  // lowest vertex breaking the q-external condition
};

/// Computes degrees and every flag with integer cross-multiplication.
/// Trivial partitions report all flags false.
inline PartitionReport classify(const Graph& g, const Partition& p, const Ratio& q) {
    check_partition(g, p);
    const int n = g.order();
    PartitionReport r;
    r.partition = p;
    r.q = q;
    r.indeg.resize(n);
    r.outdeg.resize(n);
    const Mask a = p.a;
    const Mask b = p.b();
    const Ratio q_b = q.complement();
    bool internal = true;
    bool external = true;
    bool integral = true;
    for (int v = 0; v < n; ++v) {
        const bool in_a = (a >> v) & 1U;
        const int deg = g.degree(v);
        const int own = g.degree_in(v, in_a ? a : b);
        const int other = deg - own;
        r.indeg[v] = own;
        r.outdeg[v] = other;
        if (in_a) r.cut += other;
        // A: d_A >= q d, d_B >= q d (external); B: d_B >= (1-q) d, d_A >= (1-q) d (external)
        const Ratio& side_q = in_a ? q : q_b;
        if (!side_q.at_least(own, deg)) {
            if (internal) r.first_internal_violation = v;
            internal = false;
        }
        if (!side_q.at_least(other, deg)) {
            if (external) r.first_external_violation = v;
            external = false;
        }
        integral = integral && q.integral_at(deg);
    }
    r.trivial = p.trivial();
    if (r.trivial) return r;

    const long size_a = p.size_a();
    const long scaled = size_a * q.den() - q.num() * n;
    r.flags.q_internal = internal;
    r.flags.q_external = external;
    r.flags.integral = integral;
    r.flags.exact = scaled == 0;
    r.flags.near_exact = (scaled < 0 ? -scaled : scaled) < q.den();
    r.flags.bisection = 2 * size_a == n;
    const long diff = 2 * size_a - n;
    r.flags.near_bisection = diff >= -1 && diff <= 1;
    return r;
}

inline bool is_q_internal(const Graph& g, const Partition& p, const Ratio& q) {
    return classify(g, p, q).flags.q_internal;
}

inline bool is_q_external(const Graph& g, const Partition& p, const Ratio& q) {
    return classify(g, p, q).flags.q_external;
}

/// Largest T within s whose induced minimum degree is at least p (iterated deletion of
/// vertices with fewer than p neighbors inside the current set).
inline VertexSet p_core(const Graph& g, VertexSet s, int p) {
    check_within(g, s.mask);
    Mask t = s.mask;
    for (;;) {
        Mask weak = 0;
        for_each_bit(t, [&](int v) {
            if (g.degree_in(v, t) < p) weak |= bit(v);
        });
        if (!weak) return VertexSet(t);
        t &= ~weak;
    }
}

inline bool is_p_cohesive(const Graph& g, VertexSet s, int p) {
    check_within(g, s.mask);
    bool ok = true;
    for_each_bit(s.mask, [&](int v) { ok = ok && g.degree_in(v, s.mask) >= p; });
    return ok;
}

inline bool is_p_crumble(const Graph& g, VertexSet s, int p) { return p_core(g, s, p).empty(); }

/// Minimum indegree over the vertices of s (own side = s). Empty s yields a large sentinel.
inline int min_internal_degree(const Graph& g, Mask s) {
    int best = kMaxVertices + 1;
    for_each_bit(s, [&](int v) { best = std::min(best, g.degree_in(v, s)); });
    return best;
}

}  // namespace intpart
