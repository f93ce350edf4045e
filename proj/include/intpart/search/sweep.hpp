#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "../error.hpp"
#include "../graph.hpp"
#include "../partition.hpp"
#include "../ratio.hpp"

namespace intpart {

struct SweepEntry {
    int p = 0;
    Partition partition;
    int size = 0;
    int q_times_d = 0;            // certified q * d = |A_p| - p
    std::optional<Ratio> q;       // q_times_d / d when strictly between 0 and 1
    std::uint64_t moves = 0;
    bool verified = false;        // q-internal in G at the certified q
};

struct SweepGap {
    int p = 0;
    int previous_size = 0;
    int size = 0;

    friend bool operator==(const SweepGap&, const SweepGap&) = default;
};

/// Greedy sweep over p = 1..n-d-1 on the complement. Each terminal (A_p, B_p) is a q-internal
/// partition of G with q*d = |A_p| - p.
struct SweepResult {
    int n = 0;
    int d = 0;
    std::vector<SweepEntry> entries;
    std::vector<SweepGap> gaps;
    int min_potential_step = 0;        // smallest increase of the termination potential over all moves
    std::vector<std::string> violations;

    int distinct_sizes() const {
        std::set<int> sizes;
        for (const auto& e : entries) sizes.insert(e.size);
        return static_cast<int>(sizes.size());
    }
};

struct SweepOptions {
    bool warm_start = true;  // start each p from (A_{p-1}, B_{p-1}); cold start resets to A = {}
};

/// Termination potential on the complement: |E_c(A,B)| - (n-d-p)|A| - p|B|.
inline long sweep_potential(const Graph& comp, int d, int p, Mask a) {
    const int n = comp.order();
    const long size_a = popcount(a);
    return cut_size(comp, a) - static_cast<long>(n - d - p) * size_a - static_cast<long>(p) * (n - size_a);
}

/// Partitions listed in the sweep whose size jumps by at least 3 from the previous p.
inline std::vector<SweepGap> gap_report(const SweepResult& sweep) {
    std::vector<SweepGap> out;
    for (std::size_t i = 1; i < sweep.entries.size(); ++i) {
        const int prev = sweep.entries[i - 1].size;
        const int cur = sweep.entries[i].size;
        if (cur - prev >= 3) out.push_back({sweep.entries[i].p, prev, cur});
    }
    return out;
}

/// Checks whether (A,B) is q-internal for q*d = qd with qd in 0..d on a d-regular graph.
inline bool internal_at_qd(const Graph& g, Mask a, int d, int qd) {
    if (qd > 0 && qd < d) return classify(g, Partition(a, g.order()), Ratio(qd, d)).flags.q_internal;
    const Mask b = g.vertices() & ~a;
    bool ok = a && b;
    for_each_bit(a, [&](int v) { ok = ok && g.degree_in(v, a) >= qd; });
    for_each_bit(b, [&](int v) { ok = ok && g.degree_in(v, b) >= d - qd; });
    return ok;
}

/// Greedy move sweep. Inside step p the lowest-index violating vertex moves, side B checked
/// before side A: x in B with fewer than p complement-neighbors in A joins A; x in A with fewer
/// than n-d-p complement-neighbors in B joins B.
inline SweepResult algorithm1_sweep(const Graph& g, SweepOptions options = {}) {
    const int d = g.regular_degree();
    const int n = g.order();
    if (d < 0) throw ParameterError("algorithm1_sweep: graph is not regular");
    if (n <= d + 1) throw ParameterError("algorithm1_sweep: requires n > d + 1");

    const Graph comp = complement(g);
    const int steps = n - d - 1;
    const Mask all = g.vertices();
    SweepResult out;
    out.n = n;
    out.d = d;
    out.min_potential_step = -1;

    Mask a = 0;
    for (int p = 1; p <= steps; ++p) {
        if (!options.warm_start) a = 0;
        SweepEntry entry;
        entry.p = p;
        long phi = sweep_potential(comp, d, p, a);
        for (;;) {
            const Mask b = all & ~a;
            int mover = -1;
            for (Mask m = b; m; m &= m - 1) {
                const int x = lowest(m);
                if (comp.degree_in(x, a) < p) {
                    mover = x;
                    break;
                }
            }
            if (mover < 0) {
                for (Mask m = a; m; m &= m - 1) {
                    const int x = lowest(m);
                    if (comp.degree_in(x, b) < n - d - p) {
                        mover = x;
                        break;
                    }
                }
            }
            if (mover < 0) break;
            a ^= bit(mover);
            ++entry.moves;
            const long next = sweep_potential(comp, d, p, a);
            const long step = next - phi;
            if (out.min_potential_step < 0 || step < out.min_potential_step) {
                out.min_potential_step = static_cast<int>(step);
            }
            if (step < 1) {
                out.violations.push_back("p=" + std::to_string(p) + ": potential step " + std::to_string(step));
            }
            phi = next;
        }
        entry.partition = Partition(a, n);
        entry.size = popcount(a);
        entry.q_times_d = entry.size - p;
        if (entry.q_times_d > 0 && entry.q_times_d < d) entry.q = Ratio(entry.q_times_d, d);
        entry.verified = internal_at_qd(g, a, d, entry.q_times_d);
        if (!entry.verified) {
            out.violations.push_back("p=" + std::to_string(p) + ": partition is not q-internal at q*d=" +
                                     std::to_string(entry.q_times_d));
        }
        if (entry.size < p || entry.size > p + d) {
            out.violations.push_back("p=" + std::to_string(p) + ": |A_p|=" + std::to_string(entry.size) +
                                     " outside [p, p+d]");
        }
        out.entries.push_back(entry);
    }
    out.gaps = gap_report(out);
    return out;
}

}  // namespace intpart
