#pragma once

#include <optional>
#include <string>
#include <vector>

#include "../error.hpp"
#include "../graph.hpp"
#include "../partition.hpp"
#include "../search/exhaustive.hpp"
#include "../search/outcome.hpp"
#include "../structure.hpp"
#include "edge_coloring.hpp"
#include "external_census.hpp"

namespace intpart {

/// Internal bisection of an (n-2)-regular graph: the complement is a perfect matching and each
/// matched pair is split, lower index to A.
inline Partition bisection_from_matching(const Graph& g) {
    const int n = g.order();
    if (n % 2 != 0) throw ParameterError("bisection_from_matching: no (n-2)-regular graph has odd order");
    if (n < 2 || g.regular_degree() != n - 2) throw ParameterError("bisection_from_matching: graph is not (n-2)-regular");
    const Graph comp = complement(g);
    Mask a = 0;
    for (int v = 0; v < n; ++v) {
        const int mate = lowest(comp.neighbors(v));
        if (v < mate) a |= bit(v);
    }
    return Partition(a, n);
}

/// Cycles of a 2-regular graph, each listed from its lowest vertex toward its lower neighbor.
inline std::vector<std::vector<int>> cycles_of_two_regular(const Graph& g) {
    std::vector<std::vector<int>> out;
    Mask seen = 0;
    for (int s = 0; s < g.order(); ++s) {
        if (seen & bit(s)) continue;
        std::vector<int> cycle{s};
        seen |= bit(s);
        int prev = s;
        int cur = lowest(g.neighbors(s));
        while (cur != s) {
            cycle.push_back(cur);
            seen |= bit(cur);
            const Mask next = g.neighbors(cur) & ~bit(prev);
            prev = cur;
            cur = lowest(next);
        }
        out.push_back(std::move(cycle));
    }
    return out;
}

/// (n-3)-regular graphs: an internal partition exists iff the 2-regular complement has at most
/// one odd cycle. Cycles are placed alternately from their lowest vertex, the odd one last with
/// its surplus on A. Both outcomes are certified.
inline SearchOutcome solve_n_minus_3(const Graph& g) {
    const int n = g.order();
    if (n < 3 || g.regular_degree() != n - 3) throw ParameterError("solve_n_minus_3: graph is not (n-3)-regular");
    detail::Stopwatch clock;
    const auto cycles = cycles_of_two_regular(complement(g));
    SearchOutcome out;
    out.certified = true;
    int odd = 0;
    for (const auto& c : cycles) odd += static_cast<int>(c.size() % 2);
    if (odd > 1) {
        out.status = SearchStatus::ExhaustedNone;
        out.stats.elapsed_us = clock.elapsed_us();
        return out;
    }
    Mask a = 0;
    const auto place = [&](const std::vector<int>& c) {
        for (std::size_t i = 0; i < c.size(); i += 2) a |= bit(c[i]);
    };
    for (const auto& c : cycles)
        if (c.size() % 2 == 0) place(c);
    for (const auto& c : cycles)
        if (c.size() % 2 == 1) place(c);
    out.status = SearchStatus::Found;
    out.partition = Partition(a, n);
    if (!is_q_internal(g, *out.partition, Ratio::half())) {
        throw InvariantViolation("solve_n_minus_3: alternating placement is not internal");
    }
    out.stats.elapsed_us = clock.elapsed_us();
    return out;
}

enum class NMinus4Route { ViaBisection, ViaClique, None };

inline std::string to_string(NMinus4Route r) {
    switch (r) {
        case NMinus4Route::ViaBisection: return "via_bisection";
        case NMinus4Route::ViaClique: return "via_clique";
        case NMinus4Route::None: return "none";
    }
    return "?";
}

struct NMinus4Report {
    NMinus4Route route = NMinus4Route::None;
    std::optional<Partition> partition;  // internal partition of g
    bool complement_class1 = false;
    bool complement_has_external_bisection = false;
    int complement_independence = 0;
};

/// (n-4)-regular graphs (cubic complement). Route (a): an external bisection of the complement,
/// from a class-1 coloring if possible, else by exhaustive search; it is an internal bisection
/// of g. Route (b): an independent set B of size n/2 - 1 in the complement whose split
/// (V - B, B) is internal in g. `none` is confirmed against the exhaustive oracle.
inline NMinus4Report analyze_n_minus_4(const Graph& g) {
    const int n = g.order();
    if (n < 4 || g.regular_degree() != n - 4) throw ParameterError("analyze_n_minus_4: graph is not (n-4)-regular");
    const Graph comp = complement(g);
    NMinus4Report report;
    const auto ok = [&](Mask a) { return is_q_internal(g, Partition(a, n), Ratio::half()); };

    const auto coloring = edge_color_cubic(comp);
    report.complement_class1 = coloring.verdict == EdgeClass::Class1;
    std::optional<Partition> bisection;
    if (report.complement_class1) {
        bisection = bisection_from_two_colors(comp, coloring, 0, 1);
    } else {
        const auto census = external_partition_census(comp, CensusFilter::BisectionsOnly, kDefaultNodeBudget, 1);
        bisection = census.first_witness;
    }
    report.complement_has_external_bisection = bisection.has_value();
    report.complement_independence = max_independent_set(comp, kMaxVertices).size();
    if (bisection) {
        if (!ok(bisection->a)) throw InvariantViolation("analyze_n_minus_4: external bisection of complement is not internal");
        report.route = NMinus4Route::ViaBisection;
        report.partition = bisection;
        return report;
    }

    const int k = n / 2 - 1;
    if (k >= 1 && report.complement_independence >= k) {
        // independent k-sets of the complement, lowest first
        std::optional<Mask> found;
        const auto extend = [&](auto&& self, Mask chosen, Mask cand, int left) -> void {
            if (found) return;
            if (left == 0) {
                const Mask a = comp.vertices() & ~chosen;
                if (ok(a)) found = a;
                return;
            }
            if (popcount(cand) < left) return;
            const int v = lowest(cand);
            self(self, chosen | bit(v), cand & ~bit(v) & ~comp.neighbors(v), left - 1);
            self(self, chosen, cand & ~bit(v), left);
        };
        extend(extend, Mask{0}, comp.vertices(), k);
        if (found) {
            report.route = NMinus4Route::ViaClique;
            report.partition = Partition(*found, n);
            return report;
        }
    }

    if (find_internal_exhaustive(g).found()) {
        throw InvariantViolation("analyze_n_minus_4: no route applies but an internal partition exists");
    }
    return report;
}

}  // namespace intpart
