#pragma once

#include <string>
#include <vector>

#include "../graph.hpp"
#include "../partition.hpp"
#include "min_cut.hpp"

namespace intpart {

/// Cohesion structure of a minimum cut with |A| = k.
///
/// With l = min indegree over A and m = min indegree over B (d = minimum degree of G):
///   Case 1: l + m >= d.
///   Case 2: l + m == d - 1, every min-indegree vertex of A is adjacent to every min-indegree
///           vertex of B, and moving one min-indegree vertex across raises the receiving side's
///           cohesion by one.
/// Anything else is reported as a violation.
struct Lemma1Audit {
    enum class Case { Case1, Case2, Violation };

    int k = 0;
    int degree = 0;
    int cut = 0;
    Partition partition;
    int l = 0;
    int m = 0;
    Case verdict = Case::Violation;
    Mask low_a = 0;  // vertices of A with indegree l
    Mask low_b = 0;  // vertices of B with indegree m
    std::string failure;

    bool passed() const noexcept { return verdict != Case::Violation; }
};

inline std::string to_string(Lemma1Audit::Case c) {
    switch (c) {
        case Lemma1Audit::Case::Case1: return "Case1";
        case Lemma1Audit::Case::Case2: return "Case2";
        case Lemma1Audit::Case::Violation: return "Violation";
    }
    return "?";
}

/// Audits a given partition, assumed to minimize the cut among partitions with its side sizes.
inline Lemma1Audit lemma1_audit_partition(const Graph& g, const Partition& p) {
    check_partition(g, p);
    Lemma1Audit audit;
    audit.partition = p;
    audit.k = p.size_a();
    audit.degree = g.min_degree();
    audit.cut = cut_size(g, p.a);
    const Mask a = p.a;
    const Mask b = p.b();
    if (!a || !b) {
        audit.failure = "trivial partition";
        return audit;
    }
    audit.l = min_internal_degree(g, a);
    audit.m = min_internal_degree(g, b);
    for_each_bit(a, [&](int v) {
        if (g.degree_in(v, a) == audit.l) audit.low_a |= bit(v);
    });
    for_each_bit(b, [&](int v) {
        if (g.degree_in(v, b) == audit.m) audit.low_b |= bit(v);
    });
    const int d = audit.degree;
    if (audit.l + audit.m >= d) {
        audit.verdict = Lemma1Audit::Case::Case1;
        return audit;
    }
    if (audit.l + audit.m < d - 1) {
        audit.failure = "l + m = " + std::to_string(audit.l + audit.m) + " < d - 1";
        return audit;
    }
    bool complete = true;
    for_each_bit(audit.low_a, [&](int x) { complete = complete && (g.neighbors(x) & audit.low_b) == audit.low_b; });
    if (!complete) {
        audit.failure = "minimum-indegree vertices do not form a complete bipartite subgraph";
        return audit;
    }
    bool raises = true;
    for_each_bit(audit.low_a, [&](int x) { raises = raises && is_p_cohesive(g, VertexSet(b | bit(x)), audit.m + 1); });
    for_each_bit(audit.low_b, [&](int y) { raises = raises && is_p_cohesive(g, VertexSet(a | bit(y)), audit.l + 1); });
    if (!raises) {
        audit.failure = "single-vertex transfer does not raise cohesion";
        return audit;
    }
    audit.verdict = Lemma1Audit::Case::Case2;
    return audit;
}

/// Audits the exact minimizer (lowest mask among ties) over |A| = k. Budget errors propagate.
inline Lemma1Audit lemma1_audit(const Graph& g, int k, std::uint64_t subset_budget = kDefaultSubsetBudget) {
    const auto best = min_cut_exact(g, k, subset_budget);
    return lemma1_audit_partition(g, best.partition);
}

}  // namespace intpart
