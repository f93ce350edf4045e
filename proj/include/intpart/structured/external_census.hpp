#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "../graph.hpp"
#include "../partition.hpp"
#include "../search/exhaustive.hpp"

namespace intpart {

enum class CensusFilter { All, BisectionsOnly, UnevenOnly };

inline std::string to_string(CensusFilter f) {
    switch (f) {
        case CensusFilter::All: return "all";
        case CensusFilter::BisectionsOnly: return "bisections_only";
        case CensusFilter::UnevenOnly: return "uneven_only";
    }
    return "?";
}

/// Counts of unordered external (q = 1/2) partitions; vertex 0 is kept on side A.
struct CensusReport {
    CensusFilter filter = CensusFilter::All;
    std::uint64_t matching = 0;      // partitions passing the filter
    std::uint64_t bisections = 0;    // among those enumerated
    std::uint64_t uneven = 0;        // among those enumerated
    std::optional<Partition> first_witness;
    std::uint64_t nodes = 0;
    bool complete = false;           // false when the node budget ran out
    std::int64_t elapsed_us = 0;
};

inline CensusReport external_partition_census(const Graph& g, CensusFilter filter,
                                              std::uint64_t node_budget = kDefaultNodeBudget,
                                              std::uint64_t stop_after = 0) {
    detail::Stopwatch clock;
    PartitionQuery query;
    query.kind = PartitionKind::External;
    query.node_budget = node_budget;
    const int n = g.order();
    if (filter == CensusFilter::BisectionsOnly) {
        if (n % 2 != 0) {
            CensusReport r;
            r.filter = filter;
            r.complete = true;
            return r;
        }
        query.size_a = n / 2;
    }
    CensusReport report;
    report.filter = filter;
    detail::PartitionEnumerator e(g, query);
    report.complete = e.run([&](Mask a) {
        const bool even = 2 * popcount(a) == n;
        (even ? report.bisections : report.uneven) += 1;
        const bool match = filter == CensusFilter::All || (filter == CensusFilter::BisectionsOnly && even) ||
                           (filter == CensusFilter::UnevenOnly && !even);
        if (match) {
            if (!report.first_witness) report.first_witness = Partition(a, n);
            ++report.matching;
            if (stop_after && report.matching >= stop_after) return false;
        }
        return true;
    });
    report.nodes = e.nodes();
    report.elapsed_us = clock.elapsed_us();
    return report;
}

inline bool has_external_bisection(const Graph& g) {
    return external_partition_census(g, CensusFilter::BisectionsOnly, kDefaultNodeBudget, 1).matching > 0;
}

/// Every external partition is a bisection (complete search, no budget cap).
inline bool all_external_partitions_are_bisections(const Graph& g) {
    return external_partition_census(g, CensusFilter::UnevenOnly, kDefaultNodeBudget, 1).matching == 0;
}

}  // namespace intpart
