#pragma once

// JSON forms of the library's reports. Field names are part of the documented record schema
// (docs/report-schema.md); bump kSchemaVersion when they change.

#include <json.hpp>

#include "../graph6.hpp"
#include "../partition.hpp"
#include "../search/lemma1.hpp"
#include "../search/outcome.hpp"
#include "../search/sweep.hpp"
#include "../structured/bridge.hpp"
#include "../structured/external_census.hpp"
#include "../structured/high_degree.hpp"

namespace intpart::io {

using nlohmann::json;

inline constexpr int kSchemaVersion = 1;

inline json to_json(const Partition& p) { return json{{"n", p.n}, {"mask", p.hex()}}; }

inline json to_json(const PartitionFlags& f) {
    return json{{"q_internal", f.q_internal}, {"q_external", f.q_external},         {"integral", f.integral},
                {"exact", f.exact},           {"near_exact", f.near_exact},         {"bisection", f.bisection},
                {"near_bisection", f.near_bisection}};
}

inline json to_json(const PartitionReport& r) {
    return json{{"partition", to_json(r.partition)},
                {"q", r.q.to_string()},
                {"size_a", r.partition.size_a()},
                {"cut", r.cut},
                {"indeg", r.indeg},
                {"outdeg", r.outdeg},
                {"trivial", r.trivial},
                {"flags", to_json(r.flags)}};
}

inline json to_json(const SearchStats& s) {
    return json{{"nodes", s.nodes}, {"moves", s.moves}, {"elapsed_us", s.elapsed_us}};
}

inline json to_json(const SearchOutcome& o) {
    json j{{"status", to_string(o.status)}, {"certified", o.certified}, {"stats", to_json(o.stats)}};
    j["partition"] = o.partition ? to_json(*o.partition) : json(nullptr);
    return j;
}

inline json to_json(const SweepResult& s) {
    json entries = json::array();
    for (const auto& e : s.entries) {
        entries.push_back(json{{"p", e.p},
                               {"partition", to_json(e.partition)},
                               {"size", e.size},
                               {"q_times_d", e.q_times_d},
                               {"q", e.q ? json(e.q->to_string()) : json(nullptr)},
                               {"moves", e.moves},
                               {"verified", e.verified}});
    }
    json gaps = json::array();
    for (const auto& g : s.gaps) gaps.push_back(json{{"p", g.p}, {"previous_size", g.previous_size}, {"size", g.size}});
    return json{{"n", s.n},
                {"d", s.d},
                {"entries", entries},
                {"gaps", gaps},
                {"distinct_sizes", s.distinct_sizes()},
                {"min_potential_step", s.min_potential_step},
                {"violations", s.violations}};
}

inline json to_json(const CensusReport& c) {
    json j{{"filter", to_string(c.filter)}, {"matching", c.matching}, {"bisections", c.bisections},
           {"uneven", c.uneven},           {"nodes", c.nodes},       {"complete", c.complete},
           {"elapsed_us", c.elapsed_us}};
    j["first_witness"] = c.first_witness ? to_json(*c.first_witness) : json(nullptr);
    return j;
}

inline json to_json(const Lemma1Audit& a) {
    return json{{"k", a.k},
                {"degree", a.degree},
                {"cut", a.cut},
                {"partition", to_json(a.partition)},
                {"l", a.l},
                {"m", a.m},
                {"case", to_string(a.verdict)},
                {"failure", a.failure}};
}

inline json to_json(const NMinus4Report& r) {
    json j{{"route", to_string(r.route)},
           {"complement_class1", r.complement_class1},
           {"complement_has_external_bisection", r.complement_has_external_bisection},
           {"complement_independence", r.complement_independence}};
    j["partition"] = r.partition ? to_json(*r.partition) : json(nullptr);
    return j;
}

inline json edge_json(const Edge& e) { return json::array({e.u, e.v}); }

/// Ordered rule records; replaying them on the input reproduces both parts.
inline json to_json(const BridgeDecomposition& d) {
    json log = json::array();
    for (const auto& e : d.log) {
        json deg_after = json::array();
        for_each_bit(e.degree_two_after, [&](int v) { deg_after.push_back(v); });
        log.push_back(json{{"side", e.side},
                           {"rule", to_string(e.rule)},
                           {"degree_two", edge_json(e.degree_two)},
                           {"deleted", e.deleted},
                           {"degree_two_after", deg_after}});
    }
    json pairs = json::array();
    for (const auto& [x, y] : d.deleted_pairs) pairs.push_back(json::array({x, y}));
    return json{{"bridge", edge_json(d.bridge)},
                {"g1", graph6::encode(d.g1)},
                {"g2", graph6::encode(d.g2)},
                {"vertices1", d.vertices1},
                {"vertices2", d.vertices2},
                {"marked1", edge_json(d.marked1)},
                {"marked2", edge_json(d.marked2)},
                {"deleted_pairs", pairs},
                {"log", log}};
}

}  // namespace intpart::io
