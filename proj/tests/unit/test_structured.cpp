#include <gtest/gtest.h>

#include <random>

#include <intpart/enumerate.hpp>
#include <intpart/generators.hpp>
#include <intpart/graph6.hpp>
#include <intpart/io/json.hpp>
#include <intpart/search/exhaustive.hpp>
#include <intpart/structure.hpp>
#include <intpart/structured/bridge.hpp>
#include <intpart/structured/duality.hpp>
#include <intpart/structured/edge_coloring.hpp>
#include <intpart/structured/external_census.hpp>
#include <intpart/structured/high_degree.hpp>

#include "fixtures.hpp"

using namespace intpart;

namespace {

Graph from_edges(int n, std::initializer_list<std::pair<int, int>> edges) {
    Graph g(n);
    for (const auto& [u, v] : edges) g.add_edge(u, v);
    return g;
}

// Vertices 0..4: K4 on 0..3 minus {0,1}, plus 4 adjacent to 0 and 1. Vertex 4 is the bridge end.
void add_k4_half(Graph& g) {
    for (const auto& [u, v] : {std::pair{0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}, {4, 0}, {4, 1}}) g.add_edge(u, v);
}

// Bridge 4-5; after deleting 5 the degree-2 pair {6,7} is adjacent with distinct third neighbors.
Graph distinct_neighbors_graph() {
    Graph g = from_edges(12, {{5, 6}, {5, 7}, {6, 7}, {6, 8}, {7, 9}, {8, 10}, {8, 11}, {9, 10}, {9, 11}, {10, 11}, {4, 5}});
    add_k4_half(g);
    return g;
}

// Bridge 4-5; the degree-2 pair {6,7} shares neighbor 8, whose last neighbor is 9 (8-9 is a bridge too).
Graph common_neighbor_graph() {
    Graph g = from_edges(14, {{5, 6}, {5, 7}, {6, 7}, {6, 8}, {7, 8}, {8, 9}, {9, 10}, {9, 11}, {10, 12}, {10, 13},
                              {11, 12}, {11, 13}, {12, 13}, {4, 5}});
    add_k4_half(g);
    return g;
}

// Petersen with edge {0,1} subdivided by vertex 15, bridged (15-4) to the K4 half on 0..4 shifted by 10.
Graph petersen_bridged_graph() {
    Graph g(16);
    const Graph p = petersen_graph();
    for (const auto& e : p.edges()) {
        if (e == Edge(0, 1)) continue;
        g.add_edge(e.u + 5, e.v + 5);
    }
    g.add_edge(15, 5);
    g.add_edge(15, 6);
    add_k4_half(g);
    g.add_edge(4, 15);
    return g;
}

Graph prism() { return from_edges(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {0, 3}, {1, 4}, {2, 5}}); }

void expect_external_bisection(const Graph& g, const Partition& p) {
    const auto r = classify(g, p, Ratio::half());
    EXPECT_TRUE(r.flags.bisection) << graph6::encode(g);
    EXPECT_TRUE(r.flags.q_external) << graph6::encode(g) << " " << p.hex();
}

}  // namespace

TEST(Duality, CocktailPartyBisectionTransfers) {
    const Graph g = cocktail_party(6);
    const Partition p = bisection_from_matching(g);
    EXPECT_TRUE(is_q_internal(g, p, Ratio::half()));
    const auto r = complement_transfer(g, p, Ratio::half(), TransferDirection::InternalToExternal);
    EXPECT_TRUE(r.flags.q_external);
    EXPECT_TRUE(r.flags.bisection);
    EXPECT_EQ(r.cut, 3);  // every matching edge is cut
}

TEST(Duality, ContractErrors) {
    const Graph g = cycle_graph(6);
    EXPECT_THROW(complement_transfer(g, Partition(0x3, 6), Ratio::half(), TransferDirection::InternalToExternal),
                 ContractError);  // not exact
    try {
        complement_transfer(g, Partition(0x15, 6), Ratio::half(), TransferDirection::InternalToExternal);
        FAIL();
    } catch (const ContractError& e) {
        EXPECT_EQ(e.vertex(), 0);
    }
    // C6 complement is 3-regular, so q = 1/2 is not integral there
    EXPECT_THROW(complement_transfer(g, Partition(0x15, 6), Ratio::half(), TransferDirection::ExternalToInternal),
                 ContractError);
}

TEST(Duality, RandomExactInternalPartitionsTransfer) {
    std::mt19937_64 rng(73);
    const std::vector<Ratio> ratios{Ratio(1, 2), Ratio(1, 3), Ratio(2, 3), Ratio(1, 4), Ratio(2, 5)};
    int transferred = 0;
    for (int trial = 0; trial < 300; ++trial) {
        const Ratio q = ratios[rng() % ratios.size()];
        const int n = static_cast<int>(q.den()) * (static_cast<int>(rng() % 3) + 2);
        if (n > 16) continue;
        const Graph g = random_gnp(n, static_cast<int>(rng() % 3) + 2, 5, rng());
        PartitionQuery query;
        query.q = q;
        query.size_a = static_cast<int>(q.num() * n / q.den());
        const auto out = find_partition_exhaustive(g, query);
        if (!out.found()) continue;
        ++transferred;
        const auto r = complement_transfer(g, *out.partition, q, TransferDirection::InternalToExternal);
        // the definitions checked directly in the complement at 1 - q
        const Ratio qc = q.complement();
        EXPECT_NE(fixtures::brute_force_partition(complement(g), false, qc.num(), qc.den(), out.partition->size_a()), 0U);
        EXPECT_TRUE(r.flags.q_external);
        EXPECT_EQ(r.partition.size_a(), out.partition->size_a());
    }
    EXPECT_GT(transferred, 50);
}

TEST(Duality, RandomConverseWithIntegrality) {
    std::mt19937_64 rng(79);
    int transferred = 0;
    for (int trial = 0; trial < 400; ++trial) {
        // complement degree n-1-d must be even at q = 1/2: odd n with even d, or even n with odd d
        const int n = 2 * static_cast<int>(rng() % 4) + 8;
        const int d = 2 * static_cast<int>(rng() % 3) + 1;
        const Graph g = random_regular(n, d, rng());
        PartitionQuery query;
        query.kind = PartitionKind::External;
        query.size_a = n / 2;
        const auto out = find_partition_exhaustive(g, query);
        if (!out.found()) continue;
        ++transferred;
        const auto r = complement_transfer(g, *out.partition, Ratio::half(), TransferDirection::ExternalToInternal);
        EXPECT_TRUE(r.flags.q_internal);
        EXPECT_TRUE(r.flags.bisection);
        EXPECT_TRUE(r.flags.integral);
    }
    EXPECT_GT(transferred, 300);
}

TEST(Duality, BisectionCorollaries) {
    std::mt19937_64 rng(83);
    for (int trial = 0; trial < 100; ++trial) {
        const int n = 2 * static_cast<int>(rng() % 3) + 8;
        const Graph g = random_regular(n, 4, rng());
        const Graph c = complement(g);
        PartitionQuery internal_bis;
        internal_bis.size_a = n / 2;
        const bool g_internal_bis = find_partition_exhaustive(g, internal_bis).found();
        PartitionQuery external_bis = internal_bis;
        external_bis.kind = PartitionKind::External;
        const bool c_external_bis = find_partition_exhaustive(c, external_bis).found();
        // internal bisection of G gives an external bisection of the complement
        if (g_internal_bis) {
            EXPECT_TRUE(c_external_bis);
        }
        // G has even degrees, so an external bisection of the complement gives an internal bisection of G
        if (c_external_bis) {
            EXPECT_TRUE(g_internal_bis);
        }
    }
}

TEST(Matching, CocktailPartyGraphs) {
    for (int n : {2, 6, 10, 20}) {
        const Graph g = cocktail_party(n);
        const Partition p = bisection_from_matching(g);
        const auto r = classify(g, p, Ratio::half());
        EXPECT_TRUE(r.flags.bisection);
        EXPECT_TRUE(r.flags.q_internal || n == 2);
    }
    EXPECT_THROW(bisection_from_matching(complete_graph(5)), ParameterError);
    EXPECT_THROW(bisection_from_matching(cycle_graph(6)), ParameterError);
}

TEST(NMinus3, Examples) {
    const auto c9 = solve_n_minus_3(complement(cycle_graph(9)));
    ASSERT_TRUE(c9.found());
    EXPECT_TRUE(c9.certified);
    EXPECT_TRUE(classify(complement(cycle_graph(9)), *c9.partition, Ratio::half()).flags.near_bisection);

    const auto k333 = solve_n_minus_3(complete_multipartite({3, 3, 3}));
    EXPECT_EQ(k333.status, SearchStatus::ExhaustedNone);
    EXPECT_TRUE(k333.certified);

    const Graph g = generate("complement-of(disjoint-union(cycle(4),cycle(5)))");
    const auto r = solve_n_minus_3(g);
    ASSERT_TRUE(r.found());
    EXPECT_TRUE(is_q_internal(g, *r.partition, Ratio::half()));
    EXPECT_THROW(solve_n_minus_3(petersen_graph()), ParameterError);
}

TEST(NMinus3, AgreesWithOracleThroughTwelve) {
    for (int n = 3; n <= 12; ++n) {
        enumerate_regular(
            n, 2,
            [&](const Graph& c) {
                const Graph g = complement(c);
                const auto fast = solve_n_minus_3(g);
                int odd = 0;
                for (const auto& comp : connected_components(c)) odd += comp.size() % 2;
                EXPECT_EQ(fast.found(), odd <= 1);
                EXPECT_EQ(fast.found(), fixtures::brute_force_partition(g, true, 1, 2) != 0) << graph6::encode(g);
            },
            EnumerationMode::FreshPrefix);
    }
}

TEST(NMinus4, Examples) {
    const auto pet = analyze_n_minus_4(complement(petersen_graph()));
    EXPECT_EQ(pet.route, NMinus4Route::ViaClique);
    EXPECT_FALSE(pet.complement_has_external_bisection);
    EXPECT_EQ(pet.complement_independence, 4);
    ASSERT_TRUE(pet.partition.has_value());
    EXPECT_TRUE(is_q_internal(complement(petersen_graph()), *pet.partition, Ratio::half()));

    const Graph pk = generate("complement-of(disjoint-union(petersen,complete(4)))");
    EXPECT_EQ(pk.regular_degree(), 10);
    const auto none = analyze_n_minus_4(pk);
    EXPECT_EQ(none.route, NMinus4Route::None);
    EXPECT_FALSE(none.partition.has_value());

    const auto pr = analyze_n_minus_4(complement(prism()));
    EXPECT_EQ(pr.route, NMinus4Route::ViaBisection);
    EXPECT_TRUE(pr.complement_class1);
    EXPECT_TRUE(is_q_internal(complement(prism()), *pr.partition, Ratio::half()));
}

TEST(NMinus4, AgreesWithOracleOnCubicComplements) {
    for (int n : {4, 6, 8, 10}) {
        enumerate_regular(
            n, 3,
            [&](const Graph& c) {
                const Graph g = complement(c);
                const auto r = analyze_n_minus_4(g);
                EXPECT_EQ(r.partition.has_value(), fixtures::brute_force_partition(g, true, 1, 2) != 0)
                    << graph6::encode(g);
                if (r.partition) {
                    EXPECT_TRUE(is_q_internal(g, *r.partition, Ratio::half()));
                }
            },
            EnumerationMode::FreshPrefix);
    }
}

TEST(EdgeColoring, NamedGraphs) {
    const auto k33 = edge_color_cubic(complete_multipartite({3, 3}));
    EXPECT_EQ(k33.verdict, EdgeClass::Class1);
    EXPECT_TRUE(k33.is_proper(complete_multipartite({3, 3})));
    const auto k4 = edge_color_cubic(complete_graph(4));
    EXPECT_EQ(k4.verdict, EdgeClass::Class1);
    EXPECT_TRUE(k4.is_proper(complete_graph(4)));
    EXPECT_EQ(edge_color_cubic(petersen_graph()).verdict, EdgeClass::Class2);
    EXPECT_EQ(edge_color_cubic(complete_graph(5)).verdict, EdgeClass::Class2);  // odd order
    const auto oct = edge_color_cubic(cocktail_party(6));
    EXPECT_EQ(oct.verdict, EdgeClass::Class1);
    EXPECT_TRUE(oct.is_proper(cocktail_party(6)));
    EXPECT_THROW(edge_color_cubic(cycle_graph(5)), ParameterError);
}

TEST(EdgeColoring, TwoColorBisectionsAreExternal) {
    for (const char* spec : {"complete(4)", "complete-multipartite(3,3)", "cocktail-party(6)", "complete-multipartite(4,4)"}) {
        const Graph g = generate(spec);
        const auto coloring = edge_color_cubic(g);
        ASSERT_EQ(coloring.verdict, EdgeClass::Class1) << spec;
        for (int c1 = 0; c1 < coloring.degree; ++c1)
            for (int c2 = c1 + 1; c2 < coloring.degree; ++c2)
                expect_external_bisection(g, bisection_from_two_colors(g, coloring, c1, c2));
    }
    std::mt19937_64 rng(89);
    int class1 = 0;
    while (class1 < 40) {
        const Graph g = random_regular(2 * static_cast<int>(rng() % 10) + 8, 3, rng());
        const auto coloring = edge_color_cubic(g);
        if (coloring.verdict != EdgeClass::Class1) continue;
        ++class1;
        EXPECT_TRUE(coloring.is_proper(g));
        expect_external_bisection(g, bisection_from_two_colors(g, coloring, 0, 2));
    }
}

TEST(EdgeColoring, ForbiddenEdgeColorConflict) {
    const Graph g = complete_graph(4);
    const auto coloring = edge_color_cubic(g);
    const int c = coloring.color_of(0, 1);
    const int other1 = (c + 1) % 3;
    const int other2 = (c + 2) % 3;
    EXPECT_NO_THROW(bisection_from_two_colors(g, coloring, other1, other2, Edge(0, 1)));
    EXPECT_THROW(bisection_from_two_colors(g, coloring, c, other1, Edge(0, 1)), ParameterError);
    EXPECT_THROW(bisection_from_two_colors(g, coloring, 1, 1), ParameterError);
}

TEST(EdgeColoring, ClassAgreesWithBruteForceOnSmallCubicGraphs) {
    // Class 1 iff the edge set splits into three perfect matchings; checked by trying every perfect
    // matching M and testing whether G - M (a 2-factor) has only even cycles.
    const auto brute_class1 = [](const Graph& g) {
        const auto edges = fixtures::edge_pairs(g);
        const int m = static_cast<int>(edges.size());
        for (std::uint32_t s = 0; s < (1U << m); ++s) {
            if (std::popcount(s) * 2 != g.order()) continue;
            std::uint64_t covered = 0;
            bool matching = true;
            for (int i = 0; i < m && matching; ++i) {
                if (!((s >> i) & 1U)) continue;
                const std::uint64_t ends = (1ULL << edges[i].first) | (1ULL << edges[i].second);
                matching = !(covered & ends);
                covered |= ends;
            }
            if (!matching) continue;
            Graph rest(g.order());
            for (int i = 0; i < m; ++i)
                if (!((s >> i) & 1U)) rest.add_edge(edges[i].first, edges[i].second);
            bool even = true;
            for (const auto& c : connected_components(rest)) even = even && c.size() % 2 == 0;
            if (even) return true;
        }
        return false;
    };
    for (int n : {4, 6, 8, 10}) {
        enumerate_regular(
            n, 3,
            [&](const Graph& g) {
                EXPECT_EQ(edge_color_cubic(g).verdict == EdgeClass::Class1, brute_class1(g)) << graph6::encode(g);
            },
            EnumerationMode::FreshPrefix);
    }
}

TEST(Census, NamedGraphs) {
    const auto pet = external_partition_census(petersen_graph(), CensusFilter::BisectionsOnly);
    EXPECT_TRUE(pet.complete);
    EXPECT_EQ(pet.matching, 0U);
    EXPECT_FALSE(has_external_bisection(petersen_graph()));

    const auto k4 = external_partition_census(complete_graph(4), CensusFilter::All);
    EXPECT_EQ(k4.matching, 3U);
    EXPECT_EQ(k4.uneven, 0U);
    EXPECT_TRUE(all_external_partitions_are_bisections(complete_graph(4)));
    EXPECT_FALSE(all_external_partitions_are_bisections(cycle_graph(6)) &&
                 external_partition_census(cycle_graph(6), CensusFilter::UnevenOnly).matching > 0);
}

TEST(Census, TwentyEightVertexGraphAsDrawn) {
    // The drawn graph is meant to have only bisections, but this 15:13 split is external.
    const Graph g = fig28_graph();
    const std::uint64_t witness = 0x296ab6d;
    EXPECT_EQ(std::popcount(witness), 15);
    EXPECT_TRUE(fixtures::satisfies(g, witness, false, 1, 2));
    const auto all = external_partition_census(g, CensusFilter::All);
    EXPECT_TRUE(all.complete);
    EXPECT_EQ(all.uneven, 6U);
    EXPECT_EQ(all.bisections, 186U);
}

TEST(Census, CountsMatchBruteForce) {
    std::mt19937_64 rng(97);
    for (int trial = 0; trial < 60; ++trial) {
        const int n = static_cast<int>(rng() % 10) + 3;
        const Graph g = random_gnp(n, 1, 2, rng());
        const auto edges = fixtures::edge_pairs(g);
        std::uint64_t bis = 0;
        std::uint64_t uneven = 0;
        for (Mask a = 1; a < low_bits(n); a += 2) {  // vertex 0 on side A
            std::vector<int> out(n, 0);
            for (const auto& [u, v] : edges) {
                if (((a >> u) & 1U) != ((a >> v) & 1U)) {
                    ++out[u];
                    ++out[v];
                }
            }
            bool ok = true;
            for (int v = 0; v < n; ++v) ok = ok && 2 * out[v] >= g.degree(v);
            if (ok) (2 * popcount(a) == n ? bis : uneven)++;
        }
        const auto all = external_partition_census(g, CensusFilter::All);
        EXPECT_EQ(all.bisections, bis) << graph6::encode(g);
        EXPECT_EQ(all.uneven, uneven) << graph6::encode(g);
        EXPECT_EQ(external_partition_census(g, CensusFilter::UnevenOnly).matching, uneven);
        EXPECT_EQ(external_partition_census(g, CensusFilter::BisectionsOnly).matching, bis);
    }
}

TEST(Bridge, DoubleK4DecomposesIntoTwoK4s) {
    const Graph g = fixtures::bridged_double_k4();
    const auto dec = bridge_decompose_cubic(g, Edge(4, 9));
    EXPECT_EQ(dec.g1, complete_graph(4));
    EXPECT_EQ(dec.g2, complete_graph(4));
    EXPECT_EQ(dec.vertices1, (std::vector<int>{0, 1, 2, 3}));
    EXPECT_EQ(dec.vertices2, (std::vector<int>{5, 6, 7, 8}));
    EXPECT_EQ(dec.marked1, Edge(0, 1));
    EXPECT_EQ(dec.marked2, Edge(0, 1));
    ASSERT_EQ(dec.log.size(), 2U);
    EXPECT_EQ(dec.log[0].rule, BridgeRule::AddEdge);
    EXPECT_TRUE(dec.deleted_pairs.empty());
    expect_external_bisection(g, compose_bisection_across_bridge(g, dec));
}

TEST(Bridge, DistinctNeighborsRule) {
    const Graph g = distinct_neighbors_graph();
    ASSERT_EQ(g.regular_degree(), 3);
    const auto dec = bridge_decompose_cubic(g, Edge(4, 5));
    ASSERT_EQ(dec.log.size(), 3U);
    EXPECT_EQ(dec.log[1].side, 2);
    EXPECT_EQ(dec.log[1].rule, BridgeRule::DistinctNeighbors);
    EXPECT_EQ(dec.log[1].deleted, (std::vector<int>{6, 7}));
    EXPECT_EQ(dec.log[1].degree_two_after, bit(8) | bit(9));
    EXPECT_EQ(dec.log[2].rule, BridgeRule::AddEdge);
    EXPECT_EQ(dec.g2, complete_graph(4));
    EXPECT_EQ(dec.deleted_pairs, (std::vector<std::pair<int, int>>{{6, 7}}));
    expect_external_bisection(g, compose_bisection_across_bridge(g, dec));
}

TEST(Bridge, CommonNeighborRule) {
    const Graph g = common_neighbor_graph();
    ASSERT_EQ(g.regular_degree(), 3);
    const auto dec = bridge_decompose_cubic(g, Edge(4, 5));
    ASSERT_EQ(dec.log.size(), 3U);
    EXPECT_EQ(dec.log[1].rule, BridgeRule::CommonNeighbor);
    EXPECT_EQ(dec.log[1].deleted, (std::vector<int>{6, 7, 8, 9}));
    EXPECT_EQ(dec.log[1].degree_two_after, bit(10) | bit(11));
    EXPECT_EQ(dec.g2, complete_graph(4));
    EXPECT_EQ(dec.vertices2, (std::vector<int>{10, 11, 12, 13}));
    EXPECT_EQ(dec.deleted_pairs.size(), 2U);
    expect_external_bisection(g, compose_bisection_across_bridge(g, dec));
}

TEST(Bridge, LogReplaysToTheParts) {
    const std::vector<std::pair<Graph, Edge>> cases{{fixtures::bridged_double_k4(), Edge(4, 9)},
                                                    {distinct_neighbors_graph(), Edge(4, 5)},
                                                    {common_neighbor_graph(), Edge(4, 5)}};
    for (const auto& [g, bridge] : cases) {
        const auto dec = bridge_decompose_cubic(g, bridge);
        // every vertex is in exactly one of: bridge ends, part 1, part 2, a deleted pair
        Mask seen = bit(dec.bridge.u) | bit(dec.bridge.v);
        for (int v : dec.vertices1) seen |= bit(v);
        for (int v : dec.vertices2) seen |= bit(v);
        for (const auto& [x, y] : dec.deleted_pairs) seen |= bit(x) | bit(y);
        EXPECT_EQ(seen, g.vertices());
        for (const auto& entry : dec.log) EXPECT_TRUE(popcount(entry.degree_two_after) == 2 || entry.degree_two_after == 0);
        const auto j = io::to_json(dec);
        EXPECT_EQ(j["log"].size(), dec.log.size());
        EXPECT_EQ(graph6::decode(j["g1"].get<std::string>()), dec.g1);
    }
}

TEST(Bridge, GuardsAndClassTwoParts) {
    EXPECT_THROW(bridge_decompose_cubic(petersen_graph(), Edge(0, 1)), ParameterError);
    EXPECT_THROW(bridge_decompose_cubic(cycle_graph(6), Edge(0, 1)), ParameterError);
    const Graph g = petersen_bridged_graph();
    ASSERT_EQ(g.regular_degree(), 3);
    ASSERT_TRUE(is_bridge(g, Edge(4, 15)));
    const auto dec = bridge_decompose_cubic(g, Edge(4, 15));
    EXPECT_EQ(edge_color_cubic(dec.g2).verdict, EdgeClass::Class2);
    EXPECT_THROW(compose_bisection_across_bridge(g, dec), InapplicableError);
}

TEST(Bridge, RandomBridgedClassOneCompositions) {
    // two random class-1 cubic graphs, one edge subdivided in each, subdivision vertices joined
    std::mt19937_64 rng(101);
    int composed = 0;
    while (composed < 25) {
        const int n1 = 2 * static_cast<int>(rng() % 5) + 4;
        const int n2 = 2 * static_cast<int>(rng() % 5) + 4;
        const Graph h1 = random_regular(n1, 3, rng());
        const Graph h2 = random_regular(n2, 3, rng());
        if (!is_connected(h1) || !is_connected(h2)) continue;
        if (edge_color_cubic(h1).verdict != EdgeClass::Class1 || edge_color_cubic(h2).verdict != EdgeClass::Class1) continue;
        const int n = n1 + n2 + 2;
        Graph g(n);
        const auto e1 = h1.edges()[rng() % h1.edges().size()];
        const auto e2 = h2.edges()[rng() % h2.edges().size()];
        for (const auto& e : h1.edges())
            if (!(e == e1)) g.add_edge(e.u, e.v);
        for (const auto& e : h2.edges())
            if (!(e == e2)) g.add_edge(e.u + n1, e.v + n1);
        const int b1 = n - 2;
        const int b2 = n - 1;
        g.add_edge(b1, e1.u);
        g.add_edge(b1, e1.v);
        g.add_edge(b2, e2.u + n1);
        g.add_edge(b2, e2.v + n1);
        g.add_edge(b1, b2);
        const auto dec = bridge_decompose_cubic(g, Edge(b1, b2));
        EXPECT_EQ(dec.log.size(), 2U);  // the degree-2 pairs are never adjacent here
        expect_external_bisection(g, compose_bisection_across_bridge(g, dec));
        ++composed;
    }
}
