#include <gtest/gtest.h>

#include <random>

#include "direvc/matching.hpp"
#include "direvc/oracle.hpp"
#include "support.hpp"

using namespace direvc;
using namespace direvc::testing;

TEST(MaximumMatching, WorkedExampleGraph) {
    Matching m = maximum_matching(example_graph());
    EXPECT_EQ(m.edges, (std::vector<Edge>{{0, 1}, {2, 7}, {3, 5}, {4, 6}}));
    EXPECT_TRUE(is_matching(example_graph(), m));
}

TEST(MaximumMatching, SmallCases) {
    EXPECT_EQ(maximum_matching(path(2)).edges, (std::vector<Edge>{{0, 1}}));
    EXPECT_EQ(maximum_matching(cycle(5)).size(), 2u);
    EXPECT_EQ(maximum_matching(Graph{}).size(), 0u);
    EXPECT_EQ(maximum_matching(Graph::from_edges(3, {})).size(), 0u);
}

TEST(MaximumMatching, NeedsBlossomContraction) {
    // Triangle with pendant paths: augmenting path runs through an odd cycle.
    Graph g = graph_of(6, {{0, 1}, {1, 2}, {2, 0}, {2, 3}, {0, 4}, {3, 5}});
    EXPECT_EQ(maximum_matching(g).size(), 3u);
    Graph petersen = graph_of(10, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {0, 5}, {1, 6},
                                   {2, 7}, {3, 8}, {4, 9}, {5, 7}, {7, 9}, {9, 6}, {6, 8}, {8, 5}});
    EXPECT_EQ(maximum_matching(petersen).size(), 5u);
}

TEST(IsMatching, Cases) {
    Graph p4 = path(4);
    EXPECT_TRUE(is_matching(p4, Matching::from_edges(4, {{0, 1}, {2, 3}})));
    EXPECT_THROW(Matching::from_edges(4, {{0, 1}, {1, 2}}), std::invalid_argument);
    Matching bad;
    bad.edges = {{0, 1}, {1, 2}};
    bad.mate = {1, 0, 1, kUnmatched};
    EXPECT_FALSE(is_matching(p4, bad));
    EXPECT_FALSE(is_matching(p4, Matching::from_edges(4, {{0, 2}})));
    EXPECT_TRUE(is_maximal_matching(p4, Matching::from_edges(4, {{1, 2}})));
    EXPECT_FALSE(is_maximal_matching(p4, Matching::from_edges(4, {{0, 1}})));
}

TEST(MaximumMatching, AgreesWithExhaustiveSearch) {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 1500; ++trial) {
        std::size_t n = 1 + rng() % 9;
        Graph g = random_graph(n, 0.2 + 0.6 * (rng() % 100) / 100.0, rng);
        if (g.edge_count() > kExhaustiveEdgeLimit) continue;
        Matching m = maximum_matching(g);
        ASSERT_TRUE(is_matching(g, m));
        ASSERT_TRUE(is_maximal_matching(g, m));
        ASSERT_EQ(m.size(), exact_max_matching_exhaustive(g)) << to_edge_list(g);
    }
}

TEST(MaximumMatching, PermutedIsMaximumAndDeterministic) {
    std::mt19937_64 rng(9);
    for (int trial = 0; trial < 300; ++trial) {
        Graph g = random_graph(2 + rng() % 14, 0.3, rng);
        std::uint64_t seed = rng();
        Matching a = maximum_matching_permuted(g, seed);
        Matching b = maximum_matching_permuted(g, seed);
        ASSERT_EQ(a.edges, b.edges);
        ASSERT_TRUE(is_matching(g, a));
        ASSERT_EQ(a.size(), maximum_matching(g).size());
    }
}

TEST(MaximumMatching, Deterministic) {
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 100; ++trial) {
        Graph g = random_graph(2 + rng() % 20, 0.25, rng);
        ASSERT_EQ(maximum_matching(g).edges, maximum_matching(g).edges);
    }
}
