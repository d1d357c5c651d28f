#include <gtest/gtest.h>

#include <random>

#include "direvc/guided_matching.hpp"
#include "support.hpp"

using namespace direvc;
using namespace direvc::testing;

namespace {

struct Row {
    VertexId node1;
    std::vector<VertexId> list1;
    VertexId node2;
    std::vector<VertexId> list2;
};

std::vector<Row> rows_of(const RepresentsTable& t) {
    std::vector<Row> out;
    for (const auto& r : t.rows) out.push_back({r.node1, r.list1, r.node2, r.list2});
    return out;
}

void expect_rows(const RepresentsTable& t, const std::vector<Row>& want) {
    auto got = rows_of(t);
    ASSERT_EQ(got.size(), want.size());
    for (std::size_t i = 0; i < want.size(); ++i) {
        EXPECT_EQ(got[i].node1, want[i].node1) << "row " << i;
        EXPECT_EQ(got[i].list1, want[i].list1) << "row " << i;
        EXPECT_EQ(got[i].node2, want[i].node2) << "row " << i;
        EXPECT_EQ(got[i].list2, want[i].list2) << "row " << i;
    }
}

RepresentsTable build(const Graph& g, VertexId seed, TieBreak tie = TieBreak::TierFirst) {
    return guided_maximal_matching(g, maximum_matching(g), bfs_levels(g, seed), tie);
}

}  // namespace

TEST(GuidedMatching, WorkedExampleRows) {
    RepresentsTable t = build(example_graph(), 0);
    expect_rows(t, {{0, {1}, 1, {0, 2, 3}}, {2, {4, 7}, 7, {2}}, {3, {5, 8}, 5, {3, 6}},
                    {4, {6}, 6, {4}}});
    EXPECT_EQ(matched_edges(t).edges, (std::vector<Edge>{{0, 1}, {2, 7}, {3, 5}, {4, 6}}));
}

TEST(GuidedMatching, PathRows) {
    RepresentsTable t = build(path(4), 0);
    expect_rows(t, {{0, {1}, 1, {0, 2}}, {2, {3}, 3, {2}}});
    EXPECT_EQ(matched_edges(t).edges, (std::vector<Edge>{{0, 1}, {2, 3}}));
}

TEST(GuidedMatching, TriangleRow) {
    Graph k3 = complete(3);
    Matching em = Matching::from_edges(3, {{0, 1}});
    RepresentsTable t = guided_maximal_matching(k3, em, bfs_levels(k3, 0));
    expect_rows(t, {{0, {1, 2}, 1, {0, 2}}});
    EXPECT_FALSE(t.is_endpoint(2));
    EXPECT_EQ(matched_edges(t).edges, (std::vector<Edge>{{0, 1}}));
}

TEST(GuidedMatching, SameLevelBeatsNextLevel) {
    Graph g = graph_of(6, {{0, 1}, {0, 2}, {0, 3}, {2, 3}, {2, 4}, {3, 5}});
    Matching em = Matching::from_edges(6, {{0, 1}, {2, 4}, {3, 5}});
    RepresentsTable t = guided_maximal_matching(g, em, bfs_levels(g, 0));
    expect_rows(t, {{0, {1, 2, 3}, 1, {0}}, {2, {3, 4}, 3, {2, 5}}});
}

TEST(GuidedMatching, TierFirstAndVertexFirstCanDiffer) {
    // Level 1 = {1, 2, 3}. Vertex 2 only has a next-level edge outside E_M,
    // vertex 3 a next-level edge inside it.
    Graph g = graph_of(6, {{0, 1}, {0, 2}, {0, 3}, {2, 4}, {3, 5}});
    Matching em = Matching::from_edges(6, {{0, 1}, {3, 5}});
    BfsLevels levels = bfs_levels(g, 0);
    RepresentsTable tier = guided_maximal_matching(g, em, levels, TieBreak::TierFirst);
    RepresentsTable vert = guided_maximal_matching(g, em, levels, TieBreak::VertexFirst);
    expect_rows(tier, {{0, {1, 2, 3}, 1, {0}}, {3, {5}, 5, {3}}, {2, {4}, 4, {2}}});
    expect_rows(vert, {{0, {1, 2, 3}, 1, {0}}, {2, {4}, 4, {2}}, {3, {5}, 5, {3}}});
}

TEST(GuidedMatching, RejectsForeignInputs) {
    Graph g = path(4);
    EXPECT_THROW(guided_maximal_matching(g, Matching::from_edges(4, {{0, 2}}), bfs_levels(g, 0)),
                 std::invalid_argument);
    BfsLevels bad = bfs_levels(g, 0);
    bad.levels = {{0, 3}, {1}, {2}};
    bad.levelOf = {0, 1, 2, 0};
    EXPECT_THROW(guided_maximal_matching(g, maximum_matching(g), bad), std::invalid_argument);
    bad.levelOf = {0, 1, 2, 2};
    EXPECT_THROW(guided_maximal_matching(g, maximum_matching(g), bad), std::invalid_argument);
}

TEST(GuidedMatching, InvariantsOnRandomGraphs) {
    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 800; ++trial) {
        Graph raw = random_graph(2 + rng() % 14, 0.15 + 0.5 * (rng() % 100) / 100.0, rng);
        for (const auto& part : components(raw)) {
            const Graph& g = part.graph;
            VertexId seed = static_cast<VertexId>(rng() % g.vertex_count());
            for (TieBreak tie : {TieBreak::TierFirst, TieBreak::VertexFirst}) {
                RepresentsTable t = build(g, seed, tie);
                Matching m = matched_edges(t);
                ASSERT_TRUE(is_maximal_matching(g, m));
                std::vector<char> inP(g.vertex_count(), 0);
                for (VertexId v : t.endpoints()) inP[v] = 1;
                for (const Edge& e : g.edges()) ASSERT_TRUE(inP[e.u] || inP[e.v]);
                for (const auto& row : t.rows) {
                    ASSERT_TRUE(std::count(row.list1.begin(), row.list1.end(), row.node2));
                    ASSERT_TRUE(std::count(row.list2.begin(), row.list2.end(), row.node1));
                    ASSERT_EQ(row.status1, EndpointStatus::Active);
                    ASSERT_EQ(row.status2, EndpointStatus::Active);
                    for (VertexId w : row.list1) ASSERT_TRUE(g.has_edge(row.node1, w));
                    for (VertexId w : row.list2) ASSERT_TRUE(g.has_edge(row.node2, w));
                }
            }
        }
    }
}

TEST(GuidedMatching, TableJson) {
    Graph g = path(4);
    auto j = table_to_json(g, build(g, 0));
    ASSERT_EQ(j.size(), 2u);
    EXPECT_EQ(j[0]["node1"], "0");
    EXPECT_EQ(j[0]["list2"], nlohmann::json::array({"0", "2"}));
}
