#include <gtest/gtest.h>

#include <random>

#include "direvc/oracle.hpp"
#include "direvc/reductions.hpp"
#include "direvc/solver.hpp"
#include "support.hpp"

using namespace direvc;
using namespace direvc::testing;

namespace {

DiReInstance random_dire(std::mt19937_64& rng, std::size_t maxCandidates) {
    DiReInstance d;
    std::size_t n = 1 + rng() % maxCandidates;
    for (std::size_t i = 0; i < n; ++i) d.candidates.push_back("c" + std::to_string(i));
    auto random_set = [&] {
        std::vector<std::string> s;
        std::size_t size = rng() % 3;
        for (std::size_t i = 0; i < size; ++i) {
            std::string c = d.candidates[rng() % n];
            if (std::find(s.begin(), s.end(), c) == s.end()) s.push_back(c);
        }
        return s;
    };
    std::size_t groups = rng() % 8;
    for (std::size_t i = 0; i < groups; ++i) d.groups.push_back(random_set());
    std::size_t pops = rng() % 8;
    for (std::size_t i = 0; i < pops; ++i) d.populations.push_back({random_set()});
    d.k = rng() % (n + 1);
    return d;
}

RawMultigraph random_multigraph(std::mt19937_64& rng, std::size_t maxVertices) {
    RawMultigraph raw;
    std::size_t n = 1 + rng() % maxVertices;
    for (std::size_t i = 0; i < n; ++i) raw.add_vertex(std::to_string(i));
    std::size_t m = rng() % (2 * n + 1);
    for (std::size_t i = 0; i < m; ++i) raw.edges.emplace_back(rng() % n, rng() % n);
    return raw;
}

}  // namespace

TEST(VcToDire, SingleEdge) {
    DiReInstance d = vc_to_dire(path(2), 1);
    EXPECT_EQ(d.candidates, (std::vector<std::string>{"0", "1"}));
    EXPECT_EQ(d.groups, (std::vector<std::vector<std::string>>{{"0", "1"}}));
    ASSERT_EQ(d.populations.size(), 1u);
    EXPECT_EQ(d.populations[0].approves, (std::vector<std::string>{"0", "1"}));
    EXPECT_EQ(d.k, 1u);
    EXPECT_EQ(d.diversity_bounds(), std::vector<int>{1});
    EXPECT_EQ(d.representation_bounds(), std::vector<int>{1});
}

TEST(VcToDire, EdgelessAndPath) {
    DiReInstance empty = vc_to_dire(Graph::from_edges(3, {}), 0);
    EXPECT_TRUE(empty.groups.empty());
    EXPECT_TRUE(dire_feasible_bruteforce(empty).feasible);
    DiReInstance p4 = vc_to_dire(path(4), 2);
    EXPECT_EQ(p4.candidates.size(), 4u);
    EXPECT_EQ(p4.groups.size(), 3u);
    EXPECT_EQ(p4.populations.size(), 3u);
}

TEST(DireBruteForce, Examples) {
    DiReInstance d = vc_to_dire(path(2), 1);
    Committee yes = dire_feasible_bruteforce(d);
    EXPECT_TRUE(yes.feasible);
    EXPECT_EQ(yes.members, (std::vector<std::string>{"0"}));
    d.k = 0;
    EXPECT_FALSE(dire_feasible_bruteforce(d).feasible);

    DiReInstance p4 = vc_to_dire(path(4), 1);
    EXPECT_FALSE(dire_feasible_bruteforce(p4).feasible);
    p4.k = 2;
    Committee c = dire_feasible_bruteforce(p4);
    ASSERT_TRUE(c.feasible);
    // Smallest lexicographic committee of size two; {1, 2} is also valid.
    EXPECT_EQ(c.members, (std::vector<std::string>{"0", "2"}));
    Graph g = path(4);
    std::vector<VertexId> ids;
    for (const auto& m : c.members) ids.push_back(*g.find(m));
    EXPECT_TRUE(is_vertex_cover(g, ids));
}

TEST(DireToVc, WorkedExampleBullets) {
    DiReInstance d;
    d.candidates = {"a", "b", "c", "d"};
    d.groups = {{"a", "b"}, {"d"}};
    d.populations = {{{"b", "c"}}};
    d.k = 2;
    VcInstance vc = dire_to_vc(d);
    EXPECT_EQ(vc.k, 2u);
    EXPECT_EQ(to_edge_list(vc.graph), "a b\nd d\nb c\n");
}

TEST(DireToVc, EmptySetsAreIgnored) {
    DiReInstance d;
    d.candidates = {"a", "b"};
    d.groups = {{}, {}};
    VcInstance vc = dire_to_vc(d);
    EXPECT_TRUE(vc.graph.edges.empty());
    EXPECT_EQ(vc.graph.names.size(), 2u);
}

TEST(DireToVc, DoubledConstraintCollapses) {
    DiReInstance d;
    d.candidates = {"a", "b"};
    d.groups = {{"a", "b"}};
    d.populations = {{{"a", "b"}}};
    d.k = 1;
    VcInstance vc = dire_to_vc(d);
    EXPECT_EQ(vc.graph.edges.size(), 2u);
    NormalizedGraph n = normalize(vc.graph);
    EXPECT_EQ(n.graph.edge_count(), 1u);
    EXPECT_LE(exact_mvc(n.graph).size, vc.k);
}

TEST(DireInstance, ValidationAndJson) {
    DiReInstance d;
    d.candidates = {"a", "b", "c"};
    d.groups = {{"a", "b", "c"}};
    EXPECT_THROW(d.validate(), std::invalid_argument);
    d.groups = {{"a", "z"}};
    EXPECT_THROW(d.validate(), std::invalid_argument);
    d.groups = {{"a", "b"}};
    d.populations = {{{"c"}}};
    d.k = 2;
    DiReInstance back = DiReInstance::from_json(d.to_json());
    EXPECT_EQ(back.to_json(), d.to_json());
}

TEST(Reductions, RoundTrip) {
    std::mt19937_64 rng(59);
    for (int trial = 0; trial < 200; ++trial) {
        Graph g = random_graph(1 + rng() % 9, 0.4, rng);
        VcInstance vc = dire_to_vc(vc_to_dire(g, 3));
        EXPECT_EQ(vc.k, 3u);
        ASSERT_EQ(normalize(vc.graph).graph, g);
    }
}

TEST(Reductions, VcEqualsDireOnSmallGraphs) {
    std::mt19937_64 rng(61);
    for (int trial = 0; trial < 200; ++trial) {
        Graph g = random_graph(1 + rng() % 8, 0.4, rng);
        std::size_t opt = exact_mvc(g).size;
        for (std::size_t k = 0; k <= g.vertex_count(); ++k)
            ASSERT_EQ(opt <= k, dire_feasible_bruteforce(vc_to_dire(g, k)).feasible);
    }
}

TEST(Reductions, DireEqualsVcOnRandomInstances) {
    std::mt19937_64 rng(67);
    for (int trial = 0; trial < 200; ++trial) {
        DiReInstance d = random_dire(rng, 10);
        VcInstance vc = dire_to_vc(d);
        Graph g = normalize(vc.graph).graph;
        // Loop dummies never help: an optimal cover can swap each for its owner.
        ASSERT_EQ(dire_feasible_bruteforce(d).feasible, exact_mvc(g).size <= vc.k);
    }
}

TEST(ToSimpleConnected, ParallelsAndLoop) {
    RawMultigraph raw = parse_graph("0 1\n0 1\n1 1\n", GraphFormat::EdgeList);
    SimpleConnectedInstance s = to_simple_connected(raw, 1);
    EXPECT_EQ(s.originalVertices, (std::vector<std::string>{"0", "1"}));
    EXPECT_EQ(s.loopDummies, (std::vector<std::string>{"d__1_0"}));
    EXPECT_EQ(s.hub, "u__hub");
    EXPECT_EQ(s.kPrime, 2u);
    std::vector<std::pair<std::string, std::string>> want = {
        {"0", "1"}, {"1", "d__1_0"}, {"u__hub", "0"}, {"u__hub", "1"}, {"u__hub", "d__1_0"}};
    EXPECT_EQ(s.graph, Graph::from_named_edges({"0", "1", "d__1_0", "u__hub"}, want));
    EXPECT_EQ(validate_simple_connected(s.graph).status, Connectivity::Ok);
}

TEST(ToSimpleConnected, SimpleInputOnlyGainsHub) {
    SimpleConnectedInstance s = to_simple_connected(to_raw(path(4)), 2);
    EXPECT_EQ(s.graph.vertex_count(), 5u);
    EXPECT_EQ(s.graph.edge_count(), 3u + 4u);
    EXPECT_TRUE(s.loopDummies.empty());
    EXPECT_EQ(s.kPrime, 3u);
}

TEST(ToSimpleConnected, SingleVertex) {
    RawMultigraph raw;
    raw.add_vertex("v");
    SimpleConnectedInstance s = to_simple_connected(raw, 0);
    EXPECT_EQ(s.kPrime, 1u);
    EXPECT_EQ(s.graph.edge_count(), 1u);
    EXPECT_EQ(exact_mvc(s.graph).size, 1u);
}

TEST(ToSimpleConnected, NameCollisions) {
    RawMultigraph raw = parse_graph("u__hub d__a_0\na a\n", GraphFormat::EdgeList);
    SimpleConnectedInstance s = to_simple_connected(raw, 0);
    EXPECT_EQ(s.hub, "u__hub_1");
    EXPECT_EQ(s.loopDummies, (std::vector<std::string>{"d__a_1"}));
    EXPECT_GE(s.report.size(), 2u);
}

TEST(ToSimpleConnected, OptimumGrowsByOne) {
    std::mt19937_64 rng(71);
    for (int trial = 0; trial < 200; ++trial) {
        RawMultigraph raw = random_multigraph(rng, 9);
        SimpleConnectedInstance s = to_simple_connected(raw, 0);
        ASSERT_EQ(validate_simple_connected(s.graph).status, Connectivity::Ok);
        ASSERT_EQ(exact_mvc(s.graph).size, exact_mvc(normalize(raw).graph).size + 1)
            << to_edge_list(raw);
    }
}

TEST(ToSimpleConnected, MinimumCoverMayUseDummyAndOwnerWithoutHub) {
    // One looped vertex becomes a triangle {v, d__v_0, u__hub}; the hubless
    // pair {v, d__v_0} is as small as any cover that contains the hub.
    RawMultigraph raw = parse_graph("v v\n", GraphFormat::EdgeList);
    SimpleConnectedInstance s = to_simple_connected(raw, 1);
    EXPECT_EQ(s.graph, Graph::from_named_edges({"d__v_0", "u__hub", "v"},
                                               {{"v", "d__v_0"}, {"u__hub", "v"}, {"u__hub", "d__v_0"}}));
    std::vector<VertexId> hubless = {*s.graph.find("v"), *s.graph.find("d__v_0")};
    EXPECT_TRUE(is_vertex_cover(s.graph, hubless));
    EXPECT_EQ(exact_mvc(s.graph).size, hubless.size());
    EXPECT_EQ(s.kPrime, 2u);
}
