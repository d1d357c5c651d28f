#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "direvc/harness.hpp"
#include "support.hpp"

using namespace direvc;
using namespace direvc::testing;
namespace fs = std::filesystem;

namespace {

fs::path scratch(const std::string& name) {
    fs::path p = fs::temp_directory_path() / ("direvc-test-" + name);
    fs::remove_all(p);
    return p;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

TEST(GenRandomConnected, Examples) {
    EXPECT_EQ(gen_random_connected(1, 0.5, 3).vertex_count(), 1u);
    Graph tree = gen_random_connected(4, 0.0, 3);
    EXPECT_EQ(tree.edge_count(), 3u);
    EXPECT_EQ(validate_simple_connected(tree).status, Connectivity::Ok);
    EXPECT_EQ(gen_random_connected(4, 1.0, 3), complete(4));
    EXPECT_EQ(gen_random_connected(9, 0.2, 77), gen_random_connected(9, 0.2, 77));
    EXPECT_THROW(gen_random_connected(0, 0.5, 1), std::invalid_argument);
    EXPECT_THROW(gen_random_connected(3, 1.5, 1), std::invalid_argument);
}

TEST(GenRandomConnected, AlwaysConnected) {
    for (std::uint64_t seed = 0; seed < 500; ++seed) {
        Graph g = gen_random_connected(1 + seed % 30, 0.05, seed);
        ASSERT_EQ(validate_simple_connected(g).status, Connectivity::Ok);
    }
}

TEST(EnumerateConnected, Counts) {
    EXPECT_EQ(enumerate_connected(1, {}), 1u);
    EXPECT_EQ(enumerate_connected(2, {}), 1u);
    EXPECT_EQ(enumerate_connected(3, {}), 4u);
    EXPECT_EQ(enumerate_connected(4, {}), 38u);
    EXPECT_EQ(enumerate_connected(5, {}), 728u);
    EXPECT_THROW(enumerate_connected(8, {}), std::invalid_argument);
}

TEST(EnumerateConnected, VisitsDistinctConnectedGraphs) {
    std::vector<std::string> seen;
    enumerate_connected(4, [&](const Graph& g) {
        EXPECT_EQ(validate_simple_connected(g).status, Connectivity::Ok);
        seen.push_back(to_edge_list(g));
    });
    std::sort(seen.begin(), seen.end());
    EXPECT_EQ(std::unique(seen.begin(), seen.end()), seen.end());
    EXPECT_EQ(seen.size(), 38u);
}

TEST(DifferentialRun, WorkedExampleAgrees) {
    SourceSpec plan;
    plan.explicitGraphs = {example_graph(), path(4)};
    DifferentialResult r = differential_run(plan, default_modes(1));
    EXPECT_EQ(r.report.instances, 2u);
    EXPECT_EQ(r.report.evaluations, 6u);
    EXPECT_EQ(r.report.agreements, 6u);
    EXPECT_TRUE(r.counterexamples.empty());
    EXPECT_TRUE(r.report.reconciled());
}

TEST(DifferentialRun, EnumerationIsSelfCounted) {
    SourceSpec plan;
    plan.exhaustiveMax = 4;
    DifferentialResult r = differential_run(plan, {Mode{}});
    std::size_t expected = 0;
    for (std::size_t n = 1; n <= 4; ++n) expected += enumerate_connected(n, {});
    EXPECT_EQ(r.report.instancesPerSource.at("exhaustive"), expected);
    EXPECT_TRUE(r.report.reconciled());
}

TEST(DifferentialRun, OracleLimitSkips) {
    SourceSpec plan;
    plan.explicitGraphs = {path(12)};
    plan.oracleLimit = 10;
    DifferentialResult r = differential_run(plan, {Mode{}});
    EXPECT_EQ(r.report.skippedOracleLimit, 1u);
    EXPECT_EQ(r.report.evaluations, 0u);
    EXPECT_TRUE(r.report.reconciled());
}

TEST(DifferentialRun, ReproducibleAndPersisted) {
    SourceSpec plan;
    plan.randomCount = 1500;
    plan.randomMinVertices = 7;
    plan.randomMaxVertices = 12;
    plan.rngSeed = 5;
    plan.explicitGraphs = {suboptimal_example()};
    fs::path a = scratch("run-a");
    fs::path b = scratch("run-b");
    DifferentialResult ra = differential_run(plan, default_modes(plan.rngSeed), a, 1);
    DifferentialResult rb = differential_run(plan, default_modes(plan.rngSeed), b, 2);
    EXPECT_EQ(ra.report.to_json(false), rb.report.to_json(false));
    EXPECT_TRUE(ra.report.reconciled());
    EXPECT_EQ(ra.report.classifications.count("INVALID_COVER"), 0u);
    EXPECT_EQ(ra.report.classifications.count("STAGE3_ASSERT_FAIL"), 0u);
    EXPECT_TRUE(fs::exists(a / "report.json"));
    EXPECT_TRUE(fs::exists(a / "summary.txt"));

    std::vector<std::string> namesA, namesB;
    for (const auto& e : fs::directory_iterator(a / "counterexamples"))
        namesA.push_back(e.path().filename().string());
    for (const auto& e : fs::directory_iterator(b / "counterexamples"))
        namesB.push_back(e.path().filename().string());
    std::sort(namesA.begin(), namesA.end());
    std::sort(namesB.begin(), namesB.end());
    EXPECT_EQ(namesA, namesB);
    EXPECT_EQ(namesA.size(), ra.counterexamples.size());
    EXPECT_GE(namesA.size(), 1u);
    for (const auto& name : namesA) {
        EXPECT_EQ(slurp(a / "counterexamples" / name / "counterexample.json"),
                  slurp(b / "counterexamples" / name / "counterexample.json"));
        EXPECT_TRUE(replay_counterexample(a / "counterexamples" / name).matches());
    }
    fs::remove_all(a);
    fs::remove_all(b);
}

TEST(Counterexample, JsonRoundTripAndReplay) {
    // A persisted record whose graph the solver handles optimally replays as
    // AGREE, so replay reports the mismatch with the recorded SUBOPTIMAL.
    Counterexample c;
    c.source = "explicit";
    c.instance = 0;
    c.graph = to_edge_list(path(4));
    c.mode = Mode{TieBreak::VertexFirst, 9};
    c.algoCover = {"0", "1", "2"};
    c.oracleCover = {"1", "2"};
    c.classification = Classification::Suboptimal;
    Counterexample back = Counterexample::from_json(c.to_json());
    EXPECT_EQ(back.to_json(), c.to_json());
    EXPECT_EQ(back.id(), "explicit-0-vertex-first+perm9");

    fs::path dir = scratch("replay");
    fs::create_directories(dir);
    fs::path saved = persist_counterexample(dir, c);
    EXPECT_TRUE(fs::exists(saved / "graph.el"));
    EXPECT_TRUE(fs::exists(saved / "replay.sh"));
    ReplayResult r = replay_counterexample(saved);
    EXPECT_EQ(r.recorded, Classification::Suboptimal);
    EXPECT_EQ(r.replayed, Classification::Agree);
    EXPECT_FALSE(r.matches());
    fs::remove_all(dir);
}

TEST(Evaluate, ClassifiesAgainstOracle) {
    Graph g = example_graph();
    Evaluation ev = evaluate(g, Mode{}, exact_mvc(g));
    EXPECT_EQ(ev.classification, Classification::Agree);
    CoverResult fakeOptimum = exact_mvc(g);
    fakeOptimum.size = 5;
    EXPECT_THROW(evaluate(g, Mode{}, fakeOptimum), std::logic_error);
    fakeOptimum.size = 3;
    EXPECT_EQ(evaluate(g, Mode{}, fakeOptimum).classification, Classification::Suboptimal);
}

TEST(Mode, NamesAndJson) {
    EXPECT_EQ(Mode{}.name(), "tier-first");
    EXPECT_EQ((Mode{TieBreak::TierFirst, 4}).name(), "tier-first+perm4");
    Mode m{TieBreak::VertexFirst, 2};
    EXPECT_EQ(Mode::from_json(m.to_json()).name(), m.name());
    EXPECT_EQ(default_modes(1).size(), 3u);
}

TEST(ScalingBench, Shapes) {
    RunReport empty = scaling_bench({}, 3);
    EXPECT_TRUE(empty.scaling.empty());
    EXPECT_FALSE(empty.scalingSlope);
    RunReport tiny = scaling_bench({2}, 1);
    ASSERT_EQ(tiny.scaling.size(), 1u);
    EXPECT_FALSE(tiny.scalingSlope);
    RunReport three = scaling_bench({20, 40, 60}, 2);
    EXPECT_EQ(three.scaling.size(), 3u);
    ASSERT_TRUE(three.scalingSlope);
    EXPECT_TRUE(std::isfinite(*three.scalingSlope));
    EXPECT_NE(three.summary().find("slope"), std::string::npos);
}
