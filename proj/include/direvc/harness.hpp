#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "direvc/graph.hpp"
#include "direvc/oracle.hpp"
#include "direvc/solver.hpp"

namespace direvc {

// One solver configuration in the differential mode matrix.
struct Mode {
    TieBreak tieBreak = TieBreak::TierFirst;
    std::optional<std::uint64_t> matchingPermutation;

    std::string name() const;
    SolveOptions options() const;
    nlohmann::json to_json() const;
    static Mode from_json(const nlohmann::json& j);
};

// Normative mode, vertex-first tie-break, and a relabeled maximum matching.
std::vector<Mode> default_modes(std::uint64_t rngSeed);

enum class Classification { Agree, Suboptimal, InvalidCover, Stage3AssertFail };

std::string_view to_string(Classification c);
std::optional<Classification> classification_from_string(std::string_view s);

struct Counterexample {
    std::string source;
    std::size_t instance = 0;
    std::string graph;  // edge-list text
    Mode mode;
    std::vector<std::string> algoCover;
    std::vector<std::string> oracleCover;
    Classification classification = Classification::Suboptimal;
    std::uint64_t rngSeed = 0;
    std::string detail;

    std::string id() const;
    nlohmann::json to_json() const;
    static Counterexample from_json(const nlohmann::json& j);
};

struct ScalingSample {
    std::size_t vertices = 0;
    std::size_t trials = 0;
    double meanEdges = 0;
    double meanSeconds = 0;
};

struct RunReport {
    std::map<std::string, std::size_t> instancesPerSource;
    std::size_t instances = 0;
    std::size_t evaluations = 0;  // instances x modes
    std::size_t agreements = 0;
    std::size_t disagreements = 0;
    std::map<std::string, std::size_t> classifications;
    std::map<std::string, std::size_t> agreementsPerMode;
    std::map<std::string, std::size_t> evaluationsPerMode;
    std::size_t skippedOracleLimit = 0;
    std::size_t lowerBoundViolations = 0;  // matching bound above the optimum
    std::size_t sandwichViolations = 0;    // size outside [|E_M|, 2|E_M|]
    std::size_t counterexamples = 0;
    double wallSeconds = 0;

    std::vector<ScalingSample> scaling;
    std::optional<double> scalingSlope;
    double scalingSeconds = 0;

    double agreement_rate() const;
    bool reconciled() const;
    // Timing fields are omitted unless requested so that reports of
    // identical runs compare equal.
    nlohmann::json to_json(bool includeTiming = true) const;
    std::string summary() const;
};

// Uniform random labeled spanning tree (Pruefer code) plus each remaining
// pair independently with probability p.
Graph gen_random_connected(std::size_t vertices, double p, std::uint64_t rngSeed);

inline constexpr std::size_t kEnumerationLimit = 7;

// Every labeled simple connected graph on `vertices` vertices, once each.
// Returns the number visited.
std::size_t enumerate_connected(std::size_t vertices,
                                const std::function<void(const Graph&)>& visit);

struct SourceSpec {
    std::size_t exhaustiveMax = 0;  // enumerate every connected graph with 1..max vertices
    std::size_t randomCount = 0;
    std::size_t randomMinVertices = 1;
    std::size_t randomMaxVertices = 16;
    std::uint64_t rngSeed = 1;
    std::vector<Graph> explicitGraphs;
    std::size_t oracleLimit = kDefaultOracleVertexLimit;
};

struct DifferentialResult {
    RunReport report;
    std::vector<Counterexample> counterexamples;  // sorted by source, instance, mode
};

struct Evaluation {
    Classification classification;
    CoverResult algo;
    std::string detail;
};

// Runs one mode on one graph against a known optimum.
Evaluation evaluate(const Graph& g, const Mode& mode, const CoverResult& oracle);

// Solves every instance in every mode, compares against the exact oracle,
// and persists each disagreement under `outDir` when given.
DifferentialResult differential_run(const SourceSpec& source, const std::vector<Mode>& modes,
                                    const std::optional<std::filesystem::path>& outDir = {},
                                    unsigned threads = 0);

// Writes <dir>/<id>/{graph.el, counterexample.json, replay.sh} atomically.
std::filesystem::path persist_counterexample(const std::filesystem::path& dir,
                                             const Counterexample& c);

// Reloads a persisted counterexample and re-runs it.
struct ReplayResult {
    Classification recorded;
    Classification replayed;
    bool matches() const { return recorded == replayed; }
};
ReplayResult replay_counterexample(const std::filesystem::path& dir);

// Times solve() on sparse random connected graphs and fits the log-log slope
// of mean time against vertex count.
RunReport scaling_bench(const std::vector<std::size_t>& sizes, std::size_t trials,
                        double edgeProbability = 0.1, std::uint64_t rngSeed = 1);

}  // namespace direvc
