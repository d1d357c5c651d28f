#include "direvc/harness.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <cmath>
#include <fstream>
#include <mutex>
#include <random>
#include <sstream>
#include <thread>

namespace direvc {

std::string Mode::name() const {
    std::string out = tieBreak == TieBreak::TierFirst ? "tier-first" : "vertex-first";
    if (matchingPermutation) out += "+perm" + std::to_string(*matchingPermutation);
    return out;
}

SolveOptions Mode::options() const {
    SolveOptions o;
    o.tieBreak = tieBreak;
    o.matchingPermutation = matchingPermutation;
    return o;
}

nlohmann::json Mode::to_json() const {
    nlohmann::json j;
    j["tieBreak"] = tieBreak == TieBreak::TierFirst ? "tier-first" : "vertex-first";
    j["matchingPermutation"] =
        matchingPermutation ? nlohmann::json(*matchingPermutation) : nlohmann::json(nullptr);
    return j;
}

Mode Mode::from_json(const nlohmann::json& j) {
    Mode m;
    const auto tie = j.at("tieBreak").get<std::string>();
    if (tie == "tier-first") {
        m.tieBreak = TieBreak::TierFirst;
    } else if (tie == "vertex-first") {
        m.tieBreak = TieBreak::VertexFirst;
    } else {
        throw std::invalid_argument("unknown tie-break '" + tie + "'");
    }
    if (j.contains("matchingPermutation") && !j.at("matchingPermutation").is_null())
        m.matchingPermutation = j.at("matchingPermutation").get<std::uint64_t>();
    return m;
}

std::vector<Mode> default_modes(std::uint64_t rngSeed) {
    return {Mode{TieBreak::TierFirst, std::nullopt}, Mode{TieBreak::VertexFirst, std::nullopt},
            Mode{TieBreak::TierFirst, rngSeed}};
}

std::string_view to_string(Classification c) {
    switch (c) {
        case Classification::Agree: return "AGREE";
        case Classification::Suboptimal: return "SUBOPTIMAL";
        case Classification::InvalidCover: return "INVALID_COVER";
        case Classification::Stage3AssertFail: return "STAGE3_ASSERT_FAIL";
    }
    return "unknown";
}

std::optional<Classification> classification_from_string(std::string_view s) {
    for (auto c : {Classification::Agree, Classification::Suboptimal,
                   Classification::InvalidCover, Classification::Stage3AssertFail})
        if (to_string(c) == s) return c;
    return std::nullopt;
}

std::string Counterexample::id() const {
    return source + "-" + std::to_string(instance) + "-" + mode.name();
}

nlohmann::json Counterexample::to_json() const {
    return {{"source", source},
            {"instance", instance},
            {"graph", graph},
            {"mode", mode.to_json()},
            {"algoCover", algoCover},
            {"algoSize", algoCover.size()},
            {"oracleCover", oracleCover},
            {"oracleSize", oracleCover.size()},
            {"classification", to_string(classification)},
            {"rngSeed", rngSeed},
            {"detail", detail}};
}

Counterexample Counterexample::from_json(const nlohmann::json& j) {
    Counterexample c;
    c.source = j.at("source").get<std::string>();
    c.instance = j.at("instance").get<std::size_t>();
    c.graph = j.at("graph").get<std::string>();
    c.mode = Mode::from_json(j.at("mode"));
    c.algoCover = j.at("algoCover").get<std::vector<std::string>>();
    c.oracleCover = j.at("oracleCover").get<std::vector<std::string>>();
    auto cls = classification_from_string(j.at("classification").get<std::string>());
    if (!cls) throw std::invalid_argument("unknown classification");
    c.classification = *cls;
    c.rngSeed = j.value("rngSeed", std::uint64_t{0});
    c.detail = j.value("detail", std::string{});
    return c;
}

double RunReport::agreement_rate() const {
    return evaluations == 0 ? 1.0 : static_cast<double>(agreements) / static_cast<double>(evaluations);
}

bool RunReport::reconciled() const {
    std::size_t classified = 0;
    for (const auto& [name, count] : classifications) classified += count;
    std::size_t perSource = 0;
    for (const auto& [name, count] : instancesPerSource) perSource += count;
    return agreements + disagreements == evaluations && classified == disagreements &&
           perSource == instances;
}

nlohmann::json RunReport::to_json(bool includeTiming) const {
    nlohmann::json j;
    j["instancesPerSource"] = instancesPerSource;
    j["instances"] = instances;
    j["evaluations"] = evaluations;
    j["agreements"] = agreements;
    j["disagreements"] = disagreements;
    j["agreementRate"] = agreement_rate();
    j["classifications"] = classifications;
    j["agreementsPerMode"] = agreementsPerMode;
    j["evaluationsPerMode"] = evaluationsPerMode;
    j["skippedOracleLimit"] = skippedOracleLimit;
    j["lowerBoundViolations"] = lowerBoundViolations;
    j["sandwichViolations"] = sandwichViolations;
    j["counterexamples"] = counterexamples;
    j["reconciled"] = reconciled();
    if (includeTiming) {
        j["wallSeconds"] = wallSeconds;
        auto rows = nlohmann::json::array();
        for (const auto& s : scaling)
            rows.push_back({{"vertices", s.vertices},
                            {"trials", s.trials},
                            {"meanEdges", s.meanEdges},
                            {"meanSeconds", s.meanSeconds}});
        j["scaling"] = rows;
        j["scalingSlope"] = scalingSlope ? nlohmann::json(*scalingSlope) : nlohmann::json(nullptr);
        j["scalingSeconds"] = scalingSeconds;
    }
    return j;
}

std::string RunReport::summary() const {
    std::ostringstream out;
    out << "instances " << instances;
    for (const auto& [source, count] : instancesPerSource) out << " (" << source << ' ' << count << ')';
    out << "\nevaluations " << evaluations << ", agreements " << agreements << ", disagreements "
        << disagreements << ", agreement rate " << agreement_rate() << '\n';
    for (const auto& [mode, count] : evaluationsPerMode) {
        auto it = agreementsPerMode.find(mode);
        out << "  mode " << mode << ": " << (it == agreementsPerMode.end() ? 0 : it->second) << '/'
            << count << " agree\n";
    }
    for (const auto& [cls, count] : classifications) out << "  " << cls << ' ' << count << '\n';
    out << "skipped (oracle limit) " << skippedOracleLimit << '\n';
    out << "matching bound violations " << lowerBoundViolations << ", sandwich violations "
        << sandwichViolations << '\n';
    out << "counterexamples persisted " << counterexamples << '\n';
    if (!scaling.empty()) {
        for (const auto& s : scaling)
            out << "  m=" << s.vertices << " trials=" << s.trials << " mean edges " << s.meanEdges
                << " mean seconds " << s.meanSeconds << '\n';
        if (scalingSlope) {
            out << "log-log slope " << *scalingSlope << '\n';
        } else {
            out << "log-log slope undefined\n";
        }
    }
    out << "wall seconds " << wallSeconds << '\n';
    return out.str();
}

Graph gen_random_connected(std::size_t vertices, double p, std::uint64_t rngSeed) {
    if (vertices == 0) throw std::invalid_argument("gen_random_connected needs at least one vertex");
    if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("edge probability outside [0, 1]");
    std::mt19937_64 rng(rngSeed);
    std::vector<Edge> edges;

    if (vertices == 2) {
        edges.push_back({0, 1});
    } else if (vertices > 2) {
        std::uniform_int_distribution<VertexId> pick(0, static_cast<VertexId>(vertices - 1));
        std::vector<VertexId> code(vertices - 2);
        for (auto& c : code) c = pick(rng);
        std::vector<std::size_t> degree(vertices, 1);
        for (VertexId c : code) ++degree[c];
        for (VertexId c : code) {
            VertexId leaf = 0;
            while (degree[leaf] != 1) ++leaf;
            edges.push_back(make_edge(leaf, c));
            --degree[leaf];
            --degree[c];
        }
        VertexId a = 0;
        while (degree[a] != 1) ++a;
        VertexId b = a + 1;
        while (degree[b] != 1) ++b;
        edges.push_back({a, b});
    }

    std::vector<char> inTree(vertices * vertices, 0);
    for (const Edge& e : edges) inTree[e.u * vertices + e.v] = 1;
    std::bernoulli_distribution extra(p);
    for (VertexId u = 0; u < vertices; ++u)
        for (VertexId v = u + 1; v < vertices; ++v)
            if (!inTree[u * vertices + v] && extra(rng)) edges.push_back({u, v});
    return Graph::from_edges(vertices, edges);
}

namespace {

struct PairTable {
    std::vector<Edge> pairs;
    explicit PairTable(std::size_t n) {
        for (VertexId u = 0; u < n; ++u)
            for (VertexId v = u + 1; v < n; ++v) pairs.push_back({u, v});
    }
};

bool mask_connected(std::size_t n, const std::vector<Edge>& pairs, std::uint64_t mask) {
    if (n <= 1) return true;
    std::uint32_t adj[kEnumerationLimit] = {};
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        if (mask >> i & 1U) {
            adj[pairs[i].u] |= 1U << pairs[i].v;
            adj[pairs[i].v] |= 1U << pairs[i].u;
        }
    }
    std::uint32_t seen = 1;
    std::uint32_t frontier = 1;
    while (frontier) {
        std::uint32_t next = 0;
        for (std::uint32_t f = frontier; f; f &= f - 1) next |= adj[std::countr_zero(f)];
        frontier = next & ~seen;
        seen |= next;
    }
    return seen == (1U << n) - 1;
}

Graph mask_graph(std::size_t n, const std::vector<Edge>& pairs, std::uint64_t mask) {
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < pairs.size(); ++i)
        if (mask >> i & 1U) edges.push_back(pairs[i]);
    return Graph::from_edges(n, edges);
}

}  // namespace

std::size_t enumerate_connected(std::size_t vertices,
                                const std::function<void(const Graph&)>& visit) {
    if (vertices > kEnumerationLimit)
        throw std::invalid_argument("enumerate_connected supports at most " +
                                    std::to_string(kEnumerationLimit) + " vertices");
    if (vertices == 0) return 0;
    PairTable table(vertices);
    const std::uint64_t total = std::uint64_t{1} << table.pairs.size();
    std::size_t count = 0;
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        if (!mask_connected(vertices, table.pairs, mask)) continue;
        ++count;
        if (visit) visit(mask_graph(vertices, table.pairs, mask));
    }
    return count;
}

Evaluation evaluate(const Graph& g, const Mode& mode, const CoverResult& oracle) {
    Evaluation ev{Classification::Agree, solve(g, mode.options()), {}};
    const auto& algo = ev.algo;
    auto has = [&](DiagnosticKind kind) {
        return std::any_of(algo.diagnostics.begin(), algo.diagnostics.end(),
                           [&](const SeedDiagnostic& d) { return d.kind == kind; });
    };
    if (has(DiagnosticKind::Stage3AssertFail)) {
        ev.classification = Classification::Stage3AssertFail;
        for (const auto& d : algo.diagnostics)
            if (d.kind == DiagnosticKind::Stage3AssertFail) {
                ev.detail = "seed " + g.name(d.seed) + ": " + d.detail;
                break;
            }
    } else if (has(DiagnosticKind::UnverifiedCover) || !algo.verifiedCover ||
               !is_vertex_cover(g, algo.cover)) {
        ev.classification = Classification::InvalidCover;
        ev.detail = "a candidate cover missed an edge";
    } else if (algo.size > oracle.size) {
        ev.classification = Classification::Suboptimal;
        ev.detail = "algorithm " + std::to_string(algo.size) + " vs optimum " +
                    std::to_string(oracle.size);
    } else if (algo.size < oracle.size) {
        throw std::logic_error("verified cover smaller than the exact optimum; oracle is wrong");
    }
    return ev;
}

namespace {

struct Tally {
    RunReport report;
    std::vector<Counterexample> found;
};

std::vector<std::string> names_of(const Graph& g, const std::vector<VertexId>& vs) {
    std::vector<std::string> out;
    out.reserve(vs.size());
    for (VertexId v : vs) out.push_back(g.name(v));
    return out;
}

void process_instance(const Graph& g, const std::string& sourceKind, const std::string& source,
                      std::size_t instance, std::uint64_t rngSeed, const SourceSpec& plan,
                      const std::vector<Mode>& modes, Tally& t) {
    ++t.report.instances;
    ++t.report.instancesPerSource[sourceKind];
    if (g.vertex_count() > plan.oracleLimit) {
        ++t.report.skippedOracleLimit;
        return;
    }
    const CoverResult oracle = exact_mvc(g, plan.oracleLimit);
    for (const Mode& mode : modes) {
        Evaluation ev = evaluate(g, mode, oracle);
        const std::string modeName = mode.name();
        ++t.report.evaluations;
        ++t.report.evaluationsPerMode[modeName];
        if (ev.algo.matchingLowerBound > oracle.size) ++t.report.lowerBoundViolations;
        if (ev.algo.verifiedCover && (ev.algo.size < ev.algo.matchingLowerBound ||
                                      ev.algo.size > 2 * ev.algo.matchingLowerBound))
            ++t.report.sandwichViolations;
        if (ev.classification == Classification::Agree) {
            ++t.report.agreements;
            ++t.report.agreementsPerMode[modeName];
            continue;
        }
        ++t.report.disagreements;
        ++t.report.classifications[std::string(to_string(ev.classification))];
        Counterexample c;
        c.source = source;
        c.instance = instance;
        c.graph = to_edge_list(g);
        c.mode = mode;
        c.algoCover = names_of(g, ev.algo.cover);
        c.oracleCover = names_of(g, oracle.cover);
        c.classification = ev.classification;
        c.rngSeed = rngSeed;
        c.detail = ev.detail;
        t.found.push_back(std::move(c));
    }
}

void merge(RunReport& into, const RunReport& from) {
    for (const auto& [k, v] : from.instancesPerSource) into.instancesPerSource[k] += v;
    into.instances += from.instances;
    into.evaluations += from.evaluations;
    into.agreements += from.agreements;
    into.disagreements += from.disagreements;
    for (const auto& [k, v] : from.classifications) into.classifications[k] += v;
    for (const auto& [k, v] : from.agreementsPerMode) into.agreementsPerMode[k] += v;
    for (const auto& [k, v] : from.evaluationsPerMode) into.evaluationsPerMode[k] += v;
    into.skippedOracleLimit += from.skippedOracleLimit;
    into.lowerBoundViolations += from.lowerBoundViolations;
    into.sandwichViolations += from.sandwichViolations;
}

// A slice of work: a range of edge masks for one vertex count, a range of
// random instance indices, or one explicit graph.
struct WorkItem {
    enum class Kind { Exhaustive, Random, Explicit } kind;
    std::size_t vertices = 0;
    std::uint64_t begin = 0;
    std::uint64_t end = 0;
};

void write_file(const std::filesystem::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    out << content;
    if (!out) throw std::runtime_error("cannot write " + path.string());
}

}  // namespace

DifferentialResult differential_run(const SourceSpec& plan, const std::vector<Mode>& modes,
                                    const std::optional<std::filesystem::path>& outDir,
                                    unsigned threads) {
    if (plan.exhaustiveMax > kEnumerationLimit)
        throw std::invalid_argument("exhaustive enumeration supports at most " +
                                    std::to_string(kEnumerationLimit) + " vertices");
    if (plan.randomCount > 0 &&
        (plan.randomMinVertices == 0 || plan.randomMinVertices > plan.randomMaxVertices))
        throw std::invalid_argument("invalid random vertex range");
    const auto start = std::chrono::steady_clock::now();

    std::vector<WorkItem> work;
    constexpr std::uint64_t kMaskChunk = 1 << 14;
    constexpr std::uint64_t kRandomChunk = 64;
    for (std::size_t n = 1; n <= plan.exhaustiveMax; ++n) {
        const std::uint64_t total = std::uint64_t{1} << (n * (n - 1) / 2);
        for (std::uint64_t b = 0; b < total; b += kMaskChunk)
            work.push_back({WorkItem::Kind::Exhaustive, n, b, std::min(total, b + kMaskChunk)});
    }
    for (std::uint64_t b = 0; b < plan.randomCount; b += kRandomChunk)
        work.push_back({WorkItem::Kind::Random, 0, b, std::min<std::uint64_t>(plan.randomCount, b + kRandomChunk)});
    for (std::size_t i = 0; i < plan.explicitGraphs.size(); ++i)
        work.push_back({WorkItem::Kind::Explicit, 0, i, i + 1});

    std::vector<PairTable> pairTables;
    for (std::size_t n = 0; n <= plan.exhaustiveMax; ++n) pairTables.emplace_back(n);

    auto run_item = [&](const WorkItem& item, Tally& t) {
        switch (item.kind) {
            case WorkItem::Kind::Exhaustive: {
                const auto& pairs = pairTables[item.vertices].pairs;
                const std::string source = "exhaustive-m" + std::to_string(item.vertices);
                for (std::uint64_t mask = item.begin; mask < item.end; ++mask) {
                    if (!mask_connected(item.vertices, pairs, mask)) continue;
                    process_instance(mask_graph(item.vertices, pairs, mask), "exhaustive", source,
                                     mask, 0, plan, modes, t);
                }
                break;
            }
            case WorkItem::Kind::Random: {
                for (std::uint64_t i = item.begin; i < item.end; ++i) {
                    std::seed_seq seq{static_cast<std::uint32_t>(plan.rngSeed),
                                      static_cast<std::uint32_t>(plan.rngSeed >> 32),
                                      static_cast<std::uint32_t>(i)};
                    std::mt19937_64 rng(seq);
                    std::uniform_int_distribution<std::size_t> size(plan.randomMinVertices,
                                                                     plan.randomMaxVertices);
                    std::uniform_real_distribution<double> density(0.0, 1.0);
                    const std::size_t n = size(rng);
                    const double p = density(rng);
                    const std::uint64_t graphSeed = rng();
                    process_instance(gen_random_connected(n, p, graphSeed), "random", "random", i,
                                     graphSeed, plan, modes, t);
                }
                break;
            }
            case WorkItem::Kind::Explicit:
                process_instance(plan.explicitGraphs[item.begin], "explicit", "explicit",
                                 item.begin, 0, plan, modes, t);
                break;
        }
    };

    if (threads == 0) threads = std::max(1U, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(1, work.size())));
    std::vector<Tally> tallies(threads);
    std::atomic<std::size_t> next{0};
    std::mutex errorMutex;
    std::exception_ptr error;
    auto worker = [&](unsigned id) {
        try {
            for (std::size_t i = next++; i < work.size(); i = next++) run_item(work[i], tallies[id]);
        } catch (...) {
            std::lock_guard lock(errorMutex);
            if (!error) error = std::current_exception();
            next = work.size();
        }
    };
    if (threads == 1) {
        worker(0);
    } else {
        std::vector<std::jthread> pool;
        for (unsigned id = 0; id < threads; ++id) pool.emplace_back(worker, id);
    }
    if (error) std::rethrow_exception(error);

    DifferentialResult result;
    for (auto& t : tallies) {
        merge(result.report, t.report);
        for (auto& c : t.found) result.counterexamples.push_back(std::move(c));
    }
    std::sort(result.counterexamples.begin(), result.counterexamples.end(),
              [](const Counterexample& a, const Counterexample& b) {
                  return std::tie(a.source, a.instance, a.mode.tieBreak, a.mode.matchingPermutation) <
                         std::tie(b.source, b.instance, b.mode.tieBreak, b.mode.matchingPermutation);
              });
    result.report.counterexamples = result.counterexamples.size();

    if (outDir) {
        std::filesystem::create_directories(*outDir / "counterexamples");
        for (const auto& c : result.counterexamples)
            persist_counterexample(*outDir / "counterexamples", c);
    }
    result.report.wallSeconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (outDir) {
        write_file(*outDir / "report.json", result.report.to_json().dump(2) + "\n");
        write_file(*outDir / "summary.txt", result.report.summary());
    }
    return result;
}

std::filesystem::path persist_counterexample(const std::filesystem::path& dir,
                                             const Counterexample& c) {
    namespace fs = std::filesystem;
    const fs::path target = dir / c.id();
    const fs::path staging = dir / (".tmp-" + c.id());
    fs::remove_all(staging);
    fs::create_directories(staging);
    write_file(staging / "graph.el", c.graph);
    write_file(staging / "counterexample.json", c.to_json().dump(2) + "\n");
    std::string mode = c.mode.tieBreak == TieBreak::TierFirst ? "tier-first" : "vertex-first";
    std::string script = "#!/bin/sh\n# expected: " + std::string(to_string(c.classification)) +
                         "\ncd \"$(dirname \"$0\")\"\n"
                         "direvc fuzz --replay .\n"
                         "direvc solve --graph graph.el --mode " + mode;
    if (c.mode.matchingPermutation)
        script += " --matching-permutation " + std::to_string(*c.mode.matchingPermutation);
    script += "\ndirevc oracle --graph graph.el\n";
    write_file(staging / "replay.sh", script);
    fs::permissions(staging / "replay.sh", fs::perms::owner_exec | fs::perms::group_exec,
                    fs::perm_options::add);
    fs::remove_all(target);
    fs::rename(staging, target);
    return target;
}

ReplayResult replay_counterexample(const std::filesystem::path& dir) {
    std::ifstream in(dir / "counterexample.json");
    if (!in) throw std::runtime_error("cannot read " + (dir / "counterexample.json").string());
    Counterexample c = Counterexample::from_json(nlohmann::json::parse(in));
    Graph g = normalize(parse_graph(c.graph, GraphFormat::EdgeList)).graph;
    CoverResult oracle = exact_mvc(g);
    return {c.classification, evaluate(g, c.mode, oracle).classification};
}

RunReport scaling_bench(const std::vector<std::size_t>& sizes, std::size_t trials,
                        double edgeProbability, std::uint64_t rngSeed) {
    RunReport report;
    const auto start = std::chrono::steady_clock::now();
    std::vector<double> xs;
    std::vector<double> ys;
    for (std::size_t n : sizes) {
        ScalingSample sample;
        sample.vertices = n;
        sample.trials = trials;
        double seconds = 0;
        double edges = 0;
        for (std::size_t t = 0; t < trials; ++t) {
            std::seed_seq seq{static_cast<std::uint32_t>(rngSeed), static_cast<std::uint32_t>(n),
                              static_cast<std::uint32_t>(t)};
            std::mt19937_64 rng(seq);
            Graph g = gen_random_connected(n, edgeProbability, rng());
            const auto t0 = std::chrono::steady_clock::now();
            CoverResult r = solve(g);
            seconds += std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
            edges += static_cast<double>(g.edge_count());
            ++report.instances;
            ++report.instancesPerSource["scaling"];
            if (!r.verifiedCover) ++report.sandwichViolations;
        }
        if (trials > 0) {
            sample.meanSeconds = seconds / static_cast<double>(trials);
            sample.meanEdges = edges / static_cast<double>(trials);
        }
        if (n > 1 && sample.meanSeconds > 0) {
            xs.push_back(std::log(static_cast<double>(n)));
            ys.push_back(std::log(sample.meanSeconds));
        }
        report.scaling.push_back(sample);
    }
    std::vector<double> distinct = xs;
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    if (distinct.size() >= 2) {
        const double k = static_cast<double>(xs.size());
        double sx = 0, sy = 0, sxx = 0, sxy = 0;
        for (std::size_t i = 0; i < xs.size(); ++i) {
            sx += xs[i];
            sy += ys[i];
            sxx += xs[i] * xs[i];
            sxy += xs[i] * ys[i];
        }
        report.scalingSlope = (k * sxy - sx * sy) / (k * sxx - sx * sx);
    }
    report.scalingSeconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    report.wallSeconds = report.scalingSeconds;
    return report;
}

}  // namespace direvc
