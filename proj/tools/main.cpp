#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "direvc/harness.hpp"
#include "direvc/oracle.hpp"
#include "direvc/reductions.hpp"
#include "direvc/solver.hpp"

using namespace direvc;

namespace {

constexpr int kExitYes = 0;
constexpr int kExitNo = 1;
constexpr int kExitUsage = 2;
constexpr int kExitHardFail = 3;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct GraphArgs {
    std::string path;
    std::string format = "edgelist";
};

void add_graph_args(CLI::App* cmd, GraphArgs& args) {
    cmd->add_option("--graph", args.path, "graph file (- for stdin)")->required();
    cmd->add_option("--format", args.format, "edgelist or dimacs")
        ->check(CLI::IsMember({"edgelist", "dimacs"}));
}

std::string read_file(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

RawMultigraph load_raw(const GraphArgs& args) {
    return parse_graph(read_file(args.path),
                       args.format == "dimacs" ? GraphFormat::Dimacs : GraphFormat::EdgeList);
}

std::string describe_entry(const NormalizationEntry& e) {
    switch (e.kind) {
        case NormalizationEntry::Kind::ParallelCollapsed:
            return "parallel edge " + e.vertex + " " + e.other + " collapsed";
        case NormalizationEntry::Kind::LoopReplaced:
            return "loop at " + e.vertex + " replaced by edge to " + e.other;
        case NormalizationEntry::Kind::NameCollision:
            return "name collision on " + e.other;
    }
    return {};
}

Graph load_graph(const GraphArgs& args) {
    NormalizedGraph n = normalize(load_raw(args));
    for (const auto& e : n.report.entries) std::cerr << "note: " << describe_entry(e) << '\n';
    return std::move(n.graph);
}

struct ModeArgs {
    std::string mode = "tier-first";
    std::optional<std::uint64_t> permutation;
};

void add_mode_args(CLI::App* cmd, ModeArgs& args) {
    cmd->add_option("--mode", args.mode, "tie-break policy")
        ->check(CLI::IsMember({"tier-first", "vertex-first"}));
    cmd->add_option("--matching-permutation", args.permutation,
                    "relabel vertices with this seed before maximum matching");
}

SolveOptions options_of(const ModeArgs& args) {
    SolveOptions o;
    o.tieBreak = args.mode == "vertex-first" ? TieBreak::VertexFirst : TieBreak::TierFirst;
    o.matchingPermutation = args.permutation;
    return o;
}

std::string join_names(const Graph& g, const std::vector<VertexId>& vs) {
    std::string out;
    for (VertexId v : vs) {
        if (!out.empty()) out += ' ';
        out += g.name(v);
    }
    return out;
}

void write_output(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    out << text;
    if (!out) throw UsageError("cannot write " + path);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Vertex cover via guided maximal matching and local minimization"};
    app.require_subcommand(1);

    GraphArgs graph;
    ModeArgs mode;
    std::size_t k = 0;
    bool witness = false;
    bool emitMatching = false;
    std::string bfsSeed;
    std::string out;

    auto* decideCmd = app.add_subcommand("decide", "is there a vertex cover of size <= k");
    add_graph_args(decideCmd, graph);
    add_mode_args(decideCmd, mode);
    decideCmd->add_option("--k", k)->required();
    decideCmd->add_flag("--witness", witness, "print the cover on YES");

    auto* solveCmd = app.add_subcommand("solve", "smallest cover over all BFS seeds");
    add_graph_args(solveCmd, graph);
    add_mode_args(solveCmd, mode);
    solveCmd->add_flag("--emit-matching", emitMatching, "also print the maximum matching");
    solveCmd->add_option("--bfs-seed", bfsSeed, "restrict to one BFS seed");

    auto* traceCmd = app.add_subcommand("trace", "JSON-lines event log for one BFS seed");
    add_graph_args(traceCmd, graph);
    add_mode_args(traceCmd, mode);
    traceCmd->add_option("--bfs-seed", bfsSeed, "seed vertex name (default: first vertex)");

    bool exhaustive = false;
    auto* oracleCmd = app.add_subcommand("oracle", "exact minimum vertex cover size");
    add_graph_args(oracleCmd, graph);
    oracleCmd->add_flag("--exhaustive", exhaustive, "enumerate all vertex subsets instead");

    SourceSpec source;
    source.rngSeed = 1;
    std::size_t randomMax = 16;
    unsigned threads = 0;
    std::string replay;
    auto* fuzzCmd = app.add_subcommand("fuzz", "differential run against the exact oracle");
    fuzzCmd->add_option("--exhaustive-max", source.exhaustiveMax,
                        "enumerate all connected graphs up to this many vertices");
    fuzzCmd->add_option("--random-n", randomMax, "largest random graph");
    fuzzCmd->add_option("--trials", source.randomCount, "number of random graphs");
    fuzzCmd->add_option("--rng-seed", source.rngSeed);
    fuzzCmd->add_option("--out", out, "report and counterexample directory");
    fuzzCmd->add_option("--threads", threads, "worker threads (0: all cores)");
    fuzzCmd->add_option("--replay", replay, "re-run one persisted counterexample");

    auto* reduceCmd = app.add_subcommand("reduce", "problem reductions");
    reduceCmd->require_subcommand(1);
    auto* vc2dire = reduceCmd->add_subcommand("vc2dire", "vertex cover to committee instance");
    add_graph_args(vc2dire, graph);
    vc2dire->add_option("--k", k)->required();
    vc2dire->add_option("--out", out, "output file");
    std::string direPath;
    auto* dire2vc = reduceCmd->add_subcommand("dire2vc", "committee instance to vertex cover");
    dire2vc->add_option("--input", direPath, "DiRe JSON file")->required();
    dire2vc->add_option("--out", out, "output file");
    bool hub = false;
    auto* normalizeCmd = reduceCmd->add_subcommand("normalize", "simple graph from a multigraph");
    add_graph_args(normalizeCmd, graph);
    normalizeCmd->add_flag("--hub", hub, "also add a hub vertex adjacent to everything");
    normalizeCmd->add_option("--k", k, "budget, raised by one with --hub");
    normalizeCmd->add_option("--out", out, "output file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*decideCmd) {
            Graph g = load_graph(graph);
            Decision d = decide(g, k, options_of(mode));
            std::cout << (d.yes ? "YES" : "NO") << '\n';
            if (d.yes && witness) std::cout << join_names(g, d.witness->cover) << '\n';
            return d.yes ? kExitYes : kExitNo;
        }

        if (*solveCmd) {
            Graph g = load_graph(graph);
            SolveOptions o = options_of(mode);
            if (!bfsSeed.empty()) {
                auto v = g.find(bfsSeed);
                if (!v) throw UsageError("unknown vertex '" + bfsSeed + "'");
                o.onlySeed = *v;
            }
            CoverResult r = solve(g, o);
            std::cout << r.size << '\n' << join_names(g, r.cover) << '\n';
            if (emitMatching) {
                std::string line;
                for (const auto& part : components(g)) {
                    Matching em = o.matchingPermutation
                                      ? maximum_matching_permuted(part.graph, *o.matchingPermutation)
                                      : maximum_matching(part.graph);
                    for (const Edge& e : em.edges) {
                        line += line.empty() ? "" : " ";
                        line += g.name(part.toParent[e.u]) + "-" + g.name(part.toParent[e.v]);
                    }
                }
                std::cout << "matching " << line << '\n';
            }
            for (const auto& d : r.diagnostics)
                std::cerr << "diagnostic: seed " << g.name(d.seed) << ' ' << to_string(d.kind)
                          << ' ' << d.detail << '\n';
            return kExitYes;
        }

        if (*traceCmd) {
            Graph g = load_graph(graph);
            if (g.vertex_count() == 0) throw UsageError("empty graph has no BFS seed");
            VertexId seed = 0;
            if (!bfsSeed.empty()) {
                auto v = g.find(bfsSeed);
                if (!v) throw UsageError("unknown vertex '" + bfsSeed + "'");
                seed = *v;
            }
            std::cout << trace(g, seed, options_of(mode)).to_json_lines();
            return kExitYes;
        }

        if (*oracleCmd) {
            Graph g = load_graph(graph);
            if (exhaustive) {
                std::cout << exact_mvc_exhaustive(g) << '\n';
            } else {
                CoverResult r = exact_mvc(g);
                std::cout << r.size << '\n' << join_names(g, r.cover) << '\n';
            }
            return kExitYes;
        }

        if (*fuzzCmd) {
            if (!replay.empty()) {
                ReplayResult r = replay_counterexample(replay);
                std::cout << "recorded " << to_string(r.recorded) << "\nreplayed "
                          << to_string(r.replayed) << '\n';
                return r.matches() ? kExitYes : kExitHardFail;
            }
            source.randomMaxVertices = randomMax;
            std::optional<std::filesystem::path> outDir;
            if (!out.empty()) outDir = out;
            DifferentialResult result =
                differential_run(source, default_modes(source.rngSeed), outDir, threads);
            std::cout << result.report.summary();
            const auto& cls = result.report.classifications;
            const bool hardFail = cls.count(std::string(to_string(Classification::InvalidCover))) ||
                                  cls.count(std::string(to_string(Classification::Stage3AssertFail)));
            return hardFail ? kExitHardFail : kExitYes;
        }

        if (*vc2dire) {
            Graph g = load_graph(graph);
            write_output(out, vc_to_dire(g, k).to_json().dump(2) + "\n");
            return kExitYes;
        }

        if (*dire2vc) {
            nlohmann::json j;
            try {
                j = nlohmann::json::parse(read_file(direPath));
            } catch (const nlohmann::json::exception& e) {
                throw UsageError(std::string("invalid JSON: ") + e.what());
            }
            VcInstance vc = dire_to_vc(DiReInstance::from_json(j));
            write_output(out, "# k " + std::to_string(vc.k) + "\n" + to_edge_list(vc.graph));
            return kExitYes;
        }

        if (*normalizeCmd) {
            RawMultigraph raw = load_raw(graph);
            std::string text;
            if (hub) {
                SimpleConnectedInstance s = to_simple_connected(raw, k);
                for (const auto& line : s.report) text += "# " + line + "\n";
                text += "# k " + std::to_string(s.kPrime) + "\n" + to_edge_list(s.graph);
            } else {
                NormalizedGraph n = normalize(raw);
                for (const auto& e : n.report.entries) text += "# " + describe_entry(e) + "\n";
                text += to_edge_list(n.graph);
            }
            write_output(out, text);
            return kExitYes;
        }
    } catch (const GraphParseError& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const OracleLimitError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}
