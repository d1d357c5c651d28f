#include "direvc/solver.hpp"

#include <algorithm>
#include <sstream>

#include "direvc/local_minimization.hpp"

namespace direvc {

std::string_view to_string(DiagnosticKind kind) {
    switch (kind) {
        case DiagnosticKind::Stage3AssertFail: return "STAGE3_ASSERT_FAIL";
        case DiagnosticKind::UnverifiedCover: return "UNVERIFIED_COVER";
        case DiagnosticKind::AllSeedsFailed: return "ALL_SEEDS_FAILED";
    }
    return "unknown";
}

bool is_vertex_cover(const Graph& g, std::span<const VertexId> cover) {
    std::vector<char> in(g.vertex_count(), 0);
    for (VertexId v : cover) {
        if (v >= g.vertex_count()) return false;
        in[v] = 1;
    }
    return std::all_of(g.edges().begin(), g.edges().end(),
                       [&](const Edge& e) { return in[e.u] || in[e.v]; });
}

namespace {

struct SeedOutcome {
    std::vector<VertexId> freezeOrder;
    std::vector<VertexId> endpoints;
    std::optional<SeedDiagnostic> diagnostic;
};

nlohmann::json edges_json(const TraceSink& sink, const std::vector<Edge>& edges) {
    auto arr = nlohmann::json::array();
    for (const Edge& e : edges) arr.push_back({sink.name(e.u), sink.name(e.v)});
    return arr;
}

Matching phase_one(const Graph& g, const SolveOptions& options) {
    return options.matchingPermutation ? maximum_matching_permuted(g, *options.matchingPermutation)
                                       : maximum_matching(g);
}

SeedOutcome run_seed(const Graph& g, const Matching& em, VertexId seed,
                     const SolveOptions& options, const TraceSink& sink) {
    SeedOutcome out;
    if (sink) sink.emit(TraceKind::PhaseStart, {{"phase", "bfs"}});
    BfsLevels levels = bfs_levels(g, seed);
    if (sink) {
        auto arr = nlohmann::json::array();
        for (const auto& level : levels.levels) arr.push_back(sink.names(level));
        sink.emit(TraceKind::LevelsDone, {{"levels", arr}});
        sink.emit(TraceKind::PhaseStart, {{"phase", "maximal_matching"}});
    }
    RepresentsTable table = guided_maximal_matching(g, em, levels, options.tieBreak, sink);
    out.endpoints = table.endpoints();

    if (sink) sink.emit(TraceKind::PhaseStart, {{"phase", "local_minimization"}});
    try {
        out.freezeOrder = local_minimization(table, sink);
    } catch (const LocalMinimizationError& e) {
        out.diagnostic = SeedDiagnostic{seed, DiagnosticKind::Stage3AssertFail, e.what()};
        return out;
    }
    if (!is_vertex_cover(g, out.freezeOrder)) {
        out.diagnostic = SeedDiagnostic{seed, DiagnosticKind::UnverifiedCover,
                                        "local minimization output misses an edge"};
    }
    return out;
}

CoverResult make_result(const std::vector<VertexId>& freezeOrder, VertexId seed,
                        std::size_t lowerBound) {
    CoverResult r;
    r.freezeOrder = freezeOrder;
    r.cover = freezeOrder;
    std::sort(r.cover.begin(), r.cover.end());
    r.size = r.cover.size();
    r.seed = seed;
    r.matchingLowerBound = lowerBound;
    r.verifiedCover = true;
    r.optimalCertified = r.size == lowerBound;
    return r;
}

// Seed loop on a connected graph. With `bound` set, returns at the first
// seed whose cover fits (decision mode); otherwise keeps the smallest.
std::optional<CoverResult> solve_connected(const Graph& g, const Matching& em,
                                           const SolveOptions& options,
                                           std::optional<std::size_t> bound,
                                           std::vector<SeedDiagnostic>& diagnostics,
                                           std::size_t& seedsTried,
                                           std::vector<VertexId>& fallback) {
    std::optional<CoverResult> best;
    const std::size_t lower = em.size();
    auto consider = [&](VertexId seed) -> bool {
        ++seedsTried;
        SeedOutcome outcome = run_seed(g, em, seed, options, {});
        if (fallback.empty()) fallback = outcome.endpoints;
        if (outcome.diagnostic) {
            diagnostics.push_back(std::move(*outcome.diagnostic));
            return false;
        }
        if (bound) {
            if (outcome.freezeOrder.size() <= *bound) {
                best = make_result(outcome.freezeOrder, seed, lower);
                return true;
            }
            return false;
        }
        if (!best || outcome.freezeOrder.size() < best->size)
            best = make_result(outcome.freezeOrder, seed, lower);
        return options.earlyExit && best->size == lower;
    };

    if (options.onlySeed) {
        if (*options.onlySeed >= g.vertex_count()) throw std::out_of_range("BFS seed out of range");
        consider(*options.onlySeed);
    } else {
        for (VertexId seed = 0; seed < g.vertex_count(); ++seed)
            if (consider(seed)) break;
    }
    return best;
}

}  // namespace

CoverResult solve(const Graph& g, const SolveOptions& options) {
    CoverResult total;
    if (g.vertex_count() == 0) {
        total.verifiedCover = true;
        total.optimalCertified = true;
        return total;
    }

    std::size_t componentCount = 0;
    component_labels(g, &componentCount);
    if (options.onlySeed && componentCount > 1)
        throw std::invalid_argument("a fixed BFS seed needs a connected graph");

    auto solve_part = [&](const Graph& sub, const std::vector<VertexId>* toParent) {
        auto up = [&](VertexId v) { return toParent ? (*toParent)[v] : v; };
        Matching em = phase_one(sub, options);
        total.matchingLowerBound += em.size();

        std::vector<SeedDiagnostic> diagnostics;
        std::vector<VertexId> fallback;
        auto best = solve_connected(sub, em, options, std::nullopt, diagnostics, total.seedsTried,
                                    fallback);
        for (auto& d : diagnostics) {
            d.seed = up(d.seed);
            total.diagnostics.push_back(std::move(d));
        }
        if (!best) {
            // No seed produced a usable cover; the maximal-matching endpoints
            // of the first seed are still a cover.
            total.diagnostics.push_back({up(0), DiagnosticKind::AllSeedsFailed,
                                         "falling back to maximal matching endpoints"});
            for (VertexId v : fallback) total.freezeOrder.push_back(up(v));
            return;
        }
        for (VertexId v : best->freezeOrder) total.freezeOrder.push_back(up(v));
        if (componentCount == 1) total.seed = up(*best->seed);
    };

    if (componentCount == 1) {
        solve_part(g, nullptr);
    } else {
        for (const auto& part : components(g)) solve_part(part.graph, &part.toParent);
    }
    total.cover = total.freezeOrder;
    std::sort(total.cover.begin(), total.cover.end());
    total.size = total.cover.size();
    total.verifiedCover = is_vertex_cover(g, total.cover);
    total.optimalCertified = total.size == total.matchingLowerBound;
    return total;
}

Decision decide(const Graph& g, std::size_t k, const SolveOptions& options) {
    Decision d;
    auto parts = components(g);
    if (parts.size() <= 1) {
        if (g.vertex_count() == 0) {
            d.yes = true;
            d.witness = solve(g, options);
            return d;
        }
        Matching em = phase_one(g, options);
        if (k < em.size()) {
            d.rejectedByMatchingBound = true;
            return d;
        }
        std::vector<SeedDiagnostic> diagnostics;
        std::vector<VertexId> fallback;
        std::size_t tried = 0;
        auto found = solve_connected(g, em, options, k, diagnostics, tried, fallback);
        if (found) {
            found->seedsTried = tried;
            found->diagnostics = std::move(diagnostics);
            d.yes = true;
            d.witness = std::move(found);
        }
        return d;
    }

    std::size_t lower = 0;
    for (const auto& part : parts) lower += phase_one(part.graph, options).size();
    if (k < lower) {
        d.rejectedByMatchingBound = true;
        return d;
    }
    CoverResult r = solve(g, options);
    if (r.size <= k) {
        d.yes = true;
        d.witness = std::move(r);
    }
    return d;
}

TraceLog trace(const Graph& g, VertexId seed, const SolveOptions& options) {
    if (seed >= g.vertex_count()) throw std::out_of_range("BFS seed out of range");
    auto parts = components(g);
    const Component* home = nullptr;
    VertexId localSeed = 0;
    for (const auto& part : parts) {
        auto it = std::find(part.toParent.begin(), part.toParent.end(), seed);
        if (it != part.toParent.end()) {
            home = &part;
            localSeed = static_cast<VertexId>(it - part.toParent.begin());
        }
    }
    const Graph& sub = home->graph;

    TraceLog log;
    TraceSink sink{&log, &sub, localSeed};
    sink.emit(TraceKind::PhaseStart, {{"phase", "maximum_matching"}});
    Matching em = phase_one(sub, options);
    sink.emit(TraceKind::MatchingDone, {{"edges", edges_json(sink, em.edges)}, {"size", em.size()}});

    SeedOutcome outcome = run_seed(sub, em, localSeed, options, sink);
    nlohmann::json result = {{"size", outcome.freezeOrder.size()},
                             {"cover", sink.names(outcome.freezeOrder)},
                             {"verified", !outcome.diagnostic.has_value()},
                             {"matchingLowerBound", em.size()}};
    if (outcome.diagnostic) {
        result["diagnostic"] = {{"kind", to_string(outcome.diagnostic->kind)},
                                {"detail", outcome.diagnostic->detail}};
    }
    sink.emit(TraceKind::SeedResult, result);

    std::vector<VertexId> sorted = outcome.freezeOrder;
    std::sort(sorted.begin(), sorted.end());
    const bool meetsBound = !outcome.diagnostic && sorted.size() == em.size();
    sink.emit(TraceKind::Final, {{"cover", sink.names(sorted)},
                                 {"size", sorted.size()},
                                 {"earlyExit", meetsBound}});
    return log;
}

std::string describe(const Graph& g, const CoverResult& r) {
    std::ostringstream out;
    out << "size " << r.size << "\ncover";
    for (VertexId v : r.cover) out << ' ' << g.name(v);
    out << "\nfreeze_order";
    for (VertexId v : r.freezeOrder) out << ' ' << g.name(v);
    out << "\nseed " << (r.seed ? g.name(*r.seed) : std::string("-"));
    out << "\nmatching_lower_bound " << r.matchingLowerBound;
    out << "\nverified " << r.verifiedCover << "\noptimal_certified " << r.optimalCertified;
    out << "\nseeds_tried " << r.seedsTried << '\n';
    for (const auto& d : r.diagnostics)
        out << "diagnostic " << g.name(d.seed) << ' ' << to_string(d.kind) << ' ' << d.detail
            << '\n';
    return out.str();
}

}  // namespace direvc
