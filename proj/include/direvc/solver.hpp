#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "direvc/graph.hpp"
#include "direvc/guided_matching.hpp"
#include "direvc/matching.hpp"
#include "direvc/trace.hpp"

namespace direvc {

struct SolveOptions {
    TieBreak tieBreak = TieBreak::TierFirst;
    // When set, the maximum matching is computed on a seeded relabeling.
    std::optional<std::uint64_t> matchingPermutation;
    // Stop the seed loop once a cover meets the matching lower bound.
    bool earlyExit = true;
    // Restrict the seed loop to one BFS seed.
    std::optional<VertexId> onlySeed;
};

enum class DiagnosticKind { Stage3AssertFail, UnverifiedCover, AllSeedsFailed };

std::string_view to_string(DiagnosticKind kind);

struct SeedDiagnostic {
    VertexId seed;
    DiagnosticKind kind;
    std::string detail;
};

struct CoverResult {
    std::vector<VertexId> cover;        // ascending
    std::vector<VertexId> freezeOrder;  // order the pipeline committed the vertices
    std::size_t size = 0;
    std::optional<VertexId> seed;       // BFS seed of the kept cover (connected inputs)
    std::size_t matchingLowerBound = 0;
    bool verifiedCover = false;
    bool optimalCertified = false;      // size == matchingLowerBound
    std::size_t seedsTried = 0;
    std::vector<SeedDiagnostic> diagnostics;
};

struct Decision {
    bool yes = false;
    bool rejectedByMatchingBound = false;
    std::optional<CoverResult> witness;
};

bool is_vertex_cover(const Graph& g, std::span<const VertexId> cover);

// Search mode: the smallest verified cover over all BFS seeds. Disconnected
// inputs are solved per component and the covers united.
CoverResult solve(const Graph& g, const SolveOptions& options = {});

// Decision mode: NO when k is below the maximum matching size, otherwise YES
// with the first seed's cover of size <= k.
Decision decide(const Graph& g, std::size_t k, const SolveOptions& options = {});

// Event log of the full pipeline for a single BFS seed (restricted to the
// seed's component).
TraceLog trace(const Graph& g, VertexId seed, const SolveOptions& options = {});

// Stable text rendering of a result, used for determinism checks and the CLI.
std::string describe(const Graph& g, const CoverResult& r);

}  // namespace direvc
