#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "direvc/graph.hpp"

namespace direvc {

enum class TraceKind {
    PhaseStart,
    MatchingDone,
    LevelsDone,
    EdgeSelected,
    RowAppended,
    Frozen,
    Removed,
    Cascade,
    SeedResult,
    Final,
};

std::string_view to_string(TraceKind kind);

struct TraceEvent {
    TraceKind kind;
    std::optional<VertexId> seed;
    nlohmann::json payload;
};

// Append-only, totally ordered event log for one pipeline run.
class TraceLog {
public:
    void emit(TraceKind kind, std::optional<VertexId> seed, nlohmann::json payload) {
        events_.push_back({kind, seed, std::move(payload)});
    }

    const std::vector<TraceEvent>& events() const { return events_; }

    std::vector<const TraceEvent*> of_kind(TraceKind kind) const;

    // One JSON object per line: {"kind", "seed", "payload"}. Seeds are
    // rendered as vertex names when a graph is supplied.
    std::string to_json_lines(const Graph* names = nullptr) const;

private:
    std::vector<TraceEvent> events_;
};

// Where a pipeline stage reports its events. A default-constructed sink
// discards everything.
struct TraceSink {
    TraceLog* log = nullptr;
    const Graph* graph = nullptr;
    std::optional<VertexId> seed;

    explicit operator bool() const { return log != nullptr; }

    void emit(TraceKind kind, nlohmann::json payload) const {
        if (log) log->emit(kind, seed, std::move(payload));
    }
    nlohmann::json name(VertexId v) const {
        return graph ? nlohmann::json(graph->name(v)) : nlohmann::json(v);
    }
    nlohmann::json names(const std::vector<VertexId>& vs) const {
        auto out = nlohmann::json::array();
        for (VertexId v : vs) out.push_back(name(v));
        return out;
    }
};

}  // namespace direvc
