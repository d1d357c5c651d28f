#include "direvc/trace.hpp"

namespace direvc {

std::string_view to_string(TraceKind kind) {
    switch (kind) {
        case TraceKind::PhaseStart: return "phase_start";
        case TraceKind::MatchingDone: return "matching_done";
        case TraceKind::LevelsDone: return "levels_done";
        case TraceKind::EdgeSelected: return "edge_selected";
        case TraceKind::RowAppended: return "row_appended";
        case TraceKind::Frozen: return "frozen";
        case TraceKind::Removed: return "removed";
        case TraceKind::Cascade: return "cascade";
        case TraceKind::SeedResult: return "seed_result";
        case TraceKind::Final: return "final";
    }
    return "unknown";
}

std::vector<const TraceEvent*> TraceLog::of_kind(TraceKind kind) const {
    std::vector<const TraceEvent*> out;
    for (const auto& e : events_)
        if (e.kind == kind) out.push_back(&e);
    return out;
}

std::string TraceLog::to_json_lines(const Graph* names) const {
    std::string out;
    for (const auto& e : events_) {
        nlohmann::ordered_json line;
        line["kind"] = to_string(e.kind);
        if (!e.seed) {
            line["seed"] = nullptr;
        } else if (names) {
            line["seed"] = names->name(*e.seed);
        } else {
            line["seed"] = *e.seed;
        }
        line["payload"] = e.payload;
        out += line.dump();
        out += '\n';
    }
    return out;
}

}  // namespace direvc
