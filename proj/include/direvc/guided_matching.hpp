#pragma once

#include <cstddef>
#include <limits>
#include <vector>

#include <json.hpp>

#include "direvc/graph.hpp"
#include "direvc/matching.hpp"
#include "direvc/trace.hpp"

namespace direvc {

enum class EndpointStatus { Active, Frozen, Removed };

// How the next edge is picked within a BFS level.
//  TierFirst:   the best tier over the whole level wins, then the smallest key.
//  VertexFirst: the smallest unvisited vertex of the level is matched first,
//               using the same tiers among its own edges.
enum class TieBreak { TierFirst, VertexFirst };

// One selected edge and what each endpoint was still adjacent to when it
// was selected.
struct RepresentsRow {
    VertexId node1;
    VertexId node2;
    std::vector<VertexId> list1;
    std::vector<VertexId> list2;
    EndpointStatus status1 = EndpointStatus::Active;
    EndpointStatus status2 = EndpointStatus::Active;
};

inline constexpr std::size_t kNoRow = std::numeric_limits<std::size_t>::max();

struct RepresentsTable {
    std::vector<RepresentsRow> rows;
    std::vector<std::size_t> endpointRow;  // per vertex of the graph, kNoRow if not in P
    std::vector<VertexId> cover;           // frozen endpoints in freeze order

    bool is_endpoint(VertexId v) const {
        return v < endpointRow.size() && endpointRow[v] != kNoRow;
    }
    // All endpoints, sorted ascending.
    std::vector<VertexId> endpoints() const;

    std::vector<VertexId>& list_of(VertexId v);
    const std::vector<VertexId>& list_of(VertexId v) const;
    EndpointStatus& status_of(VertexId v);
    EndpointStatus status_of(VertexId v) const;
};

// Builds the represents table by a maximal matching driven level by level
// over the BFS levels, preferring same-level edges over next-level edges and
// maximum-matching edges over the rest.
//
// Throws std::invalid_argument when the matching or the levels do not
// belong to g, and std::logic_error if the level invariant breaks.
RepresentsTable guided_maximal_matching(const Graph& g, const Matching& maximum,
                                        const BfsLevels& levels,
                                        TieBreak tieBreak = TieBreak::TierFirst,
                                        const TraceSink& sink = {});

Matching matched_edges(const RepresentsTable& t);

// [{node1, list1, node2, list2}, ...] in row order, vertices by name.
nlohmann::json table_to_json(const Graph& g, const RepresentsTable& t);

}  // namespace direvc
