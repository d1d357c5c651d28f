#pragma once

#include <cstdint>
#include <limits>
#include <vector>

#include "direvc/graph.hpp"

namespace direvc {

inline constexpr VertexId kUnmatched = std::numeric_limits<VertexId>::max();

// A set of vertex-disjoint edges together with the induced mate map.
struct Matching {
    std::vector<Edge> edges;        // sorted, u < v
    std::vector<VertexId> mate;     // kUnmatched where no matching edge touches

    std::size_t size() const { return edges.size(); }
    bool contains(VertexId a, VertexId b) const {
        return a < mate.size() && mate[a] == b;
    }

    // Throws std::invalid_argument if the edges share an endpoint.
    static Matching from_edges(std::size_t vertexCount, std::vector<Edge> edges);
};

// Edmonds' blossom algorithm. Free roots are tried in ascending id order and
// neighbors are scanned in ascending order, so the result is deterministic.
Matching maximum_matching(const Graph& g);

// Runs the blossom search on a seeded relabeling of g and maps the result
// back, yielding a (possibly different) maximum matching of g.
Matching maximum_matching_permuted(const Graph& g, std::uint64_t permutationSeed);

bool is_matching(const Graph& g, const Matching& m);
bool is_maximal_matching(const Graph& g, const Matching& m);

namespace detail {
// Blossom core over plain adjacency lists; returns the mate array.
std::vector<VertexId> blossom_mates(const std::vector<std::vector<VertexId>>& adjacency);
}  // namespace detail

}  // namespace direvc
