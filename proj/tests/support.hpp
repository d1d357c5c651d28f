#pragma once

#include <random>
#include <string>
#include <vector>

#include "direvc/graph.hpp"

namespace direvc::testing {

inline Graph graph_of(std::size_t n, const std::vector<std::pair<VertexId, VertexId>>& pairs) {
    std::vector<Edge> edges;
    for (auto [a, b] : pairs) edges.push_back(make_edge(a, b));
    return Graph::from_edges(n, edges);
}

// The nine-vertex worked example.
inline Graph example_graph() {
    return graph_of(9, {{0, 1}, {1, 2}, {1, 3}, {2, 4}, {2, 7}, {3, 5}, {3, 8}, {4, 6}, {5, 6}});
}

// Seven vertices on which the tier-first pipeline returns 5 while the
// optimum is 4 ({3, 4, 5, 6}).
inline Graph suboptimal_example() {
    return graph_of(7, {{0, 4}, {0, 5}, {0, 6}, {1, 3}, {1, 5}, {2, 3}, {2, 4}, {2, 6}, {3, 5},
                        {3, 6}, {4, 5}, {4, 6}});
}

inline Graph path(std::size_t n) {
    std::vector<Edge> edges;
    for (VertexId i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
    return Graph::from_edges(n, edges);
}

inline Graph cycle(std::size_t n) {
    std::vector<Edge> edges;
    for (VertexId i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
    if (n >= 3) edges.push_back({0, static_cast<VertexId>(n - 1)});
    return Graph::from_edges(n, edges);
}

inline Graph complete(std::size_t n) {
    std::vector<Edge> edges;
    for (VertexId u = 0; u < n; ++u)
        for (VertexId v = u + 1; v < n; ++v) edges.push_back({u, v});
    return Graph::from_edges(n, edges);
}

inline Graph star(std::size_t leaves) {
    std::vector<Edge> edges;
    for (VertexId v = 1; v <= leaves; ++v) edges.push_back({0, v});
    return Graph::from_edges(leaves + 1, edges);
}

// Erdos-Renyi graph, possibly disconnected.
inline Graph random_graph(std::size_t n, double p, std::mt19937_64& rng) {
    std::bernoulli_distribution coin(p);
    std::vector<Edge> edges;
    for (VertexId u = 0; u < n; ++u)
        for (VertexId v = u + 1; v < n; ++v)
            if (coin(rng)) edges.push_back({u, v});
    return Graph::from_edges(n, edges);
}

}  // namespace direvc::testing
