#pragma once

#include <cstddef>
#include <stdexcept>

#include "direvc/graph.hpp"
#include "direvc/solver.hpp"

namespace direvc {

class OracleLimitError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline constexpr std::size_t kDefaultOracleVertexLimit = 40;
inline constexpr std::size_t kExhaustiveVertexLimit = 22;
inline constexpr std::size_t kExhaustiveEdgeLimit = 24;

// Exact minimum vertex cover by branch and bound: branch on a maximum-degree
// vertex (take it, or take all its neighbors), prune with the size of a
// maximum matching of what is left. `seed` is left unset.
CoverResult exact_mvc(const Graph& g, std::size_t vertexLimit = kDefaultOracleVertexLimit);

// Minimum cover size over all 2^m vertex subsets.
std::size_t exact_mvc_exhaustive(const Graph& g);

// Maximum matching size by backtracking over all edge subsets.
std::size_t exact_max_matching_exhaustive(const Graph& g);

}  // namespace direvc
