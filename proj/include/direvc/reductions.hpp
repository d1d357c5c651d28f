#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "direvc/graph.hpp"

namespace direvc {

// Diverse + representative committee feasibility instance with groups and
// approval sets of at most two candidates each.
struct DiReInstance {
    struct Population {
        std::vector<std::string> approves;
    };

    std::vector<std::string> candidates;
    std::vector<std::vector<std::string>> groups;
    std::vector<Population> populations;
    std::size_t k = 0;

    // Lower bound per group / population: 1 when nonempty, else 0.
    std::vector<int> diversity_bounds() const;
    std::vector<int> representation_bounds() const;

    // Throws std::invalid_argument on oversized sets or unknown candidates.
    void validate() const;

    nlohmann::json to_json() const;
    static DiReInstance from_json(const nlohmann::json& j);
};

struct VcInstance {
    RawMultigraph graph;
    std::size_t k = 0;
};

struct SimpleConnectedInstance {
    Graph graph;
    std::vector<std::string> originalVertices;
    std::vector<std::string> loopDummies;
    std::string hub;
    std::size_t kPrime = 0;
    std::vector<std::string> report;  // collapses, replacements, renamed dummies
};

struct Committee {
    bool feasible = false;
    std::vector<std::string> members;  // sorted
};

inline constexpr std::size_t kDiReBruteForceLimit = 22;

// One candidate per vertex; each edge becomes a two-candidate group and a
// population approving the same pair.
DiReInstance vc_to_dire(const Graph& g, std::size_t k);

// One vertex per candidate; size-2 sets become edges and singletons loops.
// Empty sets impose nothing.
VcInstance dire_to_vc(const DiReInstance& d);

// Collapses parallels, turns each loop into an edge to a fresh leaf, and adds
// a hub adjacent to every vertex; the budget grows by one.
SimpleConnectedInstance to_simple_connected(const RawMultigraph& raw, std::size_t k);

// Smallest feasible committee of size <= k by exhaustive search; among equal
// sizes the lexicographically smallest member list wins.
Committee dire_feasible_bruteforce(const DiReInstance& d);

}  // namespace direvc
