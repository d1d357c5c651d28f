#pragma once

#include <cstdint>
#include <istream>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace direvc {

// Dense vertex index. Index order equals the byte-wise order of vertex names.
using VertexId = std::uint32_t;

struct Edge {
    VertexId u;
    VertexId v;

    friend bool operator==(const Edge&, const Edge&) = default;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

inline Edge make_edge(VertexId a, VertexId b) { return a < b ? Edge{a, b} : Edge{b, a}; }

enum class GraphFormat { EdgeList, Dimacs };

class GraphParseError : public std::runtime_error {
public:
    GraphParseError(std::size_t line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

// Pre-normalization input: loops and parallel edges are kept verbatim.
struct RawMultigraph {
    std::vector<std::string> names;
    std::vector<std::pair<std::size_t, std::size_t>> edges;  // indices into names

    std::size_t add_vertex(const std::string& name);
    std::optional<std::size_t> find(std::string_view name) const;
};

// Unweighted simple undirected graph with names sorted byte-wise.
class Graph {
public:
    Graph() = default;

    // Builds from names and edges over those names. Names are sorted and
    // deduplicated; edges must be loop-free (duplicates collapse).
    static Graph from_named_edges(std::vector<std::string> names,
                                  const std::vector<std::pair<std::string, std::string>>& edges);

    // Builds from an index-based description; vertex i is named std::to_string(i)
    // unless names are supplied. Supplied names must already be sorted and unique.
    static Graph from_edges(std::size_t vertexCount, const std::vector<Edge>& edges,
                            std::vector<std::string> names = {});

    std::size_t vertex_count() const { return names_.size(); }
    std::size_t edge_count() const { return edges_.size(); }

    const std::vector<std::string>& names() const { return names_; }
    const std::string& name(VertexId v) const { return names_[v]; }
    std::optional<VertexId> find(std::string_view name) const;

    const std::vector<VertexId>& neighbors(VertexId v) const { return adjacency_[v]; }
    std::size_t degree(VertexId v) const { return adjacency_[v].size(); }
    bool has_edge(VertexId a, VertexId b) const;

    // Sorted ascending, each with u < v.
    const std::vector<Edge>& edges() const { return edges_; }

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    std::vector<std::string> names_;
    std::vector<std::vector<VertexId>> adjacency_;
    std::vector<Edge> edges_;
};

struct NormalizationEntry {
    enum class Kind { ParallelCollapsed, LoopReplaced, NameCollision };
    Kind kind;
    std::string vertex;   // loop vertex, or first endpoint of the collapsed pair
    std::string other;    // dummy name for loops, second endpoint for collapses
};

struct NormalizationReport {
    std::vector<NormalizationEntry> entries;
    bool empty() const { return entries.empty(); }
};

struct NormalizedGraph {
    Graph graph;
    NormalizationReport report;
};

enum class Connectivity { Ok, Disconnected, Empty };

struct ValidationResult {
    Connectivity status;
    std::size_t componentCount;
};

struct BfsLevels {
    VertexId seed = 0;
    std::vector<std::vector<VertexId>> levels;
    std::vector<std::size_t> levelOf;
};

RawMultigraph parse_graph(std::istream& in, GraphFormat format);
RawMultigraph parse_graph(std::string_view text, GraphFormat format);

// Collapses parallel edges and replaces each loop at v with an edge to a
// fresh leaf named "v__loopK".
NormalizedGraph normalize(const RawMultigraph& raw);

// Re-expresses a simple graph as a raw multigraph (for idempotence checks).
RawMultigraph to_raw(const Graph& g);

ValidationResult validate_simple_connected(const Graph& g);

// Component id per vertex, numbered in order of smallest member.
std::vector<std::size_t> component_labels(const Graph& g, std::size_t* count = nullptr);

struct Component {
    Graph graph;
    std::vector<VertexId> toParent;  // local id -> id in the source graph
};

std::vector<Component> components(const Graph& g);

BfsLevels bfs_levels(const Graph& g, VertexId seed);

// Edge-list text: one "u v" line per edge, one line per isolated vertex.
std::string to_edge_list(const Graph& g);
std::string to_edge_list(const RawMultigraph& raw);

}  // namespace direvc
