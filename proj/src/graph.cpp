#include "direvc/graph.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>
#include <queue>
#include <set>
#include <sstream>
#include <unordered_map>

namespace direvc {

namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        std::size_t j = i;
        while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
        if (j > i) out.push_back(line.substr(i, j - i));
        i = j;
    }
    return out;
}

std::optional<long long> to_integer(std::string_view token) {
    long long value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size()) return std::nullopt;
    return value;
}

std::string padded_name(std::size_t index, std::size_t width) {
    std::string s = std::to_string(index);
    if (s.size() < width) s.insert(0, width - s.size(), '0');
    return s;
}

RawMultigraph parse_edge_list(std::istream& in) {
    RawMultigraph raw;
    std::unordered_map<std::string, std::size_t> index;
    auto intern = [&](std::string_view token) {
        auto [it, inserted] = index.try_emplace(std::string(token), raw.names.size());
        if (inserted) raw.names.emplace_back(token);
        return it->second;
    };

    std::string line;
    std::size_t lineNo = 0;
    while (std::getline(in, line)) {
        ++lineNo;
        std::string_view view(line);
        if (auto hash = view.find('#'); hash != std::string_view::npos) view = view.substr(0, hash);
        auto tokens = split_ws(view);
        if (tokens.empty()) continue;
        if (tokens.size() == 1) {
            intern(tokens[0]);
        } else if (tokens.size() == 2) {
            std::size_t a = intern(tokens[0]);
            std::size_t b = intern(tokens[1]);
            raw.edges.emplace_back(a, b);
        } else {
            throw GraphParseError(lineNo, "expected one or two vertex names, got " +
                                              std::to_string(tokens.size()) + " tokens");
        }
    }
    return raw;
}

RawMultigraph parse_dimacs(std::istream& in) {
    RawMultigraph raw;
    std::optional<long long> declaredVertices;
    long long declaredEdges = 0;
    std::size_t headerLine = 0;

    std::string line;
    std::size_t lineNo = 0;
    while (std::getline(in, line)) {
        ++lineNo;
        auto tokens = split_ws(line);
        if (tokens.empty() || tokens[0] == "c") continue;
        if (tokens[0] == "p") {
            if (declaredVertices) throw GraphParseError(lineNo, "duplicate problem line");
            if (tokens.size() != 4 || (tokens[1] != "edge" && tokens[1] != "col"))
                throw GraphParseError(lineNo, "expected 'p edge <vertices> <edges>'");
            auto m = to_integer(tokens[2]);
            auto n = to_integer(tokens[3]);
            if (!m || !n || *m < 0 || *n < 0)
                throw GraphParseError(lineNo, "malformed vertex or edge count");
            declaredVertices = *m;
            declaredEdges = *n;
            headerLine = lineNo;
            raw.names.reserve(static_cast<std::size_t>(*m));
            for (long long i = 1; i <= *m; ++i) raw.names.push_back(std::to_string(i));
        } else if (tokens[0] == "e") {
            if (!declaredVertices) throw GraphParseError(lineNo, "edge line before problem line");
            if (tokens.size() != 3) throw GraphParseError(lineNo, "expected 'e <u> <v>'");
            auto u = to_integer(tokens[1]);
            auto v = to_integer(tokens[2]);
            if (!u || !v) throw GraphParseError(lineNo, "vertex ids must be integers");
            if (*u < 1 || *u > *declaredVertices || *v < 1 || *v > *declaredVertices)
                throw GraphParseError(lineNo, "vertex id outside 1.." +
                                                  std::to_string(*declaredVertices));
            raw.edges.emplace_back(static_cast<std::size_t>(*u - 1),
                                   static_cast<std::size_t>(*v - 1));
        } else {
            throw GraphParseError(lineNo, "unknown line type '" + std::string(tokens[0]) + "'");
        }
    }
    if (!declaredVertices) throw GraphParseError(lineNo, "missing problem line");
    if (static_cast<long long>(raw.edges.size()) != declaredEdges)
        throw GraphParseError(headerLine, "header declares " + std::to_string(declaredEdges) +
                                              " edges but " + std::to_string(raw.edges.size()) +
                                              " were given");
    return raw;
}

}  // namespace

std::size_t RawMultigraph::add_vertex(const std::string& name) {
    if (auto existing = find(name)) return *existing;
    names.push_back(name);
    return names.size() - 1;
}

std::optional<std::size_t> RawMultigraph::find(std::string_view name) const {
    auto it = std::find(names.begin(), names.end(), name);
    if (it == names.end()) return std::nullopt;
    return static_cast<std::size_t>(it - names.begin());
}

Graph Graph::from_named_edges(std::vector<std::string> names,
                              const std::vector<std::pair<std::string, std::string>>& edges) {
    std::sort(names.begin(), names.end());
    names.erase(std::unique(names.begin(), names.end()), names.end());
    auto lookup = [&](const std::string& n) {
        auto it = std::lower_bound(names.begin(), names.end(), n);
        if (it == names.end() || *it != n)
            throw std::invalid_argument("edge references unknown vertex '" + n + "'");
        return static_cast<VertexId>(it - names.begin());
    };
    std::vector<Edge> ids;
    ids.reserve(edges.size());
    for (const auto& [a, b] : edges) {
        VertexId u = lookup(a);
        VertexId v = lookup(b);
        if (u == v) throw std::invalid_argument("loop at '" + a + "' in a simple graph");
        ids.push_back(make_edge(u, v));
    }
    std::size_t count = names.size();
    return from_edges(count, ids, std::move(names));
}

Graph Graph::from_edges(std::size_t vertexCount, const std::vector<Edge>& edges,
                        std::vector<std::string> names) {
    Graph g;
    if (names.empty() && vertexCount > 0) {
        std::size_t width = std::to_string(vertexCount - 1).size();
        names.reserve(vertexCount);
        for (std::size_t i = 0; i < vertexCount; ++i) names.push_back(padded_name(i, width));
    }
    if (names.size() != vertexCount) throw std::invalid_argument("name count mismatch");
    g.names_ = std::move(names);
    g.edges_.reserve(edges.size());
    for (const Edge& e : edges) {
        if (e.u >= vertexCount || e.v >= vertexCount)
            throw std::invalid_argument("edge endpoint out of range");
        if (e.u == e.v) throw std::invalid_argument("loop in a simple graph");
        g.edges_.push_back(make_edge(e.u, e.v));
    }
    std::sort(g.edges_.begin(), g.edges_.end());
    g.edges_.erase(std::unique(g.edges_.begin(), g.edges_.end()), g.edges_.end());
    g.adjacency_.assign(vertexCount, {});
    for (const Edge& e : g.edges_) {
        g.adjacency_[e.u].push_back(e.v);
        g.adjacency_[e.v].push_back(e.u);
    }
    // Sorted edge order already yields ascending adjacency lists.
    return g;
}

std::optional<VertexId> Graph::find(std::string_view name) const {
    auto it = std::lower_bound(names_.begin(), names_.end(), name);
    if (it == names_.end() || *it != name) return std::nullopt;
    return static_cast<VertexId>(it - names_.begin());
}

bool Graph::has_edge(VertexId a, VertexId b) const {
    if (a >= adjacency_.size()) return false;
    const auto& adj = adjacency_[a];
    return std::binary_search(adj.begin(), adj.end(), b);
}

RawMultigraph parse_graph(std::istream& in, GraphFormat format) {
    return format == GraphFormat::Dimacs ? parse_dimacs(in) : parse_edge_list(in);
}

RawMultigraph parse_graph(std::string_view text, GraphFormat format) {
    std::istringstream in{std::string(text)};
    return parse_graph(in, format);
}

NormalizedGraph normalize(const RawMultigraph& raw) {
    NormalizedGraph out;
    std::set<std::string> taken(raw.names.begin(), raw.names.end());
    std::vector<std::string> names = raw.names;
    std::vector<std::pair<std::string, std::string>> edges;
    std::set<std::pair<std::string, std::string>> seen;
    std::map<std::string, std::size_t> nextLoopOrdinal;

    for (const auto& [a, b] : raw.edges) {
        const std::string& na = raw.names.at(a);
        const std::string& nb = raw.names.at(b);
        if (a == b) {
            std::size_t& k = nextLoopOrdinal[na];
            std::string dummy = na + "__loop" + std::to_string(k);
            while (taken.count(dummy)) {
                out.report.entries.push_back({NormalizationEntry::Kind::NameCollision, na, dummy});
                dummy = na + "__loop" + std::to_string(++k);
            }
            ++k;
            taken.insert(dummy);
            names.push_back(dummy);
            edges.emplace_back(na, dummy);
            seen.emplace(std::min(na, dummy), std::max(na, dummy));
            out.report.entries.push_back({NormalizationEntry::Kind::LoopReplaced, na, dummy});
            continue;
        }
        auto key = std::make_pair(std::min(na, nb), std::max(na, nb));
        if (!seen.insert(key).second) {
            out.report.entries.push_back(
                {NormalizationEntry::Kind::ParallelCollapsed, key.first, key.second});
            continue;
        }
        edges.push_back(key);
    }
    out.graph = Graph::from_named_edges(std::move(names), edges);
    return out;
}

RawMultigraph to_raw(const Graph& g) {
    RawMultigraph raw;
    raw.names = g.names();
    for (const Edge& e : g.edges()) raw.edges.emplace_back(e.u, e.v);
    return raw;
}

std::vector<std::size_t> component_labels(const Graph& g, std::size_t* count) {
    constexpr auto unset = static_cast<std::size_t>(-1);
    std::vector<std::size_t> label(g.vertex_count(), unset);
    std::size_t next = 0;
    std::vector<VertexId> stack;
    for (VertexId s = 0; s < g.vertex_count(); ++s) {
        if (label[s] != unset) continue;
        label[s] = next;
        stack.push_back(s);
        while (!stack.empty()) {
            VertexId x = stack.back();
            stack.pop_back();
            for (VertexId y : g.neighbors(x)) {
                if (label[y] == unset) {
                    label[y] = next;
                    stack.push_back(y);
                }
            }
        }
        ++next;
    }
    if (count) *count = next;
    return label;
}

ValidationResult validate_simple_connected(const Graph& g) {
    if (g.vertex_count() == 0) return {Connectivity::Empty, 0};
    std::size_t count = 0;
    component_labels(g, &count);
    return {count == 1 ? Connectivity::Ok : Connectivity::Disconnected, count};
}

std::vector<Component> components(const Graph& g) {
    std::size_t count = 0;
    auto label = component_labels(g, &count);
    std::vector<std::vector<VertexId>> members(count);
    for (VertexId v = 0; v < g.vertex_count(); ++v) members[label[v]].push_back(v);

    std::vector<VertexId> localId(g.vertex_count());
    std::vector<Component> out;
    out.reserve(count);
    for (auto& vs : members) {
        for (std::size_t i = 0; i < vs.size(); ++i) localId[vs[i]] = static_cast<VertexId>(i);
        std::vector<std::string> names;
        names.reserve(vs.size());
        std::vector<Edge> edges;
        for (VertexId v : vs) {
            names.push_back(g.name(v));
            for (VertexId w : g.neighbors(v))
                if (v < w) edges.push_back({localId[v], localId[w]});
        }
        out.push_back({Graph::from_edges(vs.size(), edges, std::move(names)), std::move(vs)});
    }
    return out;
}

BfsLevels bfs_levels(const Graph& g, VertexId seed) {
    if (seed >= g.vertex_count()) throw std::out_of_range("BFS seed out of range");
    constexpr auto unset = static_cast<std::size_t>(-1);
    BfsLevels out;
    out.seed = seed;
    out.levelOf.assign(g.vertex_count(), unset);
    out.levelOf[seed] = 0;
    out.levels.push_back({seed});
    std::size_t reached = 1;
    while (true) {
        std::vector<VertexId> next;
        for (VertexId x : out.levels.back()) {
            for (VertexId y : g.neighbors(x)) {
                if (out.levelOf[y] == unset) {
                    out.levelOf[y] = out.levels.size();
                    next.push_back(y);
                }
            }
        }
        if (next.empty()) break;
        std::sort(next.begin(), next.end());
        reached += next.size();
        out.levels.push_back(std::move(next));
    }
    if (reached != g.vertex_count()) throw std::invalid_argument("BFS levels need a connected graph");
    return out;
}

std::string to_edge_list(const Graph& g) {
    std::string out;
    for (const Edge& e : g.edges()) {
        out += g.name(e.u);
        out += ' ';
        out += g.name(e.v);
        out += '\n';
    }
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        if (g.degree(v) == 0) {
            out += g.name(v);
            out += '\n';
        }
    }
    return out;
}

std::string to_edge_list(const RawMultigraph& raw) {
    std::string out;
    std::vector<bool> touched(raw.names.size(), false);
    for (const auto& [a, b] : raw.edges) {
        out += raw.names[a] + ' ' + raw.names[b] + '\n';
        touched[a] = touched[b] = true;
    }
    for (std::size_t i = 0; i < raw.names.size(); ++i)
        if (!touched[i]) out += raw.names[i] + '\n';
    return out;
}

}  // namespace direvc
