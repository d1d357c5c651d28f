#include "direvc/guided_matching.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <tuple>

namespace direvc {

std::vector<VertexId> RepresentsTable::endpoints() const {
    std::vector<VertexId> out;
    for (VertexId v = 0; v < endpointRow.size(); ++v)
        if (endpointRow[v] != kNoRow) out.push_back(v);
    return out;
}

std::vector<VertexId>& RepresentsTable::list_of(VertexId v) {
    auto& row = rows.at(endpointRow.at(v));
    return row.node1 == v ? row.list1 : row.list2;
}

const std::vector<VertexId>& RepresentsTable::list_of(VertexId v) const {
    const auto& row = rows.at(endpointRow.at(v));
    return row.node1 == v ? row.list1 : row.list2;
}

EndpointStatus& RepresentsTable::status_of(VertexId v) {
    auto& row = rows.at(endpointRow.at(v));
    return row.node1 == v ? row.status1 : row.status2;
}

EndpointStatus RepresentsTable::status_of(VertexId v) const {
    const auto& row = rows.at(endpointRow.at(v));
    return row.node1 == v ? row.status1 : row.status2;
}

namespace {

void check_levels(const Graph& g, const BfsLevels& levels) {
    const std::size_t n = g.vertex_count();
    if (levels.levelOf.size() != n) throw std::invalid_argument("levels do not cover the graph");
    std::vector<char> seen(n, 0);
    for (std::size_t i = 0; i < levels.levels.size(); ++i) {
        for (VertexId v : levels.levels[i]) {
            if (v >= n || seen[v] || levels.levelOf[v] != i)
                throw std::invalid_argument("levels are not a partition of the vertices");
            seen[v] = 1;
        }
    }
    if (std::count(seen.begin(), seen.end(), 1) != static_cast<std::ptrdiff_t>(n))
        throw std::invalid_argument("levels are not a partition of the vertices");
    for (const Edge& e : g.edges()) {
        std::size_t a = levels.levelOf[e.u];
        std::size_t b = levels.levelOf[e.v];
        if ((a > b ? a - b : b - a) > 1)
            throw std::invalid_argument("edge spans more than one BFS level");
    }
}

struct Candidate {
    int tier = 5;
    VertexId a = 0;
    VertexId b = 0;

    bool better_than(const Candidate& o) const {
        return std::tie(tier, a, b) < std::tie(o.tier, o.a, o.b);
    }
};

class GuidedMatcher {
public:
    GuidedMatcher(const Graph& g, const Matching& maximum, const BfsLevels& levels,
                  TieBreak tieBreak, const TraceSink& sink)
        : g_(g), maximum_(maximum), levels_(levels), tieBreak_(tieBreak), sink_(sink) {
        const std::size_t n = g.vertex_count();
        work_.resize(n);
        visited_.assign(n, 0);
        for (VertexId v = 0; v < n; ++v) {
            work_[v] = g.neighbors(v);
            if (work_[v].empty()) visited_[v] = 1;
        }
        table_.endpointRow.assign(n, kNoRow);
    }

    RepresentsTable run() {
        for (std::size_t level = 0; level < levels_.levels.size(); ++level) {
            while (true) {
                auto cand = select(level);
                if (!cand) break;
                append(*cand, level);
            }
            for (VertexId v : levels_.levels[level]) {
                if (!work_[v].empty())
                    throw std::logic_error("level invariant violated: vertex " + g_.name(v) +
                                           " still has edges after its level was processed");
            }
        }
        return std::move(table_);
    }

private:
    Candidate classify(VertexId x, VertexId y, std::size_t level) const {
        const std::size_t ly = levels_.levelOf[y];
        const bool inMaximum = maximum_.contains(x, y);
        if (ly == level) {
            return {inMaximum ? 1 : 2, std::min(x, y), std::max(x, y)};
        }
        if (ly == level + 1) return {inMaximum ? 3 : 4, x, y};
        throw std::logic_error("level invariant violated: edge " + g_.name(x) + "-" + g_.name(y) +
                               " reaches outside the current and next level");
    }

    std::optional<Candidate> select(std::size_t level) const {
        std::optional<Candidate> best;
        for (VertexId x : levels_.levels[level]) {
            if (visited_[x]) continue;
            for (VertexId y : work_[x]) {
                Candidate c = classify(x, y, level);
                if (!best || c.better_than(*best)) best = c;
            }
            if (tieBreak_ == TieBreak::VertexFirst) break;
        }
        return best;
    }

    void detach(VertexId x, std::vector<VertexId>& emptied) {
        for (VertexId w : work_[x]) {
            auto& adj = work_[w];
            adj.erase(std::lower_bound(adj.begin(), adj.end(), x));
            if (adj.empty()) emptied.push_back(w);
        }
        work_[x].clear();
    }

    void append(const Candidate& c, std::size_t level) {
        RepresentsRow row;
        row.node1 = c.a;
        row.node2 = c.b;
        row.list1 = work_[c.a];
        row.list2 = work_[c.b];
        const std::size_t index = table_.rows.size();
        table_.endpointRow[c.a] = index;
        table_.endpointRow[c.b] = index;

        if (sink_) {
            sink_.emit(TraceKind::EdgeSelected,
                       {{"node1", sink_.name(c.a)},
                        {"node2", sink_.name(c.b)},
                        {"tier", c.tier},
                        {"level", level},
                        {"inMaximumMatching", c.tier == 1 || c.tier == 3}});
            sink_.emit(TraceKind::RowAppended, {{"row", index},
                                                {"node1", sink_.name(c.a)},
                                                {"list1", sink_.names(row.list1)},
                                                {"node2", sink_.name(c.b)},
                                                {"list2", sink_.names(row.list2)}});
        }
        table_.rows.push_back(std::move(row));

        visited_[c.a] = visited_[c.b] = 1;
        std::vector<VertexId> emptied;
        detach(c.a, emptied);
        detach(c.b, emptied);
        for (VertexId w : emptied)
            if (work_[w].empty()) visited_[w] = 1;
    }

    const Graph& g_;
    const Matching& maximum_;
    const BfsLevels& levels_;
    TieBreak tieBreak_;
    const TraceSink& sink_;
    std::vector<std::vector<VertexId>> work_;
    std::vector<char> visited_;
    RepresentsTable table_;
};

}  // namespace

RepresentsTable guided_maximal_matching(const Graph& g, const Matching& maximum,
                                        const BfsLevels& levels, TieBreak tieBreak,
                                        const TraceSink& sink) {
    if (maximum.mate.size() != g.vertex_count() || !is_matching(g, maximum))
        throw std::invalid_argument("supplied maximum matching is not a matching of the graph");
    check_levels(g, levels);
    return GuidedMatcher(g, maximum, levels, tieBreak, sink).run();
}

Matching matched_edges(const RepresentsTable& t) {
    std::vector<Edge> edges;
    edges.reserve(t.rows.size());
    for (const auto& row : t.rows) edges.push_back(make_edge(row.node1, row.node2));
    return Matching::from_edges(t.endpointRow.size(), std::move(edges));
}

nlohmann::json table_to_json(const Graph& g, const RepresentsTable& t) {
    auto names = [&](const std::vector<VertexId>& vs) {
        auto arr = nlohmann::json::array();
        for (VertexId v : vs) arr.push_back(g.name(v));
        return arr;
    };
    auto out = nlohmann::json::array();
    for (const auto& row : t.rows) {
        out.push_back({{"node1", g.name(row.node1)},
                       {"list1", names(row.list1)},
                       {"node2", g.name(row.node2)},
                       {"list2", names(row.list2)}});
    }
    return out;
}

}  // namespace direvc
