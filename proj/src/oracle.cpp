#include "direvc/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <string>
#include <vector>

#include "direvc/matching.hpp"

namespace direvc {

namespace {

using Mask = std::uint64_t;

Mask bit(VertexId v) { return Mask{1} << v; }

std::vector<Mask> adjacency_masks(const Graph& g) {
    std::vector<Mask> adj(g.vertex_count(), 0);
    for (const Edge& e : g.edges()) {
        adj[e.u] |= bit(e.v);
        adj[e.v] |= bit(e.u);
    }
    return adj;
}

class BranchAndBound {
public:
    explicit BranchAndBound(const Graph& g) : n_(g.vertex_count()), adj_(adjacency_masks(g)) {}

    Mask run() {
        Mask all = n_ == 64 ? ~Mask{0} : (bit(static_cast<VertexId>(n_)) - 1);
        // Everything except one vertex always covers a simple graph.
        best_ = n_ == 0 ? 0 : all & ~Mask{1};
        bestSize_ = std::popcount(best_);
        branch(all, 0);
        return best_;
    }

private:
    // Size of a maximum matching among the alive vertices.
    std::size_t matching_bound(Mask alive) {
        std::vector<VertexId> local;
        for (Mask m = alive; m; m &= m - 1) local.push_back(static_cast<VertexId>(std::countr_zero(m)));
        std::vector<std::vector<VertexId>> adjacency(local.size());
        for (std::size_t i = 0; i < local.size(); ++i) {
            Mask nb = adj_[local[i]] & alive;
            for (std::size_t j = 0; j < local.size(); ++j)
                if (nb & bit(local[j])) adjacency[i].push_back(static_cast<VertexId>(j));
        }
        auto mates = detail::blossom_mates(adjacency);
        std::size_t matched = 0;
        for (VertexId m : mates)
            if (m != kUnmatched) ++matched;
        return matched / 2;
    }

    void branch(Mask alive, Mask chosen) {
        // Drop vertices with no alive neighbors.
        VertexId pick = 0;
        int pickDegree = 0;
        for (Mask m = alive; m; m &= m - 1) {
            auto v = static_cast<VertexId>(std::countr_zero(m));
            int d = std::popcount(adj_[v] & alive);
            if (d == 0) {
                alive &= ~bit(v);
            } else if (d > pickDegree) {
                pick = v;
                pickDegree = d;
            }
        }
        const int size = std::popcount(chosen);
        if (pickDegree == 0) {
            if (size < bestSize_) {
                best_ = chosen;
                bestSize_ = size;
            }
            return;
        }
        if (size + 1 >= bestSize_) return;
        if (size + static_cast<int>(matching_bound(alive)) >= bestSize_) return;

        branch(alive & ~bit(pick), chosen | bit(pick));
        Mask nb = adj_[pick] & alive;
        branch(alive & ~nb & ~bit(pick), chosen | nb);
    }

    std::size_t n_;
    std::vector<Mask> adj_;
    Mask best_ = 0;
    int bestSize_ = 0;
};

}  // namespace

CoverResult exact_mvc(const Graph& g, std::size_t vertexLimit) {
    if (g.vertex_count() > std::min<std::size_t>(vertexLimit, 64))
        throw OracleLimitError("exact_mvc: " + std::to_string(g.vertex_count()) +
                               " vertices exceed the limit of " + std::to_string(vertexLimit));
    Mask best = BranchAndBound(g).run();
    CoverResult r;
    for (Mask m = best; m; m &= m - 1) r.cover.push_back(static_cast<VertexId>(std::countr_zero(m)));
    r.freezeOrder = r.cover;
    r.size = r.cover.size();
    r.matchingLowerBound = maximum_matching(g).size();
    r.verifiedCover = is_vertex_cover(g, r.cover);
    r.optimalCertified = r.size == r.matchingLowerBound;
    return r;
}

std::size_t exact_mvc_exhaustive(const Graph& g) {
    const std::size_t n = g.vertex_count();
    if (n > kExhaustiveVertexLimit)
        throw OracleLimitError("exact_mvc_exhaustive: " + std::to_string(n) +
                               " vertices exceed the limit of " +
                               std::to_string(kExhaustiveVertexLimit));
    auto adj = adjacency_masks(g);
    const Mask total = Mask{1} << n;
    std::size_t best = n;
    for (Mask subset = 0; subset < total; ++subset) {
        auto size = static_cast<std::size_t>(std::popcount(subset));
        if (size >= best) continue;
        // A subset covers every edge iff no edge has both ends outside it.
        bool covers = true;
        for (VertexId v = 0; v < n && covers; ++v)
            if (!(subset & bit(v)) && (adj[v] & ~subset)) covers = false;
        if (covers) best = size;
    }
    return best;
}

std::size_t exact_max_matching_exhaustive(const Graph& g) {
    const auto& edges = g.edges();
    if (edges.size() > kExhaustiveEdgeLimit)
        throw OracleLimitError("exact_max_matching_exhaustive: " + std::to_string(edges.size()) +
                               " edges exceed the limit of " +
                               std::to_string(kExhaustiveEdgeLimit));
    std::size_t best = 0;
    std::vector<char> used(g.vertex_count(), 0);
    auto search = [&](auto&& self, std::size_t index, std::size_t taken) -> void {
        best = std::max(best, taken);
        if (taken + (edges.size() - index) <= best) return;
        for (std::size_t i = index; i < edges.size(); ++i) {
            const Edge& e = edges[i];
            if (used[e.u] || used[e.v]) continue;
            used[e.u] = used[e.v] = 1;
            self(self, i + 1, taken + 1);
            used[e.u] = used[e.v] = 0;
        }
    };
    search(search, 0, 0);
    return best;
}

}  // namespace direvc
