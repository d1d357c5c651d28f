#include "direvc/matching.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>

namespace direvc {

namespace detail {

namespace {

constexpr VertexId kNone = kUnmatched;

// Augmenting-path search with blossom contraction via base pointers.
class BlossomSearch {
public:
    explicit BlossomSearch(const std::vector<std::vector<VertexId>>& adjacency)
        : adj_(adjacency),
          n_(adjacency.size()),
          mate_(n_, kNone),
          parent_(n_),
          base_(n_),
          used_(n_),
          inBlossom_(n_),
          queue_(n_) {}

    std::vector<VertexId> run() {
        for (VertexId root = 0; root < n_; ++root) {
            if (mate_[root] != kNone) continue;
            VertexId end = find_path(root);
            while (end != kNone) {
                VertexId pv = parent_[end];
                VertexId ppv = mate_[pv];
                mate_[end] = pv;
                mate_[pv] = end;
                end = ppv;
            }
        }
        return std::move(mate_);
    }

private:
    VertexId lowest_common_ancestor(VertexId a, VertexId b) {
        std::vector<char> seen(n_, 0);
        while (true) {
            a = base_[a];
            seen[a] = 1;
            if (mate_[a] == kNone) break;
            a = parent_[mate_[a]];
        }
        while (true) {
            b = base_[b];
            if (seen[b]) return b;
            b = parent_[mate_[b]];
        }
    }

    void mark_path(VertexId v, VertexId b, VertexId child) {
        while (base_[v] != b) {
            inBlossom_[base_[v]] = inBlossom_[base_[mate_[v]]] = 1;
            parent_[v] = child;
            child = mate_[v];
            v = parent_[mate_[v]];
        }
    }

    VertexId find_path(VertexId root) {
        std::fill(used_.begin(), used_.end(), 0);
        std::fill(parent_.begin(), parent_.end(), kNone);
        std::iota(base_.begin(), base_.end(), VertexId{0});

        used_[root] = 1;
        std::size_t head = 0;
        std::size_t tail = 0;
        queue_[tail++] = root;
        while (head < tail) {
            VertexId v = queue_[head++];
            for (VertexId to : adj_[v]) {
                if (base_[v] == base_[to] || mate_[v] == to) continue;
                if (to == root || (mate_[to] != kNone && parent_[mate_[to]] != kNone)) {
                    VertexId curBase = lowest_common_ancestor(v, to);
                    std::fill(inBlossom_.begin(), inBlossom_.end(), 0);
                    mark_path(v, curBase, to);
                    mark_path(to, curBase, v);
                    for (VertexId i = 0; i < n_; ++i) {
                        if (inBlossom_[base_[i]]) {
                            base_[i] = curBase;
                            if (!used_[i]) {
                                used_[i] = 1;
                                queue_[tail++] = i;
                            }
                        }
                    }
                } else if (parent_[to] == kNone) {
                    parent_[to] = v;
                    if (mate_[to] == kNone) return to;
                    VertexId next = mate_[to];
                    used_[next] = 1;
                    queue_[tail++] = next;
                }
            }
        }
        return kNone;
    }

    const std::vector<std::vector<VertexId>>& adj_;
    VertexId n_;
    std::vector<VertexId> mate_;
    std::vector<VertexId> parent_;
    std::vector<VertexId> base_;
    std::vector<char> used_;
    std::vector<char> inBlossom_;
    std::vector<VertexId> queue_;
};

}  // namespace

std::vector<VertexId> blossom_mates(const std::vector<std::vector<VertexId>>& adjacency) {
    if (adjacency.empty()) return {};
    return BlossomSearch(adjacency).run();
}

}  // namespace detail

namespace {

Matching from_mates(std::vector<VertexId> mates) {
    Matching m;
    for (VertexId v = 0; v < mates.size(); ++v)
        if (mates[v] != kUnmatched && v < mates[v]) m.edges.push_back({v, mates[v]});
    m.mate = std::move(mates);
    return m;
}

}  // namespace

Matching Matching::from_edges(std::size_t vertexCount, std::vector<Edge> edges) {
    Matching m;
    m.mate.assign(vertexCount, kUnmatched);
    for (Edge& e : edges) {
        e = make_edge(e.u, e.v);
        if (e.v >= vertexCount) throw std::invalid_argument("matching edge out of range");
        if (m.mate[e.u] != kUnmatched || m.mate[e.v] != kUnmatched)
            throw std::invalid_argument("matching edges share an endpoint");
        m.mate[e.u] = e.v;
        m.mate[e.v] = e.u;
    }
    std::sort(edges.begin(), edges.end());
    m.edges = std::move(edges);
    return m;
}

Matching maximum_matching(const Graph& g) {
    std::vector<std::vector<VertexId>> adjacency(g.vertex_count());
    for (VertexId v = 0; v < g.vertex_count(); ++v) adjacency[v] = g.neighbors(v);
    return from_mates(detail::blossom_mates(adjacency));
}

Matching maximum_matching_permuted(const Graph& g, std::uint64_t permutationSeed) {
    const std::size_t n = g.vertex_count();
    std::vector<VertexId> relabel(n);
    std::iota(relabel.begin(), relabel.end(), VertexId{0});
    std::mt19937_64 rng(permutationSeed);
    std::shuffle(relabel.begin(), relabel.end(), rng);

    std::vector<std::vector<VertexId>> adjacency(n);
    for (VertexId v = 0; v < n; ++v) {
        auto& row = adjacency[relabel[v]];
        for (VertexId w : g.neighbors(v)) row.push_back(relabel[w]);
        std::sort(row.begin(), row.end());
    }
    auto permutedMates = detail::blossom_mates(adjacency);

    std::vector<VertexId> original(n);
    for (VertexId v = 0; v < n; ++v) original[relabel[v]] = v;
    std::vector<VertexId> mates(n, kUnmatched);
    for (VertexId pv = 0; pv < n; ++pv)
        if (permutedMates[pv] != kUnmatched) mates[original[pv]] = original[permutedMates[pv]];
    return from_mates(std::move(mates));
}

bool is_matching(const Graph& g, const Matching& m) {
    std::vector<char> used(g.vertex_count(), 0);
    for (const Edge& e : m.edges) {
        if (!g.has_edge(e.u, e.v)) return false;
        if (used[e.u] || used[e.v]) return false;
        used[e.u] = used[e.v] = 1;
    }
    return true;
}

bool is_maximal_matching(const Graph& g, const Matching& m) {
    if (!is_matching(g, m)) return false;
    std::vector<char> used(g.vertex_count(), 0);
    for (const Edge& e : m.edges) used[e.u] = used[e.v] = 1;
    return std::none_of(g.edges().begin(), g.edges().end(),
                        [&](const Edge& e) { return !used[e.u] && !used[e.v]; });
}

}  // namespace direvc
