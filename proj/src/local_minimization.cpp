#include "direvc/local_minimization.hpp"

#include <algorithm>

namespace direvc {

std::string_view to_string(ResolutionCause cause) {
    switch (cause) {
        case ResolutionCause::Necessary: return "necessary";
        case ResolutionCause::TerminalTopDown: return "terminal-topdown";
        case ResolutionCause::RemainsVsRemoved: return "remains-vs-removed";
        case ResolutionCause::CountCompare: return "count-compare";
        case ResolutionCause::Tie: return "tie";
        case ResolutionCause::CascadeA: return "cascadeA";
        case ResolutionCause::CascadeB: return "cascadeB";
        case ResolutionCause::Direct: return "direct";
    }
    return "unknown";
}

namespace {

bool contains(const std::vector<VertexId>& list, VertexId v) {
    return std::binary_search(list.begin(), list.end(), v);
}

// Endpoints in table order: rows top-down, node1 before node2.
template <typename Fn>
void for_each_endpoint(const RepresentsTable& t, Fn&& fn) {
    for (std::size_t r = 0; r < t.rows.size(); ++r) {
        fn(t.rows[r].node1);
        fn(t.rows[r].node2);
    }
}

void require_active(const RepresentsTable& t, VertexId v, const char* role) {
    if (!t.is_endpoint(v))
        throw std::invalid_argument(std::string(role) + " vertex is not an endpoint of the table");
    if (t.status_of(v) != EndpointStatus::Active)
        throw std::invalid_argument(std::string(role) + " vertex is not active");
}

// Number of active endpoints, other than `except`, whose list contains v.
std::size_t represented_count(const RepresentsTable& t, VertexId v, VertexId except) {
    std::size_t count = 0;
    for_each_endpoint(t, [&](VertexId e) {
        if (e != except && t.status_of(e) == EndpointStatus::Active && contains(t.list_of(e), v))
            ++count;
    });
    return count;
}

}  // namespace

void freeze_and_remove(RepresentsTable& t, std::optional<VertexId> freeze,
                       std::optional<VertexId> remove, const TraceSink& sink,
                       ResolutionCause freezeCause, ResolutionCause removeCause) {
    if (!freeze && !remove) throw std::invalid_argument("freeze_and_remove needs a vertex");
    if (freeze) require_active(t, *freeze, "freeze");
    if (remove) require_active(t, *remove, "remove");
    if (freeze && remove && *freeze == *remove)
        throw std::invalid_argument("cannot freeze and remove the same vertex");

    if (remove) {
        t.status_of(*remove) = EndpointStatus::Removed;
        t.list_of(*remove).clear();
        if (sink)
            sink.emit(TraceKind::Removed, {{"vertex", sink.name(*remove)},
                                           {"row", t.endpointRow[*remove]},
                                           {"cause", to_string(removeCause)}});
    }
    if (freeze) {
        t.status_of(*freeze) = EndpointStatus::Frozen;
        t.cover.push_back(*freeze);
        for (auto& row : t.rows) {
            for (auto* list : {&row.list1, &row.list2}) {
                auto it = std::lower_bound(list->begin(), list->end(), *freeze);
                if (it != list->end() && *it == *freeze) list->erase(it);
            }
        }
        t.list_of(*freeze).clear();
        if (sink)
            sink.emit(TraceKind::Frozen, {{"vertex", sink.name(*freeze)},
                                          {"row", t.endpointRow[*freeze]},
                                          {"cause", to_string(freezeCause)}});
    }

    if (remove) {
        for (std::size_t r = 0; r < t.rows.size(); ++r) {
            for (VertexId e : {t.rows[r].node1, t.rows[r].node2}) {
                if (t.status_of(e) != EndpointStatus::Active || !contains(t.list_of(e), *remove))
                    continue;
                if (sink)
                    sink.emit(TraceKind::Cascade, {{"type", "A"},
                                                   {"trigger", sink.name(*remove)},
                                                   {"target", sink.name(e)},
                                                   {"row", r}});
                freeze_and_remove(t, e, std::nullopt, sink, ResolutionCause::CascadeA);
            }
        }
    }

    for (std::size_t r = 0; r < t.rows.size(); ++r) {
        for (VertexId e : {t.rows[r].node1, t.rows[r].node2}) {
            if (t.status_of(e) != EndpointStatus::Active || !t.list_of(e).empty()) continue;
            if (sink)
                sink.emit(TraceKind::Cascade, {{"type", "B"},
                                               {"trigger", freeze ? sink.name(*freeze)
                                                                  : sink.name(*remove)},
                                               {"target", sink.name(e)},
                                               {"row", r}});
            freeze_and_remove(t, std::nullopt, e, sink, ResolutionCause::Direct,
                              ResolutionCause::CascadeB);
        }
    }
}

std::vector<VertexId> local_minimization(RepresentsTable& t, const TraceSink& sink) {
    for (const auto& row : t.rows) {
        if (row.status1 != EndpointStatus::Active || row.status2 != EndpointStatus::Active)
            throw std::invalid_argument("local minimization needs a fresh table");
    }
    t.cover.clear();
    const auto active = [&](VertexId v) { return t.status_of(v) == EndpointStatus::Active; };

    // Freeze endpoints that represent a vertex outside P.
    for (std::size_t r = 0; r < t.rows.size(); ++r) {
        for (VertexId v : {t.rows[r].node1, t.rows[r].node2}) {
            if (!active(v)) continue;
            const auto& list = t.list_of(v);
            bool outside = std::any_of(list.begin(), list.end(),
                                       [&](VertexId x) { return !t.is_endpoint(x); });
            if (outside) freeze_and_remove(t, v, std::nullopt, sink, ResolutionCause::Necessary);
        }
    }

    // Top-down: an endpoint that only represents its partner, while the
    // partner represents more, is removed and the partner frozen.
    for (std::size_t r = 0; r < t.rows.size(); ++r) {
        const VertexId a = t.rows[r].node1;
        const VertexId b = t.rows[r].node2;
        if (!active(a) || !active(b)) continue;
        for (auto [u, v] : {std::pair{a, b}, std::pair{b, a}}) {
            const auto& lu = t.list_of(u);
            if (lu.size() != 1 || lu.front() != v || t.list_of(v).size() <= 1) continue;
            if (represented_count(t, u, v) != 0) continue;
            freeze_and_remove(t, v, u, sink, ResolutionCause::TerminalTopDown,
                              ResolutionCause::TerminalTopDown);
            break;
        }
    }

    // Bottom-up resolution of what remains.
    for (std::size_t r = t.rows.size(); r-- > 0;) {
        const VertexId a = t.rows[r].node1;
        const VertexId b = t.rows[r].node2;
        const EndpointStatus sa = t.rows[r].status1;
        const EndpointStatus sb = t.rows[r].status2;
        using S = EndpointStatus;

        if ((sa == S::Frozen && sb == S::Frozen) || (sa == S::Frozen && sb == S::Removed) ||
            (sa == S::Removed && sb == S::Frozen))
            continue;
        if (sa == S::Active && sb == S::Removed) {
            freeze_and_remove(t, a, std::nullopt, sink, ResolutionCause::RemainsVsRemoved);
            continue;
        }
        if (sa == S::Removed && sb == S::Active) {
            freeze_and_remove(t, b, std::nullopt, sink, ResolutionCause::RemainsVsRemoved);
            continue;
        }
        if (sa != S::Active || sb != S::Active)
            throw LocalMinimizationError(r, "endpoint statuses have no bottom-up rule");

        const auto& la = t.list_of(a);
        const auto& lb = t.list_of(b);
        if (la.size() != 1 || la.front() != b || lb.size() != 1 || lb.front() != a)
            throw LocalMinimizationError(r, "active endpoints do not represent exactly each other");

        const std::size_t countA = represented_count(t, a, b);
        const std::size_t countB = represented_count(t, b, a);
        if (countA > countB) {
            freeze_and_remove(t, a, b, sink, ResolutionCause::CountCompare,
                              ResolutionCause::CountCompare);
        } else if (countB > countA) {
            freeze_and_remove(t, b, a, sink, ResolutionCause::CountCompare,
                              ResolutionCause::CountCompare);
        } else {
            freeze_and_remove(t, a, b, sink, ResolutionCause::Tie, ResolutionCause::Tie);
        }
    }

    for (std::size_t r = 0; r < t.rows.size(); ++r) {
        if (t.rows[r].status1 == EndpointStatus::Active ||
            t.rows[r].status2 == EndpointStatus::Active)
            throw LocalMinimizationError(r, "endpoint left active after local minimization");
    }
    return t.cover;
}

}  // namespace direvc
