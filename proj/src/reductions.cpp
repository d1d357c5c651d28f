#include "direvc/reductions.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>

namespace direvc {

std::vector<int> DiReInstance::diversity_bounds() const {
    std::vector<int> out;
    out.reserve(groups.size());
    for (const auto& g : groups) out.push_back(g.empty() ? 0 : 1);
    return out;
}

std::vector<int> DiReInstance::representation_bounds() const {
    std::vector<int> out;
    out.reserve(populations.size());
    for (const auto& p : populations) out.push_back(p.approves.empty() ? 0 : 1);
    return out;
}

void DiReInstance::validate() const {
    std::set<std::string> known(candidates.begin(), candidates.end());
    if (known.size() != candidates.size()) throw std::invalid_argument("duplicate candidate name");
    auto check = [&](const std::vector<std::string>& set, const char* what) {
        if (set.size() > 2) throw std::invalid_argument(std::string(what) + " has more than two candidates");
        for (const auto& c : set)
            if (!known.count(c))
                throw std::invalid_argument(std::string(what) + " names unknown candidate '" + c + "'");
    };
    for (const auto& g : groups) check(g, "group");
    for (const auto& p : populations) check(p.approves, "approval set");
}

nlohmann::json DiReInstance::to_json() const {
    nlohmann::json pops = nlohmann::json::array();
    for (const auto& p : populations) pops.push_back({{"approves", p.approves}});
    return {{"candidates", candidates}, {"groups", groups}, {"populations", pops}, {"k", k}};
}

DiReInstance DiReInstance::from_json(const nlohmann::json& j) {
    DiReInstance d;
    d.candidates = j.at("candidates").get<std::vector<std::string>>();
    d.groups = j.value("groups", std::vector<std::vector<std::string>>{});
    if (j.contains("populations")) {
        for (const auto& p : j.at("populations"))
            d.populations.push_back({p.at("approves").get<std::vector<std::string>>()});
    }
    d.k = j.at("k").get<std::size_t>();
    d.validate();
    return d;
}

DiReInstance vc_to_dire(const Graph& g, std::size_t k) {
    DiReInstance d;
    d.candidates = g.names();
    for (const Edge& e : g.edges()) {
        d.groups.push_back({g.name(e.u), g.name(e.v)});
        d.populations.push_back({{g.name(e.u), g.name(e.v)}});
    }
    d.k = k;
    return d;
}

VcInstance dire_to_vc(const DiReInstance& d) {
    d.validate();
    VcInstance out;
    out.graph.names = d.candidates;
    std::map<std::string, std::size_t> index;
    for (std::size_t i = 0; i < d.candidates.size(); ++i) index[d.candidates[i]] = i;
    auto add = [&](const std::vector<std::string>& set) {
        if (set.size() == 2) out.graph.edges.emplace_back(index.at(set[0]), index.at(set[1]));
        if (set.size() == 1) out.graph.edges.emplace_back(index.at(set[0]), index.at(set[0]));
    };
    for (const auto& g : d.groups) add(g);
    for (const auto& p : d.populations) add(p.approves);
    out.k = d.k;
    return out;
}

SimpleConnectedInstance to_simple_connected(const RawMultigraph& raw, std::size_t k) {
    SimpleConnectedInstance out;
    out.originalVertices = raw.names;
    out.kPrime = k + 1;
    std::set<std::string> taken(raw.names.begin(), raw.names.end());
    std::set<std::pair<std::string, std::string>> edges;
    std::map<std::string, std::size_t> nextOrdinal;

    for (const auto& [a, b] : raw.edges) {
        const std::string& na = raw.names.at(a);
        const std::string& nb = raw.names.at(b);
        if (a == b) {
            std::size_t& ordinal = nextOrdinal[na];
            std::string dummy = "d__" + na + "_" + std::to_string(ordinal);
            while (taken.count(dummy)) {
                out.report.push_back("name collision on " + dummy);
                dummy = "d__" + na + "_" + std::to_string(++ordinal);
            }
            ++ordinal;
            taken.insert(dummy);
            out.loopDummies.push_back(dummy);
            edges.emplace(std::min(na, dummy), std::max(na, dummy));
            out.report.push_back("loop at " + na + " replaced by edge to " + dummy);
            continue;
        }
        if (!edges.emplace(std::min(na, nb), std::max(na, nb)).second)
            out.report.push_back("parallel edge " + na + " " + nb + " collapsed");
    }

    out.hub = "u__hub";
    for (std::size_t suffix = 1; taken.count(out.hub); ++suffix) {
        out.report.push_back("name collision on " + out.hub);
        out.hub = "u__hub_" + std::to_string(suffix);
    }
    std::vector<std::string> names = raw.names;
    names.insert(names.end(), out.loopDummies.begin(), out.loopDummies.end());
    std::vector<std::pair<std::string, std::string>> edgeList(edges.begin(), edges.end());
    for (const auto& v : names) edgeList.emplace_back(out.hub, v);
    names.push_back(out.hub);
    out.graph = Graph::from_named_edges(std::move(names), edgeList);
    return out;
}

Committee dire_feasible_bruteforce(const DiReInstance& d) {
    d.validate();
    std::vector<std::string> sorted = d.candidates;
    std::sort(sorted.begin(), sorted.end());
    const std::size_t n = sorted.size();
    if (n > kDiReBruteForceLimit)
        throw std::invalid_argument("dire_feasible_bruteforce: too many candidates");

    auto index = [&](const std::string& c) {
        return static_cast<std::size_t>(std::lower_bound(sorted.begin(), sorted.end(), c) -
                                        sorted.begin());
    };
    using Mask = std::uint32_t;
    std::vector<Mask> constraints;
    auto add = [&](const std::vector<std::string>& set) {
        Mask m = 0;
        for (const auto& c : set) m |= Mask{1} << index(c);
        if (m) constraints.push_back(m);
    };
    for (const auto& g : d.groups) add(g);
    for (const auto& p : d.populations) add(p.approves);

    auto satisfied = [&](Mask w) {
        return std::all_of(constraints.begin(), constraints.end(),
                           [&](Mask c) { return (c & w) != 0; });
    };

    // Combinations of each size in lexicographic order of candidate names.
    std::vector<std::size_t> pick;
    for (std::size_t size = 0; size <= std::min(d.k, n); ++size) {
        pick.resize(size);
        for (std::size_t i = 0; i < size; ++i) pick[i] = i;
        while (true) {
            Mask w = 0;
            for (std::size_t i : pick) w |= Mask{1} << i;
            if (satisfied(w)) {
                Committee c{true, {}};
                for (std::size_t i : pick) c.members.push_back(sorted[i]);
                return c;
            }
            std::size_t i = size;
            while (i > 0 && pick[i - 1] == n - size + i - 1) --i;
            if (i == 0) break;
            ++pick[i - 1];
            for (std::size_t j = i; j < size; ++j) pick[j] = pick[j - 1] + 1;
        }
    }
    return {};
}

}  // namespace direvc
