#pragma once

#include <json.hpp>

#include "kohnert/io.hpp"
#include "kohnert/obstruction.hpp"
#include "kohnert/polynomial.hpp"
#include "kohnert/report.hpp"
#include "kohnert/verify.hpp"

namespace kohnert {

inline nlohmann::json to_json(const AnalysisReport& r) {
    nlohmann::json j{{"method", r.method},
                     {"min_count", r.min_count},
                     {"bounded", r.bounded},
                     {"ranked", r.ranked},
                     {"b", r.b_value}};
    if (r.node_count) j["node_count"] = *r.node_count;
    if (!r.rank_function.empty()) j["rank_function"] = r.rank_function;
    nlohmann::json mins = nlohmann::json::array();
    for (const Diagram& d : r.minimal_sample) mins.push_back(to_json(d));
    j["minimals"] = std::move(mins);
    if (r.rank_conflict_edge)
        j["rank_conflict"] = nlohmann::json{{"upper", to_json(r.rank_conflict_edge->first)},
                                            {"lower", to_json(r.rank_conflict_edge->second)}};
    if (!r.notes.empty()) j["notes"] = r.notes;
    return j;
}

inline nlohmann::json to_json(const ObstructionWitness& w) {
    return nlohmann::json{{"kind", to_string(w.kind)},
                          {"params", w.params},
                          {"diagram", to_json(w.diagram)},
                          {"diagram_pairs", render_pairs(w.diagram)}};
}

inline nlohmann::json to_json(const Polynomial& p) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [mono, coeff] : p.terms)
        terms.push_back({{"exponents", mono.exponents}, {"coefficient", coeff}});
    return nlohmann::json{{"terms", std::move(terms)}};
}

inline nlohmann::json to_json(const VerifyOutcome& o) {
    nlohmann::json failures = nlohmann::json::array();
    for (const VerifyFailure& f : o.failures)
        failures.push_back(
            {{"instance", f.instance}, {"expected", f.expected}, {"actual", f.actual}});
    nlohmann::json j{{"claim", o.claim_id},
                     {"instances_checked", o.instances_checked},
                     {"passed", o.passed()},
                     {"failures", std::move(failures)}};
    if (!o.gap_list.empty()) j["gaps"] = o.gap_list;
    return j;
}

// Closure listing: nodes in deterministic order plus both edge sets.
inline nlohmann::json to_json(const KohnertPoset& p) {
    nlohmann::json nodes = nlohmann::json::array();
    for (const Diagram& d : p.nodes) nodes.push_back(to_json(d));
    auto edges = [](const AdjacencyList& adj) {
        nlohmann::json out = nlohmann::json::array();
        for (std::size_t u = 0; u < adj.size(); ++u)
            for (int v : adj[u]) out.push_back({static_cast<int>(u), v});
        return out;
    };
    return nlohmann::json{{"node_count", p.nodes.size()},
                          {"root", p.root},
                          {"nodes", std::move(nodes)},
                          {"move_edges", edges(p.move_edges)},
                          {"cover_edges", edges(p.cover_edges)},
                          {"minimals", p.minimals}};
}

}  // namespace kohnert
