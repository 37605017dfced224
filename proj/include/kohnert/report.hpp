#pragma once

#include <optional>
#include <string>
#include <vector>

#include "kohnert/poset.hpp"

namespace kohnert {

// Bounded/ranked verdicts with certificates. Closed-form family analyzers
// leave node_count and the per-node rank certificate empty (they never
// enumerate KD(D0)) and describe the rank function textually instead.
struct AnalysisReport {
    std::optional<std::size_t> node_count;
    std::size_t min_count = 0;
    bool bounded = false;
    bool ranked = false;
    long long b_value = 0;
    std::optional<RankCertificate> rank_certificate;
    std::optional<std::pair<Diagram, Diagram>> rank_conflict_edge;  // offending cover edge
    std::vector<Diagram> minimal_sample;  // known minimal elements (least-rowsum one first)
    std::string rank_function;            // e.g. "rowsum(D) - b", when ranked by a formula
    std::string method;                   // which analyzer produced this
    std::vector<std::string> notes;
};

// Exact analysis by enumeration of KD(d0).
inline AnalysisReport brute_force_report(const KohnertPoset& p) {
    AnalysisReport r;
    r.method = "brute-force";
    r.node_count = p.nodes.size();
    r.min_count = p.minimals.size();
    r.bounded = is_bounded(p);
    r.b_value = b_of(p);
    RankCertificate cert = is_ranked(p);
    r.ranked = cert.ranked;
    if (cert.conflict)
        r.rank_conflict_edge = {p.node(cert.conflict->upper), p.node(cert.conflict->lower)};
    r.rank_certificate = std::move(cert);
    std::vector<Diagram> mins = minimal_elements(p);
    std::sort(mins.begin(), mins.end(), [](const Diagram& a, const Diagram& b) {
        auto ra = rowsum(a), rb = rowsum(b);
        return ra != rb ? ra < rb : a < b;
    });
    r.minimal_sample = std::move(mins);
    return r;
}

inline AnalysisReport brute_force_report(const Diagram& d0, const Limits& limits = {}) {
    return brute_force_report(kd_closure(d0, limits));
}

}  // namespace kohnert
