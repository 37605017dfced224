#pragma once

#include <optional>
#include <string>

#include "kohnert/checkered.hpp"
#include "kohnert/key.hpp"
#include "kohnert/one_per_column.hpp"
#include "kohnert/report.hpp"
#include "kohnert/two_row.hpp"
#include "kohnert/verify.hpp"

namespace kohnert {

struct FamilyMatch {
    Family family;
    int n = 0;        // checkered board size
    int variant = 0;  // checkered variant
};

inline const char* to_string(Family f) {
    switch (f) {
        case Family::OnePerColumn: return "one-per-column";
        case Family::TwoRow: return "two-row";
        case Family::Key: return "key";
        case Family::Checkered: return "checkered";
    }
    return "?";
}

// Dispatch order: one-per-column, two-row, key, checkered; first match wins.
// Expects a normalized diagram.
inline std::optional<FamilyMatch> detect_family(const Diagram& d) {
    if (matches_family(d, Family::OnePerColumn)) return FamilyMatch{Family::OnePerColumn};
    if (matches_family(d, Family::TwoRow)) return FamilyMatch{Family::TwoRow};
    if (matches_family(d, Family::Key)) return FamilyMatch{Family::Key};
    if (matches_family(d, Family::Checkered)) {
        const int n = std::max(d.max_row(), d.max_col());
        const int variant = d == checkered(n, 1) ? 1 : 2;
        return FamilyMatch{Family::Checkered, n, variant};
    }
    return std::nullopt;
}

inline Composition row_counts_composition(const Diagram& d) {
    std::vector<int> counts(static_cast<std::size_t>(d.max_row()), 0);
    for (const Cell& c : d.cells()) ++counts[static_cast<std::size_t>(c.row - 1)];
    return Composition(std::move(counts));
}

inline AnalysisReport family_report(const Diagram& d, const FamilyMatch& match) {
    switch (match.family) {
        case Family::OnePerColumn:
            return one_per_column_report(d);
        case Family::TwoRow:
            return two_row_report(d);
        case Family::Key:
            if (!matches_family(d, Family::Key))
                throw std::invalid_argument("family_report: rows are not left-justified");
            return key_report(row_counts_composition(d));
        case Family::Checkered:
            if (d != checkered(match.n, match.variant))
                throw std::invalid_argument("family_report: not the claimed checkered board");
            return checkered_report(match.n, match.variant);
    }
    throw std::logic_error("family_report: unreachable");
}

}  // namespace kohnert
