#pragma once

#include <stdexcept>

#include "kohnert/diagram.hpp"
#include "kohnert/report.hpp"

namespace kohnert {

inline bool is_one_per_column(const Diagram& d) {
    for (int count : column_counts(d))
        if (count > 1) return false;
    return true;
}

// Closed-form analysis for diagrams with at most one cell per column: the
// poset is bounded with unique minimal {(1,1),...,(1,m)} (in normalized
// coordinates) and ranked by rowsum(D) - m. Expects a normalized diagram.
inline AnalysisReport one_per_column_report(const Diagram& d) {
    if (!is_one_per_column(normalize(d)))
        throw std::invalid_argument("one_per_column_report: diagram has a column with 2+ cells");
    const int m = static_cast<int>(size(d));

    AnalysisReport r;
    r.method = "one-per-column";
    r.min_count = 1;
    r.bounded = true;
    r.ranked = true;
    r.b_value = m;
    r.rank_function = "rowsum(D) - b";
    std::vector<Cell> bottom;
    for (int j = 1; j <= m; ++j) bottom.push_back(Cell{1, j});
    r.minimal_sample.push_back(Diagram(std::move(bottom)));
    return r;
}

}  // namespace kohnert
