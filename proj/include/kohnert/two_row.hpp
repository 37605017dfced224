#pragma once

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "kohnert/diagram.hpp"
#include "kohnert/report.hpp"

namespace kohnert {

// The Col(.) partition of a two-row diagram's nonempty columns: columns with
// a block (cells in both rows), columns with a cell in one row only, and the
// split of the latter by position relative to the rightmost block column.
// With no block, the left/right split degenerates: col_left_* is empty and
// col_right_* carries every single-cell column.
struct TwoRowProfile {
    int r1 = 0;  // lower nonempty row
    int r2 = 0;  // upper nonempty row
    std::vector<int> cols_r1, cols_r2;
    std::vector<int> col_both, col_only_r1, col_only_r2;
    std::vector<int> col_left_r1, col_left_r2, col_right_r1, col_right_r2;
};

inline TwoRowProfile two_row_profile(const Diagram& d) {
    std::vector<int> rows;
    for (const Cell& c : d.cells())
        if (std::find(rows.begin(), rows.end(), c.row) == rows.end()) rows.push_back(c.row);
    if (rows.size() != 2)
        throw std::invalid_argument("two_row_profile: diagram must have exactly two nonempty rows");
    std::sort(rows.begin(), rows.end());

    TwoRowProfile p;
    p.r1 = rows[0];
    p.r2 = rows[1];
    p.cols_r1 = d.cols_in_row(p.r1);
    p.cols_r2 = d.cols_in_row(p.r2);
    std::set_intersection(p.cols_r1.begin(), p.cols_r1.end(), p.cols_r2.begin(), p.cols_r2.end(),
                          std::back_inserter(p.col_both));
    std::set_difference(p.cols_r1.begin(), p.cols_r1.end(), p.col_both.begin(), p.col_both.end(),
                        std::back_inserter(p.col_only_r1));
    std::set_difference(p.cols_r2.begin(), p.cols_r2.end(), p.col_both.begin(), p.col_both.end(),
                        std::back_inserter(p.col_only_r2));

    if (p.col_both.empty()) {
        p.col_right_r1 = p.col_only_r1;
        p.col_right_r2 = p.col_only_r2;
    } else {
        const int pivot = p.col_both.back();
        auto split = [pivot](const std::vector<int>& cols, std::vector<int>& left,
                             std::vector<int>& right) {
            for (int c : cols) (c < pivot ? left : right).push_back(c);
        };
        split(p.col_only_r1, p.col_left_r1, p.col_right_r1);
        split(p.col_only_r2, p.col_left_r2, p.col_right_r2);
    }
    return p;
}

// |Min(D0)| = |Col<-(D0;r1)| + 1 when r1 > 1, and 1 when r1 = 1.
inline std::size_t two_row_min_count(const Diagram& d) {
    TwoRowProfile p = two_row_profile(d);
    return p.r1 > 1 ? p.col_left_r1.size() + 1 : 1;
}

// Structural minimality test for d inside KD(d0) (membership is the
// caller's obligation): (a) all cells in rows 1-2, (b) columns right of the
// rightmost block sit in row 1, (c) single-cell columns left of it that came
// from row r2 sit in row 2, (d) the rows of the Col<-(d0;r1) cells weakly
// decrease from left to right.
inline bool two_row_is_minimal(const Diagram& d0, const Diagram& d) {
    TwoRowProfile p = two_row_profile(d0);
    for (const Cell& c : d.cells())
        if (c.row > 2) return false;
    for (int col : p.col_right_r1)
        if (d.contains(2, col)) return false;
    for (int col : p.col_right_r2)
        if (d.contains(2, col)) return false;
    for (int col : p.col_left_r2)
        if (d.contains(1, col)) return false;
    int prev = 2;
    for (int col : p.col_left_r1) {
        int row = d.contains(2, col) ? 2 : 1;
        if (row > prev) return false;
        prev = row;
    }
    return true;
}

// b(D0) per the closed formula: single-row columns and everything right of
// the last block land in row 1, Col<-(r2) cells land in row 2 when a block
// exists, and each block contributes rows 1+2.
inline long long two_row_b(const Diagram& d) {
    TwoRowProfile p = two_row_profile(d);
    const long long delta = p.col_both.empty() ? 0 : 1;
    return static_cast<long long>(p.col_only_r1.size()) +
           (1 + delta) * static_cast<long long>(p.col_left_r2.size()) +
           static_cast<long long>(p.col_right_r2.size()) +
           3 * static_cast<long long>(p.col_both.size());
}

// The least-rowsum minimal element (all Col<-(r1) cells in row 1).
inline Diagram two_row_least_minimal(const TwoRowProfile& p) {
    std::vector<Cell> cells;
    for (int c : p.col_both) {
        cells.push_back(Cell{1, c});
        cells.push_back(Cell{2, c});
    }
    for (int c : p.col_left_r2) cells.push_back(Cell{2, c});
    for (int c : p.col_left_r1) cells.push_back(Cell{1, c});
    for (int c : p.col_right_r1) cells.push_back(Cell{1, c});
    for (int c : p.col_right_r2) cells.push_back(Cell{1, c});
    return Diagram(std::move(cells));
}

// Closed-form two-row analysis. Bounded iff r1 = 1 or no single-cell column
// precedes the last block. Ranked iff r1 = 1, or there is no block at all
// (then each column holds one cell and the one-per-column result applies),
// or there is a single block with nothing to its right.
inline AnalysisReport two_row_report(const Diagram& d) {
    TwoRowProfile p = two_row_profile(d);
    AnalysisReport r;
    r.method = "two-row";
    r.min_count = two_row_min_count(d);
    r.bounded = p.r1 == 1 || p.col_left_r1.empty();
    r.ranked = p.r1 == 1 || p.col_both.empty() ||
               (p.col_both.size() == 1 && p.col_right_r1.empty() && p.col_right_r2.empty());
    r.b_value = two_row_b(d);
    if (r.ranked) r.rank_function = "rowsum(D) - b";
    r.minimal_sample.push_back(two_row_least_minimal(p));
    return r;
}

}  // namespace kohnert
