#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "kohnert/diagram.hpp"
#include "kohnert/key.hpp"
#include "kohnert/report.hpp"

namespace kohnert {

// Chessboard diagrams on an n x n board. Variant 1 has (1,1) occupied,
// variant 2 the complementary coloring (empty for n = 1).
inline Diagram checkered(int n, int variant) {
    if (n < 1) throw std::invalid_argument("checkered: n must be >= 1");
    if (variant != 1 && variant != 2) throw std::invalid_argument("checkered: variant is 1 or 2");
    const int up = (n + 1) / 2;  // ceil(n/2)
    const int down = n / 2;      // floor(n/2)
    std::vector<Cell> cells;
    if (variant == 1) {
        for (int i = 1; i <= up; ++i)
            for (int j = 1; j <= up; ++j) cells.push_back(Cell{2 * i - 1, 2 * j - 1});
        for (int i = 1; i <= down; ++i)
            for (int j = 1; j <= down; ++j) cells.push_back(Cell{2 * i, 2 * j});
    } else {
        for (int i = 1; i <= up; ++i)
            for (int j = 1; j <= down; ++j) cells.push_back(Cell{2 * i - 1, 2 * j});
        for (int i = 1; i <= down; ++i)
            for (int j = 1; j <= up; ++j) cells.push_back(Cell{2 * i, 2 * j - 1});
    }
    return Diagram(std::move(cells));
}

// The key diagram of (0, m, ..., m): an m x m square of cells in rows
// 2..m+1, columns 1..m.
inline Diagram raised_square(int m) {
    if (m < 0) throw std::invalid_argument("raised_square: m must be >= 0");
    std::vector<int> entries(static_cast<std::size_t>(m) + 1, m);
    entries[0] = 0;
    return key_diagram(Composition(std::move(entries)));
}

// For a diagram with m columns of m cells each inside rows 1..m+1, every
// column has a unique empty row there; er(T) lists those rows left to right.
inline std::vector<int> er_sequence(const Diagram& t, int m) {
    if (m < 1) throw std::invalid_argument("er_sequence: m must be >= 1");
    if (static_cast<int>(size(t)) != m * m || t.max_row() > m + 1 || t.max_col() > m)
        throw std::invalid_argument("er_sequence: diagram is not m columns of m cells in rows 1..m+1");
    std::vector<int> er;
    er.reserve(static_cast<std::size_t>(m));
    for (int col = 1; col <= m; ++col) {
        std::vector<int> rows = t.rows_in_col(col);
        if (static_cast<int>(rows.size()) != m)
            throw std::invalid_argument("er_sequence: column " + std::to_string(col) +
                                        " does not hold exactly m cells");
        int empty_row = (m + 1) * (m + 2) / 2;
        for (int r : rows) empty_row -= r;
        er.push_back(empty_row);
    }
    return er;
}

// Membership in KD of the raised square: er(T) weakly increasing.
inline bool is_in_kd_dm(const Diagram& t, int m) {
    std::vector<int> er = er_sequence(t, m);
    return std::is_sorted(er.begin(), er.end());
}

// Rebuild the unique diagram with a given empty-row sequence.
inline Diagram diagram_from_er(const std::vector<int>& er) {
    const int m = static_cast<int>(er.size());
    std::vector<Cell> cells;
    for (int col = 1; col <= m; ++col)
        for (int r = 1; r <= m + 1; ++r)
            if (r != er[static_cast<std::size_t>(col - 1)]) cells.push_back(Cell{r, col});
    return Diagram(std::move(cells));
}

// |KD(raised_square(m))| = C(2m, m).
inline std::uint64_t kd_dm_count(int m) {
    if (m < 0) throw std::invalid_argument("kd_dm_count: m must be >= 0");
    if (m > 31) throw std::overflow_error("kd_dm_count: C(2m,m) overflows 64 bits");
    std::uint64_t result = 1;
    for (int k = 1; k <= m; ++k) result = result * static_cast<std::uint64_t>(m + k) /
                                          static_cast<std::uint64_t>(k);
    return result;
}

// phi: Min(Ch_n) -> KD(D_m) for odd n, m = n/2 rounded down. Deletes the
// (m+1)-cell columns (and column n for variant 2) and left-justifies what
// remains: variant 1 keeps the even columns, variant 2 the odd ones below n.
inline Diagram checkered_phi(const Diagram& t, int n, int variant) {
    if (n < 1 || n % 2 == 0) throw std::invalid_argument("checkered_phi: n must be odd");
    if (variant != 1 && variant != 2) throw std::invalid_argument("checkered_phi: variant is 1 or 2");
    const int m = n / 2;
    std::vector<Cell> cells;
    for (int i = 1; i <= m; ++i) {
        const int source = variant == 1 ? 2 * i : 2 * i - 1;
        for (int r : t.rows_in_col(source)) cells.push_back(Cell{r, i});
    }
    Diagram image(std::move(cells));
    if (m > 0 && !is_in_kd_dm(image, m))
        throw std::invalid_argument("checkered_phi: input is not a minimal checkered diagram");
    return image;
}

// phi^{-1}: KD(D_m) -> Min(Ch_n). Inserts a full (m+1)-cell bottom-justified
// column beside each kept column (plus the m-cell column n for variant 2).
inline Diagram checkered_phi_inv(const Diagram& d, int n, int variant) {
    if (n < 1 || n % 2 == 0) throw std::invalid_argument("checkered_phi_inv: n must be odd");
    if (variant != 1 && variant != 2)
        throw std::invalid_argument("checkered_phi_inv: variant is 1 or 2");
    const int m = n / 2;
    if (m > 0 && !is_in_kd_dm(d, m))
        throw std::invalid_argument("checkered_phi_inv: input is not in KD(D_m)");
    std::vector<Cell> cells;
    if (variant == 1) {
        for (int i = 1; i <= m + 1; ++i)
            for (int r = 1; r <= m + 1; ++r) cells.push_back(Cell{r, 2 * i - 1});
        for (const Cell& c : d.cells()) cells.push_back(Cell{c.row, 2 * c.col});
    } else {
        for (int i = 1; i <= m; ++i)
            for (int r = 1; r <= m + 1; ++r) cells.push_back(Cell{r, 2 * i});
        for (int r = 1; r <= m; ++r) cells.push_back(Cell{r, n});
        for (const Cell& c : d.cells()) cells.push_back(Cell{c.row, 2 * c.col - 1});
    }
    return Diagram(std::move(cells));
}

// Bottom-justify every column; the least-rowsum minimal element for both
// parities (even n: the unique minimal; odd n: the image of the
// bottom-justified member of KD(D_m) under phi^{-1}).
inline Diagram bottom_justified(const Diagram& d) {
    std::vector<Cell> cells;
    std::vector<int> counts = column_counts(d);
    for (std::size_t c = 0; c < counts.size(); ++c)
        for (int r = 1; r <= counts[c]; ++r) cells.push_back(Cell{r, static_cast<int>(c) + 1});
    return Diagram(std::move(cells));
}

// Closed-form checkered verdicts: ranked iff n <= 3; one minimal for even n,
// C(2m, m) minimals for odd n; bounded iff n is even or the one-cell n = 1
// board. The empty n = 1 variant-2 board gets the KD(empty) = {empty}
// convention (bounded, ranked) and is flagged in the notes.
inline AnalysisReport checkered_report(int n, int variant) {
    Diagram d0 = checkered(n, variant);
    AnalysisReport r;
    r.method = "checkered";
    if (d0.empty()) {
        r.min_count = 1;
        r.bounded = true;
        r.ranked = true;
        r.b_value = 0;
        r.minimal_sample.push_back(d0);
        r.notes.push_back("empty board: KD(empty) = {empty} by convention, "
                          "excluded from the checkered theorem cross-checks");
        return r;
    }
    const int m = n / 2;
    r.min_count = n % 2 == 0 ? 1 : static_cast<std::size_t>(kd_dm_count(m));
    r.bounded = r.min_count == 1;
    r.ranked = n <= 3;
    r.b_value = rowsum(bottom_justified(d0));
    if (r.ranked) r.rank_function = "rowsum(D) - b";
    r.minimal_sample.push_back(bottom_justified(d0));
    return r;
}

// Property (*): for every cell of column i <= n-2, counted j-th from the
// bottom, column i+2 holds at least j cells weakly below that cell's row.
inline bool property_star_holds(const Diagram& t, int n) {
    if (n < 1 || n % 2 == 0)
        throw std::invalid_argument("property_star_holds: n must be odd");
    for (int i = 1; i + 2 <= n; ++i) {
        std::vector<int> rows = t.rows_in_col(i);
        std::vector<int> right = t.rows_in_col(i + 2);
        for (std::size_t j = 0; j < rows.size(); ++j) {
            std::size_t below = 0;
            for (int r : right)
                if (r <= rows[j]) ++below;
            if (below < j + 1) return false;
        }
    }
    return true;
}

}  // namespace kohnert
