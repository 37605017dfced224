#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <optional>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

namespace kohnert {

// Coordinates are 1-based; 0 is invalid everywhere. Rows count from the
// bottom, columns from the left. Cells order by (col, row): that is the
// canonical storage order inside a Diagram.
struct Cell {
    int row = 0;
    int col = 0;

    friend constexpr bool operator==(const Cell&, const Cell&) = default;
    friend constexpr auto operator<=>(const Cell& a, const Cell& b) {
        if (auto c = a.col <=> b.col; c != 0) return c;
        return a.row <=> b.row;
    }
};

// Hard bound on coordinates accepted at input boundaries. Kohnert moves only
// lower cells, so the initial bounding box bounds every diagram downstream.
inline constexpr int kDefaultMaxCoordinate = 64;

// A finite set of cells. Stored sorted by (col, row) with no duplicates;
// equality, ordering and hashing all use that canonical form. Construction
// never compacts empty columns: normalize() is a separate, explicit step.
class Diagram {
public:
    Diagram() = default;

    explicit Diagram(std::vector<Cell> cells) : cells_(std::move(cells)) {
        for (const Cell& c : cells_) {
            if (c.row < 1 || c.col < 1)
                throw std::invalid_argument("Diagram: coordinates must be >= 1");
        }
        std::sort(cells_.begin(), cells_.end());
        cells_.erase(std::unique(cells_.begin(), cells_.end()), cells_.end());
    }

    Diagram(std::initializer_list<Cell> cells) : Diagram(std::vector<Cell>(cells)) {}

    const std::vector<Cell>& cells() const noexcept { return cells_; }
    bool empty() const noexcept { return cells_.empty(); }

    bool contains(int row, int col) const noexcept {
        return std::binary_search(cells_.begin(), cells_.end(), Cell{row, col});
    }
    bool contains(Cell c) const noexcept { return contains(c.row, c.col); }

    int max_row() const noexcept {
        int r = 0;
        for (const Cell& c : cells_) r = std::max(r, c.row);
        return r;
    }

    int max_col() const noexcept {
        return cells_.empty() ? 0 : cells_.back().col;
    }

    // Columns holding a cell in `row`, ascending.
    std::vector<int> cols_in_row(int row) const {
        std::vector<int> out;
        for (const Cell& c : cells_)
            if (c.row == row) out.push_back(c.col);
        return out;
    }

    // Column of the rightmost cell in `row`, or nullopt when the row is empty.
    std::optional<int> rightmost_in_row(int row) const noexcept {
        for (auto it = cells_.rbegin(); it != cells_.rend(); ++it)
            if (it->row == row) return it->col;
        return std::nullopt;
    }

    // Occupied rows of column `col`, ascending.
    std::vector<int> rows_in_col(int col) const {
        std::vector<int> out;
        auto it = std::lower_bound(cells_.begin(), cells_.end(), Cell{0, col},
                                   [](const Cell& a, const Cell& b) { return a.col < b.col; });
        for (; it != cells_.end() && it->col == col; ++it) out.push_back(it->row);
        return out;
    }

    Diagram with_cell_moved(Cell from, Cell to) const {
        std::vector<Cell> next = cells_;
        next.erase(std::remove(next.begin(), next.end(), from), next.end());
        next.push_back(to);
        return Diagram(std::move(next));
    }

    friend bool operator==(const Diagram&, const Diagram&) = default;
    friend auto operator<=>(const Diagram& a, const Diagram& b) {
        return std::lexicographical_compare_three_way(a.cells_.begin(), a.cells_.end(),
                                                      b.cells_.begin(), b.cells_.end());
    }

private:
    std::vector<Cell> cells_;
};

// |D|, the total number of cells.
inline std::size_t size(const Diagram& d) noexcept { return d.cells().size(); }

// Sum of the row coordinates of all cells.
inline long long rowsum(const Diagram& d) noexcept {
    long long s = 0;
    for (const Cell& c : d.cells()) s += c.row;
    return s;
}

// Entry i-1 is the number of cells in column i; length = rightmost nonempty
// column (empty vector for the empty diagram).
inline std::vector<int> column_counts(const Diagram& d) {
    std::vector<int> counts(static_cast<std::size_t>(d.max_col()), 0);
    for (const Cell& c : d.cells()) ++counts[static_cast<std::size_t>(c.col - 1)];
    return counts;
}

struct MoveResult {
    bool moved = false;
    std::optional<Cell> from;
    std::optional<Cell> to;
    Diagram diagram;
};

// Kohnert move at row r: the rightmost cell of row r drops to the first
// empty position below it in its column, jumping over blockers. If the row
// is empty or that cell has nothing empty below it, the diagram is fixed
// (moved = false); a trivial move is a valid result, not an error.
inline MoveResult kohnert_move(const Diagram& d, int row) {
    if (row < 1) throw std::invalid_argument("kohnert_move: row must be >= 1");
    MoveResult result;
    result.diagram = d;

    std::optional<int> col = d.rightmost_in_row(row);
    if (!col) return result;

    int target = row - 1;
    while (target >= 1 && d.contains(target, *col)) --target;
    if (target < 1) return result;

    result.moved = true;
    result.from = Cell{row, *col};
    result.to = Cell{target, *col};
    result.diagram = d.with_cell_moved(*result.from, *result.to);
    return result;
}

// Left fold of kohnert_move over `rows`; trivial moves are kept as no-ops.
inline Diagram apply_sequence(const Diagram& d, std::span<const int> rows) {
    Diagram cur = d;
    for (int r : rows) cur = kohnert_move(cur, r).diagram;
    return cur;
}

inline Diagram apply_sequence(const Diagram& d, std::initializer_list<int> rows) {
    return apply_sequence(d, std::span<const int>(rows.begin(), rows.size()));
}

// Compact columns leftwards so that no empty column precedes a nonempty one.
// Relative order of nonempty columns is preserved; rows are untouched.
inline Diagram normalize(const Diagram& d) {
    std::vector<int> remap(static_cast<std::size_t>(d.max_col()) + 1, 0);
    for (const Cell& c : d.cells()) remap[static_cast<std::size_t>(c.col)] = 1;
    int next = 0;
    for (std::size_t i = 1; i < remap.size(); ++i)
        if (remap[i]) remap[i] = ++next;
    std::vector<Cell> cells;
    cells.reserve(d.cells().size());
    for (const Cell& c : d.cells())
        cells.push_back(Cell{c.row, remap[static_cast<std::size_t>(c.col)]});
    return Diagram(std::move(cells));
}

inline bool is_normalized(const Diagram& d) {
    std::vector<int> counts = column_counts(d);
    return std::find(counts.begin(), counts.end(), 0) == counts.end();
}

// Enforce the coordinate cap at an input boundary.
inline void check_coordinate_limit(const Diagram& d, int max_coordinate = kDefaultMaxCoordinate) {
    if (d.max_row() > max_coordinate || d.max_col() > max_coordinate)
        throw std::invalid_argument("diagram exceeds the coordinate limit of " +
                                    std::to_string(max_coordinate));
}

}  // namespace kohnert

template <>
struct std::hash<kohnert::Diagram> {
    std::size_t operator()(const kohnert::Diagram& d) const noexcept {
        std::uint64_t h = 1469598103934665603ull;
        for (const kohnert::Cell& c : d.cells()) {
            h ^= static_cast<std::uint64_t>(c.row) | (static_cast<std::uint64_t>(c.col) << 32);
            h *= 1099511628211ull;
        }
        return static_cast<std::size_t>(h);
    }
};
