#pragma once

#include <cctype>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "kohnert/diagram.hpp"
#include "kohnert/errors.hpp"
#include "kohnert/poset.hpp"

namespace kohnert {

// Grid format: one line per row, top row first, the LAST line is row 1.
// 'X' marks a cell, '.' an empty position; trailing '.' may be omitted.
inline Diagram parse_grid(std::string_view text, int max_coordinate = kDefaultMaxCoordinate) {
    std::vector<std::string_view> lines;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(start, end - start);
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        lines.push_back(line);
        if (end == text.size()) break;
        start = end + 1;
    }
    while (!lines.empty() && lines.back().empty()) lines.pop_back();
    if (lines.empty()) throw parse_error("empty diagram input", 1, 1);

    std::vector<Cell> cells;
    const int nrows = static_cast<int>(lines.size());
    for (int i = 0; i < nrows; ++i) {
        const std::string_view line = lines[static_cast<std::size_t>(i)];
        const int row = nrows - i;  // last line is row 1
        for (std::size_t j = 0; j < line.size(); ++j) {
            char ch = line[j];
            if (ch == 'X')
                cells.push_back(Cell{row, static_cast<int>(j) + 1});
            else if (ch != '.' && ch != ' ')
                throw parse_error(std::string("unexpected character '") + ch +
                                      "' in grid (expected 'X' or '.')",
                                  i + 1, static_cast<int>(j) + 1);
        }
    }
    Diagram d(std::move(cells));
    check_coordinate_limit(d, max_coordinate);
    return d;
}

// Pair-list format: comma-separated "(r,c)" tokens, e.g. "(1,3),(2,1)".
inline Diagram parse_pairs(std::string_view text, int max_coordinate = kDefaultMaxCoordinate) {
    std::vector<Cell> cells;
    std::size_t i = 0;
    auto fail = [&](const std::string& msg) -> parse_error {
        return parse_error(msg, 1, static_cast<int>(i) + 1);
    };
    auto skip_ws = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    auto read_int = [&]() -> int {
        skip_ws();
        std::size_t begin = i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        if (i == begin) throw fail("expected a positive integer");
        long value = std::stol(std::string(text.substr(begin, i - begin)));
        if (value < 1 || value > 1'000'000) throw fail("coordinate out of range");
        return static_cast<int>(value);
    };

    skip_ws();
    if (i >= text.size()) throw parse_error("empty diagram input", 1, 1);
    bool first = true;
    while (true) {
        skip_ws();
        if (i >= text.size()) break;
        if (!first) {
            if (text[i] != ',') throw fail("expected ',' between cells");
            ++i;
            skip_ws();
        }
        first = false;
        if (i >= text.size() || text[i] != '(') throw fail("expected '('");
        ++i;
        int row = read_int();
        skip_ws();
        if (i >= text.size() || text[i] != ',') throw fail("expected ',' inside cell");
        ++i;
        int col = read_int();
        skip_ws();
        if (i >= text.size() || text[i] != ')') throw fail("expected ')'");
        ++i;
        cells.push_back(Cell{row, col});
    }
    if (cells.empty()) throw parse_error("empty diagram input", 1, 1);
    Diagram d(std::move(cells));
    check_coordinate_limit(d, max_coordinate);
    return d;
}

// Auto-detect: a '(' anywhere means pair-list, otherwise grid.
inline Diagram parse_diagram(std::string_view text, int max_coordinate = kDefaultMaxCoordinate) {
    if (text.find('(') != std::string_view::npos) return parse_pairs(text, max_coordinate);
    return parse_grid(text, max_coordinate);
}

inline std::string render_grid(const Diagram& d) {
    std::string out;
    const int top = d.max_row();
    const int width = d.max_col();
    for (int row = top; row >= 1; --row) {
        for (int col = 1; col <= width; ++col) out.push_back(d.contains(row, col) ? 'X' : '.');
        out.push_back('\n');
    }
    return out;
}

inline std::string render_pairs(const Diagram& d) {
    std::string out;
    for (const Cell& c : d.cells()) {
        if (!out.empty()) out += ",";
        out += "(" + std::to_string(c.row) + "," + std::to_string(c.col) + ")";
    }
    return out;
}

inline nlohmann::json to_json(const Diagram& d) {
    nlohmann::json cells = nlohmann::json::array();
    for (const Cell& c : d.cells()) cells.push_back({c.row, c.col});
    return nlohmann::json{{"cells", std::move(cells)}};
}

inline Diagram diagram_from_json(const nlohmann::json& j) {
    std::vector<Cell> cells;
    for (const auto& cell : j.at("cells"))
        cells.push_back(Cell{cell.at(0).get<int>(), cell.at(1).get<int>()});
    return Diagram(std::move(cells));
}

// DOT export of the cover DAG: one node per diagram labeled with its
// pair-list form, edges pointing from greater to lesser. When the poset is
// ranked, nodes of equal rank are grouped on the same level.
inline std::string to_dot(const KohnertPoset& p) {
    std::ostringstream out;
    out << "digraph kohnert {\n";
    out << "  rankdir=TB;\n  node [shape=box, fontname=\"monospace\"];\n";
    for (std::size_t i = 0; i < p.nodes.size(); ++i)
        out << "  n" << i << " [label=\"" << render_pairs(p.nodes[i]) << "\"];\n";
    for (std::size_t u = 0; u < p.cover_edges.size(); ++u)
        for (int v : p.cover_edges[u]) out << "  n" << u << " -> n" << v << ";\n";

    RankCertificate cert = is_ranked(p);
    if (cert.ranked && !cert.ranks.empty()) {
        long long top = *std::max_element(cert.ranks.begin(), cert.ranks.end());
        for (long long level = top; level >= 0; --level) {
            std::vector<std::size_t> ids;
            for (std::size_t i = 0; i < cert.ranks.size(); ++i)
                if (cert.ranks[i] == level) ids.push_back(i);
            if (ids.empty()) continue;
            out << "  { rank=same;";
            for (std::size_t i : ids) out << " n" << i << ";";
            out << " }\n";
        }
    }
    out << "}\n";
    return out.str();
}

}  // namespace kohnert
