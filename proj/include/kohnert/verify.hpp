#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "kohnert/checkered.hpp"
#include "kohnert/diagram.hpp"
#include "kohnert/key.hpp"
#include "kohnert/obstruction.hpp"
#include "kohnert/one_per_column.hpp"
#include "kohnert/polynomial.hpp"
#include "kohnert/poset.hpp"
#include "kohnert/two_row.hpp"

namespace kohnert {

enum class Family { OnePerColumn, TwoRow, Key, Checkered };

// Bounds for a brute-force sweep. For grid corpora, max_rows x max_cols is
// the bounding box; for two-row sweeps max_rows bounds r2 and max_cols the
// columns; for composition sweeps max_rows bounds the length and max_cols
// the entries; for checkered sweeps max_rows bounds n.
struct CorpusSpec {
    int max_rows = 3;
    int max_cols = 4;
    int max_cells = 64;
    std::optional<Family> family;
    bool allow_large = false;  // lift the rows*cols <= 20 enumeration guard
};

struct VerifyFailure {
    std::string instance;
    std::string expected;
    std::string actual;
};

struct VerifyOutcome {
    std::string claim_id;
    std::size_t instances_checked = 0;
    std::vector<VerifyFailure> failures;
    std::vector<std::string> gap_list;  // obstruction-gap probe only

    bool passed() const { return failures.empty(); }
};

inline bool matches_family(const Diagram& d, Family f) {
    switch (f) {
        case Family::OnePerColumn:
            return is_one_per_column(d);
        case Family::TwoRow: {
            std::set<int> rows;
            for (const Cell& c : d.cells()) rows.insert(c.row);
            return rows.size() == 2;
        }
        case Family::Key: {
            for (const Cell& c : d.cells())
                if (c.col > 1 && !d.contains(c.row, c.col - 1)) return false;
            return true;
        }
        case Family::Checkered: {
            const int n = std::max(d.max_row(), d.max_col());
            if (n < 1) return false;
            return d == checkered(n, 1) || d == checkered(n, 2);
        }
    }
    return false;
}

// Every normalized diagram inside the max_rows x max_cols box with at most
// max_cells cells, deduplicated and sorted canonically.
inline std::vector<Diagram> enumerate_corpus(const CorpusSpec& spec) {
    if (spec.max_rows < 1 || spec.max_cols < 1)
        throw std::invalid_argument("enumerate_corpus: bounds must be positive");
    const int bits = spec.max_rows * spec.max_cols;
    if (bits > 20 && !spec.allow_large)
        throw resource_limit_error("enumerate_corpus: grid of " + std::to_string(bits) +
                                   " cells exceeds the 20-cell guard");

    std::set<Diagram> seen;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << bits); ++mask) {
        if (std::popcount(mask) > spec.max_cells) continue;
        std::vector<Cell> cells;
        for (int b = 0; b < bits; ++b)
            if (mask >> b & 1) cells.push_back(Cell{b / spec.max_cols + 1, b % spec.max_cols + 1});
        Diagram d = normalize(Diagram(std::move(cells)));
        if (spec.family && !matches_family(d, *spec.family)) continue;
        seen.insert(std::move(d));
    }
    return {seen.begin(), seen.end()};
}

// Every two-row diagram with lower row r1 < upper row r2 <= max_r2 and
// contiguous nonempty columns 1..k, k <= max_cols.
inline std::vector<Diagram> enumerate_two_row(int max_r2, int max_cols) {
    std::vector<Diagram> out;
    for (int r2 = 2; r2 <= max_r2; ++r2)
        for (int r1 = 1; r1 < r2; ++r1)
            for (int k = 1; k <= max_cols; ++k) {
                std::vector<int> state(static_cast<std::size_t>(k), 0);  // 0:r1, 1:r2, 2:both
                while (true) {
                    bool has_r1 = false, has_r2 = false;
                    for (int s : state) {
                        has_r1 |= s != 1;
                        has_r2 |= s != 0;
                    }
                    if (has_r1 && has_r2) {
                        std::vector<Cell> cells;
                        for (int c = 0; c < k; ++c) {
                            if (state[static_cast<std::size_t>(c)] != 1)
                                cells.push_back(Cell{r1, c + 1});
                            if (state[static_cast<std::size_t>(c)] != 0)
                                cells.push_back(Cell{r2, c + 1});
                        }
                        out.push_back(Diagram(std::move(cells)));
                    }
                    int pos = 0;
                    while (pos < k && state[static_cast<std::size_t>(pos)] == 2) {
                        state[static_cast<std::size_t>(pos)] = 0;
                        ++pos;
                    }
                    if (pos == k) break;
                    ++state[static_cast<std::size_t>(pos)];
                }
            }
    return out;
}

// All (max_entry+1)^length weak compositions of the given length.
inline std::vector<Composition> enumerate_compositions(int max_entry, int length) {
    std::vector<Composition> out;
    std::vector<int> v(static_cast<std::size_t>(length), 0);
    while (true) {
        out.push_back(Composition(v));
        int pos = 0;
        while (pos < length && v[static_cast<std::size_t>(pos)] == max_entry) {
            v[static_cast<std::size_t>(pos)] = 0;
            ++pos;
        }
        if (pos == length) break;
        ++v[static_cast<std::size_t>(pos)];
    }
    return out;
}

// rho(D) = rowsum(D) - b validates as a rank labeling of the cover DAG iff
// every cover edge drops rowsum by exactly 1.
inline bool rowsum_rank_labeling_valid(const KohnertPoset& p) {
    for (std::size_t u = 0; u < p.cover_edges.size(); ++u)
        for (int v : p.cover_edges[u])
            if (rowsum(p.node(static_cast<int>(u))) - rowsum(p.node(v)) != 1) return false;
    return true;
}

namespace detail {

inline std::string compo_str(const Composition& a) {
    std::string s;
    for (std::size_t i = 0; i < a.length(); ++i) {
        if (i) s += ",";
        s += std::to_string(a[i]);
    }
    return "(" + s + ")";
}

inline std::string diagram_str(const Diagram& d) {
    std::string s;
    for (const Cell& c : d.cells()) {
        if (!s.empty()) s += ",";
        s += "(" + std::to_string(c.row) + "," + std::to_string(c.col) + ")";
    }
    return s.empty() ? "{}" : "{" + s + "}";
}

template <typename T>
inline std::string str(const T& v) {
    std::ostringstream os;
    os << v;
    return os.str();
}

inline void expect(VerifyOutcome& out, const std::string& instance, bool ok,
                   const std::string& expected, const std::string& actual) {
    if (!ok) out.failures.push_back({instance, expected, actual});
}

struct TwoRowChecks {
    bool min_count = false;
    bool bounded = false;
    bool ranked = false;
    bool b_formula = false;
    bool ranked_implies_bounded = false;
};

inline VerifyOutcome two_row_sweep(const CorpusSpec& spec, const TwoRowChecks& checks,
                                   std::string claim_id) {
    VerifyOutcome out;
    out.claim_id = std::move(claim_id);
    for (const Diagram& d0 : enumerate_two_row(spec.max_rows, spec.max_cols)) {
        ++out.instances_checked;
        const std::string inst = diagram_str(d0);
        KohnertPoset p = kd_closure(d0);
        TwoRowProfile profile = two_row_profile(d0);
        AnalysisReport closed = two_row_report(d0);

        if (checks.min_count) {
            expect(out, inst, p.minimals.size() == closed.min_count,
                   "|Min| = " + str(closed.min_count), str(p.minimals.size()));
            for (const Diagram& min : minimal_elements(p))
                expect(out, inst + " minimal " + diagram_str(min), two_row_is_minimal(d0, min),
                       "minimal satisfies the structural conditions", "violates them");
        }
        if (checks.bounded)
            expect(out, inst, is_bounded(p) == closed.bounded, "bounded = " + str(closed.bounded),
                   str(is_bounded(p)));
        if (checks.ranked || checks.ranked_implies_bounded) {
            const bool brute_ranked = is_ranked(p).ranked;
            if (checks.ranked)
                expect(out, inst, brute_ranked == closed.ranked, "ranked = " + str(closed.ranked),
                       str(brute_ranked));
            if (checks.ranked_implies_bounded)
                expect(out, inst, !brute_ranked || is_bounded(p), "ranked => bounded",
                       "ranked but not bounded");
        }
        if (checks.b_formula) {
            expect(out, inst, b_of(p) == closed.b_value, "b = " + str(closed.b_value),
                   str(b_of(p)));
            if (profile.r1 > 1) {  // base-member lemma: the rows-2/3 copy is in KD(D0)
                std::vector<Cell> base;
                for (int c : profile.cols_r1) base.push_back(Cell{2, c});
                for (int c : profile.cols_r2) base.push_back(Cell{3, c});
                expect(out, inst, p.index_of(Diagram(std::move(base))).has_value(),
                       "(2|cols_r1) u (3|cols_r2) in KD(D0)", "absent");
            }
        }
    }
    return out;
}

struct KeyChecks {
    bool unique_min = false;
    bool ranked_iff_pure = false;
    bool row_swap = false;
    bool pure_consequences = false;
    bool rank_function = false;
};

inline VerifyOutcome key_sweep(const CorpusSpec& spec, const KeyChecks& checks,
                               std::string claim_id) {
    VerifyOutcome out;
    out.claim_id = std::move(claim_id);
    for (const Composition& a : enumerate_compositions(spec.max_cols, spec.max_rows)) {
        ++out.instances_checked;
        const std::string inst = compo_str(a);
        const Diagram d0 = key_diagram(a);
        KohnertPoset p = kd_closure(d0);

        if (checks.unique_min) {
            expect(out, inst, p.minimals.size() == 1, "|Min| = 1", str(p.minimals.size()));
            if (p.minimals.size() == 1)
                expect(out, inst, p.node(p.minimals.front()) == key_min(a),
                       "minimal = D(sort(a))", diagram_str(p.node(p.minimals.front())));
        }
        if (checks.ranked_iff_pure) {
            const bool brute = is_ranked(p).ranked;
            expect(out, inst, brute == is_pure(a), "ranked = " + str(is_pure(a)), str(brute));
        }
        if (checks.row_swap) {
            for (std::size_t i = 1; i < a.length(); ++i)
                for (std::size_t j = i + 1; j <= a.length(); ++j) {
                    if (!(a[i - 1] < a[j - 1])) continue;
                    Diagram swapped = row_swap_member(a, i, j);
                    expect(out,
                           inst + " swap(" + str(i) + "," + str(j) + ")",
                           p.index_of(swapped).has_value(), "D(a s_ij) in KD(D(a))", "absent");
                }
        }
        if (checks.pure_consequences && is_pure(a)) {
            // entries strictly above the higher row of the pair
            for (std::size_t i = 0; i < a.length(); ++i)
                for (std::size_t j = i + 1; j < a.length(); ++j) {
                    if (a[j] - a[i] == 1) {
                        for (std::size_t k = j + 1; k < a.length(); ++k)
                            expect(out, inst, a[k] <= a[j],
                                   "a_j - a_i = 1 forces a_k <= a_j above", "violated");
                    } else if (a[j] - a[i] > 1) {
                        for (std::size_t k = j + 1; k < a.length(); ++k)
                            expect(out, inst, a[k] <= a[i],
                                   "a_j - a_i > 1 forces a_k <= a_i above", "violated");
                    }
                }
        }
        if (checks.rank_function && is_pure(a)) {
            expect(out, inst, rowsum_rank_labeling_valid(p), "rowsum - b is a valid labeling",
                   "a cover edge drops rowsum by more than 1");
            RankCertificate cert = is_ranked(p);
            if (cert.ranked) {
                const long long b = b_of(p);
                bool match = true;
                for (std::size_t i = 0; i < p.nodes.size(); ++i)
                    match &= cert.ranks[i] == rowsum(p.nodes[i]) - b;
                expect(out, inst, match, "propagated ranks equal rowsum - b", "mismatch");
            }
        }
    }
    return out;
}

}  // namespace detail

// --- individual claims -----------------------------------------------------

// Weakly decreasing column counts force a bounded poset.
inline VerifyOutcome claim_prop_32(const CorpusSpec& spec) {
    VerifyOutcome out;
    out.claim_id = "prop-3.2";
    for (const Diagram& d0 : enumerate_corpus(spec)) {
        std::vector<int> counts = column_counts(d0);
        if (!std::is_sorted(counts.rbegin(), counts.rend())) continue;
        ++out.instances_checked;
        KohnertPoset p = kd_closure(d0);
        detail::expect(out, detail::diagram_str(d0), p.minimals.size() == 1,
                       "bounded (|Min| = 1)", detail::str(p.minimals.size()));
    }
    return out;
}

// Interval column-matching: diagrams between D2 < D1 agree with them on any
// column part (weakly above or weakly below a row) where D1 and D2 agree.
inline VerifyOutcome claim_interval_match(const CorpusSpec& spec) {
    VerifyOutcome out;
    out.claim_id = "lem-interval-match";
    for (const Diagram& d0 : enumerate_corpus(spec)) {
        ++out.instances_checked;
        KohnertPoset p = kd_closure(d0);
        const std::size_t n = p.nodes.size();
        const int height = d0.max_row();
        const int width = d0.max_col();

        // per-node, per-column occupied-row bitmasks
        std::vector<std::vector<std::uint64_t>> masks(n,
                                                      std::vector<std::uint64_t>(
                                                          static_cast<std::size_t>(width) + 1, 0));
        for (std::size_t i = 0; i < n; ++i)
            for (const Cell& c : p.nodes[i].cells())
                masks[i][static_cast<std::size_t>(c.col)] |= std::uint64_t{1} << c.row;

        std::vector<std::vector<char>> below(n);
        for (std::size_t i = 0; i < n; ++i)
            below[i] = detail::reachable_from(p.move_edges, static_cast<int>(i));

        for (std::size_t hi = 0; hi < n; ++hi)
            for (std::size_t lo = 0; lo < n; ++lo) {
                if (hi == lo || !below[hi][lo]) continue;
                for (int col = 1; col <= width; ++col)
                    for (int row = 1; row <= height + 1; ++row) {
                        const std::uint64_t ge_mask = ~std::uint64_t{0} << row;
                        const std::uint64_t le_mask = (std::uint64_t{2} << row) - 1;
                        auto m = [&](std::size_t node) {
                            return masks[node][static_cast<std::size_t>(col)];
                        };
                        const bool agree_ge = (m(hi) & ge_mask) == (m(lo) & ge_mask);
                        const bool agree_le = (m(hi) & le_mask) == (m(lo) & le_mask);
                        if (!agree_ge && !agree_le) continue;
                        for (std::size_t z = 0; z < n; ++z) {
                            if (!(z == hi || z == lo || (below[hi][z] && below[z][lo]))) continue;
                            if (agree_ge)
                                detail::expect(out,
                                               detail::diagram_str(d0) + " pair " +
                                                   detail::str(hi) + ">" + detail::str(lo),
                                               (m(z) & ge_mask) == (m(hi) & ge_mask),
                                               "interval member matches above row " +
                                                   detail::str(row) + " in column " +
                                                   detail::str(col),
                                               "mismatch");
                            if (agree_le)
                                detail::expect(out,
                                               detail::diagram_str(d0) + " pair " +
                                                   detail::str(hi) + ">" + detail::str(lo),
                                               (m(z) & le_mask) == (m(hi) & le_mask),
                                               "interval member matches below row " +
                                                   detail::str(row) + " in column " +
                                                   detail::str(col),
                                               "mismatch");
                            if (!out.failures.empty() && out.failures.size() > 32) return out;
                        }
                    }
            }
    }
    return out;
}

// Obstruction soundness: a detected witness anywhere in the closure implies
// the brute-force verdict "not ranked".
inline VerifyOutcome claim_obstruction_soundness(const CorpusSpec& spec) {
    VerifyOutcome out;
    out.claim_id = "cor-obstruction-soundness";
    for (const Diagram& d0 : enumerate_corpus(spec)) {
        ++out.instances_checked;
        KohnertPoset p = kd_closure(d0);
        auto witness = scan_closure_for_obstruction(p);
        if (!witness) continue;
        detail::expect(out, detail::diagram_str(d0), validate(*witness),
                       "witness self-validates", "stored conditions re-check false");
        detail::expect(out, detail::diagram_str(d0), !is_ranked(p).ranked,
                       "witness implies not ranked", "ranked despite witness");
    }
    return out;
}

// One-cell-per-column: bounded, ranked, bottom-row minimal, rowsum - b
// labeling, per brute force.
inline VerifyOutcome claim_one_col(const CorpusSpec& spec) {
    VerifyOutcome out;
    out.claim_id = "thm-one-col";
    CorpusSpec filtered = spec;
    filtered.family = Family::OnePerColumn;
    for (const Diagram& d0 : enumerate_corpus(filtered)) {
        ++out.instances_checked;
        const std::string inst = detail::diagram_str(d0);
        KohnertPoset p = kd_closure(d0);
        AnalysisReport closed = one_per_column_report(d0);
        detail::expect(out, inst, p.minimals.size() == 1, "|Min| = 1",
                       detail::str(p.minimals.size()));
        if (p.minimals.size() == 1)
            detail::expect(out, inst, p.node(p.minimals.front()) == closed.minimal_sample.front(),
                           "minimal = bottom row", detail::diagram_str(p.node(p.minimals.front())));
        detail::expect(out, inst, is_ranked(p).ranked, "ranked", "not ranked");
        detail::expect(out, inst, b_of(p) == closed.b_value,
                       "b = " + detail::str(closed.b_value), detail::str(b_of(p)));
        detail::expect(out, inst, rowsum_rank_labeling_valid(p),
                       "rowsum - b is a valid labeling", "invalid");
    }
    return out;
}

inline VerifyOutcome claim_two_row_min_count(const CorpusSpec& spec) {
    return detail::two_row_sweep(spec, {.min_count = true}, "thm-two-row-min-count");
}
inline VerifyOutcome claim_two_row_bounded(const CorpusSpec& spec) {
    return detail::two_row_sweep(spec, {.bounded = true}, "thm-two-row-bounded");
}
inline VerifyOutcome claim_two_row_ranked(const CorpusSpec& spec) {
    return detail::two_row_sweep(spec, {.ranked = true}, "thm-two-row-ranked");
}
inline VerifyOutcome claim_two_row_b(const CorpusSpec& spec) {
    return detail::two_row_sweep(spec, {.b_formula = true}, "rem-two-row-b");
}
inline VerifyOutcome claim_two_row_ranked_implies_bounded(const CorpusSpec& spec) {
    return detail::two_row_sweep(spec, {.ranked_implies_bounded = true},
                                 "cor-two-row-ranked-implies-bounded");
}

// Single sweep evaluating all five two-row checks at once.
inline VerifyOutcome two_row_full_sweep(const CorpusSpec& spec) {
    return detail::two_row_sweep(spec,
                                 {.min_count = true,
                                  .bounded = true,
                                  .ranked = true,
                                  .b_formula = true,
                                  .ranked_implies_bounded = true},
                                 "two-row-all");
}

inline VerifyOutcome claim_key_bounded_min(const CorpusSpec& spec) {
    return detail::key_sweep(spec, {.unique_min = true}, "thm-key-bounded-min");
}
inline VerifyOutcome claim_key_ranked_iff_pure(const CorpusSpec& spec) {
    return detail::key_sweep(spec, {.ranked_iff_pure = true}, "thm-key-ranked-iff-pure");
}
inline VerifyOutcome claim_key_row_swap(const CorpusSpec& spec) {
    return detail::key_sweep(spec, {.row_swap = true}, "lem-key-row-swap");
}
inline VerifyOutcome claim_key_pure_consequences(const CorpusSpec& spec) {
    return detail::key_sweep(spec, {.pure_consequences = true}, "lem-key-pure-consequences");
}
inline VerifyOutcome claim_key_rank_function(const CorpusSpec& spec) {
    return detail::key_sweep(spec, {.rank_function = true}, "lem-key-rank-function");
}

// Single sweep evaluating all five key checks at once.
inline VerifyOutcome key_full_sweep(const CorpusSpec& spec) {
    return detail::key_sweep(spec,
                             {.unique_min = true,
                              .ranked_iff_pure = true,
                              .row_swap = true,
                              .pure_consequences = true,
                              .rank_function = true},
                             "key-all");
}

inline VerifyOutcome claim_checkered_ranked(const CorpusSpec& spec) {
    VerifyOutcome out;
    out.claim_id = "thm-checkered-ranked";
    for (int n = 1; n <= spec.max_rows; ++n)
        for (int v = 1; v <= 2; ++v) {
            if (n == 1 && v == 2) continue;  // empty-board convention case
            ++out.instances_checked;
            KohnertPoset p = kd_closure(checkered(n, v));
            const bool expected = n <= 3;
            detail::expect(out, "Ch^" + detail::str(v) + "_" + detail::str(n),
                           is_ranked(p).ranked == expected, "ranked = " + detail::str(expected),
                           detail::str(is_ranked(p).ranked));
        }
    return out;
}

inline VerifyOutcome claim_checkered_min_count(const CorpusSpec& spec) {
    VerifyOutcome out;
    out.claim_id = "thm-checkered-min-count";
    for (int n = 1; n <= spec.max_rows; ++n)
        for (int v = 1; v <= 2; ++v) {
            if (n == 1 && v == 2) continue;
            ++out.instances_checked;
            KohnertPoset p = kd_closure(checkered(n, v));
            const std::size_t expected =
                n % 2 == 0 ? 1 : static_cast<std::size_t>(kd_dm_count(n / 2));
            detail::expect(out, "Ch^" + detail::str(v) + "_" + detail::str(n),
                           p.minimals.size() == expected, "|Min| = " + detail::str(expected),
                           detail::str(p.minimals.size()));
        }
    return out;
}

inline VerifyOutcome claim_checkered_bounded(const CorpusSpec& spec) {
    VerifyOutcome out;
    out.claim_id = "thm-checkered-bounded";
    for (int n = 1; n <= spec.max_rows; ++n)
        for (int v = 1; v <= 2; ++v) {
            if (n == 1 && v == 2) continue;
            ++out.instances_checked;
            KohnertPoset p = kd_closure(checkered(n, v));
            const bool expected = n % 2 == 0 || (n == 1 && v == 1);
            detail::expect(out, "Ch^" + detail::str(v) + "_" + detail::str(n),
                           is_bounded(p) == expected, "bounded = " + detail::str(expected),
                           detail::str(is_bounded(p)));
            detail::expect(out, "Ch^" + detail::str(v) + "_" + detail::str(n),
                           b_of(p) == checkered_report(n, v).b_value,
                           "b = " + detail::str(checkered_report(n, v).b_value),
                           detail::str(b_of(p)));
        }
    return out;
}

inline VerifyOutcome claim_checkered_kd_count(const CorpusSpec& spec) {
    VerifyOutcome out;
    out.claim_id = "cor-checkered-kd-count";
    for (int m = 1; m <= std::min(spec.max_rows - 1, 3); ++m) {
        ++out.instances_checked;
        KohnertPoset p = kd_closure(raised_square(m));
        detail::expect(out, "D_" + detail::str(m), p.nodes.size() == kd_dm_count(m),
                       "|KD| = " + detail::str(kd_dm_count(m)), detail::str(p.nodes.size()));
    }
    return out;
}

// Empty-row characterization of KD(D_m): both inclusions, m <= 3.
inline VerifyOutcome claim_checkered_er(const CorpusSpec& spec) {
    VerifyOutcome out;
    out.claim_id = "lem-checkered-er";
    for (int m = 1; m <= std::min(spec.max_rows - 1, 3); ++m) {
        ++out.instances_checked;
        KohnertPoset p = kd_closure(raised_square(m));
        std::set<std::vector<int>> seen;
        for (const Diagram& node : p.nodes) {
            std::vector<int> er = er_sequence(node, m);
            detail::expect(out, "D_" + detail::str(m) + " node " + detail::diagram_str(node),
                           std::is_sorted(er.begin(), er.end()),
                           "er sequence weakly increasing", "decreasing step found");
            seen.insert(std::move(er));
        }
        std::set<std::vector<int>> expected;
        std::vector<int> er(static_cast<std::size_t>(m), 1);
        while (true) {
            if (std::is_sorted(er.begin(), er.end())) expected.insert(er);
            int pos = 0;
            while (pos < m && er[static_cast<std::size_t>(pos)] == m + 1) {
                er[static_cast<std::size_t>(pos)] = 1;
                ++pos;
            }
            if (pos == m) break;
            ++er[static_cast<std::size_t>(pos)];
        }
        detail::expect(out, "D_" + detail::str(m), seen == expected,
                       "er sequences = all weakly increasing sequences in {1..m+1}^m",
                       detail::str(seen.size()) + " of " + detail::str(expected.size()));
    }
    return out;
}

// phi / phi^{-1} are mutually inverse bijections Min(Ch_n) <-> KD(D_m).
inline VerifyOutcome claim_checkered_phi(const CorpusSpec& spec) {
    VerifyOutcome out;
    out.claim_id = "thm-checkered-phi-bijection";
    for (int n = 1; n <= spec.max_rows; n += 2)
        for (int v = 1; v <= 2; ++v) {
            if (n == 1 && v == 2) continue;
            ++out.instances_checked;
            const std::string inst = "Ch^" + detail::str(v) + "_" + detail::str(n);
            const int m = n / 2;
            KohnertPoset big = kd_closure(checkered(n, v));
            KohnertPoset small = kd_closure(raised_square(m));
            std::set<Diagram> image;
            for (const Diagram& min : minimal_elements(big)) {
                Diagram mapped = checkered_phi(min, n, v);
                detail::expect(out, inst, checkered_phi_inv(mapped, n, v) == min,
                               "phi_inv(phi(T)) = T", "round trip failed");
                image.insert(std::move(mapped));
            }
            std::set<Diagram> target(small.nodes.begin(), small.nodes.end());
            detail::expect(out, inst, image == target, "phi(Min) = KD(D_m)",
                           detail::str(image.size()) + " images vs " +
                               detail::str(target.size()) + " targets");
            for (const Diagram& node : small.nodes) {
                Diagram lifted = checkered_phi_inv(node, n, v);
                detail::expect(out, inst, checkered_phi(lifted, n, v) == node,
                               "phi(phi_inv(D)) = D", "round trip failed");
                detail::expect(out, inst, big.index_of(lifted).has_value() &&
                                              std::find(big.minimals.begin(), big.minimals.end(),
                                                        *big.index_of(lifted)) !=
                                                  big.minimals.end(),
                               "phi_inv lands in Min(Ch_n)", "not a minimal closure member");
            }
        }
    return out;
}

// Property (*) holds on every closure member of odd checkered boards.
inline VerifyOutcome claim_checkered_property_star(const CorpusSpec& spec) {
    VerifyOutcome out;
    out.claim_id = "lem-checkered-property-star";
    for (int n = 1; n <= spec.max_rows; n += 2)
        for (int v = 1; v <= 2; ++v) {
            if (n == 1 && v == 2) continue;
            ++out.instances_checked;
            KohnertPoset p = kd_closure(checkered(n, v));
            for (const Diagram& node : p.nodes)
                detail::expect(out,
                               "Ch^" + detail::str(v) + "_" + detail::str(n) + " node " +
                                   detail::diagram_str(node),
                               property_star_holds(node, n), "property (*)", "violated");
        }
    return out;
}

// Diagrams whose closure is not ranked yet carries no detectable witness:
// empirical data for the finite-family conjecture.
inline VerifyOutcome obstruction_gap_probe(const CorpusSpec& spec) {
    VerifyOutcome out;
    out.claim_id = "obstruction-gap-probe";
    for (const Diagram& d0 : enumerate_corpus(spec)) {
        ++out.instances_checked;
        KohnertPoset p = kd_closure(d0);
        if (is_ranked(p).ranked) continue;
        if (!scan_closure_for_obstruction(p))
            out.gap_list.push_back(detail::diagram_str(d0));
    }
    return out;
}

// --- claim registry ----------------------------------------------------------

struct ClaimEntry {
    const char* id;
    CorpusSpec default_spec;
    VerifyOutcome (*run)(const CorpusSpec&);
};

inline CorpusSpec desk_spec(int rows, int cols) {
    CorpusSpec s;
    s.max_rows = rows;
    s.max_cols = cols;
    return s;
}

inline const std::vector<ClaimEntry>& claim_registry() {
    static const std::vector<ClaimEntry> entries = {
        {"prop-3.2", desk_spec(3, 4), &claim_prop_32},
        {"lem-interval-match", desk_spec(3, 3), &claim_interval_match},
        {"cor-obstruction-soundness", desk_spec(3, 4), &claim_obstruction_soundness},
        {"thm-one-col", desk_spec(3, 4), &claim_one_col},
        {"thm-two-row-min-count", desk_spec(4, 6), &claim_two_row_min_count},
        {"thm-two-row-bounded", desk_spec(4, 6), &claim_two_row_bounded},
        {"thm-two-row-ranked", desk_spec(4, 6), &claim_two_row_ranked},
        {"rem-two-row-b", desk_spec(4, 6), &claim_two_row_b},
        {"cor-two-row-ranked-implies-bounded", desk_spec(4, 6),
         &claim_two_row_ranked_implies_bounded},
        {"thm-key-bounded-min", desk_spec(4, 3), &claim_key_bounded_min},
        {"thm-key-ranked-iff-pure", desk_spec(4, 3), &claim_key_ranked_iff_pure},
        {"lem-key-row-swap", desk_spec(4, 3), &claim_key_row_swap},
        {"lem-key-pure-consequences", desk_spec(4, 3), &claim_key_pure_consequences},
        {"lem-key-rank-function", desk_spec(4, 3), &claim_key_rank_function},
        {"thm-checkered-ranked", desk_spec(5, 5), &claim_checkered_ranked},
        {"thm-checkered-min-count", desk_spec(5, 5), &claim_checkered_min_count},
        {"thm-checkered-bounded", desk_spec(5, 5), &claim_checkered_bounded},
        {"cor-checkered-kd-count", desk_spec(4, 3), &claim_checkered_kd_count},
        {"lem-checkered-er", desk_spec(4, 4), &claim_checkered_er},
        {"thm-checkered-phi-bijection", desk_spec(5, 5), &claim_checkered_phi},
        {"lem-checkered-property-star", desk_spec(5, 5), &claim_checkered_property_star},
    };
    return entries;
}

inline std::vector<std::string> claim_ids() {
    std::vector<std::string> ids;
    for (const ClaimEntry& e : claim_registry()) ids.push_back(e.id);
    return ids;
}

inline VerifyOutcome check_claim(std::string_view id, const CorpusSpec& spec) {
    for (const ClaimEntry& e : claim_registry())
        if (id == e.id) return e.run(spec);
    throw std::invalid_argument("unknown claim id: " + std::string(id));
}

inline VerifyOutcome check_claim(std::string_view id) {
    for (const ClaimEntry& e : claim_registry())
        if (id == e.id) return e.run(e.default_spec);
    throw std::invalid_argument("unknown claim id: " + std::string(id));
}

}  // namespace kohnert
