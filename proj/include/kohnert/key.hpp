#pragma once

#include <algorithm>
#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "kohnert/diagram.hpp"
#include "kohnert/report.hpp"

namespace kohnert {

// A weak composition (a1, ..., an) of non-negative integers.
class Composition {
public:
    Composition() = default;

    explicit Composition(std::vector<int> entries) : entries_(std::move(entries)) {
        for (int e : entries_)
            if (e < 0) throw std::invalid_argument("Composition: entries must be >= 0");
    }

    Composition(std::initializer_list<int> entries) : Composition(std::vector<int>(entries)) {}

    const std::vector<int>& entries() const noexcept { return entries_; }
    std::size_t length() const noexcept { return entries_.size(); }
    bool empty() const noexcept { return entries_.empty(); }
    int operator[](std::size_t i) const { return entries_[i]; }

    friend bool operator==(const Composition&, const Composition&) = default;

private:
    std::vector<int> entries_;
};

// D(a): a_i left-justified cells in row i.
inline Diagram key_diagram(const Composition& a) {
    std::vector<Cell> cells;
    for (std::size_t i = 0; i < a.length(); ++i)
        for (int j = 1; j <= a[i]; ++j) cells.push_back(Cell{static_cast<int>(i) + 1, j});
    return Diagram(std::move(cells));
}

inline Composition sort_decreasing(const Composition& a) {
    std::vector<int> v = a.entries();
    std::sort(v.begin(), v.end(), std::greater<int>());
    return Composition(std::move(v));
}

// The unique minimal element of the key-diagram poset: D(sort(a)).
inline Diagram key_min(const Composition& a) { return key_diagram(sort_decreasing(a)); }

// Purity via the defining forbidden triples: no indices j1 < j2 < j3 with
// a_{j1} < a_{j2} < a_{j3}, a_{j1} < a_{j3} < a_{j2}, or a_{j1}+1 < a_{j2} = a_{j3}.
inline bool is_pure_by_forbidden_triples(const Composition& a) {
    const auto& v = a.entries();
    const std::size_t n = v.size();
    for (std::size_t j1 = 0; j1 < n; ++j1)
        for (std::size_t j2 = j1 + 1; j2 < n; ++j2)
            for (std::size_t j3 = j2 + 1; j3 < n; ++j3) {
                if (v[j1] < v[j2] && v[j2] < v[j3]) return false;
                if (v[j1] < v[j3] && v[j3] < v[j2]) return false;
                if (v[j1] + 1 < v[j2] && v[j2] == v[j3]) return false;
            }
    return true;
}

// Purity via the reduced two-pattern criterion: non-pure iff some j1 < j2 < j3
// has a_{j1} < a_{j2} < a_{j3}, or a_{j1}+1 < a_{j2} together with a_{j1} < a_{j3}.
inline bool is_pure_by_reduced_patterns(const Composition& a) {
    const auto& v = a.entries();
    const std::size_t n = v.size();
    for (std::size_t j1 = 0; j1 < n; ++j1)
        for (std::size_t j2 = j1 + 1; j2 < n; ++j2) {
            if (v[j2] <= v[j1]) continue;
            const bool wide_gap = v[j1] + 1 < v[j2];
            for (std::size_t j3 = j2 + 1; j3 < n; ++j3) {
                if (v[j1] < v[j2] && v[j2] < v[j3]) return false;
                if (wide_gap && v[j1] < v[j3]) return false;
            }
        }
    return true;
}

inline bool is_pure(const Composition& a) { return is_pure_by_reduced_patterns(a); }

// The four shapes a pure composition factors into.
enum class PartType {
    WeaklyDecreasing,  // (i)   a weakly decreasing run
    TwoValued,         // (ii)  entries in {p, p+1}, first entry p, some p+1
    TrailingJump,      // (iii) weakly decreasing, then a final entry >= penultimate + 2
    DipAndReturn,      // (iv)  {p, p+1} block, a dip strictly below p, final p+1
};

inline const char* to_string(PartType t) {
    switch (t) {
        case PartType::WeaklyDecreasing: return "i";
        case PartType::TwoValued: return "ii";
        case PartType::TrailingJump: return "iii";
        case PartType::DipAndReturn: return "iv";
    }
    return "?";
}

struct PureDecomposition {
    struct Part {
        Composition comp;
        PartType type;
    };
    std::vector<Part> parts;
};

// Defining predicate of each part shape, used to cross-check decompositions.
inline bool part_matches_type(const Composition& part, PartType type) {
    const auto& v = part.entries();
    const std::size_t n = v.size();
    if (n == 0) return false;
    switch (type) {
        case PartType::WeaklyDecreasing:
            return std::is_sorted(v.rbegin(), v.rend());
        case PartType::TwoValued: {
            if (n < 2) return false;
            const int p = v.front();
            bool saw_high = false;
            for (int e : v) {
                if (e == p + 1) saw_high = true;
                else if (e != p) return false;
            }
            return saw_high;
        }
        case PartType::TrailingJump:
            return n >= 2 && std::is_sorted(v.rbegin() + 1, v.rend()) &&
                   v[n - 1] > v[n - 2] + 1;
        case PartType::DipAndReturn: {
            if (n < 4) return false;
            const int p = v.front();
            if (v.back() != p + 1) return false;
            // Split point: the first entry strictly below p.
            std::size_t dip = 0;
            while (dip < n && (v[dip] == p || v[dip] == p + 1)) ++dip;
            if (dip < 2 || dip > n - 2) return false;
            bool saw_high = false;
            for (std::size_t i = 0; i < dip; ++i)
                if (v[i] == p + 1) saw_high = true;
            if (!saw_high) return false;
            for (std::size_t i = dip; i + 1 < n; ++i) {
                if (v[i] >= p) return false;
                if (i + 2 < n && v[i] < v[i + 1]) return false;
            }
            return true;
        }
    }
    return false;
}

// Factor a pure composition by the iterative five-case procedure: strip the
// longest leading part of one of the four shapes and recurse on the rest.
// Throws std::invalid_argument on non-pure input.
inline PureDecomposition pure_decompose(const Composition& a) {
    if (!is_pure(a)) throw std::invalid_argument("pure_decompose: composition is not pure");

    PureDecomposition out;
    std::vector<int> rest = a.entries();
    while (!rest.empty()) {
        const std::size_t n = rest.size();
        std::size_t q = 1;  // ascent position: rest[q-1] < rest[q]
        while (q < n && rest[q - 1] >= rest[q]) ++q;

        std::size_t cut = n;  // entries consumed by this part
        PartType type = PartType::WeaklyDecreasing;
        if (q >= n) {
            // no ascent: the whole remainder weakly decreases
        } else if (rest[q] - rest[q - 1] > 1) {
            // Case 1: a wide first ascent ends a TrailingJump part
            type = PartType::TrailingJump;
            cut = q + 1;
        } else {
            const int p = rest[q - 1];
            const bool prefix_constant =
                std::all_of(rest.begin(), rest.begin() + static_cast<std::ptrdiff_t>(q),
                            [p](int e) { return e == p; });
            if (!prefix_constant) {
                // Case 3: some earlier entry dominates the ascent; cut after
                // the last such entry, keeping a weakly decreasing part
                std::size_t k0 = 0;
                for (std::size_t j = 0; j + 1 < q; ++j)
                    if (rest[j] >= rest[q]) k0 = j;
                type = PartType::WeaklyDecreasing;
                cut = k0 + 1;
            } else {
                std::size_t s = q + 1;
                while (s < n && rest[s] >= p) ++s;
                if (s >= n) {
                    // Case 2: everything lives in {p, p+1}
                    type = PartType::TwoValued;
                    cut = n;
                } else {
                    std::size_t t = s + 1;
                    while (t < n && rest[t] != p + 1) ++t;
                    if (t < n) {
                        // Case 5: the dip returns to p+1
                        type = PartType::DipAndReturn;
                        cut = t + 1;
                    } else {
                        // Case 4: the dip never returns; the part is the
                        // {p, p+1} prefix
                        type = PartType::TwoValued;
                        cut = s;
                    }
                }
            }
        }
        out.parts.push_back({Composition(std::vector<int>(rest.begin(),
                                                          rest.begin() +
                                                              static_cast<std::ptrdiff_t>(cut))),
                             type});
        rest.erase(rest.begin(), rest.begin() + static_cast<std::ptrdiff_t>(cut));
    }
    return out;
}

// Closed-form analysis of P(D(a)): always bounded with minimum D(sort(a)),
// ranked exactly for pure a, with rank function rowsum(D) - b.
inline AnalysisReport key_report(const Composition& a) {
    AnalysisReport r;
    r.method = "key";
    r.min_count = 1;
    r.bounded = true;
    r.ranked = is_pure(a);
    Diagram min = key_min(a);
    r.b_value = rowsum(min);
    if (r.ranked) r.rank_function = "rowsum(D) - b";
    r.minimal_sample.push_back(std::move(min));
    return r;
}

// D(a s_{i,j}) for 1-based i < j with a_i < a_j; always a member of
// KD(D(a)) (row-swap membership lemma).
inline Diagram row_swap_member(const Composition& a, std::size_t i, std::size_t j) {
    if (!(1 <= i && i < j && j <= a.length()))
        throw std::invalid_argument("row_swap_member: need 1 <= i < j <= n");
    if (!(a[i - 1] < a[j - 1]))
        throw std::invalid_argument("row_swap_member: need a_i < a_j");
    std::vector<int> v = a.entries();
    std::swap(v[i - 1], v[j - 1]);
    return key_diagram(Composition(std::move(v)));
}

}  // namespace kohnert
