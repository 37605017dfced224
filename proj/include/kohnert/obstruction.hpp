#pragma once

#include <map>
#include <optional>
#include <string>

#include "kohnert/diagram.hpp"
#include "kohnert/poset.hpp"

namespace kohnert {

// Non-rankedness witness configurations. Thm1/Thm2 are the two general
// subdiagram families; CorA/CorB are their three-row specializations
// (CorA = Thm1 with r1 = r2 = r*, r = r*+1, r' = r*+2; CorB = Thm2 with
// r = r*, r' = r*+2). Finding any of them anywhere in KD(D0) certifies
// that the Kohnert poset is not ranked.
enum class ObstructionKind { Thm1, Thm2, CorA, CorB };

inline const char* to_string(ObstructionKind k) {
    switch (k) {
        case ObstructionKind::Thm1: return "thm1";
        case ObstructionKind::Thm2: return "thm2";
        case ObstructionKind::CorA: return "cor-a";
        case ObstructionKind::CorB: return "cor-b";
    }
    return "?";
}

struct ObstructionWitness {
    ObstructionKind kind;
    Diagram diagram;                  // the closure member exhibiting the pattern
    std::map<std::string, int> params;
};

namespace detail {

// Rows r < rr < r2 each holding a cell strictly right of column c.
inline bool rows_between_have_cell_right_of(const Diagram& d, int r, int r2, int c) {
    for (int rr = r + 1; rr < r2; ++rr) {
        auto rm = d.rightmost_in_row(rr);
        if (!rm || *rm <= c) return false;
    }
    return true;
}

}  // namespace detail

// Conditions of the first witness family, for explicit parameters:
//   (i)   (rt, c) in D for r <= rt <= r', and (r, c') in D
//   (ii)  row r' has nothing right of column c
//   (iii) every row strictly between r and r' has a cell right of column c
//   (iv)  row r is empty strictly between c and c' and right of c'
//   (v)   (r1, c) and (r2, c') are empty, r1, r2 < r
inline bool thm1_conditions_hold(const Diagram& d, int r, int r_prime, int r1, int r2, int c,
                                 int c_prime) {
    if (!(1 <= r1 && 1 <= r2 && r1 < r && r2 < r && r < r_prime && 1 <= c && c < c_prime))
        return false;
    for (int rt = r; rt <= r_prime; ++rt)
        if (!d.contains(rt, c)) return false;
    if (!d.contains(r, c_prime)) return false;
    auto rm_top = d.rightmost_in_row(r_prime);
    if (!rm_top || *rm_top != c) return false;                            // (ii)
    if (!detail::rows_between_have_cell_right_of(d, r, r_prime, c)) return false;  // (iii)
    auto rm_r = d.rightmost_in_row(r);
    if (!rm_r || *rm_r != c_prime) return false;                          // (iv): c' rightmost in row r
    for (int ct = c + 1; ct < c_prime; ++ct)
        if (d.contains(r, ct)) return false;
    if (d.contains(r1, c) || d.contains(r2, c_prime)) return false;       // (v)
    return true;
}

// Conditions of the second witness family:
//   (i)   (r', c') in D and row r' has nothing right of c'
//   (ii)  (rt, c) in D for r < rt <= r'
//   (iii) (r, c) not in D
//   (iv)  every row strictly between r and r'-1 has a cell right of column c
//   (v)   every column right of c has an empty position strictly below r'
inline bool thm2_conditions_hold(const Diagram& d, int r, int r_prime, int c, int c_prime) {
    if (!(1 <= r && r < r_prime - 1 && 1 <= c && c < c_prime)) return false;
    auto rm_top = d.rightmost_in_row(r_prime);
    if (!rm_top || *rm_top != c_prime) return false;                      // (i)
    for (int rt = r + 1; rt <= r_prime; ++rt)
        if (!d.contains(rt, c)) return false;                             // (ii)
    if (d.contains(r, c)) return false;                                   // (iii)
    if (!detail::rows_between_have_cell_right_of(d, r, r_prime - 1, c)) return false;  // (iv)
    const int width = d.max_col();
    for (int ct = c + 1; ct <= width; ++ct) {                             // (v)
        bool has_gap = false;
        for (int rt = 1; rt < r_prime && !has_gap; ++rt)
            if (!d.contains(rt, ct)) has_gap = true;
        if (!has_gap) return false;
    }
    return true;
}

inline bool cor_a_conditions_hold(const Diagram& d, int r_star, int c1, int c2) {
    if (!(1 <= r_star && 1 <= c1 && c1 < c2)) return false;
    if (!d.contains(r_star + 1, c1) || !d.contains(r_star + 2, c1) || !d.contains(r_star + 1, c2))
        return false;
    auto rm2 = d.rightmost_in_row(r_star + 2);
    if (!rm2 || *rm2 > c1) return false;                                  // (ii)
    auto rm1 = d.rightmost_in_row(r_star + 1);
    if (!rm1 || *rm1 != c2) return false;                                 // (iii): c2 rightmost
    for (int ct = c1 + 1; ct < c2; ++ct)
        if (d.contains(r_star + 1, ct)) return false;
    if (d.contains(r_star, c1) || d.contains(r_star, c2)) return false;   // (iv)
    return true;
}

inline bool cor_b_conditions_hold(const Diagram& d, int r_star, int c1, int c2) {
    if (!(1 <= r_star && 1 <= c1 && c1 < c2)) return false;
    if (!d.contains(r_star + 1, c1) || !d.contains(r_star + 2, c1) || !d.contains(r_star, c2) ||
        !d.contains(r_star + 2, c2))
        return false;
    auto rm2 = d.rightmost_in_row(r_star + 2);
    if (!rm2 || *rm2 > c2) return false;                                  // (ii)
    auto rm1 = d.rightmost_in_row(r_star + 1);
    if (!rm1 || *rm1 > c1) return false;                                  // (iii)
    if (d.contains(r_star, c1)) return false;                             // (iv)
    return true;
}

// First Thm-3.4-style witness in lexicographic (c, c', r, r', r1, r2) order.
inline std::optional<ObstructionWitness> detect_thm1(const Diagram& d) {
    const int height = d.max_row();
    const int width = d.max_col();
    for (int c = 1; c < width; ++c)
        for (int c_prime = c + 1; c_prime <= width; ++c_prime)
            for (int r = 2; r < height; ++r)
                for (int r_prime = r + 1; r_prime <= height; ++r_prime)
                    for (int r1 = 1; r1 < r; ++r1)
                        for (int r2 = 1; r2 < r; ++r2)
                            if (thm1_conditions_hold(d, r, r_prime, r1, r2, c, c_prime))
                                return ObstructionWitness{
                                    ObstructionKind::Thm1, d,
                                    {{"r", r}, {"r_prime", r_prime}, {"r1", r1}, {"r2", r2},
                                     {"c", c}, {"c_prime", c_prime}}};
    return std::nullopt;
}

// First Thm-3.5-style witness in lexicographic (c, c', r, r') order.
inline std::optional<ObstructionWitness> detect_thm2(const Diagram& d) {
    const int height = d.max_row();
    const int width = d.max_col();
    for (int c = 1; c < width; ++c)
        for (int c_prime = c + 1; c_prime <= width; ++c_prime)
            for (int r = 1; r + 1 < height; ++r)
                for (int r_prime = r + 2; r_prime <= height; ++r_prime)
                    if (thm2_conditions_hold(d, r, r_prime, c, c_prime))
                        return ObstructionWitness{
                            ObstructionKind::Thm2, d,
                            {{"r", r}, {"r_prime", r_prime}, {"c", c}, {"c_prime", c_prime}}};
    return std::nullopt;
}

// First Cor-3.6 witness, scanning (r*, c1, c2) with case (a) before (b).
inline std::optional<ObstructionWitness> detect_cor(const Diagram& d) {
    const int height = d.max_row();
    const int width = d.max_col();
    for (int r_star = 1; r_star + 2 <= height; ++r_star)
        for (int c1 = 1; c1 < width; ++c1)
            for (int c2 = c1 + 1; c2 <= width; ++c2) {
                if (cor_a_conditions_hold(d, r_star, c1, c2))
                    return ObstructionWitness{ObstructionKind::CorA, d,
                                              {{"r_star", r_star}, {"c1", c1}, {"c2", c2}}};
                if (cor_b_conditions_hold(d, r_star, c1, c2))
                    return ObstructionWitness{ObstructionKind::CorB, d,
                                              {{"r_star", r_star}, {"c1", c1}, {"c2", c2}}};
            }
    return std::nullopt;
}

// Re-evaluate a witness against its stored diagram and parameters.
inline bool validate(const ObstructionWitness& w) {
    const auto& p = w.params;
    auto get = [&](const char* key) { return p.at(key); };
    switch (w.kind) {
        case ObstructionKind::Thm1:
            return thm1_conditions_hold(w.diagram, get("r"), get("r_prime"), get("r1"), get("r2"),
                                        get("c"), get("c_prime"));
        case ObstructionKind::Thm2:
            return thm2_conditions_hold(w.diagram, get("r"), get("r_prime"), get("c"),
                                        get("c_prime"));
        case ObstructionKind::CorA:
            return cor_a_conditions_hold(w.diagram, get("r_star"), get("c1"), get("c2"));
        case ObstructionKind::CorB:
            return cor_b_conditions_hold(w.diagram, get("r_star"), get("c1"), get("c2"));
    }
    return false;
}

// Hunt for a witness anywhere in KD(d0). The cheap specialized pass runs
// over the whole closure first; the general detectors only run if it found
// nothing. Nodes are visited in closure order, so the result is
// deterministic.
inline std::optional<ObstructionWitness> scan_closure_for_obstruction(const Diagram& d0,
                                                                      const Limits& limits = {}) {
    KohnertPoset p = kd_closure(d0, limits);
    for (const Diagram& node : p.nodes)
        if (auto w = detect_cor(node)) return w;
    for (const Diagram& node : p.nodes) {
        if (auto w = detect_thm1(node)) return w;
        if (auto w = detect_thm2(node)) return w;
    }
    return std::nullopt;
}

// Same scan over an already-built closure.
inline std::optional<ObstructionWitness> scan_closure_for_obstruction(const KohnertPoset& p) {
    for (const Diagram& node : p.nodes)
        if (auto w = detect_cor(node)) return w;
    for (const Diagram& node : p.nodes) {
        if (auto w = detect_thm1(node)) return w;
        if (auto w = detect_thm2(node)) return w;
    }
    return std::nullopt;
}

}  // namespace kohnert
