#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "kohnert/diagram.hpp"
#include "kohnert/poset.hpp"

namespace kohnert {

// Exponent vector of a diagram's weight monomial: entry r-1 = number of
// cells in row r, trailing zeros trimmed.
struct Monomial {
    std::vector<int> exponents;

    int total_degree() const {
        int d = 0;
        for (int e : exponents) d += e;
        return d;
    }

    friend bool operator==(const Monomial&, const Monomial&) = default;
    friend auto operator<=>(const Monomial& a, const Monomial& b) {
        return std::lexicographical_compare_three_way(a.exponents.begin(), a.exponents.end(),
                                                      b.exponents.begin(), b.exponents.end());
    }
};

inline Monomial monomial_of(const Diagram& d) {
    Monomial m;
    m.exponents.assign(static_cast<std::size_t>(d.max_row()), 0);
    for (const Cell& c : d.cells()) ++m.exponents[static_cast<std::size_t>(c.row - 1)];
    while (!m.exponents.empty() && m.exponents.back() == 0) m.exponents.pop_back();
    return m;
}

// Terms keyed in lexicographic exponent order; no zero coefficients stored.
struct Polynomial {
    std::map<Monomial, std::uint64_t> terms;

    std::uint64_t coefficient_sum() const {
        std::uint64_t s = 0;
        for (const auto& [mono, coeff] : terms) s += coeff;
        return s;
    }
};

// Generating function of KD(d0): one monomial per closure member, recording
// cells per row.
inline Polynomial kohnert_polynomial(const Diagram& d0, const Limits& limits = {}) {
    KohnertPoset p = kd_closure(d0, limits);
    Polynomial poly;
    for (const Diagram& node : p.nodes) ++poly.terms[monomial_of(node)];
    return poly;
}

inline Polynomial kohnert_polynomial(const KohnertPoset& p) {
    Polynomial poly;
    for (const Diagram& node : p.nodes) ++poly.terms[monomial_of(node)];
    return poly;
}

inline bool is_multiplicity_free(const Polynomial& p) {
    for (const auto& [mono, coeff] : p.terms)
        if (coeff != 1) return false;
    return true;
}

// "c * x1^e1 x2^e2 ..." per term, unit coefficients and exponents left
// implicit; the empty monomial renders as "1".
inline std::string to_string(const Polynomial& p) {
    if (p.terms.empty()) return "0";
    std::string out;
    for (const auto& [mono, coeff] : p.terms) {
        if (!out.empty()) out += " + ";
        std::string vars;
        for (std::size_t i = 0; i < mono.exponents.size(); ++i) {
            if (mono.exponents[i] == 0) continue;
            if (!vars.empty()) vars += " ";
            vars += "x" + std::to_string(i + 1);
            if (mono.exponents[i] > 1) vars += "^" + std::to_string(mono.exponents[i]);
        }
        if (vars.empty())
            out += std::to_string(coeff);
        else if (coeff == 1)
            out += vars;
        else
            out += std::to_string(coeff) + " * " + vars;
    }
    return out;
}

}  // namespace kohnert
