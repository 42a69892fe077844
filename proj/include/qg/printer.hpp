#pragma once

#include "qg/scalar.hpp"
#include "qg/series.hpp"

#include <sstream>
#include <string>

namespace qg {

namespace detail {

inline std::string exponent_str(const Rational& e) {
    if (is_integer(e)) {
        if (e >= 0) return rat_str(e);
        return "(" + rat_str(e) + ")";
    }
    return "(" + rat_str(e) + ")";
}

// Collect plain exponent plus power-symbol exponents of one base into a
// printable linear form "e0 + c1*col1 + ...".
inline std::string linear_form_str(const SymbolTable& t, const Rational& e0,
                                   const std::vector<std::pair<SymId, Rational>>& colours) {
    std::ostringstream os;
    bool first = true;
    if (e0 != 0 || colours.empty()) {
        os << rat_str(e0);
        first = false;
    }
    for (const auto& [col, c] : colours) {
        if (c == 0) continue;
        if (first) {
            if (c == 1) os << t.name(col);
            else if (c == -1) os << "-" << t.name(col);
            else os << rat_str(c) << "*" << t.name(col);
            first = false;
        } else {
            Rational ab = c < 0 ? Rational(-c) : c;
            os << (c < 0 ? " - " : " + ");
            if (ab == 1) os << t.name(col);
            else os << rat_str(ab) << "*" << t.name(col);
        }
    }
    return os.str();
}

} // namespace detail

inline std::string monomial_str(const Monomial& m, const SymbolTable& t) {
    if (m.is_unit()) return "1";
    // group power symbols under their base
    std::map<SymId, std::pair<Rational, std::vector<std::pair<SymId, Rational>>>> bases;
    std::vector<std::pair<SymId, Rational>> plain;
    for (const auto& [sym, e] : m.entries()) {
        if (t.is_power(sym)) {
            auto [base, colour] = t.power_of(sym);
            bases[base].second.push_back({colour, e});
        }
    }
    for (const auto& [sym, e] : m.entries()) {
        if (t.is_power(sym)) continue;
        auto it = bases.find(sym);
        if (it != bases.end()) it->second.first = e;
        else plain.push_back({sym, e});
    }
    std::ostringstream os;
    bool first = true;
    auto sep = [&] {
        if (!first) os << "*";
        first = false;
    };
    for (const auto& [sym, e] : plain) {
        sep();
        os << t.name(sym);
        if (e != 1) os << "^" << detail::exponent_str(e);
    }
    for (const auto& [base, fe] : bases) {
        sep();
        os << t.name(base) << "^(" << detail::linear_form_str(t, fe.first, fe.second) << ")";
    }
    return os.str();
}

inline std::string poly_str(const Poly& p, const SymbolTable& t) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    // leading-first for readability and a stable canonical form
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        const auto& [m, c] = *it;
        Rational ab = c < 0 ? Rational(-c) : c;
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        if (m.is_unit()) {
            os << rat_str(ab);
        } else {
            if (ab != 1) os << rat_str(ab) << "*";
            os << monomial_str(m, t);
        }
    }
    return os.str();
}

inline std::string scalar_str(const Scalar& x, const SymbolTable& t) {
    if (x.den().is_one()) return poly_str(x.num(), t);
    std::string n = poly_str(x.num(), t);
    std::string d = poly_str(x.den(), t);
    return "(" + n + ")/(" + d + ")";
}

inline std::string series_str(const EpsSeries& s, const SymbolTable& t) {
    std::ostringstream os;
    bool first = true;
    for (int o = s.min_order(); o <= s.trunc_order(); ++o) {
        Poly c = s.coeff(o);
        if (c.is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        os << "(" << poly_str(c, t) << ")";
        if (o != 0) os << "*eps^" << o;
    }
    if (first) os << "0";
    os << " + O(eps^" << (s.trunc_order() + 1) << ")";
    return os.str();
}

} // namespace qg
