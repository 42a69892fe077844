#pragma once

#include "qg/series.hpp"

#include <map>

namespace qg {

inline Poly series_limit_or_throw(const EpsSeries& a) {
    for (int o = a.min_order(); o < 0; ++o) {
        Poly c = a.coeff(o);
        if (!c.is_zero())
            throw DivergentLimit(o, "nonzero coefficient at negative order");
    }
    if (a.trunc_order() < 0) throw TruncationUnderflow();
    return a.coeff(0);
}

// ---------- substitution ----------

using Bindings = std::map<SymId, Scalar>;

inline Scalar scalar_monomial_root(const Scalar& v, const Rational& e, const std::string& name) {
    // v^e with non-integer rational e: defined when v is a pure monomial with
    // coefficient 1 (then exponents scale exactly).
    if (v.is_zero()) throw NonInvertibleBinding(name);
    if (!v.den().is_one() || !v.num().is_monomial()) throw UnboundFractionalPower(name);
    const auto& [mono, coeff] = v.num().leading();
    if (coeff != 1) throw UnboundFractionalPower(name);
    return Scalar(Poly::term(mono.pow(e), Rational(1)));
}

inline Scalar substitute(const Scalar& value, const Bindings& bindings, const SymbolTable& table) {
    auto poly_image = [&](const Poly& p) {
        Scalar acc = Scalar::zero();
        for (const auto& [mono, coeff] : p.terms()) {
            Scalar term = Scalar(Rational(coeff));
            for (const auto& [sym, exp] : mono.entries()) {
                auto it = bindings.find(sym);
                if (it == bindings.end()) {
                    term = term * Scalar::var(sym, exp);
                    continue;
                }
                const Scalar& v = it->second;
                if (is_integer(exp)) {
                    long e = to_long(exp);
                    if (e < 0 && v.is_zero()) throw NonInvertibleBinding(table.name(sym));
                    term = term * v.pow(e);
                } else {
                    term = term * scalar_monomial_root(v, exp, table.name(sym));
                }
            }
            acc = acc + term;
        }
        return acc;
    };
    Scalar n = poly_image(value.num());
    Scalar d = poly_image(value.den());
    if (d.is_zero()) throw DivisionByZero();
    return n / d;
}

// ---------- series expansion ----------

struct SeriesBindings {
    std::map<SymId, EpsSeries> series;     // e.g. r -> 1 + eps, s -> 1 + (k/m) eps
    std::map<SymId, LinearForm> powers;    // e.g. U -> lam, meaning U = (1+eps)^lam
    int trunc = 4;
};

inline EpsSeries to_series(const Poly& p, const SeriesBindings& b) {
    EpsSeries acc = EpsSeries::zero(b.trunc);
    for (const auto& [mono, coeff] : p.terms()) {
        EpsSeries term = EpsSeries::constant(Poly(Rational(coeff)), b.trunc);
        for (const auto& [sym, exp] : mono.entries()) {
            auto ps = b.powers.find(sym);
            if (ps != b.powers.end()) {
                term = term * binomial_series(ps->second.scaled(exp), b.trunc);
                continue;
            }
            auto it = b.series.find(sym);
            if (it == b.series.end()) {
                term = term.scaled(Poly::term(Monomial::var(sym, exp), Rational(1)));
                continue;
            }
            const EpsSeries& v = it->second;
            if (is_integer(exp)) {
                term = term * v.pow(to_long(exp));
            } else {
                // exponent p/2: take sqrt of the integer power
                Rational doubled = exp * 2;
                if (!is_integer(doubled)) throw UnboundFractionalPower("series exponent");
                term = term * series_sqrt(v.pow(to_long(doubled)));
            }
        }
        acc = acc + term;
    }
    return acc;
}

inline EpsSeries to_series(const Scalar& x, const SeriesBindings& b) {
    EpsSeries num = to_series(x.num(), b);
    EpsSeries den = to_series(x.den(), b);
    return num / den;
}

} // namespace qg
