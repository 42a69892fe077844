#pragma once

#include "qg/scalar.hpp"

#include <map>

namespace qg {

// Rational sqrt approximation: |sqrt_approx(v) - sqrt(v)| <= 10^-digits, v >= 0.
inline Rational sqrt_approx(const Rational& v, int digits = 40) {
    if (v < 0) throw std::domain_error("sqrt of negative value");
    if (v == 0) return Rational(0);
    mpz_class num = v.get_num(), den = v.get_den();
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
    // sqrt(num/den) = sqrt(num*den)/den
    mpz_class nd = num * den;
    mpz_class scaled = nd * scale * scale;
    mpz_class root;
    mpz_sqrt(root.get_mpz_t(), scaled.get_mpz_t());
    Rational out(root, den * scale);
    out.canonicalize();
    return out;
}

using NumericPoint = std::map<SymId, Rational>;

// Exact rational evaluation; half-integer exponents go through sqrt_approx,
// so results carry error at most ~10^-digits per radical (the only
// approximation anywhere in the engine, used by oracle tests alone).
inline Rational eval_at(const Monomial& mono, const NumericPoint& pt, int sqrt_digits = 40) {
    Rational out(1);
    for (const auto& [sym, e] : mono.entries()) {
        auto it = pt.find(sym);
        if (it == pt.end()) throw std::invalid_argument("numeric point misses a symbol");
        const Rational& v = it->second;
        if (is_integer(e)) {
            out *= rat_pow(v, to_long(e));
        } else {
            Rational doubled = e * 2;
            if (!is_integer(doubled)) throw std::domain_error("exponent denominator > 2");
            out *= sqrt_approx(rat_pow(v, to_long(doubled)), sqrt_digits);
        }
    }
    return out;
}

inline Rational eval_at(const Poly& p, const NumericPoint& pt, int sqrt_digits = 40) {
    Rational out(0);
    for (const auto& [mono, c] : p.terms()) out += c * eval_at(mono, pt, sqrt_digits);
    return out;
}

inline Rational eval_at(const Scalar& x, const NumericPoint& pt, int sqrt_digits = 40) {
    Rational den = eval_at(x.den(), pt, sqrt_digits);
    if (den == 0) throw DivisionByZero();
    return eval_at(x.num(), pt, sqrt_digits) / den;
}

} // namespace qg
