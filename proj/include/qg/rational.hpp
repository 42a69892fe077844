#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace qg {

// Exact rational numbers. Backed by GMP; mpq_class keeps the canonical
// form (denominator > 0, gcd(num, den) = 1) on every operation.
using Rational = mpq_class;

inline Rational rat(long n, long d = 1) {
    if (d == 0) throw std::invalid_argument("rational with zero denominator");
    Rational v(n, d);
    v.canonicalize();
    return v;
}

inline Rational rat_from_string(const std::string& text) {
    Rational v;
    if (v.set_str(text, 10) != 0)
        throw std::invalid_argument("bad rational literal: " + text);
    v.canonicalize();
    return v;
}

inline bool is_integer(const Rational& v) { return v.get_den() == 1; }

inline long to_long(const Rational& v) {
    if (!is_integer(v)) throw std::domain_error("rational is not an integer");
    if (!v.get_num().fits_slong_p()) throw std::domain_error("integer out of range");
    return v.get_num().get_si();
}

inline Rational rat_pow(const Rational& base, long e) {
    if (e == 0) return Rational(1);
    mpz_class num = base.get_num(), den = base.get_den();
    if (e < 0) {
        if (num == 0) throw std::domain_error("0^negative");
        std::swap(num, den);
        e = -e;
    }
    mpz_class rn, rd;
    mpz_pow_ui(rn.get_mpz_t(), num.get_mpz_t(), static_cast<unsigned long>(e));
    mpz_pow_ui(rd.get_mpz_t(), den.get_mpz_t(), static_cast<unsigned long>(e));
    Rational out(rn, rd);
    out.canonicalize();
    return out;
}

inline std::string rat_str(const Rational& v) { return v.get_str(); }

// abs(a - b) < tol, all exact.
inline bool rat_close(const Rational& a, const Rational& b, const Rational& tol) {
    Rational d = a - b;
    if (d < 0) d = -d;
    return d < tol;
}

} // namespace qg
