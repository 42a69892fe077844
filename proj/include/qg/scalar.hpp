#pragma once

#include "qg/errors.hpp"
#include "qg/poly.hpp"

#include <utility>

namespace qg {

// Element of the fraction field of the Laurent-polynomial ring.
//
// Kept in a light normal form: shared monomial content stripped and the
// denominator's leading coefficient scaled to 1. Equality is decided by
// cross-multiplication; there is deliberately no polynomial GCD.
class Scalar {
  public:
    Scalar() : num_(), den_(Rational(1)) {}
    explicit Scalar(Rational c) : num_(std::move(c)), den_(Rational(1)) {}
    Scalar(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
        if (den_.is_zero()) throw DivisionByZero();
        normalize();
    }
    explicit Scalar(Poly num) : num_(std::move(num)), den_(Rational(1)) {}

    static Scalar zero() { return Scalar(); }
    static Scalar one() { return Scalar(Rational(1)); }
    static Scalar of(long n, long d = 1) { return Scalar(rat(n, d)); }
    static Scalar var(SymId s, Rational e = Rational(1)) { return Scalar(Poly::var(s, std::move(e))); }

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_ == den_; }

    friend Scalar operator+(const Scalar& a, const Scalar& b) {
        if (a.is_zero()) return b;
        if (b.is_zero()) return a;
        if (a.den_ == b.den_) return Scalar(a.num_ + b.num_, a.den_);
        return Scalar(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Scalar operator-(const Scalar& a, const Scalar& b) { return a + (-b); }
    Scalar operator-() const {
        Scalar out = *this;
        out.num_ = -out.num_;
        return out;
    }
    friend Scalar operator*(const Scalar& a, const Scalar& b) {
        if (a.is_zero() || b.is_zero()) return Scalar();
        // cheap cross-cancellation of structurally equal factors
        if (a.num_ == b.den_) return Scalar(b.num_, a.den_);
        if (b.num_ == a.den_) return Scalar(a.num_, b.den_);
        return Scalar(a.num_ * b.num_, a.den_ * b.den_);
    }
    Scalar inverse() const {
        if (is_zero()) throw DivisionByZero();
        return Scalar(den_, num_);
    }
    friend Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.inverse(); }

    Scalar scaled(const Rational& c) const {
        if (c == 0) return Scalar();
        Scalar out = *this;
        out.num_ = out.num_.scaled(c);
        return out;
    }

    Scalar pow(long e) const {
        if (e == 0) return one();
        Scalar base = e > 0 ? *this : inverse();
        long n = e > 0 ? e : -e;
        Scalar out = one();
        for (long i = 0; i < n; ++i) out = out * base;
        return out;
    }

    // a/b == c/d  iff  a*d - c*b == 0
    friend bool operator==(const Scalar& a, const Scalar& b) {
        if (a.num_ == b.num_ && a.den_ == b.den_) return true;
        return (a.num_ * b.den_) == (b.num_ * a.den_);
    }

    // Strict total order for use as a map key; consistent with == only for
    // normalized representatives of the same expression tree, which is all
    // the deterministic containers need.
    friend bool rep_less(const Scalar& a, const Scalar& b) {
        if (a.num_.terms() != b.num_.terms()) return a.num_.terms() < b.num_.terms();
        return a.den_.terms() < b.den_.terms();
    }

  private:
    void normalize() {
        if (num_.is_zero()) {
            den_ = Poly(Rational(1));
            return;
        }
        if (den_.is_monomial()) {
            // fold a unit denominator into the (Laurent) numerator
            const auto& [m, c] = den_.leading();
            num_ = num_.times_monomial(m.inverse()).scaled(Rational(1) / c);
            den_ = Poly(Rational(1));
            return;
        }
        // cancel the shared monomial content (componentwise min of exponents)
        Monomial gn = num_.content(), gd = den_.content();
        std::map<SymId, Rational> lo;
        for (const auto& [s, e] : gn.entries()) lo.try_emplace(s, Rational(0));
        for (const auto& [s, e] : gd.entries()) lo.try_emplace(s, Rational(0));
        std::vector<Monomial::Entry> entries;
        for (auto& [s, e] : lo) {
            Rational mn = std::min(gn.exponent(s), gd.exponent(s));
            if (mn != 0) entries.push_back({s, mn});
        }
        Monomial shared(std::move(entries));
        if (!shared.is_unit()) {
            Monomial inv = shared.inverse();
            num_ = num_.times_monomial(inv);
            den_ = den_.times_monomial(inv);
        }
        const Rational& lead = den_.leading().second;
        if (lead != 1) {
            Rational inv = Rational(1) / lead;
            num_ = num_.scaled(inv);
            den_ = den_.scaled(inv);
        }
    }

    Poly num_;
    Poly den_;
};

} // namespace qg
