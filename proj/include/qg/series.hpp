#pragma once

#include "qg/errors.hpp"
#include "qg/scalar.hpp"

#include <map>
#include <string>
#include <vector>

namespace qg {

// Affine form c0 + sum(ci * colour_i) with rational coefficients; the legal
// shape for a symbolic exponent.
struct LinearForm {
    Rational constant{0};
    std::map<SymId, Rational> coeffs;

    static LinearForm of(Rational c) { return {std::move(c), {}}; }
    static LinearForm var(SymId s) { return {Rational(0), {{s, Rational(1)}}}; }

    LinearForm scaled(const Rational& k) const {
        LinearForm out;
        out.constant = constant * k;
        for (const auto& [s, c] : coeffs)
            if (c * k != 0) out.coeffs[s] = c * k;
        return out;
    }
    friend LinearForm operator+(const LinearForm& a, const LinearForm& b) {
        LinearForm out = a;
        out.constant += b.constant;
        for (const auto& [s, c] : b.coeffs) {
            out.coeffs[s] += c;
            if (out.coeffs[s] == 0) out.coeffs.erase(s);
        }
        return out;
    }
    friend LinearForm operator-(const LinearForm& a, const LinearForm& b) {
        return a + b.scaled(Rational(-1));
    }
    // The form as a degree-<=1 polynomial in the colour symbols.
    Poly to_poly() const {
        Poly p(constant);
        for (const auto& [s, c] : coeffs) p = p + Poly::var(s).scaled(c);
        return p;
    }
    bool is_constant() const { return coeffs.empty(); }
};

// Truncated Laurent series in eps with Laurent-polynomial coefficients.
// Coefficients cover orders min_order .. trunc_order inclusive; trunc_order
// is the validity horizon and shrinks under division by higher-valuation
// series. eps itself is never a declared symbol.
class EpsSeries {
  public:
    EpsSeries() : min_(0), trunc_(-1) {}  // zero series with empty window
    EpsSeries(int min_order, int trunc_order, std::vector<Poly> coeffs)
        : min_(min_order), trunc_(trunc_order), c_(std::move(coeffs)) {
        if (trunc_ >= min_ && c_.size() != static_cast<std::size_t>(trunc_ - min_ + 1))
            throw std::logic_error("series coefficient count mismatch");
        tighten();
    }

    static EpsSeries zero(int trunc) { return EpsSeries(trunc + 1, trunc, {}); }
    static EpsSeries constant(Poly p, int trunc) {
        std::vector<Poly> c(static_cast<std::size_t>(trunc + 1));
        if (trunc >= 0) c[0] = std::move(p);
        return EpsSeries(0, trunc, std::move(c));
    }
    // p * eps^k
    static EpsSeries monomial(Poly p, int k, int trunc) {
        if (k > trunc) return zero(trunc);
        std::vector<Poly> c(static_cast<std::size_t>(trunc - k + 1));
        c[0] = std::move(p);
        return EpsSeries(k, trunc, std::move(c));
    }

    int min_order() const { return min_; }
    int trunc_order() const { return trunc_; }
    bool is_zero() const {
        for (const auto& p : c_)
            if (!p.is_zero()) return false;
        return true;
    }
    Poly coeff(int order) const {
        if (order > trunc_) throw TruncationUnderflow();
        if (order < min_) return Poly();
        return c_[static_cast<std::size_t>(order - min_)];
    }
    // lowest order with nonzero coefficient; trunc_+1 when zero to truncation
    int valuation() const {
        for (int o = min_; o <= trunc_; ++o)
            if (!c_[static_cast<std::size_t>(o - min_)].is_zero()) return o;
        return trunc_ + 1;
    }

    friend EpsSeries operator+(const EpsSeries& a, const EpsSeries& b) {
        int trunc = std::min(a.trunc_, b.trunc_);
        int mn = std::min(a.min_, b.min_);
        if (trunc < mn) return EpsSeries(trunc + 1, trunc, {});
        std::vector<Poly> c(static_cast<std::size_t>(trunc - mn + 1));
        for (int o = mn; o <= trunc; ++o) {
            Poly v;
            if (o >= a.min_ && o <= a.trunc_) v = v + a.c_[static_cast<std::size_t>(o - a.min_)];
            if (o >= b.min_ && o <= b.trunc_) v = v + b.c_[static_cast<std::size_t>(o - b.min_)];
            c[static_cast<std::size_t>(o - mn)] = std::move(v);
        }
        return EpsSeries(mn, trunc, std::move(c));
    }
    EpsSeries operator-() const {
        EpsSeries out = *this;
        for (auto& p : out.c_) p = -p;
        return out;
    }
    friend EpsSeries operator-(const EpsSeries& a, const EpsSeries& b) { return a + (-b); }

    friend EpsSeries operator*(const EpsSeries& a, const EpsSeries& b) {
        int va = a.valuation(), vb = b.valuation();
        // validity: unknown tail of a shifts by vb and vice versa
        int trunc = std::min(a.trunc_ + vb, b.trunc_ + va);
        int mn = va + vb;
        if (a.is_zero() || b.is_zero()) return EpsSeries(trunc + 1, trunc, {});
        if (trunc < mn) return EpsSeries(trunc + 1, trunc, {});
        std::vector<Poly> c(static_cast<std::size_t>(trunc - mn + 1));
        for (int oa = va; oa <= a.trunc_; ++oa) {
            const Poly& pa = a.c_[static_cast<std::size_t>(oa - a.min_)];
            if (pa.is_zero()) continue;
            for (int ob = vb; ob <= b.trunc_; ++ob) {
                if (oa + ob > trunc) break;
                const Poly& pb = b.c_[static_cast<std::size_t>(ob - b.min_)];
                if (pb.is_zero()) continue;
                c[static_cast<std::size_t>(oa + ob - mn)] =
                    c[static_cast<std::size_t>(oa + ob - mn)] + pa * pb;
            }
        }
        return EpsSeries(mn, trunc, std::move(c));
    }

    EpsSeries scaled(const Poly& p) const {
        EpsSeries out = *this;
        for (auto& q : out.c_) q = q * p;
        return out;
    }

    // Requires the lowest-order coefficient to be a unit (single monomial).
    EpsSeries inverse() const {
        int v = valuation();
        if (v > trunc_) throw ZeroDivisorSeries();
        const Poly& lowest = c_[static_cast<std::size_t>(v - min_)];
        if (!lowest.is_monomial()) throw NonUnitLowestCoeff();
        const auto& [lm, lc] = lowest.leading();
        Poly lead_inv = Poly::term(lm.inverse(), Rational(1) / lc);
        // u = series/(lead * eps^v) = 1 + t, invert by geometric series
        int tlen = trunc_ - v;  // u known to order tlen
        std::vector<Poly> ucoeffs(static_cast<std::size_t>(tlen + 1));
        for (int o = 0; o <= tlen; ++o) ucoeffs[static_cast<std::size_t>(o)] = coeff(v + o) * lead_inv;
        EpsSeries t(0, tlen, std::move(ucoeffs));
        t = t - EpsSeries::constant(Poly(Rational(1)), tlen);
        EpsSeries acc = EpsSeries::constant(Poly(Rational(1)), tlen);
        EpsSeries powt = EpsSeries::constant(Poly(Rational(1)), tlen);
        for (int i = 1; i <= tlen; ++i) {
            powt = powt * t;
            acc = (i % 2 == 0) ? acc + powt : acc - powt;
        }
        // result = lead_inv * eps^{-v} * acc
        EpsSeries out = acc.scaled(lead_inv);
        out.min_ -= v;
        out.trunc_ -= v;
        return out;
    }

    friend EpsSeries operator/(const EpsSeries& a, const EpsSeries& b) { return a * b.inverse(); }

    // Integer power (negative allowed through inverse()).
    EpsSeries pow(long e) const {
        if (e == 0) {
            return EpsSeries::constant(Poly(Rational(1)), trunc_ - std::min(0, min_));
        }
        EpsSeries base = e > 0 ? *this : inverse();
        long n = e > 0 ? e : -e;
        EpsSeries out = base;
        for (long i = 1; i < n; ++i) out = out * base;
        return out;
    }

    bool same_series(const EpsSeries& other) const {
        int trunc = std::min(trunc_, other.trunc_);
        for (int o = std::min(min_, other.min_); o <= trunc; ++o)
            if (!(coeff(o) == other.coeff(o))) return false;
        return true;
    }

  private:
    void tighten() {
        while (!c_.empty() && c_.front().is_zero()) {
            c_.erase(c_.begin());
            ++min_;
        }
        if (c_.empty()) min_ = trunc_ + 1;
    }

    int min_;
    int trunc_;
    std::vector<Poly> c_;
};

// Binomial coefficient C(L, j) = L(L-1)...(L-j+1)/j! as a polynomial in the
// colour symbols of the affine form L.
inline Poly binomial_coeff(const LinearForm& L, int j) {
    Poly out{Rational(1)};
    Rational fact(1);
    Poly lp = L.to_poly();
    for (int i = 0; i < j; ++i) {
        out = out * (lp - Poly(Rational(i)));
        fact *= Rational(i + 1);
    }
    return out.scaled(Rational(1) / fact);
}

// (1 + eps)^L truncated at `trunc`.
inline EpsSeries binomial_series(const LinearForm& L, int trunc) {
    std::vector<Poly> c(static_cast<std::size_t>(trunc + 1));
    for (int j = 0; j <= trunc; ++j) c[static_cast<std::size_t>(j)] = binomial_coeff(L, j);
    return EpsSeries(0, trunc, std::move(c));
}

// sqrt of a series with constant term 1 (min order 0).
inline EpsSeries series_sqrt(const EpsSeries& a) {
    if (a.valuation() < 0 || !(a.coeff(0).is_one())) throw NonUnitConstantTerm();
    int trunc = a.trunc_order();
    EpsSeries u = a - EpsSeries::constant(Poly(Rational(1)), trunc);
    EpsSeries acc = EpsSeries::constant(Poly(Rational(1)), trunc);
    EpsSeries powu = EpsSeries::constant(Poly(Rational(1)), trunc);
    LinearForm half = LinearForm::of(rat(1, 2));
    for (int j = 1; j <= trunc; ++j) {
        powu = powu * u;
        acc = acc + powu.scaled(binomial_coeff(half, j));
    }
    return acc;
}

// Extract the eps->0 limit; diverges when a nonzero coefficient sits below
// order zero, underflows when order zero is beyond the validity horizon.
Poly series_limit(const EpsSeries& a, const SymbolTable* table = nullptr);

} // namespace qg
