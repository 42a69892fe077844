#pragma once

#include "qg/rational.hpp"
#include "qg/symbols.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

namespace qg {

// Monomial with rational exponents: sorted (symbol, exponent) pairs,
// no zero exponents stored.
class Monomial {
  public:
    using Entry = std::pair<SymId, Rational>;

    Monomial() = default;
    explicit Monomial(std::vector<Entry> entries) : e_(std::move(entries)) {
        std::sort(e_.begin(), e_.end(),
                  [](const Entry& a, const Entry& b) { return a.first < b.first; });
        for (std::size_t i = 1; i < e_.size(); ++i)
            if (e_[i - 1].first == e_[i].first)
                throw std::invalid_argument("duplicate symbol in monomial");
        prune();
    }

    static Monomial unit() { return Monomial(); }
    static Monomial var(SymId s, Rational e = Rational(1)) {
        Monomial m;
        if (e != 0) m.e_.push_back({s, std::move(e)});
        return m;
    }

    bool is_unit() const { return e_.empty(); }
    const std::vector<Entry>& entries() const { return e_; }

    Rational exponent(SymId s) const {
        for (const auto& [sym, ex] : e_)
            if (sym == s) return ex;
        return Rational(0);
    }

    friend Monomial operator*(const Monomial& a, const Monomial& b) {
        Monomial out;
        std::size_t i = 0, j = 0;
        while (i < a.e_.size() || j < b.e_.size()) {
            if (j == b.e_.size() || (i < a.e_.size() && a.e_[i].first < b.e_[j].first)) {
                out.e_.push_back(a.e_[i++]);
            } else if (i == a.e_.size() || b.e_[j].first < a.e_[i].first) {
                out.e_.push_back(b.e_[j++]);
            } else {
                Rational e = a.e_[i].second + b.e_[j].second;
                if (e != 0) out.e_.push_back({a.e_[i].first, std::move(e)});
                ++i; ++j;
            }
        }
        return out;
    }

    Monomial pow(const Rational& k) const {
        Monomial out;
        if (k == 0) return out;
        for (const auto& [sym, ex] : e_) out.e_.push_back({sym, ex * k});
        return out;
    }

    Monomial inverse() const { return pow(Rational(-1)); }

    auto operator<=>(const Monomial& other) const {
        // degree-free lexicographic on the entry list; total and deterministic
        std::size_t n = std::min(e_.size(), other.e_.size());
        for (std::size_t i = 0; i < n; ++i) {
            if (e_[i].first != other.e_[i].first)
                return e_[i].first <=> other.e_[i].first;
            if (e_[i].second != other.e_[i].second)
                return e_[i].second < other.e_[i].second ? std::strong_ordering::less
                                                         : std::strong_ordering::greater;
        }
        return e_.size() <=> other.e_.size();
    }
    bool operator==(const Monomial& other) const { return e_ == other.e_; }

  private:
    void prune() {
        e_.erase(std::remove_if(e_.begin(), e_.end(),
                                [](const Entry& p) { return p.second == 0; }),
                 e_.end());
    }
    std::vector<Entry> e_;
};

// Multivariate Laurent polynomial: monomial -> nonzero rational coefficient.
class Poly {
  public:
    using Terms = std::map<Monomial, Rational>;

    Poly() = default;
    explicit Poly(Rational c) {
        if (c != 0) t_[Monomial::unit()] = std::move(c);
    }
    static Poly constant(Rational c) { return Poly(std::move(c)); }
    static Poly var(SymId s, Rational e = Rational(1)) {
        Poly p;
        p.t_[Monomial::var(s, std::move(e))] = Rational(1);
        return p;
    }
    static Poly term(Monomial m, Rational c) {
        Poly p;
        if (c != 0) p.t_[std::move(m)] = std::move(c);
        return p;
    }

    bool is_zero() const { return t_.empty(); }
    bool is_one() const {
        return t_.size() == 1 && t_.begin()->first.is_unit() && t_.begin()->second == 1;
    }
    // Nonzero and a single term (a unit of the Laurent ring, up to invertibility).
    bool is_monomial() const { return t_.size() == 1; }
    std::size_t term_count() const { return t_.size(); }
    const Terms& terms() const { return t_; }

    void add_term(const Monomial& m, const Rational& c) {
        if (c == 0) return;
        auto [it, fresh] = t_.try_emplace(m, c);
        if (!fresh) {
            it->second += c;
            if (it->second == 0) t_.erase(it);
        }
    }

    friend Poly operator+(const Poly& a, const Poly& b) {
        Poly out = a;
        for (const auto& [m, c] : b.t_) out.add_term(m, c);
        return out;
    }
    friend Poly operator-(const Poly& a, const Poly& b) {
        Poly out = a;
        for (const auto& [m, c] : b.t_) out.add_term(m, -c);
        return out;
    }
    Poly operator-() const {
        Poly out;
        for (const auto& [m, c] : t_) out.t_[m] = -c;
        return out;
    }
    friend Poly operator*(const Poly& a, const Poly& b) {
        Poly out;
        for (const auto& [ma, ca] : a.t_)
            for (const auto& [mb, cb] : b.t_) out.add_term(ma * mb, ca * cb);
        return out;
    }
    Poly scaled(const Rational& c) const {
        Poly out;
        if (c == 0) return out;
        for (const auto& [m, cc] : t_) out.t_[m] = cc * c;
        return out;
    }
    Poly times_monomial(const Monomial& m) const {
        Poly out;
        for (const auto& [mm, c] : t_) out.t_[mm * m] = c;
        return out;
    }

    bool operator==(const Poly& other) const { return t_ == other.t_; }

    // Leading term in the global monomial order (largest key).
    const std::pair<const Monomial, Rational>& leading() const {
        if (t_.empty()) throw std::logic_error("leading term of zero polynomial");
        return *t_.rbegin();
    }

    // Componentwise min of exponents over all terms; exponent 0 for symbols
    // missing from a term. Used to strip shared monomial content.
    Monomial content() const {
        if (t_.empty()) return Monomial::unit();
        std::map<SymId, Rational> lo;
        for (const auto& [m, c] : t_)
            for (const auto& [s, e] : m.entries()) lo.try_emplace(s, e);
        for (const auto& [m, c] : t_)
            for (auto& [s, e] : lo) e = std::min(e, m.exponent(s));
        std::vector<Monomial::Entry> entries;
        for (auto& [s, e] : lo)
            if (e != 0) entries.push_back({s, e});
        return Monomial(std::move(entries));
    }

    bool depends_on(SymId s) const {
        for (const auto& [m, c] : t_)
            if (m.exponent(s) != 0) return true;
        return false;
    }

  private:
    Terms t_;
};

} // namespace qg
