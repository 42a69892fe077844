#pragma once

#include "qg/printer.hpp"
#include "qg/scalar_ops.hpp"

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

namespace qg {

using GenId = std::uint8_t;

// Generator alphabet of one free algebra. Order of declaration fixes the
// monomial order used by elimination, so keep it deterministic.
class Alphabet {
  public:
    GenId declare(const std::string& name) {
        auto it = index_.find(name);
        if (it != index_.end()) return it->second;
        if (names_.size() >= 250) throw std::length_error("alphabet too large");
        GenId id = static_cast<GenId>(names_.size());
        names_.push_back(name);
        index_[name] = id;
        return id;
    }
    std::optional<GenId> find(const std::string& name) const {
        auto it = index_.find(name);
        if (it == index_.end()) return std::nullopt;
        return it->second;
    }
    GenId require(const std::string& name) const {
        auto id = find(name);
        if (!id) throw std::invalid_argument("unknown generator: " + name);
        return *id;
    }
    const std::string& name(GenId g) const { return names_.at(g); }
    std::size_t size() const { return names_.size(); }
    const std::vector<std::string>& names() const { return names_; }

  private:
    std::vector<std::string> names_;
    std::map<std::string, GenId> index_;
};

// Word in the free monoid; bytes are generator ids.
using Word = std::string;

// degree-lexicographic order
struct DegLex {
    bool operator()(const Word& a, const Word& b) const {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    }
};

// Element of the free algebra with Scalar coefficients.
class NCPoly {
  public:
    using Terms = std::map<Word, Scalar, DegLex>;

    NCPoly() = default;
    static NCPoly zero() { return NCPoly(); }
    static NCPoly one() { return scalar(Scalar::one()); }
    static NCPoly scalar(Scalar c) {
        NCPoly p;
        if (!c.is_zero()) p.t_[Word()] = std::move(c);
        return p;
    }
    static NCPoly letter(GenId g) {
        NCPoly p;
        p.t_[Word(1, static_cast<char>(g))] = Scalar::one();
        return p;
    }
    static NCPoly word(Word w, Scalar c = Scalar::one()) {
        NCPoly p;
        if (!c.is_zero()) p.t_[std::move(w)] = std::move(c);
        return p;
    }

    bool is_zero() const { return t_.empty(); }
    const Terms& terms() const { return t_; }
    std::size_t term_count() const { return t_.size(); }
    int degree() const { return t_.empty() ? -1 : static_cast<int>(t_.rbegin()->first.size()); }
    bool homogeneous() const {
        if (t_.empty()) return true;
        std::size_t d = t_.begin()->first.size();
        for (const auto& [w, c] : t_)
            if (w.size() != d) return false;
        return true;
    }
    const std::pair<const Word, Scalar>& leading() const {
        if (t_.empty()) throw std::logic_error("leading term of zero NC polynomial");
        return *t_.rbegin();
    }

    void add_term(const Word& w, const Scalar& c) {
        if (c.is_zero()) return;
        auto [it, fresh] = t_.try_emplace(w, c);
        if (!fresh) {
            it->second = it->second + c;
            if (it->second.is_zero()) t_.erase(it);
        }
    }

    friend NCPoly operator+(const NCPoly& a, const NCPoly& b) {
        NCPoly out = a;
        for (const auto& [w, c] : b.t_) out.add_term(w, c);
        return out;
    }
    friend NCPoly operator-(const NCPoly& a, const NCPoly& b) {
        NCPoly out = a;
        for (const auto& [w, c] : b.t_) out.add_term(w, -c);
        return out;
    }
    NCPoly operator-() const {
        NCPoly out;
        for (const auto& [w, c] : t_) out.t_[w] = -c;
        return out;
    }
    friend NCPoly operator*(const NCPoly& a, const NCPoly& b) {
        NCPoly out;
        for (const auto& [wa, ca] : a.t_)
            for (const auto& [wb, cb] : b.t_) out.add_term(wa + wb, ca * cb);
        return out;
    }
    NCPoly scaled(const Scalar& c) const {
        NCPoly out;
        if (c.is_zero()) return out;
        for (const auto& [w, cc] : t_) out.t_[w] = cc * c;
        return out;
    }
    NCPoly shifted(const Word& left, const Word& right) const {
        NCPoly out;
        for (const auto& [w, c] : t_) out.t_[left + w + right] = c;
        return out;
    }
    NCPoly pow(int n) const {
        NCPoly out = one();
        for (int i = 0; i < n; ++i) out = out * *this;
        return out;
    }

    // coefficient-wise scalar substitution (parameter maps)
    NCPoly substituted(const Bindings& b, const SymbolTable& table) const {
        NCPoly out;
        for (const auto& [w, c] : t_) out.add_term(w, substitute(c, b, table));
        return out;
    }

    // generator-wise mapping into another algebra (morphisms, leg copies)
    NCPoly mapped(const std::map<GenId, NCPoly>& images) const {
        NCPoly out;
        for (const auto& [w, c] : t_) {
            NCPoly prod = NCPoly::scalar(c);
            for (char ch : w) prod = prod * images.at(static_cast<GenId>(static_cast<unsigned char>(ch)));
            out = out + prod;
        }
        return out;
    }

    // letter renaming within one alphabet
    NCPoly renamed(const std::map<GenId, GenId>& ren) const {
        NCPoly out;
        for (const auto& [w, c] : t_) {
            Word nw = w;
            for (char& ch : nw) {
                auto it = ren.find(static_cast<GenId>(static_cast<unsigned char>(ch)));
                if (it != ren.end()) ch = static_cast<char>(it->second);
            }
            out.add_term(nw, c);
        }
        return out;
    }

    bool operator==(const NCPoly& other) const {
        if (t_.size() != other.t_.size()) return false;
        auto it = t_.begin();
        auto jt = other.t_.begin();
        for (; it != t_.end(); ++it, ++jt) {
            if (it->first != jt->first) return false;
            if (!(it->second == jt->second)) return false;
        }
        return true;
    }

  private:
    Terms t_;
};

inline std::string word_str(const Word& w, const Alphabet& alpha) {
    if (w.empty()) return "1";
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) out += "*";
        out += alpha.name(static_cast<GenId>(static_cast<unsigned char>(w[i])));
    }
    return out;
}

inline std::string ncpoly_str(const NCPoly& p, const Alphabet& alpha, const SymbolTable& t) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        const auto& [w, c] = *it;
        if (!first) os << " + ";
        first = false;
        if (w.empty()) {
            os << "(" << scalar_str(c, t) << ")";
        } else if (c.is_one()) {
            os << word_str(w, alpha);
        } else {
            os << "(" << scalar_str(c, t) << ")*" << word_str(w, alpha);
        }
    }
    return os.str();
}

// Matrix of generators; entries are literal zero, literal one, or a letter.
struct TMatrixSpec {
    struct Zero {};
    struct One {};
    using Entry = std::variant<Zero, One, GenId>;

    int dim = 0;
    std::vector<Entry> entries;  // row-major

    static TMatrixSpec make(int d) {
        TMatrixSpec t;
        t.dim = d;
        t.entries.assign(static_cast<std::size_t>(d) * d, Zero{});
        return t;
    }
    Entry& at(int i, int j) { return entries[static_cast<std::size_t>(i) * dim + j]; }
    const Entry& at(int i, int j) const { return entries[static_cast<std::size_t>(i) * dim + j]; }

    NCPoly poly_at(int i, int j) const {
        const Entry& e = at(i, j);
        if (std::holds_alternative<Zero>(e)) return NCPoly::zero();
        if (std::holds_alternative<One>(e)) return NCPoly::one();
        return NCPoly::letter(std::get<GenId>(e));
    }
};

// A list of elements read as "= 0".
struct RelationSet {
    std::string name;
    std::string source;  // free-text provenance note
    std::vector<NCPoly> relations;

    bool homogeneous_of_degree(int d) const {
        for (const auto& r : relations) {
            if (!r.homogeneous()) return false;
            if (!r.is_zero() && r.degree() != d) return false;
        }
        return true;
    }
};

} // namespace qg
