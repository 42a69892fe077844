#pragma once

#include "qg/matrix.hpp"
#include "qg/ncpoly.hpp"

#include <optional>

namespace qg {

// ---------- RTT ----------

// Entries of R*T1*T2 - T2*T1*R with T1 = T (x) 1, T2 = 1 (x) T.
// R must be in row-major tensor order with dim(R) = dim(T)^2.
// For coloured relations pass distinct T matrices; Tfirst rides leg 1.
inline RelationSet rtt_relations(const ParamMatrix& R, const TMatrixSpec& Tfirst,
                                 const TMatrixSpec& Tsecond, std::string name = "rtt") {
    int d = Tfirst.dim;
    if (Tsecond.dim != d || R.dim != d * d)
        throw DimensionMismatch("rtt: R must be dim(T)^2");
    R.require_row_major(d);
    RelationSet out;
    out.name = std::move(name);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            for (int k = 0; k < d; ++k)
                for (int l = 0; l < d; ++l) {
                    NCPoly lhs, rhs;
                    for (int a = 0; a < d; ++a)
                        for (int b = 0; b < d; ++b) {
                            const Scalar& cl = R.at(i * d + j, a * d + b);
                            if (!cl.is_zero())
                                lhs = lhs + (Tfirst.poly_at(a, k) * Tsecond.poly_at(b, l)).scaled(cl);
                            const Scalar& cr = R.at(a * d + b, k * d + l);
                            if (!cr.is_zero())
                                rhs = rhs + (Tsecond.poly_at(j, b) * Tfirst.poly_at(i, a)).scaled(cr);
                        }
                    NCPoly rel = lhs - rhs;
                    if (!rel.is_zero()) out.relations.push_back(std::move(rel));
                }
    return out;
}

inline RelationSet coloured_rtt_relations(const ColouredFamily& F, const SymbolTable& table,
                                          SymId c1, SymId c2, const TMatrixSpec& T1,
                                          const TMatrixSpec& T2, std::string name = "coloured-rtt") {
    ParamMatrix R = F.instantiate(table, c1, c2);
    return rtt_relations(R, T1, T2, std::move(name));
}

// ---------- span comparison (homogeneous linear algebra) ----------

struct SpanCertificate {
    // expresses relation i of the left set as sum over (j, coeff) of the right set
    std::vector<std::vector<std::pair<std::size_t, Scalar>>> combinations;
};

struct SpanEqualResult {
    bool equal = false;
    std::optional<std::size_t> witness_index;  // index of unprovable relation
    bool witness_in_first = false;
    SpanCertificate first_in_second;
    SpanCertificate second_in_first;
};

namespace detail {

// Row echelon over the scalar field keyed by leading word, with tracked
// combinations in terms of the generating set.
class WordEchelon {
  public:
    using Combo = std::map<std::size_t, Scalar>;

    void insert(NCPoly row, std::size_t tag) {
        Combo combo;
        combo[tag] = Scalar::one();
        insert_with_combo(std::move(row), std::move(combo));
    }

    void insert_with_combo(NCPoly row, Combo combo) {
        while (!row.is_zero()) {
            const auto& [lead, c] = row.leading();
            auto it = rows_.find(lead);
            if (it == rows_.end()) {
                Scalar inv = c.inverse();
                rows_.emplace(lead, Entry{row.scaled(inv), scale_combo(combo, inv)});
                return;
            }
            Scalar factor = c;
            row = row - it->second.poly.scaled(factor);
            subtract_combo(combo, it->second.combo, factor);
        }
    }

    // Reduce p; returns residual and the combination explaining p - residual.
    std::pair<NCPoly, Combo> reduce(NCPoly p) const {
        Combo used;
        while (!p.is_zero()) {
            const auto& [lead, c] = p.leading();
            auto it = rows_.find(lead);
            if (it == rows_.end()) break;
            Scalar factor = c;
            p = p - it->second.poly.scaled(factor);
            for (const auto& [tag, cc] : it->second.combo) {
                auto [jt, fresh] = used.try_emplace(tag, cc * factor);
                if (!fresh) {
                    jt->second = jt->second + cc * factor;
                    if (jt->second.is_zero()) used.erase(jt);
                }
            }
        }
        return {std::move(p), std::move(used)};
    }

    std::size_t size() const { return rows_.size(); }

  private:
    struct Entry {
        NCPoly poly;
        Combo combo;
    };
    static Combo scale_combo(const Combo& c, const Scalar& k) {
        Combo out;
        for (const auto& [tag, v] : c) out[tag] = v * k;
        return out;
    }
    static void subtract_combo(Combo& c, const Combo& other, const Scalar& k) {
        for (const auto& [tag, v] : other) {
            auto [it, fresh] = c.try_emplace(tag, -(v * k));
            if (!fresh) {
                it->second = it->second - v * k;
                if (it->second.is_zero()) c.erase(it);
            }
        }
    }
    std::map<Word, Entry, DegLex> rows_;
};

} // namespace detail

inline SpanEqualResult span_equal(const RelationSet& s1, const RelationSet& s2) {
    int d1 = -1, d2 = -1;
    for (const auto& r : s1.relations)
        if (!r.is_zero()) d1 = std::max(d1, r.degree());
    for (const auto& r : s2.relations)
        if (!r.is_zero()) d2 = std::max(d2, r.degree());
    int d = std::max(d1, d2);
    if (!s1.homogeneous_of_degree(d) || !s2.homogeneous_of_degree(d)) throw InhomogeneousSet();

    SpanEqualResult res;
    auto contain = [](const RelationSet& inner, const RelationSet& outer, SpanCertificate& cert)
        -> std::optional<std::size_t> {
        detail::WordEchelon ech;
        for (std::size_t j = 0; j < outer.relations.size(); ++j)
            ech.insert(outer.relations[j], j);
        cert.combinations.clear();
        for (std::size_t i = 0; i < inner.relations.size(); ++i) {
            auto [residual, combo] = ech.reduce(inner.relations[i]);
            if (!residual.is_zero()) return i;
            std::vector<std::pair<std::size_t, Scalar>> comb(combo.begin(), combo.end());
            cert.combinations.push_back(std::move(comb));
        }
        return std::nullopt;
    };
    if (auto w = contain(s1, s2, res.first_in_second)) {
        res.equal = false;
        res.witness_index = w;
        res.witness_in_first = true;
        return res;
    }
    if (auto w = contain(s2, s1, res.second_in_first)) {
        res.equal = false;
        res.witness_index = w;
        res.witness_in_first = false;
        return res;
    }
    res.equal = true;
    return res;
}

// ---------- bounded-degree ideal membership ----------

struct CertTerm {
    Scalar coeff;
    Word left;
    std::size_t rel_index;
    Word right;
};

struct MembershipResult {
    bool member = false;
    std::vector<CertTerm> certificate;  // p = sum coeff * left*rel*right
    NCPoly residual;                    // nonzero normal form when not member
};

// Verifies a certificate by expansion; used by tests and report consumers.
inline bool certificate_valid(const NCPoly& p, const RelationSet& rels,
                              const std::vector<CertTerm>& cert) {
    NCPoly acc;
    for (const auto& ct : cert)
        acc = acc + rels.relations.at(ct.rel_index).shifted(ct.left, ct.right).scaled(ct.coeff);
    return acc == p;
}

namespace detail {

// Rewriting fast path: orient every relation by its leading word and reduce.
// Sound when it reaches zero; inconclusive otherwise.
class Rewriter {
  public:
    explicit Rewriter(const RelationSet& rels) {
        for (std::size_t i = 0; i < rels.relations.size(); ++i) {
            const NCPoly& r = rels.relations[i];
            if (r.is_zero()) continue;
            const auto& [lead, c] = r.leading();
            Rule rule;
            rule.rel_index = i;
            rule.lead_coeff = c;
            rule.rel = r;
            rules_.emplace(lead, std::move(rule));
        }
    }

    std::optional<std::vector<CertTerm>> reduce_to_zero(NCPoly p, long max_steps = 200000) const {
        std::vector<CertTerm> cert;
        long steps = 0;
        while (!p.is_zero()) {
            if (++steps > max_steps) return std::nullopt;
            bool hit = false;
            // reduce the largest reducible word
            for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
                const Word& w = it->first;
                for (const auto& [lhs, rule] : rules_) {
                    std::size_t pos = w.find(lhs);
                    if (pos == Word::npos) continue;
                    Word left = w.substr(0, pos);
                    Word right = w.substr(pos + lhs.size());
                    Scalar factor = it->second / rule.lead_coeff;
                    p = p - rule.rel.shifted(left, right).scaled(factor);
                    cert.push_back({factor, left, rule.rel_index, right});
                    hit = true;
                    break;
                }
                if (hit) break;
            }
            if (!hit) return std::nullopt;
        }
        return cert;
    }

  private:
    struct Rule {
        std::size_t rel_index;
        Scalar lead_coeff;
        NCPoly rel;
    };
    std::map<Word, Rule, DegLex> rules_;
};

// Exhaustive echelon of all shifts w*rel*w' with deg <= bound. This is the
// source of truth; certificates are tracked through every elimination step.
class ShiftEchelon {
  public:
    ShiftEchelon(const RelationSet& rels, const Alphabet& alpha, int bound)
        : rels_(rels) {
        std::vector<std::vector<Word>> words_by_len(static_cast<std::size_t>(bound) + 1);
        words_by_len[0] = {Word()};
        for (int len = 1; len <= bound; ++len)
            for (const Word& w : words_by_len[static_cast<std::size_t>(len - 1)])
                for (std::size_t g = 0; g < alpha.size(); ++g)
                    words_by_len[static_cast<std::size_t>(len)].push_back(w + static_cast<char>(g));
        for (std::size_t i = 0; i < rels.relations.size(); ++i) {
            const NCPoly& r = rels.relations[i];
            if (r.is_zero()) continue;
            int dr = r.degree();
            for (int dl = 0; dl + dr <= bound; ++dl)
                for (int dright = 0; dl + dr + dright <= bound; ++dright)
                    for (const Word& wl : words_by_len[static_cast<std::size_t>(dl)])
                        for (const Word& wr : words_by_len[static_cast<std::size_t>(dright)]) {
                            detail::WordEchelon::Combo combo;
                            combo[shift_tag(i, wl, wr)] = Scalar::one();
                            ech_.insert_with_combo(r.shifted(wl, wr), std::move(combo));
                        }
        }
    }

    MembershipResult test(const NCPoly& p) {
        MembershipResult out;
        auto [residual, combo] = ech_.reduce(p);
        if (!residual.is_zero()) {
            out.member = false;
            out.residual = std::move(residual);
            return out;
        }
        out.member = true;
        for (const auto& [tag, c] : combo) {
            const auto& [idx, wl, wr] = shifts_.at(tag);
            out.certificate.push_back({c, wl, idx, wr});
        }
        return out;
    }

  private:
    std::size_t shift_tag(std::size_t rel, const Word& wl, const Word& wr) {
        auto key = std::make_tuple(rel, wl, wr);
        auto it = tags_.find(key);
        if (it != tags_.end()) return it->second;
        std::size_t tag = shifts_.size();
        shifts_.push_back(key);
        tags_[key] = tag;
        return tag;
    }
    const RelationSet& rels_;
    detail::WordEchelon ech_;
    std::vector<std::tuple<std::size_t, Word, Word>> shifts_;
    std::map<std::tuple<std::size_t, Word, Word>, std::size_t> tags_;
};

} // namespace detail

// Decides p in span{ w * rel * w' : deg <= bound } by exact linear algebra,
// with a rewriting fast path. Certificates expand back to p exactly.
inline MembershipResult ideal_membership(const NCPoly& p, const RelationSet& rels,
                                         const Alphabet& alpha, int bound) {
    if (p.is_zero()) return {true, {}, NCPoly::zero()};
    if (p.degree() > bound)
        throw DegreeBoundExceeded("polynomial degree exceeds membership bound");
    detail::Rewriter rw(rels);
    if (auto cert = rw.reduce_to_zero(p)) {
        MembershipResult out;
        out.member = true;
        out.certificate = std::move(*cert);
        return out;
    }
    detail::ShiftEchelon ech(rels, alpha, bound);
    return ech.test(p);
}

// ---------- exchange symmetry ----------

inline bool exchange_symmetry_check(const RelationSet& s, const std::map<GenId, GenId>& letter_swap,
                                    const Bindings& coeff_swap, const SymbolTable& table) {
    RelationSet swapped;
    swapped.name = s.name + "-swapped";
    for (const auto& r : s.relations)
        swapped.relations.push_back(r.renamed(letter_swap).substituted(coeff_swap, table));
    return span_equal(s, swapped).equal;
}

} // namespace qg
