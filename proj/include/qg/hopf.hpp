#pragma once

#include "qg/ncalgebra.hpp"

#include <functional>

namespace qg {

// Structure data for one matrix Hopf algebra: defining relations, the
// T-matrix, the antipode matrix over the alphabet extended by inverse
// letters, and counit values per generator.
struct HopfSpec {
    std::string name;
    Alphabet alpha;                 // includes inverse letters
    RelationSet rels;               // defining relations
    RelationSet inverse_rels;       // two-sided inverse relations, "= 0" form
    TMatrixSpec T;
    std::vector<std::vector<NCPoly>> antipode;  // dim x dim
    std::map<GenId, Rational> counit;           // every letter needs a value
    std::vector<GenId> grouplike_letters;       // letters with Delta(x) = x (x) x (f, inverses)

    RelationSet all_rels() const {
        RelationSet out;
        out.name = rels.name + "+inverses";
        out.relations = rels.relations;
        for (const auto& r : inverse_rels.relations) out.relations.push_back(r);
        return out;
    }
};

// Two-leg tensor algebra: letters x:g (left leg) and y:g (right leg), both
// legs carrying the source relations, opposite-leg letters commuting.
struct TensorLegAlgebra {
    Alphabet alpha;
    RelationSet rels;
    std::map<GenId, GenId> left;   // source letter -> x-letter
    std::map<GenId, GenId> right;  // source letter -> y-letter
};

inline TensorLegAlgebra make_tensor_leg_algebra(const HopfSpec& spec) {
    TensorLegAlgebra t;
    for (const auto& n : spec.alpha.names()) t.alpha.declare("x:" + n);
    for (const auto& n : spec.alpha.names()) t.alpha.declare("y:" + n);
    for (std::size_t g = 0; g < spec.alpha.size(); ++g) {
        t.left[static_cast<GenId>(g)] = t.alpha.require("x:" + spec.alpha.name(static_cast<GenId>(g)));
        t.right[static_cast<GenId>(g)] = t.alpha.require("y:" + spec.alpha.name(static_cast<GenId>(g)));
    }
    t.rels.name = spec.name + "-two-leg";
    RelationSet all = spec.all_rels();
    for (const auto& r : all.relations) {
        t.rels.relations.push_back(r.renamed(t.left));
        t.rels.relations.push_back(r.renamed(t.right));
    }
    for (std::size_t g = 0; g < spec.alpha.size(); ++g)
        for (std::size_t hh = 0; hh < spec.alpha.size(); ++hh) {
            NCPoly yg = NCPoly::letter(t.right.at(static_cast<GenId>(g)));
            NCPoly xh = NCPoly::letter(t.left.at(static_cast<GenId>(hh)));
            t.rels.relations.push_back(yg * xh - xh * yg);
        }
    return t;
}

// Coproduct images in the two-leg algebra: matrix rule for T-letters,
// group-like rule for the declared group-like letters.
inline std::map<GenId, NCPoly> coproduct_images(const HopfSpec& spec, const TensorLegAlgebra& t) {
    std::map<GenId, NCPoly> img;
    int d = spec.T.dim;
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            const auto& e = spec.T.at(i, j);
            if (!std::holds_alternative<GenId>(e)) continue;
            GenId g = std::get<GenId>(e);
            NCPoly sum;
            for (int kk = 0; kk < d; ++kk)
                sum = sum + spec.T.poly_at(i, kk).renamed(t.left) *
                              spec.T.poly_at(kk, j).renamed(t.right);
            img[g] = sum;
        }
    for (GenId g : spec.grouplike_letters)
        img[g] = NCPoly::letter(t.left.at(g)) * NCPoly::letter(t.right.at(g));
    return img;
}

struct HopfCheckResult {
    bool pass = false;
    std::string witness;                       // description of the first failure
    std::vector<std::size_t> certificate_sizes;  // per verified identity
};

// Delta extends to an algebra map: Delta(rel) lies in the two-leg ideal.
inline HopfCheckResult check_coproduct(const HopfSpec& spec, int degree_bound,
                                       const SymbolTable& table) {
    TensorLegAlgebra t = make_tensor_leg_algebra(spec);
    auto img = coproduct_images(spec, t);
    HopfCheckResult out;
    out.pass = true;
    for (std::size_t i = 0; i < spec.rels.relations.size(); ++i) {
        NCPoly image = spec.rels.relations[i].mapped(img);
        MembershipResult mr = ideal_membership(image, t.rels, t.alpha, degree_bound);
        if (!mr.member) {
            out.pass = false;
            out.witness = "Delta(relation " + std::to_string(i) + ") escapes the two-leg ideal: " +
                          ncpoly_str(mr.residual, t.alpha, table);
            return out;
        }
        out.certificate_sizes.push_back(mr.certificate.size());
    }
    return out;
}

// Counit: relations vanish under the counit values, and (eps (x) id) Delta = id
// at the T-matrix level.
inline HopfCheckResult check_counit(const HopfSpec& spec, const SymbolTable& table) {
    HopfCheckResult out;
    out.pass = true;
    RelationSet all = spec.all_rels();
    for (std::size_t i = 0; i < all.relations.size(); ++i) {
        Scalar v = Scalar::zero();
        for (const auto& [w, c] : all.relations[i].terms()) {
            Rational coeff(1);
            bool zero = false;
            for (char ch : w) {
                auto it = spec.counit.find(static_cast<GenId>(static_cast<unsigned char>(ch)));
                if (it == spec.counit.end())
                    throw EngineError("counit value missing for a generator");
                if (it->second == 0) { zero = true; break; }
                coeff *= it->second;
            }
            if (!zero) v = v + c.scaled(coeff);
        }
        if (!v.is_zero()) {
            out.pass = false;
            out.witness = "relation " + std::to_string(i) + " has nonzero counit image: " +
                          scalar_str(v, table);
            return out;
        }
    }
    // (eps (x) id) Delta(T_ij) = T_ij
    int d = spec.T.dim;
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            NCPoly sum;
            for (int kk = 0; kk < d; ++kk) {
                const auto& e = spec.T.at(i, kk);
                Rational epsval(0);
                if (std::holds_alternative<TMatrixSpec::One>(e)) epsval = 1;
                else if (std::holds_alternative<GenId>(e)) epsval = spec.counit.at(std::get<GenId>(e));
                if (epsval != 0) sum = sum + spec.T.poly_at(kk, j).scaled(Scalar(epsval));
            }
            if (!(sum == spec.T.poly_at(i, j))) {
                out.pass = false;
                out.witness = "(eps x id) Delta failed at entry " + std::to_string(i) + "," +
                              std::to_string(j);
                return out;
            }
        }
    return out;
}

// S(T) T = T S(T) = I entrywise modulo the ideal with inverses adjoined.
inline HopfCheckResult check_antipode(const HopfSpec& spec, int degree_bound,
                                      const SymbolTable& table) {
    HopfCheckResult out;
    out.pass = true;
    RelationSet all = spec.all_rels();
    int d = spec.T.dim;
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            NCPoly st, ts;
            for (int kk = 0; kk < d; ++kk) {
                st = st + spec.antipode[static_cast<std::size_t>(i)][static_cast<std::size_t>(kk)] *
                              spec.T.poly_at(kk, j);
                ts = ts + spec.T.poly_at(i, kk) *
                              spec.antipode[static_cast<std::size_t>(kk)][static_cast<std::size_t>(j)];
            }
            NCPoly target = (i == j) ? NCPoly::one() : NCPoly::zero();
            for (auto* side : {&st, &ts}) {
                MembershipResult mr = ideal_membership(*side - target, all, spec.alpha, degree_bound);
                if (!mr.member) {
                    out.pass = false;
                    out.witness = std::string(side == &st ? "S(T)T" : "TS(T)") + " entry " +
                                  std::to_string(i) + "," + std::to_string(j) +
                                  " residual: " + ncpoly_str(mr.residual, spec.alpha, table);
                    return out;
                }
                out.certificate_sizes.push_back(mr.certificate.size());
            }
        }
    return out;
}

// Delta(x) - x (x) x in the two-leg ideal.
inline HopfCheckResult check_grouplike(const NCPoly& x, const HopfSpec& spec, int degree_bound,
                                       const SymbolTable& table) {
    TensorLegAlgebra t = make_tensor_leg_algebra(spec);
    auto img = coproduct_images(spec, t);
    NCPoly delta_x = x.mapped(img);
    NCPoly xx = x.renamed(t.left) * x.renamed(t.right);
    HopfCheckResult out;
    MembershipResult mr = ideal_membership(delta_x - xx, t.rels, t.alpha, degree_bound);
    out.pass = mr.member;
    if (!mr.member)
        out.witness = "Delta(x) - x(x)x residual: " + ncpoly_str(mr.residual, t.alpha, table);
    else
        out.certificate_sizes.push_back(mr.certificate.size());
    return out;
}

// (Delta (x) id) Delta = (id (x) Delta) Delta at matrix-coproduct level; a
// structural identity over three free legs, no relations needed.
inline bool check_coassociativity(const HopfSpec& spec) {
    int d = spec.T.dim;
    Alphabet triple;
    for (const char* pre : {"1:", "2:", "3:"})
        for (const auto& n : spec.alpha.names()) triple.declare(pre + n);
    auto leg = [&](int legno, int i, int j) {
        const auto& e = spec.T.at(i, j);
        if (std::holds_alternative<TMatrixSpec::Zero>(e)) return NCPoly::zero();
        if (std::holds_alternative<TMatrixSpec::One>(e)) return NCPoly::one();
        std::string nm = std::to_string(legno) + ":" + spec.alpha.name(std::get<GenId>(e));
        return NCPoly::letter(triple.require(nm));
    };
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            NCPoly lhs, rhs;
            for (int a = 0; a < d; ++a)
                for (int b = 0; b < d; ++b) {
                    // (Delta x id): split the first tensor factor again
                    lhs = lhs + leg(1, i, b) * leg(2, b, a) * leg(3, a, j);
                    // (id x Delta): split the second tensor factor
                    rhs = rhs + leg(1, i, a) * leg(2, a, b) * leg(3, b, j);
                }
            if (!(lhs == rhs)) return false;
        }
    return true;
}

// ---------- realisation morphisms ----------

struct MorphismSpec {
    std::string name;
    Alphabet source_alpha;
    RelationSet source_rels;
    Alphabet target_alpha;
    // target relations; may depend on N for variant targets
    std::function<RelationSet(int)> target_rels;
    // target letter -> word in the source algebra
    std::function<std::map<GenId, NCPoly>(int)> images;
    // applied to target relation coefficients (e.g. h -> m - N k)
    std::function<Bindings(int)> param_map;
    // applied to source relation coefficients (e.g. s -> U^{2N})
    std::function<Bindings(int)> source_param_map;
    int default_bound(int N) const { return 2 * N + 2; }
};

struct MorphismResult {
    bool pass = false;
    std::size_t failed_relation = 0;
    NCPoly residual;
    std::vector<std::size_t> certificate_sizes;
};

inline MorphismResult check_morphism(const MorphismSpec& spec, int N, const SymbolTable& table,
                                     int degree_bound = -1) {
    if (N == 0) throw InvalidN();
    if (degree_bound < 0) degree_bound = spec.default_bound(N);
    RelationSet source = spec.source_rels;
    if (spec.source_param_map) {
        Bindings sb = spec.source_param_map(N);
        if (!sb.empty()) {
            RelationSet mapped;
            mapped.name = source.name;
            for (const auto& rl : source.relations)
                mapped.relations.push_back(rl.substituted(sb, table));
            source = std::move(mapped);
        }
    }
    Bindings pm = spec.param_map ? spec.param_map(N) : Bindings{};
    auto img = spec.images(N);
    RelationSet targets = spec.target_rels(N);
    MorphismResult out;
    out.pass = true;
    for (std::size_t i = 0; i < targets.relations.size(); ++i) {
        NCPoly mappedrel = targets.relations[i].substituted(pm, table).mapped(img);
        MembershipResult mr = ideal_membership(mappedrel, source, spec.source_alpha, degree_bound);
        if (!mr.member) {
            out.pass = false;
            out.failed_relation = i;
            out.residual = mr.residual;
            return out;
        }
        out.certificate_sizes.push_back(mr.certificate.size());
    }
    return out;
}

} // namespace qg
