#pragma once

#include "qg/matrix.hpp"

namespace qg {

// One contraction recipe: the similarity transform, the singular eta
// substitution, and the coupled series bindings used for the limit.
struct TransformPlan {
    std::string id;
    ParamMatrix transform;      // g (2x2) or G = diag(g, 1) (3x3), with eta symbolic
    SymId eta = -1;
    Scalar eta_value;           // m/(1-r) or m/(r-1)
    SeriesBindings bindings;    // r -> 1+eps, coupled colours, symbolic powers
    std::string notes;          // e.g. recorded sign conventions
};

inline ParamMatrix build_transform(int dim, SymId eta_sym) {
    if (dim == 2) {
        ParamMatrix g(2, Basis::single(2));
        g.at(0, 0) = Scalar::one();
        g.at(0, 1) = Scalar::var(eta_sym);
        g.at(1, 1) = Scalar::one();
        return g;
    }
    if (dim == 3) {
        ParamMatrix G(3, Basis::single(3));
        G.at(0, 0) = Scalar::one();
        G.at(0, 1) = Scalar::var(eta_sym);
        G.at(1, 1) = Scalar::one();
        G.at(2, 2) = Scalar::one();
        return G;
    }
    throw UnsupportedDimension("transform defined for carrier dimensions 2 and 3 only");
}

// (G (x) G)^{-1} R (G (x) G), exactly. R must share the Kronecker basis of G(x)G.
inline ParamMatrix similarity(const ParamMatrix& R, const ParamMatrix& G) {
    ParamMatrix GG = kron(G, G);
    if (GG.dim != R.dim) throw DimensionMismatch("similarity: dim(R) != dim(G)^2");
    if (!(GG.basis == R.basis))
        throw BasisOrderingMismatch("similarity: R basis must match the G(x)G tensor basis");
    return inverse(GG) * R * GG;
}

struct Divergence {
    int row = 0, col = 0;
    int order = 0;            // offending negative order
    std::string coefficient;  // printed witness
};

struct ContractionResult {
    ParamMatrix pre_limit;                // exact, eta substituted
    ParamMatrix limit;                    // present iff divergences empty
    std::vector<Divergence> divergences;
    bool ok() const { return divergences.empty(); }
};

inline ContractionResult contract(const ParamMatrix& R, const TransformPlan& plan,
                                  const SymbolTable& table) {
    ParamMatrix sim = similarity(R, plan.transform);
    Bindings etab;
    etab[plan.eta] = plan.eta_value;
    ContractionResult res;
    res.pre_limit = sim.substituted(etab, table);
    res.limit = ParamMatrix(res.pre_limit.dim, res.pre_limit.basis);
    for (int i = 0; i < res.pre_limit.dim; ++i)
        for (int j = 0; j < res.pre_limit.dim; ++j) {
            const Scalar& entry = res.pre_limit.at(i, j);
            if (entry.is_zero()) continue;
            EpsSeries ser = to_series(entry, plan.bindings);
            try {
                res.limit.at(i, j) = Scalar(series_limit_or_throw(ser));
            } catch (const DivergentLimit& e) {
                res.divergences.push_back(
                    {i, j, e.order, poly_str(ser.coeff(e.order), table)});
            }
        }
    if (!res.divergences.empty()) res.limit = ParamMatrix();
    return res;
}

struct Mismatch {
    int row = 0, col = 0;
    Scalar got, expected;
};

struct VerifyResult {
    bool pass = false;
    std::vector<Mismatch> mismatches;
};

inline VerifyResult verify_entrywise(const ParamMatrix& got, const ParamMatrix& expected) {
    if (got.dim != expected.dim) throw DimensionMismatch("verify: dimension mismatch");
    if (!(got.basis == expected.basis))
        throw BasisOrderingMismatch("verify: basis orderings differ");
    VerifyResult out;
    out.pass = true;
    for (int i = 0; i < got.dim; ++i)
        for (int j = 0; j < got.dim; ++j)
            if (!(got.at(i, j) == expected.at(i, j))) {
                out.pass = false;
                out.mismatches.push_back({i, j, got.at(i, j), expected.at(i, j)});
            }
    return out;
}

inline VerifyResult verify_against(const ContractionResult& result, const ParamMatrix& target) {
    if (!result.ok()) {
        VerifyResult out;
        out.pass = false;
        return out;
    }
    return verify_entrywise(result.limit, target);
}

// Series-level comparison to the plan's truncation order.
inline VerifyResult verify_series_level(const ParamMatrix& got, const ParamMatrix& expected,
                                        const SeriesBindings& bindings) {
    if (got.dim != expected.dim) throw DimensionMismatch("verify: dimension mismatch");
    if (!(got.basis == expected.basis))
        throw BasisOrderingMismatch("verify: basis orderings differ");
    VerifyResult out;
    out.pass = true;
    for (int i = 0; i < got.dim; ++i)
        for (int j = 0; j < got.dim; ++j) {
            EpsSeries a = to_series(got.at(i, j), bindings);
            EpsSeries b = to_series(expected.at(i, j), bindings);
            if (!a.same_series(b)) {
                out.pass = false;
                out.mismatches.push_back({i, j, got.at(i, j), expected.at(i, j)});
            }
        }
    return out;
}

} // namespace qg
