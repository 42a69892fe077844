#pragma once

#include "qg/errors.hpp"
#include "qg/printer.hpp"
#include "qg/scalar_ops.hpp"

#include <optional>
#include <string>
#include <vector>

namespace qg {

// Ordered basis labels. The paper uses two different orderings for its 9x9
// matrices; every matrix carries its ordering and reorder() is the only
// conversion path.
struct Basis {
    std::string name;
    std::vector<std::string> labels;

    bool operator==(const Basis& other) const { return labels == other.labels; }

    static Basis row_major(int d, std::string nm = "") {
        Basis b;
        b.name = nm.empty() ? ("rowmajor" + std::to_string(d)) : std::move(nm);
        for (int i = 1; i <= d; ++i)
            for (int j = 1; j <= d; ++j)
                b.labels.push_back(std::to_string(i) + std::to_string(j));
        return b;
    }
    static Basis single(int d, std::string nm = "") {
        Basis b;
        b.name = nm.empty() ? ("std" + std::to_string(d)) : std::move(nm);
        for (int i = 1; i <= d; ++i) b.labels.push_back(std::to_string(i));
        return b;
    }
    // Paper's Sec. III block ordering: (11),(12),(21),(22),(13),(23),(31),(32),(33)
    static Basis block9() {
        Basis b;
        b.name = "block3";
        b.labels = {"11", "12", "21", "22", "13", "23", "31", "32", "33"};
        return b;
    }
};

class ParamMatrix {
  public:
    int dim = 0;
    Basis basis;
    std::vector<Scalar> e;  // row-major entries, dim*dim

    ParamMatrix() = default;
    ParamMatrix(int d, Basis b) : dim(d), basis(std::move(b)) {
        if (static_cast<int>(basis.labels.size()) != d)
            throw BasisOrderingMismatch("basis label count != dim");
        e.assign(static_cast<std::size_t>(d) * d, Scalar::zero());
    }

    static ParamMatrix identity(int d, Basis b) {
        ParamMatrix m(d, std::move(b));
        for (int i = 0; i < d; ++i) m.at(i, i) = Scalar::one();
        return m;
    }

    Scalar& at(int i, int j) { return e[static_cast<std::size_t>(i) * dim + j]; }
    const Scalar& at(int i, int j) const { return e[static_cast<std::size_t>(i) * dim + j]; }

    bool is_row_major(int d) const {
        return dim == d * d && basis == Basis::row_major(d);
    }
    void require_row_major(int d) const {
        if (!is_row_major(d))
            throw BasisOrderingMismatch("operation requires row-major tensor basis of leg dimension " +
                                        std::to_string(d));
    }

    friend ParamMatrix operator*(const ParamMatrix& a, const ParamMatrix& b) {
        if (a.dim != b.dim) throw DimensionMismatch("matrix product dimension mismatch");
        ParamMatrix out(a.dim, a.basis);
        for (int i = 0; i < a.dim; ++i)
            for (int k = 0; k < a.dim; ++k) {
                const Scalar& aik = a.at(i, k);
                if (aik.is_zero()) continue;
                for (int j = 0; j < a.dim; ++j) {
                    const Scalar& bkj = b.at(k, j);
                    if (bkj.is_zero()) continue;
                    out.at(i, j) = out.at(i, j) + aik * bkj;
                }
            }
        return out;
    }
    friend ParamMatrix operator-(const ParamMatrix& a, const ParamMatrix& b) {
        if (a.dim != b.dim) throw DimensionMismatch("matrix difference dimension mismatch");
        ParamMatrix out(a.dim, a.basis);
        for (std::size_t i = 0; i < a.e.size(); ++i) out.e[i] = a.e[i] - b.e[i];
        return out;
    }

    bool is_zero() const {
        for (const auto& s : e)
            if (!s.is_zero()) return false;
        return true;
    }
    bool is_identity() const {
        for (int i = 0; i < dim; ++i)
            for (int j = 0; j < dim; ++j) {
                if (i == j && !at(i, j).is_one()) return false;
                if (i != j && !at(i, j).is_zero()) return false;
            }
        return true;
    }

    ParamMatrix substituted(const Bindings& b, const SymbolTable& table) const {
        ParamMatrix out(dim, basis);
        for (std::size_t i = 0; i < e.size(); ++i) out.e[i] = substitute(e[i], b, table);
        return out;
    }

    // entrywise comparison; entries compared by cross-multiplication
    friend bool operator==(const ParamMatrix& a, const ParamMatrix& b) {
        if (a.dim != b.dim) return false;
        for (std::size_t i = 0; i < a.e.size(); ++i)
            if (!(a.e[i] == b.e[i])) return false;
        return true;
    }
};

inline ParamMatrix kron(const ParamMatrix& A, const ParamMatrix& B) {
    int d = A.dim * B.dim;
    Basis basis;
    basis.name = A.basis.name + "(x)" + B.basis.name;
    for (const auto& la : A.basis.labels)
        for (const auto& lb : B.basis.labels) basis.labels.push_back(la + lb);
    ParamMatrix out(d, std::move(basis));
    for (int i = 0; i < A.dim; ++i)
        for (int j = 0; j < A.dim; ++j) {
            if (A.at(i, j).is_zero()) continue;
            for (int k = 0; k < B.dim; ++k)
                for (int l = 0; l < B.dim; ++l) {
                    if (B.at(k, l).is_zero()) continue;
                    out.at(i * B.dim + k, j * B.dim + l) = A.at(i, j) * B.at(k, l);
                }
        }
    return out;
}

// Conjugate by the permutation that maps the matrix's basis onto `target`:
// out[i][j] = in[src(i)][src(j)] where src(i) is the position of target
// label i in the input basis.
inline ParamMatrix reorder(const ParamMatrix& R, const Basis& target) {
    if (target.labels.size() != R.basis.labels.size())
        throw InvalidPermutation("reorder: label count mismatch");
    std::vector<int> src(R.basis.labels.size());
    for (std::size_t i = 0; i < target.labels.size(); ++i) {
        auto it = std::find(R.basis.labels.begin(), R.basis.labels.end(), target.labels[i]);
        if (it == R.basis.labels.end())
            throw InvalidPermutation("reorder: label '" + target.labels[i] + "' missing");
        src[i] = static_cast<int>(it - R.basis.labels.begin());
    }
    std::vector<bool> seen(src.size(), false);
    for (int s : src) {
        if (seen[static_cast<std::size_t>(s)]) throw InvalidPermutation("reorder: duplicate label");
        seen[static_cast<std::size_t>(s)] = true;
    }
    ParamMatrix out(R.dim, target);
    for (int i = 0; i < R.dim; ++i)
        for (int j = 0; j < R.dim; ++j) out.at(i, j) = R.at(src[i], src[j]);
    return out;
}

enum class Legs { L12, L13, L23 };

// Embed a d^2 x d^2 matrix into legs of a threefold product (row-major).
inline ParamMatrix embed(const ParamMatrix& R, Legs legs, int d) {
    R.require_row_major(d);
    int n = d * d * d;
    ParamMatrix out(n, Basis::single(n, "triple" + std::to_string(d)));
    auto index = [d](int i, int j, int k) { return (i * d + j) * d + k; };
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            for (int k = 0; k < d; ++k)
                for (int a = 0; a < d; ++a)
                    for (int b = 0; b < d; ++b) {
                        const Scalar& v = R.at(a * d + b, [&] {
                            switch (legs) {
                                case Legs::L12: return i * d + j;
                                case Legs::L13: return i * d + k;
                                case Legs::L23: return j * d + k;
                            }
                            return 0;
                        }());
                        if (v.is_zero()) continue;
                        switch (legs) {
                            case Legs::L12: out.at(index(a, b, k), index(i, j, k)) =
                                                out.at(index(a, b, k), index(i, j, k)) + v;
                                break;
                            case Legs::L13: out.at(index(a, j, b), index(i, j, k)) =
                                                out.at(index(a, j, b), index(i, j, k)) + v;
                                break;
                            case Legs::L23: out.at(index(i, a, b), index(i, j, k)) =
                                                out.at(index(i, a, b), index(i, j, k)) + v;
                                break;
                        }
                    }
    return out;
}

struct EntryWitness {
    int row = 0, col = 0;
    Scalar residual;
};

struct MatrixCheck {
    bool pass = false;
    std::optional<EntryWitness> witness;
};

// R12 R13 R23 - R23 R13 R12 == 0, exactly.
inline MatrixCheck qybe_check(const ParamMatrix& R, int d) {
    ParamMatrix r12 = embed(R, Legs::L12, d);
    ParamMatrix r13 = embed(R, Legs::L13, d);
    ParamMatrix r23 = embed(R, Legs::L23, d);
    ParamMatrix diff = r12 * r13 * r23 - r23 * r13 * r12;
    for (int i = 0; i < diff.dim; ++i)
        for (int j = 0; j < diff.dim; ++j)
            if (!diff.at(i, j).is_zero()) return {false, EntryWitness{i, j, diff.at(i, j)}};
    return {true, std::nullopt};
}

inline ParamMatrix inverse(const ParamMatrix& R) {
    int n = R.dim;
    ParamMatrix a = R;
    ParamMatrix inv = ParamMatrix::identity(n, R.basis);
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int row = col; row < n; ++row)
            if (!a.at(row, col).is_zero()) { pivot = row; break; }
        if (pivot < 0) throw SingularMatrix();
        if (pivot != col)
            for (int j = 0; j < n; ++j) {
                std::swap(a.at(pivot, j), a.at(col, j));
                std::swap(inv.at(pivot, j), inv.at(col, j));
            }
        Scalar piv_inv = a.at(col, col).inverse();
        for (int j = 0; j < n; ++j) {
            a.at(col, j) = a.at(col, j) * piv_inv;
            inv.at(col, j) = inv.at(col, j) * piv_inv;
        }
        for (int row = 0; row < n; ++row) {
            if (row == col) continue;
            Scalar f = a.at(row, col);
            if (f.is_zero()) continue;
            for (int j = 0; j < n; ++j) {
                a.at(row, j) = a.at(row, j) - f * a.at(col, j);
                inv.at(row, j) = inv.at(row, j) - f * inv.at(col, j);
            }
        }
    }
    return inv;
}

// Leg swap: conjugation by the flip permutation on pair labels (row-major).
inline ParamMatrix leg_swap(const ParamMatrix& R, int d) {
    R.require_row_major(d);
    ParamMatrix out(R.dim, R.basis);
    auto flip = [d](int idx) { return (idx % d) * d + idx / d; };
    for (int i = 0; i < R.dim; ++i)
        for (int j = 0; j < R.dim; ++j) out.at(flip(i), flip(j)) = R.at(i, j);
    return out;
}

// Triangularity R^{ -1 } = R21, tested as R * R21 == I.
inline bool triangular_check(const ParamMatrix& R, int d) {
    ParamMatrix prod = R * leg_swap(R, d);
    return prod.is_identity();
}

// Matrix family parameterised by an ordered pair of colour slots. The slots
// (and their registered power symbols, if any) get renamed on instantiation.
struct ColouredFamily {
    ParamMatrix proto;     // entries mention slot1/slot2 (and their powers)
    SymId slot1 = -1, slot2 = -1;
    std::string name;

    ParamMatrix instantiate(const SymbolTable& table, SymId c1, SymId c2) const {
        Bindings b;
        auto bind = [&](SymId from, SymId to) {
            if (from == to) return;
            b[from] = Scalar::var(to);
            // rename matching power symbols alongside the colour
            for (SymId base = 0; base < static_cast<SymId>(table.size()); ++base) {
                auto pf = table.power_symbol(base, from);
                auto pt = table.power_symbol(base, to);
                if (pf && pt) b[*pf] = Scalar::var(*pt);
            }
        };
        bind(slot1, c1);
        bind(slot2, c2);
        if (b.empty()) return proto;
        return proto.substituted(b, table);
    }
};

// R12(c1,c2) R13(c1,c3) R23(c2,c3) = R23(c2,c3) R13(c1,c3) R12(c1,c2)
inline MatrixCheck cqybe_check(const ColouredFamily& F, const SymbolTable& table, int d,
                               SymId c1, SymId c2, SymId c3) {
    ParamMatrix A = F.instantiate(table, c1, c2);
    ParamMatrix B = F.instantiate(table, c1, c3);
    ParamMatrix C = F.instantiate(table, c2, c3);
    ParamMatrix lhs = embed(A, Legs::L12, d) * embed(B, Legs::L13, d) * embed(C, Legs::L23, d);
    ParamMatrix rhs = embed(C, Legs::L23, d) * embed(B, Legs::L13, d) * embed(A, Legs::L12, d);
    ParamMatrix diff = lhs - rhs;
    for (int i = 0; i < diff.dim; ++i)
        for (int j = 0; j < diff.dim; ++j)
            if (!diff.at(i, j).is_zero()) return {false, EntryWitness{i, j, diff.at(i, j)}};
    return {true, std::nullopt};
}

// R12(c1,c2) * R21(c2,c1) == I
inline bool colour_triangular_check(const ColouredFamily& F, const SymbolTable& table, int d,
                                    SymId c1, SymId c2) {
    ParamMatrix R12 = F.instantiate(table, c1, c2);
    ParamMatrix R21 = leg_swap(F.instantiate(table, c2, c1), d);
    return (R12 * R21).is_identity();
}

} // namespace qg
