#pragma once

#include <stdexcept>
#include <string>

namespace qg {

struct EngineError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DivisionByZero : EngineError {
    DivisionByZero() : EngineError("division by zero") {}
};
struct NonInvertibleBinding : EngineError {
    explicit NonInvertibleBinding(const std::string& sym)
        : EngineError("binding for '" + sym + "' is not invertible where required") {}
};
struct UnboundFractionalPower : EngineError {
    explicit UnboundFractionalPower(const std::string& sym)
        : EngineError("fractional power of '" + sym + "' has no exact image under binding") {}
};
struct ZeroDivisorSeries : EngineError {
    ZeroDivisorSeries() : EngineError("series divisor is zero to truncation order") {}
};
struct NonUnitLowestCoeff : EngineError {
    NonUnitLowestCoeff() : EngineError("series divisor's lowest-order coefficient is not a unit") {}
};
struct TruncationUnderflow : EngineError {
    TruncationUnderflow() : EngineError("requested order exceeds series truncation") {}
};
struct NonUnitConstantTerm : EngineError {
    NonUnitConstantTerm() : EngineError("series sqrt needs constant term 1") {}
};
struct DivergentLimit : EngineError {
    int order;
    std::string witness;
    DivergentLimit(int ord, std::string w)
        : EngineError("divergent limit: nonzero coefficient at order " + std::to_string(ord)),
          order(ord), witness(std::move(w)) {}
};
struct DimensionMismatch : EngineError {
    using EngineError::EngineError;
};
struct InvalidPermutation : EngineError {
    using EngineError::EngineError;
};
struct SingularMatrix : EngineError {
    SingularMatrix() : EngineError("matrix is singular over the scalar field") {}
};
struct BasisOrderingMismatch : EngineError {
    using EngineError::EngineError;
};
struct UnsupportedDimension : EngineError {
    using EngineError::EngineError;
};
struct InhomogeneousSet : EngineError {
    InhomogeneousSet() : EngineError("relation set is not homogeneous of one degree") {}
};
struct DegreeBoundExceeded : EngineError {
    using EngineError::EngineError;
};
struct InvalidN : EngineError {
    InvalidN() : EngineError("realisation exponent N must be a non-zero integer") {}
};
struct SyntaxError : EngineError {
    std::size_t position;
    SyntaxError(const std::string& what, std::size_t pos)
        : EngineError(what + " (at position " + std::to_string(pos) + ")"), position(pos) {}
};
struct UnknownSymbol : EngineError {
    explicit UnknownSymbol(const std::string& name) : EngineError("unknown symbol: " + name) {}
};
struct UnknownCheck : EngineError {
    explicit UnknownCheck(const std::string& id) : EngineError("unknown check id: " + id) {}
};

} // namespace qg
