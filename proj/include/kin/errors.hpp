#pragma once

#include <stdexcept>
#include <string>

namespace kin {

struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct DivisionByZeroFn : Error {
    DivisionByZeroFn() : Error("division by zero rational function") {}
};
struct PoleAtPoint : Error {
    explicit PoleAtPoint(const std::string& w = "denominator vanishes at evaluation point")
        : Error(w) {}
};
struct DivergentLimit : Error {
    explicit DivergentLimit(const std::string& w = "limit diverges as eps -> 0") : Error(w) {}
};
struct NotClosed : Error {
    explicit NotClosed(const std::string& w) : Error(w) {}
};
struct DependentBasis : Error {
    explicit DependentBasis(const std::string& w = "basis is linearly dependent") : Error(w) {}
};
struct DegenerateMetric : Error {
    explicit DegenerateMetric(const std::string& w = "metric has vanishing determinant")
        : Error(w) {}
};
struct InconsistentSignature : Error {
    explicit InconsistentSignature(const std::string& w) : Error(w) {}
};
struct PointOutsideDomain : Error {
    explicit PointOutsideDomain(const std::string& w) : Error(w) {}
};
struct NonInvertibleMap : Error {
    explicit NonInvertibleMap(const std::string& w) : Error(w) {}
};
struct DivergentGenerator : Error {
    explicit DivergentGenerator(const std::string& w) : Error(w) {}
};
struct DivergentTensor : Error {
    explicit DivergentTensor(const std::string& w) : Error(w) {}
};
struct TargetMismatch : Error {
    explicit TargetMismatch(const std::string& w) : Error(w) {}
};
struct UnexpectedContractibility : Error {
    explicit UnexpectedContractibility(const std::string& w) : Error(w) {}
};
struct UnknownAlgebra : Error {
    explicit UnknownAlgebra(const std::string& name) : Error("unknown algebra: " + name) {}
};
struct StaticExcluded : Error {
    explicit StaticExcluded(const std::string& name)
        : Error("algebra '" + name + "' is static; its time translation is meaningful only with a central extension") {}
};
struct UnknownGeometry : Error {
    explicit UnknownGeometry(const std::string& name) : Error("unknown geometry: " + name) {}
};
struct DualityMismatch : Error {
    explicit DualityMismatch(const std::string& w) : Error(w) {}
};
struct SyntaxError : Error {
    int line, col;
    SyntaxError(int line_, int col_, const std::string& expected)
        : Error("syntax error at " + std::to_string(line_) + ":" + std::to_string(col_) +
                ": " + expected),
          line(line_), col(col_) {}
};
struct UnknownSymbol : Error {
    explicit UnknownSymbol(const std::string& sym) : Error("unknown symbol: " + sym) {}
};
struct DuplicateName : Error {
    explicit DuplicateName(const std::string& name) : Error("duplicate name: " + name) {}
};

}  // namespace kin
