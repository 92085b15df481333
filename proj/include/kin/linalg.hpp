#pragma once

#include <optional>
#include <vector>

#include "kin/ratfn.hpp"

namespace kin {

// Dense matrix over the rational-function field.
class FnMatrix {
public:
    FnMatrix() = default;
    FnMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(size_t(rows) * cols) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    RationalFn& at(int i, int j) { return a_[size_t(i) * cols_ + j]; }
    const RationalFn& at(int i, int j) const { return a_[size_t(i) * cols_ + j]; }

    static FnMatrix identity(int n);

private:
    int rows_ = 0, cols_ = 0;
    std::vector<RationalFn> a_;
};

struct LinearSolve {
    bool consistent = false;      // right-hand side lies in the column span
    bool unique = false;          // column rank is full
    std::vector<RationalFn> x;    // a solution when consistent
};

// Gaussian elimination over the fraction field; exact, first-nonzero pivoting.
LinearSolve solve_linear(FnMatrix a, std::vector<RationalFn> b);
int fn_rank(FnMatrix a);
RationalFn fn_det(FnMatrix a);
std::optional<FnMatrix> fn_inverse(const FnMatrix& a);

// Inertia (n_plus, n_minus) of an exact rational symmetric matrix by
// congruence diagonalization (Sylvester's law of inertia); rank is the sum.
struct Inertia {
    int plus = 0, minus = 0;
    int rank() const { return plus + minus; }
    friend bool operator==(const Inertia& a, const Inertia& b) {
        return a.plus == b.plus && a.minus == b.minus;
    }
    friend bool operator!=(const Inertia& a, const Inertia& b) { return !(a == b); }
};

Inertia rational_inertia(std::vector<std::vector<Rational>> m);

}  // namespace kin
