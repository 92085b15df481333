#pragma once

#include <vector>

#include "kin/ratfn.hpp"
#include "kin/vectorfield.hpp"

namespace kin {

enum class Symmetry { None, SymmetricCovariant, SymmetricContravariant };

// Dense tensor field with rational-function components; contravariant
// indices come first in the flat layout.
class TensorField {
public:
    TensorField() = default;
    TensorField(int p, int q, Symmetry sym = Symmetry::None)
        : p_(p), q_(q), sym_(sym), comp_(size_t(1) << (2 * (p + q))) {}

    static TensorField metric() { return TensorField(0, 2, Symmetry::SymmetricCovariant); }
    static TensorField inverse_metric() {
        return TensorField(2, 0, Symmetry::SymmetricContravariant);
    }

    int p() const { return p_; }
    int q() const { return q_; }
    int order() const { return p_ + q_; }
    Symmetry symmetry() const { return sym_; }

    RationalFn& at(std::initializer_list<int> idx) { return comp_[flat(idx)]; }
    const RationalFn& at(std::initializer_list<int> idx) const { return comp_[flat(idx)]; }
    RationalFn& flat_at(size_t i) { return comp_[i]; }
    const RationalFn& flat_at(size_t i) const { return comp_[i]; }
    size_t size() const { return comp_.size(); }

    bool is_zero() const;
    bool symmetry_holds() const;

    friend TensorField operator+(const TensorField& a, const TensorField& b);
    friend TensorField operator-(const TensorField& a, const TensorField& b);
    TensorField operator-() const;
    friend TensorField operator*(const RationalFn& s, const TensorField& t);
    friend bool operator==(const TensorField& a, const TensorField& b);
    friend bool operator!=(const TensorField& a, const TensorField& b) { return !(a == b); }

private:
    size_t flat(std::initializer_list<int> idx) const;
    int p_ = 0, q_ = 0;
    Symmetry sym_ = Symmetry::None;
    std::vector<RationalFn> comp_;
};

// Torsion-free connection coefficients Gamma^l_{mn} = gamma[l][m][n].
struct Connection {
    std::array<std::array<std::array<RationalFn, 4>, 4>, 4> gamma;

    bool is_zero() const;
    bool torsion_free() const;
    friend Connection operator-(const Connection& a, const Connection& b);
    friend bool operator==(const Connection& a, const Connection& b);
    friend bool operator!=(const Connection& a, const Connection& b) { return !(a == b); }
};

}  // namespace kin
