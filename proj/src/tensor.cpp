#include "kin/tensor.hpp"

namespace kin {

size_t TensorField::flat(std::initializer_list<int> idx) const {
    size_t f = 0;
    for (int i : idx) f = f * 4 + size_t(i);
    return f;
}

bool TensorField::is_zero() const {
    for (const auto& c : comp_)
        if (!c.is_zero()) return false;
    return true;
}

bool TensorField::symmetry_holds() const {
    if (sym_ == Symmetry::None || order() != 2) return true;
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            if (at({i, j}) != at({j, i})) return false;
    return true;
}

TensorField operator+(const TensorField& a, const TensorField& b) {
    TensorField r = a;
    for (size_t i = 0; i < r.comp_.size(); ++i) r.comp_[i] += b.comp_[i];
    return r;
}

TensorField operator-(const TensorField& a, const TensorField& b) {
    TensorField r = a;
    for (size_t i = 0; i < r.comp_.size(); ++i) r.comp_[i] -= b.comp_[i];
    return r;
}

TensorField TensorField::operator-() const {
    TensorField r = *this;
    for (auto& c : r.comp_) c = -c;
    return r;
}

TensorField operator*(const RationalFn& s, const TensorField& t) {
    TensorField r = t;
    for (auto& c : r.comp_) c = s * c;
    return r;
}

bool operator==(const TensorField& a, const TensorField& b) {
    if (a.p_ != b.p_ || a.q_ != b.q_) return false;
    for (size_t i = 0; i < a.comp_.size(); ++i)
        if (a.comp_[i] != b.comp_[i]) return false;
    return true;
}

bool Connection::is_zero() const {
    for (const auto& a : gamma)
        for (const auto& b : a)
            for (const auto& c : b)
                if (!c.is_zero()) return false;
    return true;
}

bool Connection::torsion_free() const {
    for (int l = 0; l < 4; ++l)
        for (int m = 0; m < 4; ++m)
            for (int n = m + 1; n < 4; ++n)
                if (gamma[l][m][n] != gamma[l][n][m]) return false;
    return true;
}

Connection operator-(const Connection& a, const Connection& b) {
    Connection r;
    for (int l = 0; l < 4; ++l)
        for (int m = 0; m < 4; ++m)
            for (int n = 0; n < 4; ++n) r.gamma[l][m][n] = a.gamma[l][m][n] - b.gamma[l][m][n];
    return r;
}

bool operator==(const Connection& a, const Connection& b) {
    for (int l = 0; l < 4; ++l)
        for (int m = 0; m < 4; ++m)
            for (int n = 0; n < 4; ++n)
                if (a.gamma[l][m][n] != b.gamma[l][m][n]) return false;
    return true;
}

}  // namespace kin
