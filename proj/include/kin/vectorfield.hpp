#pragma once

#include <array>
#include <optional>
#include <string>

#include "kin/multipoly.hpp"

namespace kin {

// Polynomial vector field X = comp[mu] d/dx^mu on the chart x0 = ct.
// Components are Laurent in the parameters c, l (and eps while a contraction
// is running) but polynomial in the coordinates.
struct VectorField {
    std::array<MultiPoly, 4> comp;

    bool is_zero() const {
        return comp[0].is_zero() && comp[1].is_zero() && comp[2].is_zero() && comp[3].is_zero();
    }
    friend VectorField operator+(const VectorField& a, const VectorField& b) {
        VectorField r;
        for (int i = 0; i < 4; ++i) r.comp[i] = a.comp[i] + b.comp[i];
        return r;
    }
    friend VectorField operator-(const VectorField& a, const VectorField& b) {
        VectorField r;
        for (int i = 0; i < 4; ++i) r.comp[i] = a.comp[i] - b.comp[i];
        return r;
    }
    VectorField operator-() const {
        VectorField r;
        for (int i = 0; i < 4; ++i) r.comp[i] = -comp[i];
        return r;
    }
    friend VectorField operator*(const MultiPoly& s, const VectorField& x) {
        VectorField r;
        for (int i = 0; i < 4; ++i) r.comp[i] = s * x.comp[i];
        return r;
    }
    friend VectorField operator*(const Rational& s, const VectorField& x) {
        return MultiPoly::constant(s) * x;
    }
    friend bool operator==(const VectorField& a, const VectorField& b) {
        return a.comp == b.comp;
    }
    friend bool operator!=(const VectorField& a, const VectorField& b) { return !(a == b); }

    int32_t degree() const;
    std::string str() const;
};

// [X, Y]^mu = X^nu d_nu Y^mu - Y^nu d_nu X^mu
VectorField lie_bracket(const VectorField& x, const VectorField& y);

enum class InvolutionKind { Identity, Parity, TimeReversal, Composite };

// Pushforward under the coordinate reflection: Parity flips the spatial
// coordinates, TimeReversal flips x0, Composite both.
VectorField reflect_field(const VectorField& x, InvolutionKind k);

// Primitive generator families of the kinematical catalog.
// The 13 symbols; Hs (static time translation) has no vector-field
// realization and is deliberately unhoused.
enum class GenSym { H, Hprime, Hplus, Hminus, P, Pprime, Pplus, Pminus, K, Kg, Kc, N, J };

const char* gen_sym_name(GenSym s);
std::optional<GenSym> gen_sym_from(const std::string& name);

// Builds the generator with running parameters c_r = c*eps^a, l_r = l*eps^b
// (a = b = 0 gives the invariant-parameter generator). The chart is always
// x0 = ct with the fixed c; only parameter occurrences run. `i` in 1..3
// selects the component for the spatial families and is ignored for the
// time translations.
VectorField build_generator(GenSym s, int i, int a = 0, int b = 0);

// eps -> 0 limit of a field with polynomial eps-dependence; nullopt when a
// component carries a negative eps power.
std::optional<VectorField> field_limit(const VectorField& x);

}  // namespace kin
