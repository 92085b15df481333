#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "kin/rational.hpp"

namespace kin {

// Fixed variable universe. x0..x3 are chart coordinates (x0 = ct) and carry
// nonnegative exponents; c, l, eps are invariant/contraction parameters and
// may carry negative (Laurent) exponents since they never vanish.
enum Var : int { VX0 = 0, VX1 = 1, VX2 = 2, VX3 = 3, VC = 4, VL = 5, VEPS = 6 };
constexpr int kNumVars = 7;
constexpr const char* kVarNames[kNumVars] = {"x0", "x1", "x2", "x3", "c", "l", "eps"};

struct Monomial {
    std::array<int32_t, kNumVars> e{};

    int32_t x_degree() const { return e[0] + e[1] + e[2] + e[3]; }
    friend Monomial operator*(const Monomial& a, const Monomial& b) {
        Monomial m;
        for (int i = 0; i < kNumVars; ++i) m.e[i] = a.e[i] + b.e[i];
        return m;
    }
    friend bool operator==(const Monomial& a, const Monomial& b) { return a.e == b.e; }
};

// Graded-lexicographic order (grade = total x-degree, ties broken
// lexicographically over the full exponent vector). Translation-invariant,
// so leading terms multiply and exact division is well defined.
struct MonomialOrder {
    bool operator()(const Monomial& a, const Monomial& b) const {
        int32_t ga = a.x_degree(), gb = b.x_degree();
        if (ga != gb) return ga < gb;
        return a.e < b.e;
    }
};

using Point = std::array<Rational, kNumVars>;

class MultiPoly {
public:
    using TermMap = std::map<Monomial, Rational, MonomialOrder>;

    MultiPoly() = default;
    static MultiPoly constant(Rational r);
    static MultiPoly variable(Var v, int32_t exp = 1);
    static MultiPoly monomial(Rational coeff, const Monomial& m);

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    bool is_monomial() const { return terms_.size() == 1; }
    std::optional<Rational> as_constant() const;

    MultiPoly operator-() const;
    friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b);
    friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b);
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    MultiPoly& operator+=(const MultiPoly& o) { return *this = *this + o; }
    MultiPoly& operator-=(const MultiPoly& o) { return *this = *this - o; }
    MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }
    friend MultiPoly operator*(const Rational& r, const MultiPoly& p);
    friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
        return a.terms_ == b.terms_;
    }
    friend bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a == b); }
    // Arbitrary strict order usable as a map key (not the monomial order).
    friend bool operator<(const MultiPoly& a, const MultiPoly& b);

    MultiPoly pow(int32_t e) const;  // e >= 0

    // Partial derivative with respect to a chart coordinate x0..x3.
    MultiPoly derivative(Var v) const;

    // Exact quotient, or nullopt when the division leaves a remainder.
    static std::optional<MultiPoly> divide_exact(const MultiPoly& num, const MultiPoly& den);

    Rational eval(const Point& p) const;

    // Monomial substitutions used by the contraction engine:
    //   c -> c*eps^a, l -> l*eps^b, x0 -> x0*eps^a.
    MultiPoly subst_running(int a, int b) const;
    // x^i -> -x^i for i in given mask (bit i set flips xi).
    MultiPoly reflect(unsigned coord_mask) const;
    // Substitute each chart coordinate by a polynomial (parameters untouched).
    MultiPoly compose(const std::array<MultiPoly, 4>& xs) const;

    int32_t degree_x() const;  // total degree in x0..x3, 0 for the zero poly
    int eps_valuation() const;  // minimal eps exponent; 0 for the zero poly
    MultiPoly eps_slice(int k) const;  // terms with eps-exponent k, eps removed
    bool has_var(Var v) const;

    // Leading term under the monomial order.
    const std::pair<const Monomial, Rational>& leading() const { return *terms_.rbegin(); }

    // content() * primitive() == *this; primitive has coprime integer
    // coefficients and positive leading coefficient.
    Rational content() const;
    MultiPoly primitive() const;

    std::string str() const;

private:
    void insert_term(const Monomial& m, const Rational& r);
    TermMap terms_;
};

}  // namespace kin
