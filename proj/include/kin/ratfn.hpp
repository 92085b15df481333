#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "kin/multipoly.hpp"

namespace kin {

// Rational function num / prod(f_i^e_i). Factors are primitive, non-constant,
// with positive leading coefficient; common factors with the numerator are
// cancelled by exact division, which keeps the denominators of tensor
// calculus (powers of the sigma domain polynomials) from piling up. No
// general multivariate gcd is attempted: equality is decided by
// cross-multiplication, never by normal forms.
class RationalFn {
public:
    using Factor = std::pair<MultiPoly, int>;

    RationalFn() = default;
    RationalFn(const MultiPoly& p) : num_(p) {}  // NOLINT: implicit by design
    RationalFn(const Rational& r) : num_(MultiPoly::constant(r)) {}
    RationalFn(long long n) : num_(MultiPoly::constant(Rational(n))) {}
    static RationalFn fraction(const MultiPoly& num, const MultiPoly& den);
    static RationalFn variable(Var v, int32_t exp = 1) {
        return RationalFn(MultiPoly::variable(v, exp));
    }

    const MultiPoly& num() const { return num_; }
    const std::vector<Factor>& den_factors() const { return den_; }
    MultiPoly den() const;

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return den_.empty() && num_ == MultiPoly::constant(1); }

    RationalFn operator-() const;
    friend RationalFn operator+(const RationalFn& a, const RationalFn& b);
    friend RationalFn operator-(const RationalFn& a, const RationalFn& b);
    friend RationalFn operator*(const RationalFn& a, const RationalFn& b);
    friend RationalFn operator/(const RationalFn& a, const RationalFn& b);
    RationalFn& operator+=(const RationalFn& o) { return *this = *this + o; }
    RationalFn& operator-=(const RationalFn& o) { return *this = *this - o; }
    RationalFn& operator*=(const RationalFn& o) { return *this = *this * o; }
    RationalFn& operator/=(const RationalFn& o) { return *this = *this / o; }

    RationalFn pow(int e) const;

    // Exact equality by cross-multiplication (after a fast evaluation
    // pre-check that can only short-circuit "not equal").
    friend bool equal(const RationalFn& a, const RationalFn& b);
    friend bool operator==(const RationalFn& a, const RationalFn& b) { return equal(a, b); }
    friend bool operator!=(const RationalFn& a, const RationalFn& b) { return !equal(a, b); }

    RationalFn derivative(Var v) const;
    Rational eval(const Point& p) const;
    bool has_pole_at(const Point& p) const;
    RationalFn subst_running(int a, int b) const;
    RationalFn reflect(unsigned coord_mask) const;
    RationalFn compose(const std::array<RationalFn, 4>& xs) const;
    bool has_var(Var v) const;

    std::string str() const;

private:
    void normalize();
    void push_den(MultiPoly f, int e);

    MultiPoly num_;
    std::vector<Factor> den_;
};

enum class LimitVerdict { Finite, Zero, Divergent };

// Laurent data of a rational function of eps: `order` is the lowest
// eps-degree after offsetting by the prescribed prefactor order, `leading`
// the eps-free coefficient at that degree.
struct LaurentLimit {
    int order = 0;
    RationalFn leading;
    LimitVerdict verdict = LimitVerdict::Zero;

    // Value of the eps -> 0 limit: leading for Finite, 0 for Zero.
    RationalFn value() const {
        return verdict == LimitVerdict::Finite ? leading : RationalFn(0);
    }
};

LaurentLimit laurent_limit(const RationalFn& f, int prefactor_order);

// Deterministic pseudo-random stream for sample points (splitmix64).
class SampleStream {
public:
    explicit SampleStream(uint64_t seed) : state_(seed) {}
    uint64_t next_u64();
    // Uniform-ish small rational in [-bound, bound] with denominator 1..4.
    Rational next_rational(int bound);
    // Nonzero variant.
    Rational next_nonzero(int bound);

private:
    uint64_t state_;
};

}  // namespace kin
