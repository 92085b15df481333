#include "kin/ratfn.hpp"

#include <algorithm>
#include <sstream>

namespace kin {

RationalFn RationalFn::fraction(const MultiPoly& num, const MultiPoly& den) {
    if (den.is_zero()) throw DivisionByZeroFn();
    RationalFn f;
    f.num_ = num;
    f.push_den(den, 1);
    f.normalize();
    return f;
}

MultiPoly RationalFn::den() const {
    MultiPoly d = MultiPoly::constant(1);
    for (const auto& [f, e] : den_) d *= f.pow(e);
    return d;
}

void RationalFn::push_den(MultiPoly f, int e) {
    if (f.is_zero()) throw DivisionByZeroFn();
    if (e == 0) return;
    // Strip the common monomial of the factor: parameter exponents fold into
    // the numerator as Laurent monomials, chart-coordinate exponents stay as
    // their own monomial factor.
    Monomial mmin = f.terms().begin()->first;
    for (const auto& [m, r] : f.terms())
        for (int i = 0; i < kNumVars; ++i) mmin.e[i] = std::min(mmin.e[i], m.e[i]);
    if (mmin.e != decltype(mmin.e){}) {
        auto stripped = MultiPoly::divide_exact(f, MultiPoly::monomial(Rational(1), mmin));
        Monomial params;
        for (int i = 4; i < kNumVars; ++i) params.e[i] = -mmin.e[i] * e;
        num_ *= MultiPoly::monomial(Rational(1), params);
        for (int i = 0; i < 4; ++i) {
            if (mmin.e[i] == 0) continue;
            MultiPoly xi = MultiPoly::variable(Var(i));
            bool merged = false;
            for (auto& [g, k] : den_) {
                if (g == xi) {
                    k += e * mmin.e[i];
                    merged = true;
                    break;
                }
            }
            if (!merged) den_.emplace_back(xi, e * mmin.e[i]);
        }
        f = std::move(*stripped);
    }
    if (auto r = f.as_constant()) {
        if (r->is_zero()) throw DivisionByZeroFn();
        num_ = (Rational(1) / r->pow(e)) * num_;
        return;
    }
    Rational content = f.content();
    num_ = (Rational(1) / content.pow(e)) * num_;
    MultiPoly prim = f.primitive();
    for (auto& [g, k] : den_) {
        if (g == prim) {
            k += e;
            return;
        }
    }
    den_.emplace_back(std::move(prim), e);
}

void RationalFn::normalize() {
    if (num_.is_zero()) {
        den_.clear();
        return;
    }
    for (auto& [f, e] : den_) {
        while (e > 0) {
            auto q = MultiPoly::divide_exact(num_, f);
            if (!q) break;
            num_ = std::move(*q);
            --e;
        }
    }
    den_.erase(std::remove_if(den_.begin(), den_.end(),
                              [](const Factor& f) { return f.second == 0; }),
               den_.end());
    std::sort(den_.begin(), den_.end());
}

RationalFn RationalFn::operator-() const {
    RationalFn f = *this;
    f.num_ = -f.num_;
    return f;
}

RationalFn operator+(const RationalFn& a, const RationalFn& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    RationalFn r;
    // Common denominator by factor-wise max exponent.
    MultiPoly scale_a = MultiPoly::constant(1), scale_b = MultiPoly::constant(1);
    std::vector<RationalFn::Factor> merged = a.den_;
    for (const auto& [f, e] : b.den_) {
        bool found = false;
        for (auto& [g, k] : merged) {
            if (g == f) {
                if (e > k) {
                    scale_a *= f.pow(e - k);
                    k = e;
                }
                found = true;
                break;
            }
        }
        if (!found) {
            merged.emplace_back(f, e);
            scale_a *= f.pow(e);
        }
    }
    for (const auto& [f, e] : merged) {
        int eb = 0;
        for (const auto& [g, k] : b.den_)
            if (g == f) eb = k;
        if (e > eb) scale_b *= f.pow(e - eb);
    }
    r.num_ = a.num_ * scale_a + b.num_ * scale_b;
    r.den_ = std::move(merged);
    r.normalize();
    return r;
}

RationalFn operator-(const RationalFn& a, const RationalFn& b) { return a + (-b); }

RationalFn operator*(const RationalFn& a, const RationalFn& b) {
    RationalFn r;
    r.num_ = a.num_ * b.num_;
    r.den_ = a.den_;
    for (const auto& [f, e] : b.den_) r.push_den(f, e);
    r.normalize();
    return r;
}

RationalFn operator/(const RationalFn& a, const RationalFn& b) {
    if (b.is_zero()) throw DivisionByZeroFn();
    RationalFn r;
    r.num_ = a.num_;
    r.den_ = a.den_;
    for (const auto& [f, e] : b.den_) r.num_ *= f.pow(e);
    r.push_den(b.num_, 1);
    r.normalize();
    return r;
}

RationalFn RationalFn::pow(int e) const {
    if (e == 0) return RationalFn(1);
    RationalFn base = e < 0 ? RationalFn(1) / *this : *this;
    RationalFn acc(1);
    for (int k = e < 0 ? -e : e; k > 0; k >>= 1) {
        if (k & 1) acc *= base;
        base *= base;
    }
    return acc;
}

namespace {
// Fixed pre-check points for the fast inequality path. Chart coordinates
// get distinct nonzero values, parameters stay positive and generic.
const Point kProbePoints[3] = {
    {Rational(2), Rational(3), Rational(5), Rational(7), Rational(3), Rational(5), Rational(1, 2)},
    {Rational(-1, 2), Rational(1, 3), Rational(-2), Rational(4), Rational(2), Rational(7), Rational(1, 3)},
    {Rational(5, 3), Rational(-3, 2), Rational(1, 7), Rational(-5), Rational(5, 2), Rational(3), Rational(2)},
};
}  // namespace

bool equal(const RationalFn& a, const RationalFn& b) {
    for (const auto& p : kProbePoints) {
        if (a.has_pole_at(p) || b.has_pole_at(p)) continue;
        if (a.eval(p) != b.eval(p)) return false;
    }
    return (a - b).is_zero();
}

RationalFn RationalFn::derivative(Var v) const {
    RationalFn r;
    MultiPoly prod = MultiPoly::constant(1);
    for (const auto& [f, e] : den_) prod *= f;
    MultiPoly n = num_.derivative(v) * prod;
    for (size_t i = 0; i < den_.size(); ++i) {
        MultiPoly rest = MultiPoly::constant(1);
        for (size_t j = 0; j < den_.size(); ++j)
            if (j != i) rest *= den_[j].first;
        n -= Rational(den_[i].second) * (num_ * den_[i].first.derivative(v) * rest);
    }
    r.num_ = std::move(n);
    for (const auto& [f, e] : den_) r.push_den(f, e + 1);
    r.normalize();
    return r;
}

Rational RationalFn::eval(const Point& p) const {
    Rational d(1);
    for (const auto& [f, e] : den_) {
        Rational v = f.eval(p);
        if (v.is_zero()) throw PoleAtPoint();
        d *= v.pow(e);
    }
    return num_.eval(p) / d;
}

bool RationalFn::has_pole_at(const Point& p) const {
    for (const auto& [f, e] : den_)
        if (f.eval(p).is_zero()) return true;
    return false;
}

RationalFn RationalFn::subst_running(int a, int b) const {
    RationalFn r;
    r.num_ = num_.subst_running(a, b);
    for (const auto& [f, e] : den_) r.push_den(f.subst_running(a, b), e);
    r.normalize();
    return r;
}

RationalFn RationalFn::reflect(unsigned coord_mask) const {
    RationalFn r;
    r.num_ = num_.reflect(coord_mask);
    for (const auto& [f, e] : den_) r.push_den(f.reflect(coord_mask), e);
    r.normalize();
    return r;
}

RationalFn RationalFn::compose(const std::array<RationalFn, 4>& xs) const {
    auto compose_poly = [&xs](const MultiPoly& p) {
        RationalFn acc(0);
        for (const auto& [m, coeff] : p.terms()) {
            Monomial params;
            for (int i = 4; i < kNumVars; ++i) params.e[i] = m.e[i];
            RationalFn t(MultiPoly::monomial(coeff, params));
            for (int i = 0; i < 4; ++i)
                if (m.e[i] > 0) t *= xs[i].pow(m.e[i]);
            acc += t;
        }
        return acc;
    };
    RationalFn r = compose_poly(num_);
    for (const auto& [f, e] : den_) r /= compose_poly(f).pow(e);
    return r;
}

bool RationalFn::has_var(Var v) const {
    if (num_.has_var(v)) return true;
    for (const auto& [f, e] : den_)
        if (f.has_var(v)) return true;
    return false;
}

std::string RationalFn::str() const {
    if (den_.empty()) return num_.str();
    std::ostringstream out;
    out << "(" << num_.str() << ")/(";
    bool first = true;
    for (const auto& [f, e] : den_) {
        if (!first) out << "*";
        first = false;
        out << "(" << f.str() << ")";
        if (e != 1) out << "^" << e;
    }
    out << ")";
    return out.str();
}

LaurentLimit laurent_limit(const RationalFn& f, int prefactor_order) {
    LaurentLimit lim;
    if (f.is_zero()) {
        lim.order = 0;
        lim.leading = RationalFn(0);
        lim.verdict = LimitVerdict::Zero;
        return lim;
    }
    int v = f.num().eps_valuation();
    RationalFn lead(f.num().eps_slice(v));
    for (const auto& [g, e] : f.den_factors()) {
        int w = g.eps_valuation();
        v -= e * w;
        lead /= RationalFn(g.eps_slice(w)).pow(e);
    }
    lim.order = v + prefactor_order;
    lim.leading = lead;
    lim.verdict = lim.order == 0   ? LimitVerdict::Finite
                  : lim.order > 0 ? LimitVerdict::Zero
                                  : LimitVerdict::Divergent;
    return lim;
}

uint64_t SampleStream::next_u64() {
    state_ += 0x9e3779b97f4a7c15ULL;
    uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

Rational SampleStream::next_rational(int bound) {
    int64_t span = 2 * int64_t(bound) + 1;
    int64_t n = int64_t(next_u64() % uint64_t(span)) - bound;
    int64_t d = int64_t(next_u64() % 4u) + 1;
    return Rational(n, d);
}

Rational SampleStream::next_nonzero(int bound) {
    for (;;) {
        Rational r = next_rational(bound);
        if (!r.is_zero()) return r;
    }
}

}  // namespace kin
