#include "kin/multipoly.hpp"

#include <algorithm>
#include <sstream>

namespace kin {

MultiPoly MultiPoly::constant(Rational r) {
    MultiPoly p;
    if (!r.is_zero()) p.terms_.emplace(Monomial{}, std::move(r));
    return p;
}

MultiPoly MultiPoly::variable(Var v, int32_t exp) {
    Monomial m;
    m.e[v] = exp;
    return monomial(Rational(1), m);
}

MultiPoly MultiPoly::monomial(Rational coeff, const Monomial& m) {
    MultiPoly p;
    if (!coeff.is_zero()) p.terms_.emplace(m, std::move(coeff));
    return p;
}

bool MultiPoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Monomial{});
}

std::optional<Rational> MultiPoly::as_constant() const {
    if (terms_.empty()) return Rational(0);
    if (is_constant()) return terms_.begin()->second;
    return std::nullopt;
}

void MultiPoly::insert_term(const Monomial& m, const Rational& r) {
    if (r.is_zero()) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, r);
    } else {
        it->second += r;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly p;
    for (const auto& [m, r] : terms_) p.terms_.emplace(m, -r);
    return p;
}

MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) {
    MultiPoly p = a;
    for (const auto& [m, r] : b.terms_) p.insert_term(m, r);
    return p;
}

MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) {
    MultiPoly p = a;
    for (const auto& [m, r] : b.terms_) p.insert_term(m, -r);
    return p;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    MultiPoly p;
    for (const auto& [ma, ra] : a.terms_)
        for (const auto& [mb, rb] : b.terms_) p.insert_term(ma * mb, ra * rb);
    return p;
}

MultiPoly operator*(const Rational& r, const MultiPoly& p) {
    if (r.is_zero()) return {};
    MultiPoly q;
    for (const auto& [m, coeff] : p.terms_) q.terms_.emplace(m, r * coeff);
    return q;
}

bool operator<(const MultiPoly& a, const MultiPoly& b) {
    auto ia = a.terms_.begin(), ib = b.terms_.begin();
    MonomialOrder ord;
    for (; ia != a.terms_.end() && ib != b.terms_.end(); ++ia, ++ib) {
        if (ord(ia->first, ib->first)) return true;
        if (ord(ib->first, ia->first)) return false;
        if (ia->second != ib->second) return ia->second < ib->second;
    }
    return ia == a.terms_.end() && ib != b.terms_.end();
}

MultiPoly MultiPoly::pow(int32_t e) const {
    MultiPoly acc = constant(1), base = *this;
    for (int32_t k = e; k > 0; k >>= 1) {
        if (k & 1) acc *= base;
        base *= base;
    }
    return acc;
}

MultiPoly MultiPoly::derivative(Var v) const {
    MultiPoly p;
    for (const auto& [m, r] : terms_) {
        if (m.e[v] == 0) continue;
        Monomial d = m;
        d.e[v] -= 1;
        p.insert_term(d, Rational(m.e[v]) * r);
    }
    return p;
}

std::optional<MultiPoly> MultiPoly::divide_exact(const MultiPoly& num, const MultiPoly& den) {
    if (den.is_zero()) return std::nullopt;
    MultiPoly rem = num, quot;
    const auto& dl = den.leading();
    while (!rem.is_zero()) {
        const auto& rl = rem.leading();
        Monomial q;
        for (int i = 0; i < kNumVars; ++i) {
            q.e[i] = rl.first.e[i] - dl.first.e[i];
            if (i < 4 && q.e[i] < 0) return std::nullopt;  // chart coords are not Laurent
        }
        Rational coeff = rl.second / dl.second;
        MultiPoly t = monomial(coeff, q);
        quot += t;
        rem -= t * den;
        // Exact division strips the leading term each round; if it ever
        // grows back we are chasing a nonzero remainder.
        if (!rem.is_zero() && !MonomialOrder{}(rem.leading().first, rl.first)) return std::nullopt;
    }
    return quot;
}

Rational MultiPoly::eval(const Point& p) const {
    Rational acc(0);
    for (const auto& [m, r] : terms_) {
        Rational t = r;
        for (int i = 0; i < kNumVars; ++i) {
            if (m.e[i] != 0) t *= p[i].pow(m.e[i]);
        }
        acc += t;
    }
    return acc;
}

MultiPoly MultiPoly::subst_running(int a, int b) const {
    MultiPoly p;
    for (const auto& [m0, r] : terms_) {
        Monomial m = m0;
        m.e[VEPS] += a * m.e[VC] + b * m.e[VL] + a * m.e[VX0];
        p.insert_term(m, r);
    }
    return p;
}

MultiPoly MultiPoly::reflect(unsigned coord_mask) const {
    MultiPoly p;
    for (const auto& [m, r] : terms_) {
        int flips = 0;
        for (int i = 0; i < 4; ++i)
            if (coord_mask & (1u << i)) flips += m.e[i];
        p.insert_term(m, (flips % 2) ? -r : r);
    }
    return p;
}

MultiPoly MultiPoly::compose(const std::array<MultiPoly, 4>& xs) const {
    MultiPoly acc;
    for (const auto& [m, r] : terms_) {
        Monomial params;
        for (int i = 4; i < kNumVars; ++i) params.e[i] = m.e[i];
        MultiPoly t = monomial(r, params);
        for (int i = 0; i < 4; ++i)
            if (m.e[i] > 0) t *= xs[i].pow(m.e[i]);
        acc += t;
    }
    return acc;
}

int32_t MultiPoly::degree_x() const {
    int32_t d = 0;
    for (const auto& [m, r] : terms_) d = std::max(d, m.x_degree());
    return d;
}

int MultiPoly::eps_valuation() const {
    if (terms_.empty()) return 0;
    int v = terms_.begin()->first.e[VEPS];
    for (const auto& [m, r] : terms_) v = std::min(v, (int)m.e[VEPS]);
    return v;
}

MultiPoly MultiPoly::eps_slice(int k) const {
    MultiPoly p;
    for (const auto& [m0, r] : terms_) {
        if (m0.e[VEPS] != k) continue;
        Monomial m = m0;
        m.e[VEPS] = 0;
        p.terms_.emplace(m, r);
    }
    return p;
}

bool MultiPoly::has_var(Var v) const {
    for (const auto& [m, r] : terms_)
        if (m.e[v] != 0) return true;
    return false;
}

Rational MultiPoly::content() const {
    if (terms_.empty()) return Rational(1);
    BigInt den_lcm = 1, num_gcd = 0;
    for (const auto& [m, r] : terms_)
        den_lcm = boost::multiprecision::lcm(den_lcm, r.den());
    for (const auto& [m, r] : terms_) {
        BigInt n = r.num() * (den_lcm / r.den());
        num_gcd = boost::multiprecision::gcd(num_gcd, n < 0 ? BigInt(-n) : n);
    }
    Rational content(num_gcd, den_lcm);
    if (leading().second.sign() < 0) content = -content;
    return content;
}

MultiPoly MultiPoly::primitive() const {
    if (terms_.empty()) return {};
    Rational c = content();
    MultiPoly p;
    for (const auto& [m, r] : terms_) p.terms_.emplace(m, r / c);
    return p;
}

std::string MultiPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    // Highest terms first.
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [m, r] = *it;
        Rational a = r.abs();
        if (first) {
            if (r.sign() < 0) out << "-";
            first = false;
        } else {
            out << (r.sign() < 0 ? " - " : " + ");
        }
        bool unit = a.is_one();
        bool any_var = false;
        for (int i = 0; i < kNumVars; ++i) any_var |= (m.e[i] != 0);
        if (!unit || !any_var) out << a.str();
        bool need_star = !unit || !any_var;
        for (int i = 0; i < kNumVars; ++i) {
            if (m.e[i] == 0) continue;
            if (need_star) out << "*";
            need_star = true;
            out << kVarNames[i];
            if (m.e[i] != 1) out << "^" << m.e[i];
        }
    }
    return out.str();
}

}  // namespace kin
