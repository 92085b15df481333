#include "kin/vectorfield.hpp"

#include <sstream>

namespace kin {

int32_t VectorField::degree() const {
    int32_t d = 0;
    for (const auto& c : comp) d = std::max(d, c.degree_x());
    return d;
}

std::string VectorField::str() const {
    std::ostringstream out;
    bool first = true;
    for (int i = 0; i < 4; ++i) {
        if (comp[i].is_zero()) continue;
        if (!first) out << " + ";
        first = false;
        out << "(" << comp[i].str() << ")*d" << kVarNames[i];
    }
    if (first) out << "0";
    return out.str();
}

VectorField lie_bracket(const VectorField& x, const VectorField& y) {
    VectorField r;
    for (int mu = 0; mu < 4; ++mu) {
        MultiPoly acc;
        for (int nu = 0; nu < 4; ++nu) {
            acc += x.comp[nu] * y.comp[mu].derivative(Var(nu));
            acc -= y.comp[nu] * x.comp[mu].derivative(Var(nu));
        }
        r.comp[mu] = std::move(acc);
    }
    return r;
}

VectorField reflect_field(const VectorField& x, InvolutionKind k) {
    if (k == InvolutionKind::Identity) return x;
    unsigned mask = 0;
    if (k == InvolutionKind::Parity || k == InvolutionKind::Composite) mask |= 0b1110u;
    if (k == InvolutionKind::TimeReversal || k == InvolutionKind::Composite) mask |= 0b0001u;
    VectorField r;
    for (int mu = 0; mu < 4; ++mu) {
        r.comp[mu] = x.comp[mu].reflect(mask);
        if (mask & (1u << mu)) r.comp[mu] = -r.comp[mu];
    }
    return r;
}

const char* gen_sym_name(GenSym s) {
    switch (s) {
        case GenSym::H: return "H";
        case GenSym::Hprime: return "H'";
        case GenSym::Hplus: return "H+";
        case GenSym::Hminus: return "H-";
        case GenSym::P: return "P";
        case GenSym::Pprime: return "P'";
        case GenSym::Pplus: return "P+";
        case GenSym::Pminus: return "P-";
        case GenSym::K: return "K";
        case GenSym::Kg: return "Kg";
        case GenSym::Kc: return "Kc";
        case GenSym::N: return "N";
        case GenSym::J: return "J";
    }
    return "?";
}

std::optional<GenSym> gen_sym_from(const std::string& name) {
    static const std::pair<const char*, GenSym> table[] = {
        {"H", GenSym::H},       {"H'", GenSym::Hprime}, {"H+", GenSym::Hplus},
        {"H-", GenSym::Hminus}, {"P", GenSym::P},       {"P'", GenSym::Pprime},
        {"P+", GenSym::Pplus},  {"P-", GenSym::Pminus}, {"K", GenSym::K},
        {"Kg", GenSym::Kg},     {"Kc", GenSym::Kc},     {"N", GenSym::N},
        {"J", GenSym::J},
    };
    for (const auto& [n, s] : table)
        if (name == n) return s;
    return std::nullopt;
}

namespace {

MultiPoly mono(long long num, long long den, int ex0, int ex1, int ex2, int ex3, int ec,
               int el, int eeps) {
    Monomial m;
    m.e = {ex0, ex1, ex2, ex3, ec, el, eeps};
    return MultiPoly::monomial(Rational(num, den), m);
}

// -(c_r^2 / (c l_r^2)) x0 x^mu d_mu  with c_r = c eps^a, l_r = l eps^b
VectorField h_prime(int a, int b) {
    VectorField f;
    int eeps = 2 * a - 2 * b;
    f.comp[0] = mono(-1, 1, 2, 0, 0, 0, 1, -2, eeps);
    for (int i = 1; i < 4; ++i) {
        Monomial m;
        m.e = {1, 0, 0, 0, 1, -2, eeps};
        m.e[i] += 1;
        f.comp[i] = MultiPoly::monomial(Rational(-1), m);
    }
    return f;
}

// -l_r^-2 x_i x^mu d_mu with the eta-lowered x_i = -x^i
VectorField p_prime(int i, int b) {
    VectorField f;
    for (int mu = 0; mu < 4; ++mu) {
        Monomial m;
        m.e = {0, 0, 0, 0, 0, -2, -2 * b};
        m.e[i] += 1;
        m.e[mu] += 1;
        f.comp[mu] = MultiPoly::monomial(Rational(1), m);
    }
    return f;
}

}  // namespace

VectorField build_generator(GenSym s, int i, int a, int b) {
    VectorField f;
    switch (s) {
        case GenSym::H:
            f.comp[0] = mono(1, 1, 0, 0, 0, 0, 1, 0, 0);  // d_t = c d_0
            return f;
        case GenSym::Hprime:
            return h_prime(a, b);
        case GenSym::Hplus:
            return build_generator(GenSym::H, 0, a, b) + h_prime(a, b);
        case GenSym::Hminus:
            return build_generator(GenSym::H, 0, a, b) - h_prime(a, b);
        case GenSym::P:
            f.comp[i] = MultiPoly::constant(Rational(1));
            return f;
        case GenSym::Pprime:
            return p_prime(i, b);
        case GenSym::Pplus:
            return build_generator(GenSym::P, i, a, b) + p_prime(i, b);
        case GenSym::Pminus:
            return build_generator(GenSym::P, i, a, b) - p_prime(i, b);
        case GenSym::K: {
            // t d_i - c_r^-2 x_i d_t = (x0/c) d_i + (c/c_r^2) x^i d_0
            f.comp[i] = mono(1, 1, 1, 0, 0, 0, -1, 0, 0);
            Monomial m;
            m.e = {0, 0, 0, 0, -1, 0, -2 * a};
            m.e[i] += 1;
            f.comp[0] = MultiPoly::monomial(Rational(1), m);
            return f;
        }
        case GenSym::Kg:
            f.comp[i] = mono(1, 1, 1, 0, 0, 0, -1, 0, 0);
            return f;
        case GenSym::Kc: {
            // -c_r^-2 x_i d_t = (c/c_r^2) x^i d_0
            Monomial m;
            m.e = {0, 0, 0, 0, -1, 0, -2 * a};
            m.e[i] += 1;
            f.comp[0] = MultiPoly::monomial(Rational(1), m);
            return f;
        }
        case GenSym::N:
            return build_generator(GenSym::Kg, i, a, b) - build_generator(GenSym::Kc, i, a, b);
        case GenSym::J: {
            // J_i = (1/2) eps_i^{jk} (x_j d_k - x_k d_j) = -eps_ijk x^j d_k
            // with the eta-lowered x_j and eps_123 = +1
            int j = i % 3 + 1, k = j % 3 + 1;
            f.comp[k] = -MultiPoly::variable(Var(j));
            f.comp[j] = MultiPoly::variable(Var(k));
            return f;
        }
    }
    return f;
}

std::optional<VectorField> field_limit(const VectorField& x) {
    VectorField r;
    for (int mu = 0; mu < 4; ++mu) {
        if (!x.comp[mu].is_zero() && x.comp[mu].eps_valuation() < 0) return std::nullopt;
        r.comp[mu] = x.comp[mu].eps_slice(0);
    }
    return r;
}

}  // namespace kin
