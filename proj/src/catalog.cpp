#include "kin/catalog.hpp"

#include <sstream>

#include "json.hpp"

namespace kin {

namespace {

MultiPoly XV(int mu) { return MultiPoly::variable(Var(mu)); }

MultiPoly param(long long num, long long den, int cexp, int lexp) {
    Monomial m;
    m.e[VC] = cexp;
    m.e[VL] = lexp;
    return MultiPoly::monomial(Rational(num, den), m);
}

MultiPoly one() { return MultiPoly::constant(Rational(1)); }

MultiPoly r2_poly() { return XV(1) * XV(1) + XV(2) * XV(2) + XV(3) * XV(3); }
MultiPoly xxE_poly() { return XV(0) * XV(0) + r2_poly(); }
MultiPoly xxM_poly() { return XV(0) * XV(0) - r2_poly(); }

int eta_d(int mu) { return mu == 0 ? 1 : -1; }

// sigma = 1 + sq_sign * F(x,x) / l^2 as a Laurent polynomial
MultiPoly sigma_poly(const MultiPoly& quad, int sq_sign) {
    return one() + Rational(sq_sign) * (param(1, 1, 0, -2) * quad);
}

// Beltrami metric g = overall * (1/sigma) (F_mn + cross * Fx_m Fx_n / (l^2 sigma)).
TensorField beltrami_g(const std::array<int, 4>& form, int sq_sign, int cross, int overall) {
    MultiPoly quad;
    for (int mu = 0; mu < 4; ++mu) quad += Rational(form[mu]) * (XV(mu) * XV(mu));
    RationalFn sigma(sigma_poly(quad, sq_sign));
    RationalFn inv_sigma = RationalFn(1) / sigma;
    TensorField g = TensorField::metric();
    for (int m = 0; m < 4; ++m)
        for (int n = 0; n < 4; ++n) {
            RationalFn v(0);
            if (m == n) v += RationalFn(MultiPoly::constant(Rational(form[m]))) * inv_sigma;
            MultiPoly fx = Rational(form[m] * form[n]) * (XV(m) * XV(n)) * param(1, 1, 0, -2);
            v += Rational(cross) * (RationalFn(fx) * inv_sigma * inv_sigma);
            g.at({m, n}) = Rational(overall) * v;
        }
    return g;
}

// Degenerate quadric metric: orient=+1 gives l^2 (F(x,x) F_mn - Fx_m Fx_n) / F(x,x)^2.
TensorField deg2_g(const std::array<int, 4>& form, int orient) {
    MultiPoly quad;
    for (int mu = 0; mu < 4; ++mu) quad += Rational(form[mu]) * (XV(mu) * XV(mu));
    RationalFn inv_quad = RationalFn(1) / RationalFn(quad);
    TensorField g = TensorField::metric();
    for (int m = 0; m < 4; ++m)
        for (int n = 0; n < 4; ++n) {
            RationalFn v(0);
            if (m == n) v += RationalFn(MultiPoly::constant(Rational(form[m]))) * inv_quad;
            v -= Rational(form[m] * form[n]) * (RationalFn(XV(m) * XV(n)) * inv_quad * inv_quad);
            g.at({m, n}) = Rational(orient) * (RationalFn(param(1, 1, 0, 2)) * v);
        }
    return g;
}

// h = sign * l^-4 F(x,x) x^m x^n
TensorField deg2_h(const std::array<int, 4>& form, int sign) {
    MultiPoly quad;
    for (int mu = 0; mu < 4; ++mu) quad += Rational(form[mu]) * (XV(mu) * XV(mu));
    TensorField h = TensorField::inverse_metric();
    for (int m = 0; m < 4; ++m)
        for (int n = 0; n < 4; ++n)
            h.at({m, n}) = RationalFn(Rational(sign) * (param(1, 1, 0, -4) * quad * XV(m) * XV(n)));
    return h;
}

// Gamma^l_mn = -(d^l_m Fx_n + d^l_n Fx_m) / F(x,x)
Connection deg2_conn(const std::array<int, 4>& form) {
    MultiPoly quad;
    for (int mu = 0; mu < 4; ++mu) quad += Rational(form[mu]) * (XV(mu) * XV(mu));
    Connection c;
    for (int l = 0; l < 4; ++l)
        for (int m = 0; m < 4; ++m)
            for (int n = 0; n < 4; ++n) {
                MultiPoly num;
                if (l == m) num += Rational(form[n]) * XV(n);
                if (l == n) num += Rational(form[m]) * XV(m);
                if (num.is_zero()) continue;
                c.gamma[l][m][n] = -RationalFn::fraction(num, quad);
            }
    return c;
}

Point make_witness(long long x0, long long x1, long long x2, long long x3) {
    return Point{Rational(x0), Rational(x1), Rational(x2), Rational(x3),
                 Rational(3), Rational(5), Rational(1)};
}

RationalFn k_over_l2(int sign) {
    if (sign == 0) return RationalFn(0);
    return RationalFn(param(sign, 1, 0, -2));
}

SignatureDescriptor sig4(int gp, int gm, int hp, int hm) {
    SignatureDescriptor s;
    s.g_plus = gp;
    s.g_minus = gm;
    s.h_plus = hp;
    s.h_minus = hm;
    return s;
}

const std::array<int, 4> kDelta{1, 1, 1, 1};
const std::array<int, 4> kEta{1, -1, -1, -1};

}  // namespace

const Catalog& Catalog::instance() {
    static Catalog cat;
    return cat;
}

Catalog::Catalog() {
    build_algebras();
    build_geometries();
    build_recipes();
    build_relations();
}

const AlgebraPresentation& Catalog::algebra(const std::string& name) const {
    if (name == "s" || name == "s2") throw StaticExcluded(name);
    auto it = algebras_.find(name);
    if (it == algebras_.end()) throw UnknownAlgebra(name);
    return it->second;
}

const Geometry& Catalog::geometry(const std::string& name) const {
    auto it = geometries_.find(name);
    if (it == geometries_.end()) throw UnknownGeometry(name);
    return it->second;
}

void Catalog::build_algebras() {
    struct Row {
        const char* key;
        const char* display;
        GenSym t, p, b;
        int t_sign;
        bool bll, geometrical, second;
    };
    const Row rows[] = {
        {"r", "Riemann", GenSym::Hminus, GenSym::Pplus, GenSym::N, 1, false, true, false},
        {"l", "Lobachevsky", GenSym::Hplus, GenSym::Pminus, GenSym::N, 1, false, true, false},
        {"e", "Euclid", GenSym::H, GenSym::P, GenSym::N, 1, false, true, false},
        {"e2", "second Euclid", GenSym::Hprime, GenSym::Pprime, GenSym::N, -1, false, true, true},
        {"d+", "de Sitter", GenSym::Hplus, GenSym::Pplus, GenSym::K, 1, true, false, false},
        {"d-", "anti-de Sitter", GenSym::Hminus, GenSym::Pminus, GenSym::K, 1, true, false, false},
        {"p", "Poincare", GenSym::H, GenSym::P, GenSym::K, 1, true, false, false},
        {"p2", "second Poincare", GenSym::Hprime, GenSym::Pprime, GenSym::K, 1, false, false, true},
        {"n+", "Newton-Hooke NH+", GenSym::Hplus, GenSym::P, GenSym::Kg, 1, true, false, false},
        {"n+2", "second NH+", GenSym::Hplus, GenSym::Pprime, GenSym::Kc, 1, false, false, true},
        {"n-", "Newton-Hooke NH-", GenSym::Hminus, GenSym::P, GenSym::Kg, 1, true, false, false},
        {"n-2", "second NH-", GenSym::Hminus, GenSym::Pprime, GenSym::Kc, -1, false, false, true},
        {"g", "Galilei", GenSym::H, GenSym::P, GenSym::Kg, 1, true, false, false},
        {"g2", "second Galilei", GenSym::Hprime, GenSym::Pprime, GenSym::Kc, 1, false, false, true},
        {"c", "Carroll", GenSym::H, GenSym::P, GenSym::Kc, 1, true, false, false},
        {"c2", "second Carroll", GenSym::Hprime, GenSym::Pprime, GenSym::Kg, 1, false, false, true},
        {"h+", "Hooke-Newton HN+", GenSym::H, GenSym::Pplus, GenSym::Kc, 1, false, false, false},
        {"e'", "para-Euclid", GenSym::Hprime, GenSym::Pplus, GenSym::Kg, 1, true, false, true},
        {"h-", "Hooke-Newton HN-", GenSym::H, GenSym::Pminus, GenSym::Kc, 1, false, false, false},
        {"p'", "para-Poincare", GenSym::Hprime, GenSym::Pminus, GenSym::Kg, -1, true, false, true},
        {"g'", "para-Galilei", GenSym::Hprime, GenSym::P, GenSym::Kg, 1, true, false, false},
        {"g'2", "second para-Galilei", GenSym::H, GenSym::Pprime, GenSym::Kc, 1, false, false, true},
    };
    for (const Row& row : rows) {
        AlgebraPresentation alg;
        alg.name = row.key;
        alg.display = row.display;
        alg.slots = {SlotSpec{row.t, row.t_sign}, SlotSpec{row.p, 1}, SlotSpec{row.b, 1},
                     SlotSpec{GenSym::J, 1}};
        for (int slot = 0; slot < kAlgebraDim; ++slot) {
            int blk = slot == 0 ? 0 : (slot - 1) / 3 + 1;
            int idx = slot == 0 ? 0 : (slot - 1) % 3 + 1;
            VectorField f = build_generator(alg.slots[blk].sym, idx);
            alg.basis[slot] = alg.slots[blk].sign < 0 ? -f : f;
        }
        alg.bll = row.bll;
        alg.geometrical = row.geometrical;
        alg.second_version = row.second;
        algebra_names_.push_back(row.key);
        algebras_.emplace(row.key, std::move(alg));
    }
}

void Catalog::build_geometries() {
    const MultiPoly r2 = r2_poly(), xxE = xxE_poly(), xxM = xxM_poly();
    const MultiPoly x0sq = XV(0) * XV(0);
    const MultiPoly sigEp = sigma_poly(xxE, 1), sigEm = sigma_poly(xxE, -1);
    const MultiPoly sigP = sigma_poly(xxM, -1), sigM = sigma_poly(xxM, 1);
    const MultiPoly sigNp = sigma_poly(x0sq, -1), sigNm = sigma_poly(x0sq, 1);
    const MultiPoly sig3p = sigma_poly(r2, 1), sig3m = sigma_poly(r2, -1);

    auto add = [&](Geometry geo) {
        geometry_names_.push_back(geo.name);
        geometries_.emplace(geo.name, std::move(geo));
    };

    auto nondeg = [&](const std::string& name, const std::string& algebra, TensorField g,
                      std::vector<DomainIneq> domain, SignatureDescriptor sig, int ksign,
                      Point witness) {
        Geometry geo;
        geo.name = name;
        geo.algebra = algebra;
        geo.g = std::move(g);
        geo.h = invert_metric(geo.g);
        geo.conn = christoffel_from_metric(geo.g);
        geo.domain = std::move(domain);
        geo.degenerate = false;
        geo.rank_g = geo.rank_h = 4;
        geo.sig = sig;
        geo.curvature_k = k_over_l2(ksign);
        geo.witness = witness;
        add(std::move(geo));
    };

    auto deg = [&](const std::string& name, const std::string& algebra, TensorField g,
                   TensorField h, Connection conn, std::vector<DomainIneq> domain, int rg,
                   int rh, SignatureDescriptor sig, int ksign, Point witness) {
        Geometry geo;
        geo.name = name;
        geo.algebra = algebra;
        geo.g = std::move(g);
        geo.h = std::move(h);
        geo.conn = std::move(conn);
        geo.domain = std::move(domain);
        geo.degenerate = true;
        geo.rank_g = rg;
        geo.rank_h = rh;
        geo.sig = sig;
        geo.curvature_k = k_over_l2(ksign);
        geo.witness = witness;
        add(std::move(geo));
    };

    auto dom = [](const MultiPoly& p, int sign) {
        return std::vector<DomainIneq>{{RationalFn(p), sign}};
    };

    // --- Riemann / Lobachevsky family ---------------------------------
    nondeg("Riem", "r", beltrami_g(kDelta, 1, -1, 1), dom(sigEp, 1), sig4(4, 0, 4, 0), -1,
           make_witness(1, 2, 0, 0));
    nondeg("Lob", "l", beltrami_g(kDelta, -1, 1, 1), dom(sigEm, 1), sig4(4, 0, 4, 0), 1,
           make_witness(1, 2, 0, 0));
    nondeg("LBdS", "l", beltrami_g(kDelta, -1, 1, -1), dom(sigEm, -1), sig4(3, 1, 3, 1), -1,
           make_witness(4, 3, 1, 0));
    {
        TensorField g = TensorField::metric();
        for (int m = 0; m < 4; ++m) g.at({m, m}) = RationalFn(1);
        nondeg("Euc", "e", g, {}, sig4(4, 0, 4, 0), 0, make_witness(1, 2, 0, 0));
    }

    {
        // E_2 and E_2-
        TensorField g = deg2_g(kDelta, 1);
        TensorField h = deg2_h(kDelta, 1);
        Connection conn = deg2_conn(kDelta);
        deg("E_2", "e2", g, h, conn, dom(xxE, 1), 3, 1, sig4(3, 0, 1, 0), -1,
            make_witness(1, 2, 0, 0));
        deg("E_2-", "e2", g, deg2_h(kDelta, -1), conn, dom(xxE, 1), 3, 1, sig4(3, 0, 0, 1), -1,
            make_witness(1, 2, 0, 0));
    }

    // --- de Sitter family ----------------------------------------------
    nondeg("dS", "d+", beltrami_g(kEta, -1, 1, 1), dom(sigP, 1), sig4(1, 3, 1, 3), 1,
           make_witness(1, 2, 0, 0));
    nondeg("BdSL", "d+", beltrami_g(kEta, -1, 1, 1), dom(sigP, -1), sig4(4, 0, 4, 0), 1,
           make_witness(6, 3, 1, 0));
    nondeg("AdS", "d-", beltrami_g(kEta, 1, -1, 1), dom(sigM, 1), sig4(1, 3, 1, 3), -1,
           make_witness(1, 2, 0, 0));
    nondeg("DTdS", "d-", beltrami_g(kEta, 1, -1, -1), dom(sigM, -1), sig4(2, 2, 2, 2), 1,
           make_witness(1, 6, 0, 0));

    {
        TensorField g = TensorField::metric();
        for (int m = 0; m < 4; ++m) g.at({m, m}) = RationalFn(Rational(eta_d(m)));
        nondeg("Min", "p", g, {}, sig4(1, 3, 1, 3), 0, make_witness(1, 2, 0, 0));
    }

    {
        // P_2 family: the "+" quadric form is l^2 ((x.dx)^2 - (x.x)(dx.dx)) / (x.x)^2.
        TensorField plus_form = deg2_g(kEta, -1);
        TensorField minus_form = deg2_g(kEta, 1);
        TensorField h_plus = deg2_h(kEta, 1);
        TensorField h_minus = deg2_h(kEta, -1);
        Connection conn = deg2_conn(kEta);
        deg("P_2+", "p2", plus_form, h_plus, conn, dom(xxM, -1), 3, 1, sig4(1, 2, 0, 1), 1,
            make_witness(1, 2, 0, 0));
        deg("P_2-", "p2", minus_form, h_plus, conn, dom(xxM, 1), 3, 1, sig4(0, 3, 1, 0), -1,
            make_witness(2, 1, 0, 0));
        deg("EP_2-", "p2", plus_form, h_plus, conn, dom(xxM, 1), 3, 1, sig4(3, 0, 1, 0), 1,
            make_witness(2, 1, 0, 0));
        deg("DTP_2+", "p2", plus_form, h_minus, conn, dom(xxM, -1), 3, 1, sig4(1, 2, 1, 0), 1,
            make_witness(1, 2, 0, 0));
    }

    // --- Newton-Hooke family -------------------------------------------
    auto nh_geo = [&](const std::string& name, const std::string& algebra,
                      const MultiPoly& sigN, int g_sign, int h_sign, int gamma_sign,
                      std::vector<DomainIneq> domain, SignatureDescriptor sig, int ksign,
                      Point witness, ContrastClass contrast) {
        TensorField g = TensorField::metric();
        RationalFn inv_sig = RationalFn(1) / RationalFn(sigN);
        g.at({0, 0}) = Rational(g_sign) * (inv_sig * inv_sig);
        TensorField h = TensorField::inverse_metric();
        for (int i = 1; i < 4; ++i) h.at({i, i}) = Rational(h_sign) * RationalFn(sigN);
        Connection conn;
        RationalFn base = Rational(gamma_sign) * (RationalFn(param(1, 1, 0, -2) * XV(0)) * inv_sig);
        conn.gamma[0][0][0] = Rational(2) * base;
        for (int i = 1; i < 4; ++i) conn.gamma[i][0][i] = conn.gamma[i][i][0] = base;
        Geometry geo;
        geo.name = name;
        geo.algebra = algebra;
        geo.g = std::move(g);
        geo.h = std::move(h);
        geo.conn = std::move(conn);
        geo.domain = std::move(domain);
        geo.degenerate = true;
        geo.rank_g = 1;
        geo.rank_h = 3;
        geo.sig = sig;
        geo.curvature_k = k_over_l2(ksign);
        geo.witness = witness;
        geo.contrast = contrast;
        geo.contrast_factor = RationalFn(sigN);
        add(std::move(geo));
    };

    nh_geo("NH_+", "n+", sigNp, 1, -1, 1, dom(sigNp, 1), sig4(1, 0, 0, 3), 1,
           make_witness(1, 2, 0, 0), ContrastClass::TimeBeltrami);
    nh_geo("NH_-", "n-", sigNm, 1, -1, -1, dom(sigNm, 1), sig4(1, 0, 0, 3), -1,
           make_witness(1, 2, 0, 0), ContrastClass::TimeBeltrami);
    nh_geo("ENH_+", "n+", sigNp, 1, 1, 1, dom(sigNp, 1), sig4(1, 0, 3, 0), 1,
           make_witness(1, 2, 0, 0), ContrastClass::TimeBeltrami);
    nh_geo("ENH_-", "n-", sigNm, 1, 1, -1, dom(sigNm, 1), sig4(1, 0, 3, 0), -1,
           make_witness(1, 2, 0, 0), ContrastClass::TimeBeltrami);
    nh_geo("NH_+'", "n+", sigNp, -1, -1, 1, dom(sigNp, -1), sig4(0, 1, 3, 0), -1,
           make_witness(6, 1, 0, 0), ContrastClass::TimeBeltrami);
    nh_geo("ENH_+'", "n+", sigNp, 1, -1, 1, dom(sigNp, -1), sig4(1, 0, 3, 0), 1,
           make_witness(6, 1, 0, 0), ContrastClass::TimeBeltrami);

    // --- NH_2 family -----------------------------------------------------
    {
        // g_sphere = l^2 (x_i x_j - r2 d_ij) / r2^2, the (-,-) block.
        TensorField g_sphere = TensorField::metric();
        RationalFn inv_r2 = RationalFn(1) / RationalFn(r2);
        for (int i = 1; i < 4; ++i)
            for (int j = 1; j < 4; ++j) {
                RationalFn v = RationalFn(param(1, 1, 0, 2) * XV(i) * XV(j)) * inv_r2 * inv_r2;
                if (i == j) v -= RationalFn(param(1, 1, 0, 2)) * inv_r2;
                g_sphere.at({i, j}) = v;
            }
        Connection conn;
        for (int i = 1; i < 4; ++i)
            conn.gamma[0][0][i] = conn.gamma[0][i][0] = -(RationalFn(XV(i)) * inv_r2);
        // Gamma^i_jk = -(d^i_j x_k + d^i_k x_j)/r2
        for (int i = 1; i < 4; ++i)
            for (int j = 1; j < 4; ++j)
                for (int k = 1; k < 4; ++k) {
                    MultiPoly num;
                    if (i == j) num += XV(k);
                    if (i == k) num += XV(j);
                    conn.gamma[i][j][k] = num.is_zero() ? RationalFn(0)
                                                        : -(RationalFn(num) * inv_r2);
                }

        auto nh2_h = [&](int tt_sign, int xx_sign) {
            // h = l^-4 r2 [ tt_sign l^2 d0 d0 + xx_sign (x^m d_m)^2 ]
            TensorField h = TensorField::inverse_metric();
            for (int m = 0; m < 4; ++m)
                for (int n = 0; n < 4; ++n) {
                    MultiPoly v = Rational(xx_sign) * (param(1, 1, 0, -4) * r2 * XV(m) * XV(n));
                    if (m == 0 && n == 0) v += Rational(tt_sign) * (param(1, 1, 0, -2) * r2);
                    h.at({m, n}) = RationalFn(v);
                }
            return h;
        };

        deg("NH_2", "n+2", g_sphere, nh2_h(1, -1), conn, dom(r2, 1), 2, 2, sig4(0, 2, 1, 1), 1,
            make_witness(1, 2, 0, 0));
        deg("NH_2'", "n+2", -g_sphere, nh2_h(1, -1), conn, dom(r2, 1), 2, 2, sig4(2, 0, 1, 1),
            -1, make_witness(1, 2, 0, 0));
        deg("ENH_2", "n-2", -g_sphere, nh2_h(1, 1), conn, dom(r2, 1), 2, 2, sig4(2, 0, 2, 0),
            -1, make_witness(1, 2, 0, 0));
        deg("DTNH_2", "n-2", g_sphere, nh2_h(1, 1), conn, dom(r2, 1), 2, 2, sig4(0, 2, 2, 0),
            1, make_witness(1, 2, 0, 0));

        // --- G_2 family (shares the sphere block and the connection) ----
        auto g2_geo = [&](const std::string& name, const std::string& algebra, int g_sign,
                          TensorField h, const RationalFn& free_sq,
                          const std::string& free_display, SignatureDescriptor sig, int ksign) {
            Geometry geo;
            geo.name = name;
            geo.algebra = algebra;
            geo.g = g_sign > 0 ? g_sphere : -g_sphere;
            geo.h = std::move(h);
            geo.conn = conn;
            geo.domain = dom(r2, 1);
            geo.degenerate = true;
            geo.rank_g = 2;
            geo.rank_h = 1;
            geo.sig = sig;
            geo.curvature_k = k_over_l2(ksign);
            geo.free_parameters_sq.push_back(free_sq);
            geo.free_parameter_display.push_back(free_display);
            VectorField d0, euler;
            d0.comp[0] = one();
            for (int m = 0; m < 4; ++m) euler.comp[m] = XV(m);
            geo.g_kernel = {d0, euler};
            geo.witness = make_witness(1, 2, 0, 0);
            add(std::move(geo));
        };

        auto xx_only_h = [&](int sign) {
            TensorField h = TensorField::inverse_metric();
            for (int m = 0; m < 4; ++m)
                for (int n = 0; n < 4; ++n)
                    h.at({m, n}) =
                        RationalFn(Rational(sign) * (param(1, 1, 0, -4) * r2 * XV(m) * XV(n)));
            return h;
        };
        auto tt_only_h = [&] {
            TensorField h = TensorField::inverse_metric();
            h.at({0, 0}) = RationalFn(param(1, 1, 0, -2) * r2);
            return h;
        };

        RationalFn psi_g2 = RationalFn::fraction(param(1, 1, 0, 2) * x0sq, r2);
        RationalFn psi_g2p = RationalFn::fraction(param(1, 1, 0, 4), r2);
        g2_geo("EG_2", "g2", 1, xx_only_h(-1), psi_g2, "l*x0/sqrt(x.x)", sig4(0, 2, 0, 1), 1);
        g2_geo("G_2", "g2", -1, xx_only_h(-1), psi_g2, "l*x0/sqrt(x.x)", sig4(2, 0, 0, 1), -1);
        g2_geo("G_2'", "g'2", 1, tt_only_h(), psi_g2p, "l^2/sqrt(x.x)", sig4(0, 2, 1, 0), 1);
        g2_geo("EG_2'", "g'2", -1, tt_only_h(), psi_g2p, "l^2/sqrt(x.x)", sig4(2, 0, 1, 0), -1);
    }

    // --- Hooke-Newton family ---------------------------------------------
    auto hn_geo = [&](const std::string& name, const std::string& algebra,
                      const MultiPoly& sig3, int cross, int g_sign, int h_sign, int gamma_sign,
                      std::vector<DomainIneq> domain, SignatureDescriptor sig, int ksign,
                      Point witness) {
        RationalFn inv_sig = RationalFn(1) / RationalFn(sig3);
        TensorField g = TensorField::metric();
        for (int i = 1; i < 4; ++i)
            for (int j = 1; j < 4; ++j) {
                RationalFn v(0);
                if (i == j) v += inv_sig;
                v += Rational(cross) * (RationalFn(param(1, 1, 0, -2) * XV(i) * XV(j)) * inv_sig *
                                        inv_sig);
                g.at({i, j}) = Rational(g_sign) * v;
            }
        TensorField h = TensorField::inverse_metric();
        h.at({0, 0}) = Rational(h_sign) * RationalFn(sig3);
        Connection conn;
        for (int i = 1; i < 4; ++i) {
            RationalFn base =
                Rational(gamma_sign) * (RationalFn(param(1, 1, 0, -2) * XV(i)) * inv_sig);
            conn.gamma[0][0][i] = conn.gamma[0][i][0] = base;
            for (int j = 1; j < 4; ++j)
                for (int k = 1; k < 4; ++k) {
                    MultiPoly num;
                    if (j == i) num += XV(k);
                    if (k == i) num += XV(j);
                    if (!num.is_zero())
                        conn.gamma[i][j][k] =
                            Rational(gamma_sign) * (RationalFn(param(1, 1, 0, -2) * num) * inv_sig);
                }
        }
        Geometry geo;
        geo.name = name;
        geo.algebra = algebra;
        geo.g = std::move(g);
        geo.h = std::move(h);
        geo.conn = std::move(conn);
        geo.domain = std::move(domain);
        geo.degenerate = true;
        geo.rank_g = 3;
        geo.rank_h = 1;
        geo.sig = sig;
        geo.curvature_k = k_over_l2(ksign);
        geo.witness = witness;
        geo.contrast = ContrastClass::SpaceBeltrami;
        geo.contrast_factor = RationalFn(sig3);
        add(std::move(geo));
    };

    hn_geo("HN_+", "h+", sig3p, -1, -1, 1, -1, dom(sig3p, 1), sig4(0, 3, 1, 0), 1,
           make_witness(1, 2, 0, 0));
    hn_geo("HN_-", "h-", sig3m, 1, -1, 1, 1, dom(sig3m, 1), sig4(0, 3, 1, 0), -1,
           make_witness(1, 2, 0, 0));
    hn_geo("EHN_+", "h+", sig3p, -1, 1, 1, -1, dom(sig3p, 1), sig4(3, 0, 1, 0), -1,
           make_witness(1, 2, 0, 0));
    hn_geo("EHN_-", "h-", sig3m, 1, 1, 1, 1, dom(sig3m, 1), sig4(3, 0, 1, 0), 1,
           make_witness(1, 2, 0, 0));
    hn_geo("HN_-'", "h-", sig3m, 1, -1, -1, 1, dom(sig3m, -1), sig4(2, 1, 1, 0), -1,
           make_witness(1, 4, 3, 1));
    hn_geo("DTHN", "h-", sig3m, 1, 1, -1, 1, dom(sig3m, -1), sig4(1, 2, 1, 0), 1,
           make_witness(1, 4, 3, 1));

    // --- para-Euclid / para-Poincare (nondegenerate) --------------------
    {
        auto pe_g = [&](int spatial_sign, const MultiPoly& sig3) {
            // g00 = l^2 (l^2 sig3)/x0^4, g0i = -s l^2 x_i/x0^3, gij = s l^2 d_ij/x0^2
            TensorField g = TensorField::metric();
            MultiPoly x0 = XV(0);
            g.at({0, 0}) = RationalFn::fraction(param(1, 1, 0, 4) * sig3, x0.pow(4));
            for (int i = 1; i < 4; ++i) {
                RationalFn g0i = RationalFn::fraction(
                    Rational(-spatial_sign) * (param(1, 1, 0, 2) * XV(i)), x0.pow(3));
                g.at({0, i}) = g.at({i, 0}) = g0i;
                g.at({i, i}) = RationalFn::fraction(Rational(spatial_sign) * param(1, 1, 0, 2),
                                                    x0.pow(2));
            }
            return g;
        };
        nondeg("E'", "e'", pe_g(1, sig3p), dom(x0sq, 1), sig4(4, 0, 4, 0), 0,
               make_witness(1, 2, 0, 0));
        nondeg("P'", "p'", pe_g(-1, sig3m), dom(x0sq, 1), sig4(1, 3, 1, 3), 0,
               make_witness(1, 2, 0, 0));
    }

    // --- flat G / C family -----------------------------------------------
    auto flat_geo = [&](const std::string& name, const std::string& algebra, bool time_g,
                        int g_sign, int h_sign, SignatureDescriptor sig,
                        ContrastClass contrast) {
        TensorField g = TensorField::metric();
        TensorField h = TensorField::inverse_metric();
        if (time_g) {
            g.at({0, 0}) = RationalFn(Rational(g_sign));
            for (int i = 1; i < 4; ++i) h.at({i, i}) = RationalFn(Rational(h_sign));
        } else {
            for (int i = 1; i < 4; ++i) g.at({i, i}) = RationalFn(Rational(g_sign));
            h.at({0, 0}) = RationalFn(Rational(h_sign));
        }
        Geometry geo;
        geo.name = name;
        geo.algebra = algebra;
        geo.g = std::move(g);
        geo.h = std::move(h);
        geo.domain = {};
        geo.degenerate = true;
        geo.rank_g = time_g ? 1 : 3;
        geo.rank_h = time_g ? 3 : 1;
        geo.sig = sig;
        geo.curvature_k = RationalFn(0);
        geo.witness = make_witness(1, 2, 0, 0);
        geo.contrast = contrast;
        geo.contrast_factor = RationalFn(1);
        add(std::move(geo));
    };
    flat_geo("G", "g", true, 1, -1, sig4(1, 0, 0, 3), ContrastClass::FlatTime);
    flat_geo("EG", "g", true, 1, 1, sig4(1, 0, 3, 0), ContrastClass::FlatTime);
    flat_geo("C", "c", false, -1, 1, sig4(0, 3, 1, 0), ContrastClass::FlatSpace);
    flat_geo("EC", "c", false, 1, 1, sig4(3, 0, 1, 0), ContrastClass::FlatSpace);

    // --- C_2 family --------------------------------------------------------
    {
        auto c2_g = [&](int overall) {
            TensorField g = TensorField::metric();
            MultiPoly x0 = XV(0);
            g.at({0, 0}) =
                RationalFn::fraction(Rational(-overall) * (param(1, 1, 0, 2) * r2), x0.pow(4));
            for (int i = 1; i < 4; ++i) {
                g.at({0, i}) = g.at({i, 0}) = RationalFn::fraction(
                    Rational(overall) * (param(1, 1, 0, 2) * XV(i)), x0.pow(3));
                g.at({i, i}) =
                    RationalFn::fraction(Rational(-overall) * param(1, 1, 0, 2), x0.pow(2));
            }
            return g;
        };
        TensorField h = TensorField::inverse_metric();
        for (int m = 0; m < 4; ++m)
            for (int n = 0; n < 4; ++n)
                h.at({m, n}) = RationalFn(param(1, 1, 0, -4) * x0sq * XV(m) * XV(n));
        Connection conn;
        RationalFn inv_x0 = RationalFn(1) / RationalFn(XV(0));
        conn.gamma[0][0][0] = Rational(-2) * inv_x0;
        for (int i = 1; i < 4; ++i) conn.gamma[i][0][i] = conn.gamma[i][i][0] = -inv_x0;
        deg("C_2", "c2", c2_g(1), h, conn, dom(x0sq, 1), 3, 1, sig4(0, 3, 1, 0), 0,
            make_witness(1, 2, 0, 0));
        deg("EC_2", "c2", c2_g(-1), h, conn, dom(x0sq, 1), 3, 1, sig4(3, 0, 1, 0), 0,
            make_witness(1, 2, 0, 0));

        // --- G' family (same connection form) ---------------------------
        auto gp_geo = [&](const std::string& name, int g_sign, SignatureDescriptor sig) {
            TensorField g = TensorField::metric();
            g.at({0, 0}) = RationalFn::fraction(Rational(g_sign) * param(1, 1, 0, 4),
                                                XV(0).pow(4));
            TensorField hh = TensorField::inverse_metric();
            for (int i = 1; i < 4; ++i)
                hh.at({i, i}) = RationalFn(param(1, 1, 0, -2) * x0sq);
            Connection cc;
            cc.gamma[0][0][0] = Rational(-2) * inv_x0;
            for (int i = 1; i < 4; ++i) cc.gamma[i][0][i] = cc.gamma[i][i][0] = -inv_x0;
            deg(name, "g'", g, hh, cc, dom(x0sq, 1), 1, 3, sig, 0, make_witness(1, 2, 0, 0));
        };
        gp_geo("G'", -1, sig4(0, 1, 3, 0));
        gp_geo("EG'", 1, sig4(1, 0, 3, 0));
    }
}

void Catalog::build_recipes() {
    using RK = RuleKind;
    using IK = InvolutionKind;
    auto S = [](long long num, long long den, int order) {
        return SlotScale{Rational(num, den), order};
    };
    const SlotScale u = S(1, 1, 0);

    // Algebra contraction edges; slot scales are the exact eps-monomial
    // prefactors under which each running generator stays finite.
    algebra_recipes_ = {
        {"d+", "p", RK::LInf, IK::Identity, u, u, u},
        {"d-", "p", RK::LInf, IK::Identity, u, u, u},
        {"d+", "p2", RK::LZero, IK::Identity, S(1, 1, 2), S(1, 1, 2), u},
        {"d-", "p2", RK::LZero, IK::Identity, S(-1, 1, 2), S(-1, 1, 2), u},
        {"r", "e", RK::LInf, IK::Identity, u, u, u},
        {"l", "e", RK::LInf, IK::Identity, u, u, u},
        {"r", "e2", RK::LZero, IK::Identity, S(1, 1, 2), S(1, 1, 2), u},
        {"l", "e2", RK::LZero, IK::Identity, S(-1, 1, 2), S(-1, 1, 2), u},
        {"d+", "n+", RK::NuFixedInf, IK::Identity, u, u, u},
        {"l", "n+", RK::NuFixedInf, IK::Parity, u, S(-1, 1, 0), S(-1, 1, 0)},
        {"d-", "n-", RK::NuFixedInf, IK::Composite, S(-1, 1, 0), S(-1, 1, 0), u},
        {"r", "n-", RK::NuFixedInf, IK::TimeReversal, S(-1, 1, 0), u, S(-1, 1, 0)},
        {"d+", "n+2", RK::NuFixedZero, IK::Identity, u, S(1, 1, 2), S(1, 1, 2)},
        {"l", "n+2", RK::NuFixedZero, IK::Parity, u, S(1, 1, 2), S(1, 1, 2)},
        {"d-", "n-2", RK::NuFixedZero, IK::Composite, u, S(1, 1, 2), S(1, 1, 2)},
        {"r", "n-2", RK::NuFixedZero, IK::TimeReversal, u, S(1, 1, 2), S(1, 1, 2)},
        {"d+", "h+", RK::CZero, IK::Identity, u, u, S(1, 1, 2)},
        {"d-", "h-", RK::CZero, IK::Identity, u, u, S(1, 1, 2)},
        {"r", "h+", RK::CZero, IK::TimeReversal, S(-1, 1, 0), u, S(1, 1, 2)},
        {"l", "h-", RK::CZero, IK::TimeReversal, S(-1, 1, 0), u, S(1, 1, 2)},
        {"d+", "e'", RK::CInf, IK::Identity, S(1, 1, 2), u, u},
        {"d-", "p'", RK::CInf, IK::Identity, S(1, 1, 2), u, u},
        {"r", "e'", RK::CInf, IK::TimeReversal, S(1, 1, 2), u, S(-1, 1, 0)},
        {"l", "p'", RK::CInf, IK::TimeReversal, S(1, 1, 2), u, S(-1, 1, 0)},
        {"d+", "g", RK::CCOverLInf, IK::Identity, u, u, u},
        {"d-", "g", RK::CCOverLInf, IK::Identity, u, u, u},
        {"r", "g", RK::CCOverLInf, IK::Identity, u, u, u},
        {"l", "g", RK::CCOverLInf, IK::Identity, u, u, u},
        {"e", "g", RK::CInf, IK::Identity, u, u, u},
        {"p", "g", RK::CInf, IK::Identity, u, u, u},
        {"n+", "g", RK::LInf, IK::Identity, u, u, u},
        {"n-", "g", RK::LInf, IK::Identity, u, u, u},
        {"d+", "g2", RK::CCOverLZero, IK::Identity, S(1, 1, 2), S(1, 1, 4), S(1, 1, 2)},
        {"d-", "g2", RK::CCOverLZero, IK::Identity, S(-1, 1, 2), S(-1, 1, 4), S(1, 1, 2)},
        {"r", "g2", RK::CCOverLZero, IK::TimeReversal, S(1, 1, 2), S(1, 1, 4), S(1, 1, 2)},
        {"l", "g2", RK::CCOverLZero, IK::Parity, S(1, 1, 2), S(1, 1, 4), S(1, 1, 2)},
        {"p2", "g2", RK::CZero, IK::Identity, S(1, 1, -2), u, S(1, 1, 2)},
        {"e2", "g2", RK::CZero, IK::TimeReversal, S(1, 1, -2), u, S(1, 1, 2)},
        {"n+2", "g2", RK::LZero, IK::Identity, S(1, 1, 2), S(1, 1, 2), u},
        {"n-2", "g2", RK::LZero, IK::Identity, S(1, 1, 2), S(1, 1, 2), u},
        {"d+", "c", RK::LInfCZero, IK::Identity, u, u, S(1, 1, 2)},
        {"d-", "c", RK::LInfCZero, IK::Identity, u, u, S(1, 1, 2)},
        {"h+", "c", RK::LInf, IK::Identity, u, u, u},
        {"h-", "c", RK::LInf, IK::Identity, u, u, u},
        {"p", "c", RK::CZero, IK::Identity, u, u, S(1, 1, 2)},
        {"e", "c", RK::CZero, IK::TimeReversal, S(-1, 1, 0), u, S(1, 1, 2)},
        {"p2", "c2", RK::CInf, IK::Identity, S(1, 1, 2), u, u},
        {"e'", "c2", RK::LZero, IK::Identity, S(1, 1, 2), S(1, 1, 2), u},
        {"p'", "c2", RK::LZero, IK::Identity, S(-1, 1, 2), S(-1, 1, 2), u},
        {"e2", "c2", RK::CInf, IK::TimeReversal, S(1, 1, 2), u, S(-1, 1, 0)},
        {"d+", "g'", RK::COverLLInf, IK::Identity, S(1, 1, 2), u, u},
        {"l", "g'", RK::COverLLInf, IK::Identity, S(1, 1, 2), u, u},
        {"d-", "g'", RK::COverLLInf, IK::Identity, S(-1, 1, 2), u, u},
        {"r", "g'", RK::COverLLInf, IK::Identity, S(-1, 1, 2), u, u},
        {"n+", "g'", RK::LZero, IK::Identity, S(1, 1, 2), u, u},
        {"n-", "g'", RK::LZero, IK::Identity, S(-1, 1, 2), u, u},
        {"e'", "g'", RK::LInf, IK::Identity, S(1, 1, -2), u, u},
        {"p'", "g'", RK::LInf, IK::Parity, S(-1, 1, -2), S(-1, 1, 0), S(-1, 1, 0)},
        {"d+", "g'2", RK::COverLLZero, IK::Identity, u, S(1, 1, 2), S(1, 1, 4)},
        {"l", "g'2", RK::COverLLZero, IK::Parity, u, S(1, 1, 2), S(1, 1, 4)},
        {"n+2", "g'2", RK::CZero, IK::Identity, u, u, S(1, 1, 2)},
        {"h+", "g'2", RK::LZero, IK::Identity, u, S(1, 1, 2), u},
        {"d-", "g'2", RK::COverLLZero, IK::Composite, S(-1, 1, 0), S(1, 1, 2), S(1, 1, 4)},
        {"r", "g'2", RK::COverLLZero, IK::TimeReversal, S(-1, 1, 0), S(1, 1, 2), S(1, 1, 4)},
        {"n-2", "g'2", RK::CZero, IK::Identity, S(-1, 1, 0), u, S(1, 1, 2)},
        {"h-", "g'2", RK::LZero, IK::Parity, u, S(1, 1, 2), S(-1, 1, 0)},
    };

    // Geometry contraction edges; TensorScale = {sign, eps-order of the
    // scalar prefactor}. Blocked rows carry the family whose domain
    // inequality dies in the limit.
    auto T = [](int sign, int order) { return TensorScale{sign, order}; };
    const TensorScale t0 = T(1, 0);
    geometry_recipes_ = {
        // l_r -> inf
        {"Riem", "Euc", RK::LInf, t0, t0, t0, true},
        {"Lob", "Euc", RK::LInf, t0, t0, t0, true},
        {"LBdS", "Euc", RK::LInf, t0, t0, t0, false},
        {"dS", "Min", RK::LInf, t0, t0, t0, true},
        {"AdS", "Min", RK::LInf, t0, t0, t0, true},
        {"BdSL", "Min", RK::LInf, t0, t0, t0, false},
        {"DTdS", "Min", RK::LInf, t0, t0, t0, false},
        {"P'", "G'", RK::LInf, T(-1, 4), T(-1, -2), t0, true},
        {"E'", "EG'", RK::LInf, T(1, 4), T(1, -2), t0, true},
        // l_r -> 0
        {"Riem", "E_2", RK::LZero, T(1, -2), T(1, 4), t0, true},
        {"Lob", "E_2", RK::LZero, T(1, -2), T(1, 4), t0, false},
        {"LBdS", "E_2-", RK::LZero, T(1, -2), T(1, 4), t0, true},
        {"dS", "P_2+", RK::LZero, T(1, -2), T(1, 4), t0, true},
        {"AdS", "P_2-", RK::LZero, T(1, -2), T(1, 4), t0, true},
        {"BdSL", "EP_2-", RK::LZero, T(1, -2), T(1, 4), t0, true},
        {"DTdS", "DTP_2+", RK::LZero, T(1, -2), T(1, 4), t0, true},
        {"NH_2", "EG_2", RK::LZero, T(1, -2), T(1, 4), t0, true},
        // c_r, l_r -> inf, nu fixed
        {"dS", "NH_+", RK::NuFixedInf, T(1, 2), t0, t0, true},
        {"AdS", "NH_-", RK::NuFixedInf, T(1, 2), t0, t0, true},
        {"Lob", "ENH_+", RK::NuFixedInf, T(1, 2), t0, t0, true},
        {"Riem", "ENH_-", RK::NuFixedInf, T(1, 2), t0, t0, true},
        {"LBdS", "NH_+'", RK::NuFixedInf, T(1, 2), t0, t0, true},
        {"BdSL", "ENH_+'", RK::NuFixedInf, T(1, 2), t0, t0, true},
        {"DTdS", "NH_-", RK::NuFixedInf, T(1, 2), t0, t0, false},
        // c_r, l_r -> 0, nu fixed
        {"dS", "NH_2", RK::NuFixedZero, T(1, -2), T(1, 4), t0, true},
        {"LBdS", "NH_2'", RK::NuFixedZero, T(1, -2), T(1, 4), t0, true},
        {"Riem", "ENH_2", RK::NuFixedZero, T(1, -2), T(1, 4), t0, true},
        {"DTdS", "DTNH_2", RK::NuFixedZero, T(1, -2), T(1, 4), t0, true},
        {"Lob", "NH_2", RK::NuFixedZero, T(1, -2), T(1, 4), t0, false},
        {"AdS", "NH_2", RK::NuFixedZero, T(1, -2), T(1, 4), t0, false},
        {"BdSL", "NH_2", RK::NuFixedZero, T(1, -2), T(1, 4), t0, false},
        // c_r -> 0
        {"dS", "HN_+", RK::CZero, t0, T(1, 2), t0, true},
        {"AdS", "HN_-", RK::CZero, t0, T(1, 2), t0, true},
        {"Riem", "EHN_+", RK::CZero, t0, T(1, 2), t0, true},
        {"Lob", "EHN_-", RK::CZero, t0, T(1, 2), t0, true},
        {"LBdS", "HN_-'", RK::CZero, t0, T(1, 2), t0, true},
        {"DTdS", "DTHN", RK::CZero, t0, T(1, 2), t0, true},
        {"BdSL", "EHN_+", RK::CZero, t0, T(1, 2), t0, false},
        {"P_2+", "EG_2", RK::CZero, t0, t0, t0, true},
        {"P_2-", "EG_2", RK::CZero, t0, t0, t0, false},
        {"NH_2", "G_2'", RK::CZero, t0, T(1, 2), t0, true},
        {"Min", "C", RK::CZero, t0, T(1, 2), t0, true},
        // c_r -> inf
        {"Riem", "E'", RK::CInf, T(1, -2), T(1, 2), t0, true},
        {"AdS", "P'", RK::CInf, T(1, -2), T(1, 2), t0, true},
        {"LBdS", "P'", RK::CInf, T(-1, -2), T(-1, 2), t0, true},
        {"BdSL", "E'", RK::CInf, T(1, -2), T(1, 2), t0, true},
        {"dS", "E'", RK::CInf, T(1, -2), T(1, 2), t0, false},
        {"Lob", "E'", RK::CInf, T(1, -2), T(1, 2), t0, false},
        {"DTdS", "P'", RK::CInf, T(1, -2), T(1, 2), t0, false},
        {"Min", "G", RK::CInf, T(1, 2), t0, t0, true},
        {"P_2-", "C_2", RK::CInf, T(1, -2), T(1, 2), t0, true},
        {"P_2+", "C_2", RK::CInf, T(1, -2), T(1, 2), t0, false},
        // c_r, l_r -> inf with c_r^2/l_r fixed
        {"dS", "G", RK::CCOverLInf, T(1, 2), t0, t0, true},
        {"AdS", "G", RK::CCOverLInf, T(1, 2), t0, t0, true},
        {"Riem", "EG", RK::CCOverLInf, T(1, 2), t0, t0, true},
        {"Lob", "EG", RK::CCOverLInf, T(1, 2), t0, t0, true},
        {"LBdS", "G", RK::CCOverLInf, T(1, 2), t0, t0, false},
        {"BdSL", "G", RK::CCOverLInf, T(1, 2), t0, t0, false},
        {"DTdS", "G", RK::CCOverLInf, T(1, 2), t0, t0, false},
        // l_r -> inf, c_r -> 0
        {"dS", "C", RK::LInfCZero, t0, T(1, 2), t0, true},
        {"AdS", "C", RK::LInfCZero, t0, T(1, 2), t0, true},
        {"Riem", "EC", RK::LInfCZero, t0, T(1, 2), t0, true},
        {"Lob", "EC", RK::LInfCZero, t0, T(1, 2), t0, true},
        {"LBdS", "C", RK::LInfCZero, t0, T(1, 2), t0, false},
        {"BdSL", "C", RK::LInfCZero, t0, T(1, 2), t0, false},
        {"DTdS", "C", RK::LInfCZero, t0, T(1, 2), t0, false},
        // c_r, l_r -> 0 with c_r^2/l_r fixed
        {"dS", "EG_2", RK::CCOverLZero, T(1, -4), T(1, 8), t0, true},
        {"Riem", "EG_2", RK::CCOverLZero, T(-1, -4), T(-1, 8), t0, true},
        {"LBdS", "G_2", RK::CCOverLZero, T(1, -4), T(1, 8), t0, true},
        {"DTdS", "G_2", RK::CCOverLZero, T(-1, -4), T(-1, 8), t0, true},
        {"Lob", "G_2", RK::CCOverLZero, T(1, -4), T(1, 8), t0, false},
        {"AdS", "G_2", RK::CCOverLZero, T(1, -4), T(1, 8), t0, false},
        {"BdSL", "EG_2", RK::CCOverLZero, T(1, -4), T(1, 8), t0, false},
        // l_r -> 0, c_r -> inf
        {"AdS", "C_2", RK::LZeroCInf, T(1, -4), T(1, 6), t0, true},
        {"LBdS", "C_2", RK::LZeroCInf, T(-1, -4), T(-1, 6), t0, true},
        {"Riem", "EC_2", RK::LZeroCInf, T(1, -4), T(1, 6), t0, true},
        {"BdSL", "EC_2", RK::LZeroCInf, T(1, -4), T(1, 6), t0, true},
        {"Lob", "EC_2", RK::LZeroCInf, T(1, -4), T(1, 6), t0, false},
        {"dS", "C_2", RK::LZeroCInf, T(1, -4), T(1, 6), t0, false},
        {"DTdS", "C_2", RK::LZeroCInf, T(1, -4), T(1, 6), t0, false},
        // c_r, l_r -> inf with c_r/l_r^2 fixed
        {"Riem", "EG'", RK::COverLLInf, t0, T(1, 2), t0, true},
        {"BdSL", "EG'", RK::COverLLInf, t0, T(1, 2), t0, true},
        {"LBdS", "G'", RK::COverLLInf, t0, T(1, 2), t0, true},
        {"AdS", "G'", RK::COverLLInf, T(-1, 0), T(-1, 2), t0, true},
        {"dS", "G'", RK::COverLLInf, t0, T(1, 2), t0, false},
        {"Lob", "EG'", RK::COverLLInf, t0, T(1, 2), t0, false},
        {"DTdS", "G'", RK::COverLLInf, t0, T(1, 2), t0, false},
        // c_r, l_r -> 0 with c_r/l_r^2 fixed
        {"Riem", "EG_2'", RK::COverLLZero, T(1, -2), T(1, 6), t0, true},
        {"LBdS", "EG_2'", RK::COverLLZero, T(1, -2), T(1, 6), t0, true},
        {"dS", "G_2'", RK::COverLLZero, T(1, -2), T(1, 6), t0, true},
        {"DTdS", "G_2'", RK::COverLLZero, T(1, -2), T(1, 6), t0, true},
        {"Lob", "G_2'", RK::COverLLZero, T(1, -2), T(1, 6), t0, false},
        {"AdS", "G_2'", RK::COverLLZero, T(1, -2), T(1, 6), t0, false},
        {"BdSL", "EG_2'", RK::COverLLZero, T(1, -2), T(1, 6), t0, false},
    };
}

void Catalog::build_relations() {
    // Present <-> time-infinity map: x0 -> l^2/x0, x^i -> l x^i / x0.
    RationalMap map;
    map.fwd[0] = RationalFn::fraction(param(1, 1, 0, 2), XV(0));
    for (int i = 1; i < 4; ++i)
        map.fwd[i] = RationalFn::fraction(param(1, 1, 0, 1) * XV(i), XV(0));
    map.inv = map.fwd;
    validate_map(map);
    duality_map_ = map;

    duality_pairs_ = {
        {"Min", "P'", 1, 1},     {"Euc", "E'", 1, 1},      {"G", "G'", -1, -1},
        {"EG", "EG'", 1, 1},   {"C", "C_2", 1, 1},       {"EC", "EC_2", 1, 1},
        {"G_2", "G_2'", -1, -1}, {"EG_2", "EG_2'", -1, -1}, {"HN_+", "E_2-", -1, -1},
        {"EHN_+", "E_2", 1, 1},  {"HN_-", "P_2-", 1, 1},   {"EHN_-", "EP_2-", 1, 1},
        {"HN_-'", "P_2+", -1, -1}, {"DTHN", "DTP_2+", 1, 1}, {"NH_+", "NH_+'", -1, -1},
        {"ENH_+", "ENH_+'", 1, 1}, {"NH_2", "NH_2'", -1, -1}, {"NH_-", "NH_-", 1, 1},
        {"ENH_-", "ENH_-", 1, 1}, {"ENH_2", "ENH_2", 1, 1}, {"DTNH_2", "DTNH_2", 1, 1},
    };

    // Contravariant-metric additivity; the Euclidean identity takes the
    // first summand with the opposite overall sign (the catalog row keeps
    // the sign fixed by its signature and contraction limits).
    additivity_ = {
        {"G_2", "G_2'", "NH_2", 1},
        {"EG_2", "EG_2'", "ENH_2", -1},
    };

    genuine_ = {
        {KinematicsClass::Relativistic, 1, "dS"},
        {KinematicsClass::Relativistic, 0, "Min"},
        {KinematicsClass::Relativistic, -1, "AdS"},
        {KinematicsClass::AbsoluteTime, 1, "NH_+"},
        {KinematicsClass::AbsoluteTime, 0, "G"},
        {KinematicsClass::AbsoluteTime, -1, "NH_-"},
        {KinematicsClass::AbsoluteSpace, 1, "E_2-"},
        {KinematicsClass::AbsoluteSpace, 0, "C"},
        {KinematicsClass::AbsoluteSpace, -1, "P_2-"},
    };
    for (const auto& row : genuine_) {
        auto it = geometries_.find(row.geometry);
        it->second.genuine = row.cls;
        it->second.genuine_curvature_sign = row.curvature_sign;
    }
}

namespace {

const char* kins_class_name(KinematicsClass c) {
    switch (c) {
        case KinematicsClass::Relativistic: return "relativistic";
        case KinematicsClass::AbsoluteTime: return "absolute-time";
        case KinematicsClass::AbsoluteSpace: return "absolute-space";
        default: return "none";
    }
}

}  // namespace

std::string Catalog::dump_text() const {
    std::ostringstream out;
    out << "catalog " << version() << "\n";
    out << "algebras: " << algebra_names_.size()
        << " (the full classification lists 24 generator sets; the two static rows are excluded"
           " because their time translation needs a central extension, leaving 22)\n";
    out << "geometries: " << geometry_names_.size() << "\n\n";
    for (const auto& name : algebra_names_) {
        const auto& alg = algebras_.at(name);
        out << "algebra " << name << " (" << alg.display << ")\n";
        for (int k = 0; k < kAlgebraDim; ++k)
            out << "  " << alg.slot_name(k) << " = " << alg.basis[k].str() << "\n";
    }
    out << "\n";
    for (const auto& name : geometry_names_) {
        const auto& geo = geometries_.at(name);
        out << "geometry " << name << " [algebra " << geo.algebra << "]\n";
        out << "  ranks (" << geo.rank_g << ", " << geo.rank_h << ")  signature "
            << geo.sig.str() << "  curvature k = " << geo.curvature_k.str() << "\n";
        for (const auto& d : geo.domain)
            out << "  domain " << d.fn.str() << (d.sign > 0 ? " > 0" : " < 0") << "\n";
        for (int m = 0; m < 4; ++m)
            for (int n = m; n < 4; ++n)
                if (!geo.g.at({m, n}).is_zero())
                    out << "  g[" << m << "][" << n << "] = " << geo.g.at({m, n}).str() << "\n";
        for (int m = 0; m < 4; ++m)
            for (int n = m; n < 4; ++n)
                if (!geo.h.at({m, n}).is_zero())
                    out << "  h[" << m << "][" << n << "] = " << geo.h.at({m, n}).str() << "\n";
        for (int l = 0; l < 4; ++l)
            for (int m = 0; m < 4; ++m)
                for (int n = m; n < 4; ++n)
                    if (!geo.conn.gamma[l][m][n].is_zero())
                        out << "  gamma[" << l << "][" << m << "][" << n
                            << "] = " << geo.conn.gamma[l][m][n].str() << "\n";
        for (size_t i = 0; i < geo.free_parameters_sq.size(); ++i)
            out << "  free parameter " << geo.free_parameter_display[i]
                << "  (squared: " << geo.free_parameters_sq[i].str() << ")\n";
        if (geo.genuine != KinematicsClass::None)
            out << "  genuine kinematics: " << kins_class_name(geo.genuine) << ", curvature "
                << (geo.genuine_curvature_sign > 0   ? "> 0"
                    : geo.genuine_curvature_sign < 0 ? "< 0"
                                                     : "= 0")
                << "\n";
    }
    return out.str();
}

std::string Catalog::dump_json() const {
    nlohmann::json root;
    root["catalog"] = version();
    root["note"] =
        "the full classification lists 24 generator sets; the two static rows are excluded, leaving 22";
    nlohmann::json algs = nlohmann::json::array();
    for (const auto& name : algebra_names_) {
        const auto& alg = algebras_.at(name);
        nlohmann::json j;
        j["name"] = name;
        j["display"] = alg.display;
        nlohmann::json basis = nlohmann::json::array();
        for (int k = 0; k < kAlgebraDim; ++k)
            basis.push_back({{"slot", alg.slot_name(k)}, {"field", alg.basis[k].str()}});
        j["basis"] = basis;
        algs.push_back(j);
    }
    root["algebras"] = algs;
    nlohmann::json geos = nlohmann::json::array();
    for (const auto& name : geometry_names_) {
        const auto& geo = geometries_.at(name);
        nlohmann::json j;
        j["name"] = name;
        j["algebra"] = geo.algebra;
        j["rank_g"] = geo.rank_g;
        j["rank_h"] = geo.rank_h;
        j["signature"] = geo.sig.str();
        j["curvature_k"] = geo.curvature_k.str();
        nlohmann::json dm = nlohmann::json::array();
        for (const auto& d : geo.domain)
            dm.push_back({{"fn", d.fn.str()}, {"sign", d.sign}});
        j["domain"] = dm;
        nlohmann::json comps = nlohmann::json::object();
        for (int m = 0; m < 4; ++m)
            for (int n = m; n < 4; ++n) {
                if (!geo.g.at({m, n}).is_zero())
                    comps["g" + std::to_string(m) + std::to_string(n)] = geo.g.at({m, n}).str();
                if (!geo.h.at({m, n}).is_zero())
                    comps["h" + std::to_string(m) + std::to_string(n)] = geo.h.at({m, n}).str();
            }
        for (int l = 0; l < 4; ++l)
            for (int m = 0; m < 4; ++m)
                for (int n = m; n < 4; ++n)
                    if (!geo.conn.gamma[l][m][n].is_zero())
                        comps["gamma" + std::to_string(l) + std::to_string(m) +
                              std::to_string(n)] = geo.conn.gamma[l][m][n].str();
        j["components"] = comps;
        geos.push_back(j);
    }
    root["geometries"] = geos;
    return root.dump(2) + "\n";
}

}  // namespace kin
