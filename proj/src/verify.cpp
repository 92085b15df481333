#include "kin/verify.hpp"

#include <chrono>
#include <functional>
#include <map>
#include <sstream>

#include "json.hpp"

namespace kin {

namespace {

struct Working {
    std::vector<std::string> algebra_names, geometry_names;
    std::map<std::string, AlgebraPresentation> algebras;
    std::map<std::string, Geometry> geometries;
    std::vector<AlgebraRecipe> algebra_recipes;
    std::vector<GeometryRecipe> geometry_recipes;
    std::vector<DualityPair> duality_pairs;
    std::vector<AdditivityTriple> additivity;
    RationalMap duality;
    std::set<std::string> user_geometries, user_algebras;
};

void inject_fault(Working& w, const std::string& spec) {
    if (spec.empty()) return;
    std::vector<std::string> parts;
    std::stringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, ':')) parts.push_back(item);
    auto bad = [&] { throw Error("unrecognized fault spec: " + spec); };
    if (parts.size() == 2 && parts[0] == "constant") {
        auto it = w.geometries.find(parts[1]);
        if (it == w.geometries.end()) bad();
        it->second.curvature_k += RationalFn(1);
        return;
    }
    if (parts.size() == 3 && parts[0] == "geometry") {
        auto it = w.geometries.find(parts[1]);
        if (it == w.geometries.end()) bad();
        const std::string& comp = parts[2];
        if (comp.size() == 3 && (comp[0] == 'g' || comp[0] == 'h')) {
            int m = comp[1] - '0', n = comp[2] - '0';
            TensorField& t = comp[0] == 'g' ? it->second.g : it->second.h;
            t.at({m, n}) += RationalFn(1);
            t.at({n, m}) = t.at({m, n});
        } else if (comp.size() == 8 && comp.rfind("gamma", 0) == 0) {
            int l = comp[5] - '0', m = comp[6] - '0', n = comp[7] - '0';
            it->second.conn.gamma[l][m][n] += RationalFn(1);
        } else {
            bad();
        }
        return;
    }
    if (parts.size() == 3 && parts[0] == "algebra") {
        auto it = w.algebras.find(parts[1]);
        if (it == w.algebras.end()) bad();
        int slot = parts[2] == "time" ? 0 : parts[2] == "trans" ? 1 : parts[2] == "boost" ? 4 : -1;
        if (slot < 0) bad();
        // x1^2 d_0 escapes every catalog span
        VectorField junk;
        junk.comp[0] = MultiPoly::variable(VX1) * MultiPoly::variable(VX1);
        it->second.basis[slot] = it->second.basis[slot] + junk;
        return;
    }
    bad();
}

Working build_working(const VerifyOptions& opt) {
    const Catalog& cat = Catalog::instance();
    Working w;
    w.algebra_names = cat.algebra_names();
    w.geometry_names = cat.geometry_names();
    for (const auto& n : w.algebra_names) w.algebras.emplace(n, cat.algebra(n));
    for (const auto& n : w.geometry_names) w.geometries.emplace(n, cat.geometry(n));
    w.algebra_recipes = cat.algebra_recipes();
    w.geometry_recipes = cat.geometry_recipes();
    w.duality_pairs = cat.duality_pairs();
    w.additivity = cat.additivity();
    w.duality = cat.duality_map();

    if (opt.user) {
        for (const auto& decl : opt.user->algebras) {
            if (w.algebras.count(decl.name) || decl.name == "s" || decl.name == "s2")
                throw DuplicateName(decl.name);
            w.algebras.emplace(decl.name, realize_algebra(decl));
            w.algebra_names.push_back(decl.name);
            w.user_algebras.insert(decl.name);
        }
        for (const auto& decl : opt.user->geometries) {
            if (w.geometries.count(decl.name)) throw DuplicateName(decl.name);
            if (!w.algebras.count(decl.algebra)) throw UnknownAlgebra(decl.algebra);
            Geometry geo;
            geo.name = decl.name;
            geo.algebra = decl.algebra;
            geo.g = decl.g;
            geo.h = decl.h;
            geo.conn = decl.conn;
            geo.domain = decl.domain;
            FnMatrix m(4, 4);
            for (int i = 0; i < 4; ++i)
                for (int j = 0; j < 4; ++j) m.at(i, j) = geo.g.at({i, j});
            geo.degenerate = fn_rank(m) < 4;
            w.geometries.emplace(decl.name, std::move(geo));
            w.geometry_names.push_back(decl.name);
            w.user_geometries.insert(decl.name);
        }
        for (const auto& decl : opt.user->contractions) {
            if (w.algebras.count(decl.src)) {
                AlgebraRecipe rec;
                rec.source = decl.src;
                rec.target = decl.dst;
                rec.rule = decl.rule;
                rec.pre = decl.pre;
                auto get = [&](const char* key) {
                    auto it = decl.scales.find(key);
                    return it == decl.scales.end() ? SlotScale{} : it->second;
                };
                rec.t = get("t");
                rec.p = get("p");
                rec.k = get("k");
                if (!w.algebras.count(rec.target)) throw UnknownAlgebra(rec.target);
                w.algebra_recipes.push_back(rec);
            } else if (w.geometries.count(decl.src)) {
                GeometryRecipe rec;
                rec.source = decl.src;
                rec.target = decl.dst;
                rec.rule = decl.rule;
                rec.expect_contract = decl.expect_contract;
                auto get = [&](const char* key) {
                    auto it = decl.scales.find(key);
                    if (it == decl.scales.end()) return TensorScale{};
                    return TensorScale{it->second.coeff.sign() < 0 ? -1 : 1, it->second.order};
                };
                rec.g = get("g");
                rec.h = get("h");
                rec.gamma = get("gamma");
                if (rec.expect_contract && !w.geometries.count(rec.target))
                    throw UnknownGeometry(rec.target);
                w.geometry_recipes.push_back(rec);
            } else {
                throw UnknownSymbol(decl.src);
            }
        }
        for (const auto& decl : opt.user->duals) {
            if (!w.geometries.count(decl.left)) throw UnknownGeometry(decl.left);
            if (!w.geometries.count(decl.right)) throw UnknownGeometry(decl.right);
            w.duality_pairs.push_back({decl.left, decl.right, decl.sign_g, decl.sign_h});
        }
    }

    inject_fault(w, opt.inject_fault);
    return w;
}

class Runner {
public:
    Runner(VerificationReport& rep, const VerifyOptions& opt) : rep_(rep), opt_(opt) {}

    bool suite_on(const std::string& suite) const {
        return opt_.suites.empty() || opt_.suites.count(suite) != 0;
    }

    // fn returns a failure diagnostic, or empty for pass; it may set info,
    // which is attached to passing checks too.
    void run(const std::string& suite, const std::string& subject,
             const std::function<std::string(std::string& info)>& fn) {
        if (!suite_on(suite)) return;
        if (!opt_.only.empty() && subject.find(opt_.only) == std::string::npos) return;
        CheckResult res;
        res.suite = suite;
        res.subject = subject;
        auto start = std::chrono::steady_clock::now();
        std::string info;
        try {
            std::string fail = fn(info);
            if (fail.empty()) {
                res.status = CheckStatus::Pass;
                res.diagnostic = info;
            } else if (fail.rfind("skip:", 0) == 0) {
                res.status = CheckStatus::Skipped;
                res.diagnostic = fail.substr(5);
            } else {
                res.status = CheckStatus::Fail;
                res.diagnostic = fail;
            }
        } catch (const std::exception& e) {
            res.status = CheckStatus::Fail;
            res.diagnostic = e.what();
        }
        auto stop = std::chrono::steady_clock::now();
        res.wall_us =
            std::chrono::duration_cast<std::chrono::microseconds>(stop - start).count();
        rep_.checks.push_back(std::move(res));
    }

private:
    VerificationReport& rep_;
    const VerifyOptions& opt_;
};

VectorField half_sum(const VectorField& a, const VectorField& b, int sign_b) {
    VectorField s = sign_b > 0 ? a + b : a - b;
    return Rational(1, 2) * s;
}

// ---------------------------------------------------------------- closure

void closure_suite(Runner& r, const Working& w) {
    for (const auto& name : w.algebra_names) {
        const AlgebraPresentation& alg = w.algebras.at(name);
        r.run("closure", "closure " + name, [&](std::string& info) -> std::string {
            StructureConstants sc = closure(alg);
            if (!jacobi_check(sc)) return "Jacobi identity fails";
            // so(3) rotation block: brackets of J's stay among J's with the
            // epsilon structure.
            for (int a = 7; a < 10; ++a)
                for (int b = 7; b < 10; ++b)
                    for (int k = 0; k < 7; ++k)
                        if (!sc.c[a][b][k].is_zero())
                            return "rotation block does not close onto itself";
            RationalFn c123 = sc.c[7][8][9];
            if (c123.is_zero() || sc.c[8][9][7] != c123 || sc.c[9][7][8] != c123)
                return "rotation block is not so(3)";
            if (!(c123 * c123 == RationalFn(1))) return "rotation block is not so(3)";
            for (int k = 0; k < kAlgebraDim; ++k)
                if (alg.basis[k].degree() > 2) return "generator degree exceeds 2";
            for (int a = 0; a < kAlgebraDim; ++a)
                for (int b = 0; b < kAlgebraDim; ++b)
                    if (lie_bracket(alg.basis[a], alg.basis[b]).degree() > 2)
                        return "bracket degree exceeds 2";
            info = "dimension 10, Jacobi holds, so(3) isotropy";
            return "";
        });
        r.run("closure", "parity " + name, [&](std::string&) -> std::string {
            return is_automorphism(alg, Involution::parity()) ? ""
                                                              : "parity is not an automorphism";
        });
        r.run("closure", "time-reversal " + name, [&](std::string&) -> std::string {
            return is_automorphism(alg, Involution::time_reversal())
                       ? ""
                       : "time reversal is not an automorphism";
        });
        if (!w.user_algebras.count(name)) {
            r.run("closure", "involution-action " + name, [&](std::string&) -> std::string {
                // The slot signs of the abstract involutions must agree with
                // the pushforward along the coordinate reflection.
                for (const auto& inv : {Involution::parity(), Involution::time_reversal(),
                                        Involution::composite()}) {
                    for (int k = 0; k < kAlgebraDim; ++k) {
                        VectorField want =
                            inv.signs[k] < 0 ? -alg.basis[k] : alg.basis[k];
                        if (reflect_field(alg.basis[k], inv.kind) != want)
                            return "slot signs disagree with the coordinate reflection at slot " +
                                   alg.slot_name(k);
                    }
                }
                return "";
            });
        }
    }

    r.run("closure", "linear-combinations", [&](std::string&) -> std::string {
        auto B = [](GenSym s, int i) { return build_generator(s, i); };
        if (B(GenSym::H, 0) != half_sum(B(GenSym::Hplus, 0), B(GenSym::Hminus, 0), 1))
            return "H != (H+ + H-)/2";
        if (B(GenSym::Hprime, 0) != half_sum(B(GenSym::Hplus, 0), B(GenSym::Hminus, 0), -1))
            return "H' != (H+ - H-)/2";
        for (int i = 1; i <= 3; ++i) {
            if (B(GenSym::P, i) != half_sum(B(GenSym::Pplus, i), B(GenSym::Pminus, i), 1))
                return "P != (P+ + P-)/2";
            if (B(GenSym::Pprime, i) != half_sum(B(GenSym::Pplus, i), B(GenSym::Pminus, i), -1))
                return "P' != (P+ - P-)/2";
            if (B(GenSym::Kg, i) != half_sum(B(GenSym::K, i), B(GenSym::N, i), 1))
                return "Kg != (K + N)/2";
            if (B(GenSym::Kc, i) != half_sum(B(GenSym::K, i), B(GenSym::N, i), -1))
                return "Kc != (K - N)/2";
        }
        return "";
    });
}

// ------------------------------------------------------------- geometry

std::vector<Point> geometry_points(const Geometry& geo, uint64_t seed, int n) {
    SampleStream rng(seed ^ std::hash<std::string>{}(geo.name));
    return sample_domain_points(geo, n, rng);
}

void geometry_suite(Runner& r, const Working& w, uint64_t seed) {
    for (const auto& name : w.geometry_names) {
        const Geometry& geo = w.geometries.at(name);
        bool user = w.user_geometries.count(name) != 0;

        r.run("geometry", "structure " + name, [&](std::string&) -> std::string {
            if (!geo.g.symmetry_holds()) return "g is not symmetric";
            if (!geo.h.symmetry_holds()) return "h is not symmetric";
            if (!geo.conn.torsion_free()) return "connection has torsion";
            if (!user && !point_in_domain(geo, geo.witness))
                return "stored witness point violates the domain";
            if (!user) {
                if (geo.degenerate) {
                    try {
                        christoffel_from_metric(geo.g);
                        return "degenerate g unexpectedly admits a Levi-Civita connection";
                    } catch (const DegenerateMetric&) {
                    }
                } else {
                    if (invert_metric(geo.g) != geo.h) return "h is not the inverse of g";
                    if (christoffel_from_metric(geo.g) != geo.conn)
                        return "connection is not the Levi-Civita connection of g";
                }
            }
            return "";
        });

        r.run("geometry", "compat " + name, [&](std::string&) -> std::string {
            TensorField dg = covariant_deriv_metric(geo.g, geo.conn);
            for (int l = 0; l < 4; ++l)
                for (int m = 0; m < 4; ++m)
                    for (int n = 0; n < 4; ++n)
                        if (!dg.at({l, m, n}).is_zero())
                            return "nabla_" + std::to_string(l) + " g[" + std::to_string(m) +
                                   "][" + std::to_string(n) + "] does not vanish";
            TensorField dh = covariant_deriv_inverse(geo.h, geo.conn);
            for (int m = 0; m < 4; ++m)
                for (int n = 0; n < 4; ++n)
                    for (int l = 0; l < 4; ++l)
                        if (!dh.at({m, n, l}).is_zero())
                            return "nabla_" + std::to_string(l) + " h[" + std::to_string(m) +
                                   "][" + std::to_string(n) + "] does not vanish";
            return "";
        });

        r.run("geometry", "killing " + name, [&](std::string& info) -> std::string {
            const AlgebraPresentation& alg = w.algebras.at(geo.algebra);
            for (int k = 0; k < kAlgebraDim; ++k) {
                if (!lie_derivative(alg.basis[k], geo.g).is_zero())
                    return "Lie derivative of g along " + alg.slot_name(k) + " is nonzero";
                if (!lie_derivative(alg.basis[k], geo.h).is_zero())
                    return "Lie derivative of h along " + alg.slot_name(k) + " is nonzero";
                if (!lie_derivative(alg.basis[k], geo.conn).is_zero())
                    return "Lie derivative of the connection along " + alg.slot_name(k) +
                           " is nonzero";
            }
            info = "10 generators of " + geo.algebra + " annihilate (g, h, conn)";
            return "";
        });

        TensorField riem_cache(1, 3);
        r.run("geometry", "curvature " + name, [&](std::string& info) -> std::string {
            TensorField riem = riemann(geo.conn);
            if (user) {
                (void)info;
                return "skip:no declared curvature constant for a user geometry";
            }
            if (!constant_curvature_check(riem, geo.g, geo.curvature_k))
                return "curvature does not have the constant-curvature form with k = " +
                       geo.curvature_k.str();
            TensorField ric = ricci(riem);
            TensorField expect = (RationalFn(3) * geo.curvature_k) * geo.g;
            if (ric != expect) return "Ricci tensor is not 3k g";
            info = "R = k (d g - d g) with k = " + geo.curvature_k.str();
            return "";
        });

        r.run("geometry", "weyl " + name, [&](std::string&) -> std::string {
            TensorField riem = riemann(geo.conn);
            TensorField ric = ricci(riem);
            if (!weyl_projective(riem, ric).is_zero())
                return "Weyl projective curvature does not vanish";
            return "";
        });

        if (!user) {
            r.run("geometry", "rank-signature " + name, [&](std::string& info) -> std::string {
                auto points = geometry_points(geo, seed, 5);
                auto [ranks, sig] = signature_rank(geo, points);
                if (ranks.first != geo.rank_g || ranks.second != geo.rank_h)
                    return "ranks (" + std::to_string(ranks.first) + ", " +
                           std::to_string(ranks.second) + ") differ from the declared (" +
                           std::to_string(geo.rank_g) + ", " + std::to_string(geo.rank_h) + ")";
                if (sig != geo.sig)
                    return "signature " + sig.str() + " differs from the declared " +
                           geo.sig.str();
                info = "ranks (" + std::to_string(ranks.first) + ", " +
                       std::to_string(ranks.second) + "), signature " + sig.str();
                return "";
            });
        }

        if (!geo.free_parameters_sq.empty()) {
            r.run("geometry", "free-parameter " + name, [&](std::string& info) -> std::string {
                if (geo.rank_g + geo.rank_h != 3) return "rank sum is not 3";
                for (const auto& psi : geo.free_parameters_sq) {
                    for (int m = 0; m < 4; ++m) {
                        RationalFn acc(0);
                        for (int n = 0; n < 4; ++n)
                            acc += geo.h.at({m, n}) * psi.derivative(Var(n));
                        if (!acc.is_zero()) return "h does not annihilate the free parameter";
                    }
                }
                for (const auto& v : geo.g_kernel) {
                    for (int m = 0; m < 4; ++m) {
                        RationalFn acc(0);
                        for (int n = 0; n < 4; ++n)
                            acc += geo.g.at({m, n}) * RationalFn(v.comp[n]);
                        if (!acc.is_zero()) return "kernel field is not annihilated by g";
                    }
                }
                info = "rank sum 3; free parameter annihilated";
                return "";
            });
        }

        if (geo.contrast != ContrastClass::None) {
            r.run("geometry", "contrast " + name, [&](std::string& info) -> std::string {
                const RationalFn& f = geo.contrast_factor;
                switch (geo.contrast) {
                    case ContrastClass::TimeBeltrami: {
                        // rank-1 Beltrami time plus conformally flat 3-space
                        for (int m = 0; m < 4; ++m)
                            for (int n = 0; n < 4; ++n)
                                if ((m != n || m != 0) && !geo.g.at({m, n}).is_zero())
                                    return "g has support off the time block";
                        RationalFn g00xsig2 = geo.g.at({0, 0}) * f * f;
                        if (g00xsig2 != RationalFn(1) && g00xsig2 != RationalFn(-1))
                            return "g00 is not the 1d Beltrami time metric";
                        // the 1d Beltrami display (1/s)(1 + k nu^2 t^2 / s) with
                        // s = 1 - k nu^2 t^2 collapses to 1/s^2
                        {
                            RationalFn nut2(MultiPoly::variable(VX0, 2) *
                                            MultiPoly::variable(VL, -2));
                            RationalFn k = (RationalFn(1) - f) / nut2;
                            RationalFn inv_f = RationalFn(1) / f;
                            RationalFn display = inv_f * (RationalFn(1) + k * nut2 * inv_f);
                            if (display != inv_f * inv_f)
                                return "1d Beltrami time display identity fails";
                        }
                        for (int i = 1; i < 4; ++i) {
                            if (!geo.h.at({0, i}).is_zero() || !geo.h.at({i, 0}).is_zero())
                                return "h mixes time and space";
                            RationalFn ratio = geo.h.at({i, i}) / f;
                            if (ratio != RationalFn(1) && ratio != RationalFn(-1))
                                return "h is not conformally flat with the stated factor";
                            for (int j = 1; j < 4; ++j)
                                if (i != j && !geo.h.at({i, j}).is_zero())
                                    return "h is not diagonal on space";
                        }
                        if (!geo.h.at({0, 0}).is_zero()) return "h has a time-time part";
                        info = "1d Beltrami time; h conformal to flat 3-space, factor " + f.str();
                        return "";
                    }
                    case ContrastClass::SpaceBeltrami: {
                        for (int m = 0; m < 4; ++m)
                            if (!geo.g.at({0, m}).is_zero() || !geo.g.at({m, 0}).is_zero())
                                return "g has time components";
                        // g is +- the 3d Beltrami model built from the factor:
                        // (1/sigma3)(d_ij + cross x_i x_j / (l^2 sigma3)).
                        bool model_ok = false;
                        RationalFn inv_f = RationalFn(1) / f;
                        RationalFn lm2 = RationalFn::variable(VL, -2);
                        for (int cross : {1, -1}) {
                            for (int overall : {1, -1}) {
                                bool all = true;
                                for (int i = 1; i < 4 && all; ++i)
                                    for (int j = 1; j < 4 && all; ++j) {
                                        RationalFn expect =
                                            Rational(cross) *
                                            (lm2 *
                                             RationalFn(MultiPoly::variable(Var(i)) *
                                                        MultiPoly::variable(Var(j))) *
                                             inv_f * inv_f);
                                        if (i == j) expect += inv_f;
                                        if (geo.g.at({i, j}) != Rational(overall) * expect)
                                            all = false;
                                    }
                                model_ok |= all;
                            }
                        }
                        if (!model_ok) return "g is not the 3d Beltrami model of the factor";
                        RationalFn ratio = geo.h.at({0, 0}) / f;
                        if (ratio != RationalFn(1) && ratio != RationalFn(-1))
                            return "h is not conformal 1d time with the stated factor";
                        for (int m = 0; m < 4; ++m)
                            for (int n = 0; n < 4; ++n)
                                if ((m != 0 || n != 0) && !geo.h.at({m, n}).is_zero())
                                    return "h has support off the time block";
                        info = "3d Beltrami space; h conformal to flat time, factor " + f.str();
                        return "";
                    }
                    case ContrastClass::FlatTime:
                    case ContrastClass::FlatSpace: {
                        if (!geo.conn.is_zero()) return "flat row with nonzero connection";
                        info = "flat split, conformal factor 1";
                        return "";
                    }
                    default: return "";
                }
            });
        }
    }

    r.run("geometry", "genuine-kinematics", [&](std::string& info) -> std::string {
        const auto& rows = Catalog::instance().genuine_rows();
        if (rows.size() != 9) return "the genuine-kinematics grid must have 9 rows";
        for (const auto& row : rows) {
            const Geometry& geo = w.geometries.at(row.geometry);
            SignatureDescriptor want;
            switch (row.cls) {
                case KinematicsClass::Relativistic: want = {1, 3, 1, 3}; break;
                case KinematicsClass::AbsoluteTime: want = {1, 0, 0, 3}; break;
                case KinematicsClass::AbsoluteSpace: want = {0, 3, 1, 0}; break;
                default: return "bad class";
            }
            SignatureDescriptor flipped{want.g_minus, want.g_plus, want.h_minus, want.h_plus};
            if (geo.sig != want && geo.sig != flipped)
                return row.geometry + " does not carry the Lorentz-like signature of its class";
            if (geo.genuine != row.cls) return row.geometry + " is not tagged with its class";
        }
        // No other catalog row carries the tag.
        int tagged = 0;
        for (const auto& name : w.geometry_names)
            if (w.geometries.at(name).genuine != KinematicsClass::None) ++tagged;
        if (tagged != 9) return "exactly 9 geometries must be tagged genuine";
        info = "3 relativistic + 3 absolute-time + 3 absolute-space";
        return "";
    });

    // Finite fractional-linear invariance (two non-identity maps per family).
    auto invariance = [&](const std::string& subject, const std::string& geo_name,
                          const std::array<int, 4>& form,
                          const std::vector<std::pair<std::array<std::array<Rational, 4>, 4>,
                                                      std::array<Rational, 4>>>& maps) {
        r.run("geometry", subject, [&](std::string& info) -> std::string {
            const Geometry& geo = w.geometries.at(geo_name);
            int checked = 0;
            for (const auto& [s, b] : maps) {
                RationalMap map = fractional_linear_map(s, b, form);
                Geometry back = pullback(map, geo);
                if (back.g != geo.g) return "g is not invariant under map " +
                                            std::to_string(checked + 1);
                if (back.h != geo.h) return "h is not invariant under map " +
                                            std::to_string(checked + 1);
                if (back.conn != geo.conn)
                    return "connection is not invariant under map " + std::to_string(checked + 1);
                ++checked;
            }
            info = std::to_string(checked) + " fractional-linear maps leave (g, h, conn) fixed";
            return "";
        });
    };

    auto ident = [] {
        std::array<std::array<Rational, 4>, 4> s{};
        for (int i = 0; i < 4; ++i) s[i][i] = Rational(1);
        return s;
    };
    {
        // SO(4): 90-degree rotation in (x1, x2) and a 3-4-5 rotation in (x0, x1).
        auto rot90 = ident();
        rot90[1][1] = Rational(0);
        rot90[2][2] = Rational(0);
        rot90[1][2] = Rational(-1);
        rot90[2][1] = Rational(1);
        auto rot345 = ident();
        rot345[0][0] = Rational(3, 5);
        rot345[0][1] = Rational(-4, 5);
        rot345[1][0] = Rational(4, 5);
        rot345[1][1] = Rational(3, 5);
        invariance("invariance E_2", "E_2", {1, 1, 1, 1},
                   {{rot90, {Rational(1), Rational(0), Rational(0), Rational(0)}},
                    {rot345, {Rational(0), Rational(1), Rational(0), Rational(0)}}});
    }
    {
        // Lorentz: 3-4-5 boost in (x0, x1) and a spatial 3-4-5 rotation in (x2, x3).
        auto boost = ident();
        boost[0][0] = Rational(5, 4);
        boost[0][1] = Rational(3, 4);
        boost[1][0] = Rational(3, 4);
        boost[1][1] = Rational(5, 4);
        auto rot = ident();
        rot[2][2] = Rational(3, 5);
        rot[2][3] = Rational(-4, 5);
        rot[3][2] = Rational(4, 5);
        rot[3][3] = Rational(3, 5);
        invariance("invariance P_2-", "P_2-", {1, -1, -1, -1},
                   {{boost, {Rational(1), Rational(0), Rational(0), Rational(0)}},
                    {rot, {Rational(0), Rational(0), Rational(1), Rational(0)}}});
        invariance("invariance P_2+", "P_2+", {1, -1, -1, -1},
                   {{boost, {Rational(0), Rational(1), Rational(0), Rational(0)}},
                    {rot, {Rational(0), Rational(0), Rational(0), Rational(1)}}});
    }
}

// ------------------------------------------------------------ contraction

std::vector<Point> generic_points(uint64_t seed, int n) {
    SampleStream rng(seed ^ 0xC0FFEEULL);
    std::vector<Point> pts;
    while (int(pts.size()) < n) {
        Point p;
        bool ok = true;
        for (int i = 0; i < 4; ++i) {
            p[i] = rng.next_nonzero(6);
        }
        p[VC] = rng.next_nonzero(4).abs() + Rational(1);
        p[VL] = rng.next_nonzero(4).abs() + Rational(1);
        p[VEPS] = Rational(1);
        // Keep the usual quadrics away from zero.
        MultiPoly r2 = MultiPoly::variable(VX1) * MultiPoly::variable(VX1) +
                       MultiPoly::variable(VX2) * MultiPoly::variable(VX2) +
                       MultiPoly::variable(VX3) * MultiPoly::variable(VX3);
        MultiPoly x0sq = MultiPoly::variable(VX0) * MultiPoly::variable(VX0);
        for (const MultiPoly& q : {r2, x0sq, x0sq - r2, x0sq + r2})
            if (q.eval(p).is_zero()) ok = false;
        if (ok) pts.push_back(p);
    }
    return pts;
}

void contraction_suite(Runner& r, const Working& w, uint64_t seed) {
    for (const auto& rec : w.algebra_recipes) {
        std::string subject = "algebra " + rec.source + "->" + rec.target + " (" +
                              rule_info(rec.rule).name + ")";
        r.run("contraction", subject, [&](std::string& info) -> std::string {
            const AlgebraPresentation& src = w.algebras.at(rec.source);
            const AlgebraPresentation& dst = w.algebras.at(rec.target);
            AlgebraPresentation contracted = contract_algebra(src, rec, dst);
            if (!constants_equal(closure(contracted), closure(dst)))
                return "re-closed structure constants differ from the target";
            info = "all 10 slots match; structure constants agree";
            return "";
        });
    }

    std::vector<Point> generic = generic_points(seed, 4);
    for (const auto& rec : w.geometry_recipes) {
        std::string subject = "geometry " + rec.source + "->" +
                              (rec.expect_contract ? rec.target : rec.target + " [blocked]") +
                              " (" + rule_info(rec.rule).name + ")";
        r.run("contraction", subject, [&](std::string& info) -> std::string {
            const Geometry& src = w.geometries.at(rec.source);
            std::vector<Point> pts = generic;
            if (rec.expect_contract) {
                const Geometry& dst = w.geometries.at(rec.target);
                pts = geometry_points(dst, seed, 3);
            }
            const Geometry* dst =
                rec.expect_contract ? &w.geometries.at(rec.target) : nullptr;
            std::optional<Geometry> contracted = contract_geometry_checked(src, rec, dst, pts);
            if (contracted) {
                // Compatibility survives the limit.
                if (!compat_check(*contracted)) return "contracted triple is not compatible";
                info = "contracts onto " + rec.target;
            } else {
                info = "not contractible (domain inequality violated)";
            }
            return "";
        });
    }

    r.run("contraction", "edge-set provenance", [&](std::string& info) -> std::string {
        info = "all " + std::to_string(w.algebra_recipes.size()) + "+" +
               std::to_string(w.geometry_recipes.size()) +
               " edges come from explicit limit statements; edges appearing only in the"
               " overview diagrams are not encoded";
        return "";
    });

    r.run("contraction", "commute d+ -> p -> c", [&](std::string&) -> std::string {
        // Factored limit l_r -> inf then c_r -> 0 against the direct recipe.
        const AlgebraPresentation& dplus = w.algebras.at("d+");
        const AlgebraPresentation& p = w.algebras.at("p");
        const AlgebraPresentation& c = w.algebras.at("c");
        AlgebraRecipe first{"d+", "p", RuleKind::LInf, InvolutionKind::Identity, {}, {}, {}};
        AlgebraContraction step1 = contract_algebra_basis(dplus, first);
        for (int k = 0; k < kAlgebraDim; ++k)
            if (step1.basis[k] != p.basis[k]) return "first leg does not land on p";
        AlgebraRecipe second{"p", "c", RuleKind::CZero, InvolutionKind::Identity, {}, {},
                             SlotScale{Rational(1), 2}};
        AlgebraContraction step2 = contract_algebra_basis(p, second);
        AlgebraRecipe direct{"d+", "c", RuleKind::LInfCZero, InvolutionKind::Identity, {}, {},
                             SlotScale{Rational(1), 2}};
        AlgebraContraction one = contract_algebra_basis(dplus, direct);
        for (int k = 0; k < kAlgebraDim; ++k) {
            if (step2.basis[k] != one.basis[k]) return "factored and direct limits differ";
            if (one.basis[k] != c.basis[k]) return "direct limit does not land on c";
        }
        return "";
    });

    r.run("contraction", "bll-equivalence p2", [&](std::string& info) -> std::string {
        StructureConstants sc = closure(w.algebras.at("d+"));
        StructureConstants out = bll_contract(sc, block_weights(1, 1, 0, 0));
        if (!constants_equal(out, closure(w.algebras.at("p2"))))
            return "eps = l_r^2/l^2 rescaling does not give the p2 constants";
        info = "H -> eps H, P -> eps P with eps = l_r^2/l^2";
        return "";
    });
    r.run("contraction", "bll-equivalence n+2", [&](std::string& info) -> std::string {
        StructureConstants sc = closure(w.algebras.at("d+"));
        StructureConstants out = bll_contract(sc, block_weights(0, 1, 1, 0));
        if (!constants_equal(out, closure(w.algebras.at("n+2"))))
            return "eps = l_r^2/l^2 = c_r^2/c^2 rescaling does not give the n+2 constants";
        info = "P -> eps P, K -> eps K with eps = l_r^2/l^2 = c_r^2/c^2";
        return "";
    });

    // Combinatory route equals the contraction route (which equals the
    // catalog basis, checked edge by edge above).
    struct Combo {
        const char* name;
        GenSym t_a, t_b;
        int t_sign;  // T = (t_a + t_sign t_b)/2, or plain t_a when t_b == t_a
        GenSym p_a, p_b;
        int p_sign;
        GenSym b_a, b_b;
        int b_sign;
    };
    const Combo combos[] = {
        {"p", GenSym::Hplus, GenSym::Hminus, 1, GenSym::Pplus, GenSym::Pminus, 1, GenSym::K,
         GenSym::K, 1},
        {"e", GenSym::Hplus, GenSym::Hminus, 1, GenSym::Pplus, GenSym::Pminus, 1, GenSym::N,
         GenSym::N, 1},
        {"n+", GenSym::Hplus, GenSym::Hplus, 1, GenSym::Pplus, GenSym::Pminus, 1, GenSym::K,
         GenSym::N, 1},
        {"n-", GenSym::Hminus, GenSym::Hminus, 1, GenSym::Pplus, GenSym::Pminus, 1, GenSym::K,
         GenSym::N, 1},
        {"h+", GenSym::Hplus, GenSym::Hminus, 1, GenSym::Pplus, GenSym::Pplus, 1, GenSym::K,
         GenSym::N, -1},
        {"h-", GenSym::Hplus, GenSym::Hminus, 1, GenSym::Pminus, GenSym::Pminus, 1, GenSym::K,
         GenSym::N, -1},
        {"g", GenSym::Hplus, GenSym::Hminus, 1, GenSym::Pplus, GenSym::Pminus, 1, GenSym::K,
         GenSym::N, 1},
        {"c", GenSym::Hplus, GenSym::Hminus, 1, GenSym::Pplus, GenSym::Pminus, 1, GenSym::K,
         GenSym::N, -1},
        {"g'", GenSym::Hplus, GenSym::Hminus, -1, GenSym::Pplus, GenSym::Pminus, 1, GenSym::K,
         GenSym::N, 1},
    };
    for (const Combo& combo : combos) {
        r.run("contraction", std::string("combinatory ") + combo.name,
              [&](std::string&) -> std::string {
                  const AlgebraPresentation& alg = w.algebras.at(combo.name);
                  VectorField t = combo.t_a == combo.t_b
                                      ? build_generator(combo.t_a, 0)
                                      : half_sum(build_generator(combo.t_a, 0),
                                                 build_generator(combo.t_b, 0), combo.t_sign);
                  if (t != alg.basis[0]) return std::string("time slot differs");
                  for (int i = 1; i <= 3; ++i) {
                      VectorField p = combo.p_a == combo.p_b
                                          ? build_generator(combo.p_a, i)
                                          : half_sum(build_generator(combo.p_a, i),
                                                     build_generator(combo.p_b, i), combo.p_sign);
                      if (p != alg.basis[i]) return std::string("translation slot differs");
                      VectorField b = combo.b_a == combo.b_b
                                          ? build_generator(combo.b_a, i)
                                          : half_sum(build_generator(combo.b_a, i),
                                                     build_generator(combo.b_b, i), combo.b_sign);
                      if (b != alg.basis[3 + i]) return std::string("boost slot differs");
                  }
                  return "";
              });
    }
}

// ---------------------------------------------------------------- duality

Point map_point(const RationalMap& map, const Point& p) {
    Point q = p;
    for (int i = 0; i < 4; ++i) q[i] = map.fwd[i].eval(p);
    return q;
}

void duality_suite(Runner& r, const Working& w, uint64_t seed) {
    r.run("duality", "map-involution", [&](std::string& info) -> std::string {
        validate_map(w.duality);
        for (int i = 0; i < 4; ++i)
            if (w.duality.fwd[i] != w.duality.inv[i]) return "map is not its own inverse";
        info = "t -> 1/(nu^2 t), x -> x/(nu t) composes to the identity";
        return "";
    });

    for (const auto& pair : w.duality_pairs) {
        std::string subject = pair.left + "<->" + pair.right;
        r.run("duality", subject, [&](std::string& info) -> std::string {
            const Geometry& left = w.geometries.at(pair.left);
            const Geometry& right = w.geometries.at(pair.right);
            Geometry pulled = pullback(w.duality, right);
            RationalFn sg(Rational(pair.sign_g)), sh(Rational(pair.sign_h));
            for (int m = 0; m < 4; ++m)
                for (int n = 0; n < 4; ++n) {
                    if (sg * pulled.g.at({m, n}) != left.g.at({m, n}))
                        throw DualityMismatch("g[" + std::to_string(m) + "][" +
                                              std::to_string(n) + "] mismatch");
                    if (sh * pulled.h.at({m, n}) != left.h.at({m, n}))
                        throw DualityMismatch("h[" + std::to_string(m) + "][" +
                                              std::to_string(n) + "] mismatch");
                }
            for (int l = 0; l < 4; ++l)
                for (int m = 0; m < 4; ++m)
                    for (int n = 0; n < 4; ++n)
                        if (pulled.conn.gamma[l][m][n] != left.conn.gamma[l][m][n])
                            throw DualityMismatch("connection mismatch");
            // The map sends the left domain into the right domain (away from
            // its singular locus x0 = 0).
            {
                SampleStream rng(seed ^ std::hash<std::string>{}(pair.left + pair.right));
                int checked = 0, guard = 0;
                while (checked < 3 && ++guard < 20000) {
                    auto pts = sample_domain_points(left, 1, rng);
                    if (pts[0][VX0].is_zero()) continue;
                    Point q = map_point(w.duality, pts[0]);
                    if (!point_in_domain(right, q))
                        throw DualityMismatch(
                            "image of a left-domain point leaves the right domain");
                    ++checked;
                }
                if (checked < 3) throw Error("could not sample duality containment points");
            }
            if (pair.left == pair.right) info = "self-dual fixed point";
            else if (pair.sign_g < 0 || pair.sign_h < 0)
                info = std::string("holds with recorded signs (g: ") +
                       (pair.sign_g > 0 ? "+" : "-") + ", h: " + (pair.sign_h > 0 ? "+" : "-") +
                       ")";
            return "";
        });
    }
}

// -------------------------------------------------------------- additivity

void additivity_suite(Runner& r, const Working& w) {
    for (const auto& triple : w.additivity) {
        std::string subject = triple.a + " + " + triple.b + " = " + triple.target;
        r.run("additivity", subject, [&](std::string& info) -> std::string {
            const Geometry& a = w.geometries.at(triple.a);
            const Geometry& b = w.geometries.at(triple.b);
            const Geometry& t = w.geometries.at(triple.target);
            RationalFn sa(Rational(triple.sign_a));
            for (int m = 0; m < 4; ++m)
                for (int n = 0; n < 4; ++n)
                    if (sa * a.h.at({m, n}) + b.h.at({m, n}) != t.h.at({m, n}))
                        return "h[" + std::to_string(m) + "][" + std::to_string(n) +
                               "] additivity fails";
            if (triple.sign_a < 0)
                info = "holds with the recorded sign of the first summand";
            return "";
        });
    }
}

}  // namespace

VerificationReport run_verification(const VerifyOptions& options) {
    VerificationReport rep;
    rep.seed = options.seed;
    rep.catalog_version = Catalog::instance().version();
    rep.with_timings = options.timings;

    Working w = build_working(options);
    Runner runner(rep, options);
    closure_suite(runner, w);
    geometry_suite(runner, w, options.seed);
    contraction_suite(runner, w, options.seed);
    duality_suite(runner, w, options.seed);
    additivity_suite(runner, w);
    return rep;
}

namespace {

const char* status_name(CheckStatus s) {
    switch (s) {
        case CheckStatus::Pass: return "PASS";
        case CheckStatus::Fail: return "FAIL";
        default: return "SKIP";
    }
}

std::string seed_hex(uint64_t seed) {
    std::ostringstream out;
    out << "0x" << std::hex << seed;
    return out.str();
}

}  // namespace

std::string emit_text(const VerificationReport& rep) {
    std::ostringstream out;
    out << "kinematical catalog verification (catalog " << rep.catalog_version << ", seed "
        << seed_hex(rep.seed) << ")\n";
    std::string suite;
    std::map<std::string, std::pair<int, int>> totals;  // suite -> (pass, all)
    for (const auto& c : rep.checks) {
        if (c.suite != suite) {
            suite = c.suite;
            out << "\n[" << suite << "]\n";
        }
        out << status_name(c.status) << " " << c.subject;
        if (!c.diagnostic.empty()) out << ": " << c.diagnostic;
        if (rep.with_timings) out << " (" << c.wall_us << " us)";
        out << "\n";
        auto& t = totals[c.suite];
        if (c.status == CheckStatus::Pass) ++t.first;
        if (c.status != CheckStatus::Skipped) ++t.second;
    }
    // Catalog tables.
    const Catalog& cat0 = Catalog::instance();
    out << "\n[algebras and generator sets]\n";
    for (const auto& name : cat0.algebra_names()) {
        const auto& alg = cat0.algebra(name);
        out << "  " << name;
        for (size_t pad = name.size(); pad < 5; ++pad) out << ' ';
        out << " (";
        for (int blk = 0; blk < 4; ++blk) {
            if (blk) out << ", ";
            if (alg.slots[blk].sign < 0) out << "-";
            out << gen_sym_name(alg.slots[blk].sym);
            if (blk > 0) out << "_i";
        }
        out << ")  " << alg.display << "\n";
    }
    out << "\n[geometries]\n";
    for (const auto& name : cat0.geometry_names()) {
        const auto& geo = cat0.geometry(name);
        out << "  " << name;
        for (size_t pad = name.size(); pad < 7; ++pad) out << ' ';
        out << " alg " << geo.algebra;
        for (size_t pad = geo.algebra.size(); pad < 4; ++pad) out << ' ';
        out << " ranks (" << geo.rank_g << "," << geo.rank_h << ")  " << geo.sig.str()
            << "  k=" << (geo.curvature_k.is_zero() ? "0" : geo.curvature_k.str());
        if (!geo.domain.empty())
            out << "  domain " << geo.domain[0].fn.str()
                << (geo.domain[0].sign > 0 ? " > 0" : " < 0");
        out << "\n";
    }
    out << "\n[present <-> time-infinity duality]\n";
    for (const auto& pair : cat0.duality_pairs()) {
        out << "  " << pair.left << " <-> " << pair.right;
        if (pair.left == pair.right) out << "  (self-dual)";
        if (pair.sign_g < 0 || pair.sign_h < 0)
            out << "  [overall sign: g " << (pair.sign_g > 0 ? "+" : "-") << ", h "
                << (pair.sign_h > 0 ? "+" : "-") << "]";
        out << "\n";
    }
    out << "\n[genuine possible kinematics]\n";
    auto cls_name = [](KinematicsClass c) {
        switch (c) {
            case KinematicsClass::Relativistic: return "relativistic ";
            case KinematicsClass::AbsoluteTime: return "absolute-time";
            case KinematicsClass::AbsoluteSpace: return "absolute-space";
            default: return "?";
        }
    };
    for (KinematicsClass c : {KinematicsClass::Relativistic, KinematicsClass::AbsoluteTime,
                              KinematicsClass::AbsoluteSpace}) {
        out << "  " << cls_name(c) << ":";
        for (int sign : {1, 0, -1})
            for (const auto& row : cat0.genuine_rows())
                if (row.cls == c && row.curvature_sign == sign)
                    out << "  " << row.geometry << " (" 
                        << (sign > 0 ? ">0" : sign < 0 ? "<0" : "=0") << ")";
        out << "\n";
    }

    out << "\nsummary:\n";
    for (const auto& [name, t] : totals)
        out << "  " << name << ": " << t.first << "/" << t.second << "\n";

    // Count catalog subjects fully verified by the geometry suite.
    const Catalog& cat = Catalog::instance();
    auto count_subjects = [&](const std::string& suite_name,
                              const std::vector<std::string>& names,
                              const char* prefix) {
        int good = 0, seen = 0;
        for (const auto& n : names) {
            bool any = false, all = true;
            for (const auto& c : rep.checks) {
                if (c.suite != suite_name) continue;
                auto pos = c.subject.find(' ');
                std::string tail = pos == std::string::npos ? c.subject : c.subject.substr(pos + 1);
                if (tail != n && c.subject != std::string(prefix) + " " + n) continue;
                any = true;
                if (c.status == CheckStatus::Fail) all = false;
            }
            if (any) {
                ++seen;
                if (all) ++good;
            }
        }
        return std::make_pair(good, seen);
    };
    auto [galg, salg] = count_subjects("closure", cat.algebra_names(), "closure");
    if (salg > 0) out << "  algebras verified: " << galg << "/" << salg << "\n";
    auto [ggeo, sgeo] = count_subjects("geometry", cat.geometry_names(), "structure");
    if (sgeo > 0) out << "  geometries verified: " << ggeo << "/" << sgeo << "\n";
    out << "overall: " << (rep.overall_pass() ? "PASS" : "FAIL") << "\n";
    return out.str();
}

std::string emit_json(const VerificationReport& rep) {
    nlohmann::json root;
    root["schema"] = 1;
    root["seed"] = seed_hex(rep.seed);
    root["catalog"] = rep.catalog_version;
    root["overall"] = rep.overall_pass() ? "pass" : "fail";
    nlohmann::json checks = nlohmann::json::array();
    for (const auto& c : rep.checks) {
        nlohmann::json j;
        j["suite"] = c.suite;
        j["subject"] = c.subject;
        j["status"] = c.status == CheckStatus::Pass   ? "pass"
                      : c.status == CheckStatus::Fail ? "fail"
                                                      : "skipped";
        if (!c.diagnostic.empty()) j["diagnostic"] = c.diagnostic;
        if (rep.with_timings) j["wall_us"] = c.wall_us;
        checks.push_back(j);
    }
    root["checks"] = checks;
    return root.dump(2) + "\n";
}

}  // namespace kin
