#include "kin/geometry.hpp"

#include <sstream>

namespace kin {

std::string SignatureDescriptor::str() const {
    std::ostringstream out;
    out << "(";
    bool first = true;
    auto run = [&](int n, char s) {
        for (int i = 0; i < n; ++i) {
            if (!first) out << ",";
            first = false;
            out << s;
        }
    };
    run(g_plus, '+');
    run(g_minus, '-');
    out << ";";
    first = true;
    run(h_plus, '+');
    run(h_minus, '-');
    out << ")";
    return out.str();
}

TensorField invert_metric(const TensorField& g) {
    FnMatrix m(4, 4);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) m.at(i, j) = g.at({i, j});
    auto inv = fn_inverse(m);
    if (!inv) throw DegenerateMetric();
    TensorField h = TensorField::inverse_metric();
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) h.at({i, j}) = inv->at(i, j);
    return h;
}

Connection christoffel_from_metric(const TensorField& g) {
    TensorField h = invert_metric(g);
    Connection conn;
    const Rational half(1, 2);
    for (int l = 0; l < 4; ++l) {
        for (int m = 0; m < 4; ++m) {
            for (int n = m; n < 4; ++n) {
                RationalFn acc(0);
                for (int r = 0; r < 4; ++r) {
                    RationalFn sum = g.at({r, n}).derivative(Var(m)) +
                                     g.at({r, m}).derivative(Var(n)) -
                                     g.at({m, n}).derivative(Var(r));
                    acc += h.at({l, r}) * sum;
                }
                conn.gamma[l][m][n] = RationalFn(half) * acc;
                conn.gamma[l][n][m] = conn.gamma[l][m][n];
            }
        }
    }
    return conn;
}

TensorField riemann(const Connection& c) {
    TensorField riem(1, 3);
    for (int s = 0; s < 4; ++s) {
        for (int m = 0; m < 4; ++m) {
            for (int r = 0; r < 4; ++r) {
                for (int n = 0; n < 4; ++n) {
                    RationalFn acc = c.gamma[s][m][n].derivative(Var(r)) -
                                     c.gamma[s][m][r].derivative(Var(n));
                    for (int t = 0; t < 4; ++t) {
                        acc += c.gamma[s][t][r] * c.gamma[t][m][n];
                        acc -= c.gamma[s][t][n] * c.gamma[t][m][r];
                    }
                    riem.at({s, m, r, n}) = acc;
                }
            }
        }
    }
    return riem;
}

TensorField ricci(const TensorField& riem) {
    TensorField ric = TensorField::metric();
    for (int m = 0; m < 4; ++m)
        for (int n = 0; n < 4; ++n) {
            RationalFn acc(0);
            for (int s = 0; s < 4; ++s) acc += riem.at({s, m, n, s});
            ric.at({m, n}) = acc;
        }
    return ric;
}

TensorField weyl_projective(const TensorField& riem, const TensorField& ric) {
    TensorField w(1, 3);
    const RationalFn third(Rational(1, 3));
    for (int l = 0; l < 4; ++l)
        for (int m = 0; m < 4; ++m)
            for (int s = 0; s < 4; ++s)
                for (int n = 0; n < 4; ++n) {
                    RationalFn acc = riem.at({l, m, s, n});
                    if (l == s) acc += third * ric.at({m, n});
                    if (l == n) acc -= third * ric.at({m, s});
                    w.at({l, m, s, n}) = acc;
                }
    return w;
}

TensorField covariant_deriv_metric(const TensorField& g, const Connection& c) {
    TensorField d(0, 3);
    for (int l = 0; l < 4; ++l)
        for (int m = 0; m < 4; ++m)
            for (int n = 0; n < 4; ++n) {
                RationalFn acc = g.at({m, n}).derivative(Var(l));
                for (int k = 0; k < 4; ++k) {
                    acc -= c.gamma[k][l][n] * g.at({m, k});
                    acc -= c.gamma[k][m][l] * g.at({k, n});
                }
                d.at({l, m, n}) = acc;
            }
    return d;
}

TensorField covariant_deriv_inverse(const TensorField& h, const Connection& c) {
    TensorField d(2, 1);
    for (int m = 0; m < 4; ++m)
        for (int n = 0; n < 4; ++n)
            for (int l = 0; l < 4; ++l) {
                RationalFn acc = h.at({m, n}).derivative(Var(l));
                for (int k = 0; k < 4; ++k) {
                    acc += c.gamma[n][l][k] * h.at({m, k});
                    acc += c.gamma[m][l][k] * h.at({k, n});
                }
                d.at({m, n, l}) = acc;
            }
    return d;
}

bool compat_check(const Geometry& geo) {
    return covariant_deriv_metric(geo.g, geo.conn).is_zero() &&
           covariant_deriv_inverse(geo.h, geo.conn).is_zero();
}

TensorField lie_derivative(const VectorField& xi, const TensorField& t) {
    std::array<RationalFn, 4> x;
    for (int i = 0; i < 4; ++i) x[i] = RationalFn(xi.comp[i]);
    if (t.p() == 0 && t.q() == 2) {
        TensorField out = TensorField::metric();
        for (int m = 0; m < 4; ++m)
            for (int n = 0; n < 4; ++n) {
                RationalFn acc(0);
                for (int l = 0; l < 4; ++l) {
                    acc += t.at({m, n}).derivative(Var(l)) * x[l];
                    acc += t.at({m, l}) * x[l].derivative(Var(n));
                    acc += t.at({l, n}) * x[l].derivative(Var(m));
                }
                out.at({m, n}) = acc;
            }
        return out;
    }
    if (t.p() == 2 && t.q() == 0) {
        TensorField out = TensorField::inverse_metric();
        for (int m = 0; m < 4; ++m)
            for (int n = 0; n < 4; ++n) {
                RationalFn acc(0);
                for (int l = 0; l < 4; ++l) {
                    acc += t.at({m, n}).derivative(Var(l)) * x[l];
                    acc -= t.at({m, l}) * x[n].derivative(Var(l));
                    acc -= t.at({l, n}) * x[m].derivative(Var(l));
                }
                out.at({m, n}) = acc;
            }
        return out;
    }
    throw Error("lie_derivative: unsupported valence");
}

Connection lie_derivative(const VectorField& xi, const Connection& c) {
    std::array<RationalFn, 4> x;
    for (int i = 0; i < 4; ++i) x[i] = RationalFn(xi.comp[i]);
    Connection out;
    for (int l = 0; l < 4; ++l)
        for (int m = 0; m < 4; ++m)
            for (int n = 0; n < 4; ++n) {
                RationalFn acc = x[l].derivative(Var(m)).derivative(Var(n));
                for (int r = 0; r < 4; ++r) {
                    acc += x[r] * c.gamma[l][m][n].derivative(Var(r));
                    acc += c.gamma[l][r][n] * x[r].derivative(Var(m));
                    acc += c.gamma[l][m][r] * x[r].derivative(Var(n));
                    acc -= c.gamma[r][m][n] * x[l].derivative(Var(r));
                }
                out.gamma[l][m][n] = acc;
            }
    return out;
}

bool constant_curvature_check(const TensorField& riem, const TensorField& g,
                              const RationalFn& k) {
    for (int s = 0; s < 4; ++s)
        for (int m = 0; m < 4; ++m)
            for (int r = 0; r < 4; ++r)
                for (int n = 0; n < 4; ++n) {
                    RationalFn expect(0);
                    if (s == n) expect += k * g.at({m, r});
                    if (s == r) expect -= k * g.at({m, n});
                    if (riem.at({s, m, r, n}) != expect) return false;
                }
    return true;
}

bool point_in_domain(const Geometry& geo, const Point& p) {
    for (const auto& ineq : geo.domain) {
        Rational v;
        try {
            v = ineq.fn.eval(p);
        } catch (const PoleAtPoint&) {
            return false;
        }
        if (v.sign() != ineq.sign) return false;
    }
    return true;
}

namespace {

bool tensors_regular_at(const Geometry& geo, const Point& p) {
    for (size_t i = 0; i < geo.g.size(); ++i)
        if (geo.g.flat_at(i).has_pole_at(p)) return false;
    for (size_t i = 0; i < geo.h.size(); ++i)
        if (geo.h.flat_at(i).has_pole_at(p)) return false;
    for (int l = 0; l < 4; ++l)
        for (int m = 0; m < 4; ++m)
            for (int n = 0; n < 4; ++n)
                if (geo.conn.gamma[l][m][n].has_pole_at(p)) return false;
    return true;
}

std::vector<std::vector<Rational>> eval_sym_matrix(const TensorField& t, const Point& p) {
    std::vector<std::vector<Rational>> m(4, std::vector<Rational>(4));
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) m[i][j] = t.at({i, j}).eval(p);
    return m;
}

int symbolic_rank(const TensorField& t) {
    FnMatrix m(4, 4);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) m.at(i, j) = t.at({i, j});
    return fn_rank(m);
}

}  // namespace

std::vector<Point> sample_domain_points(const Geometry& geo, int n, SampleStream& rng) {
    std::vector<Point> points;
    int guard = 0;
    while (int(points.size()) < n) {
        if (++guard > 20000)
            throw Error("failed to sample domain points for geometry '" + geo.name + "'");
        Point p;
        for (int i = 0; i < 4; ++i) p[i] = rng.next_rational(6);
        // Positive invariant parameters; eps is irrelevant for catalog rows.
        p[VC] = rng.next_nonzero(4).abs() + Rational(1);
        p[VL] = rng.next_nonzero(4).abs() + Rational(1);
        p[VEPS] = Rational(1);
        if (!point_in_domain(geo, p)) continue;
        if (!tensors_regular_at(geo, p)) continue;
        points.push_back(p);
    }
    return points;
}

std::pair<std::pair<int, int>, SignatureDescriptor> signature_rank(
    const Geometry& geo, const std::vector<Point>& points) {
    if (points.empty()) throw Error("signature_rank: no sample points");
    std::optional<Inertia> ig, ih;
    for (const auto& p : points) {
        if (!point_in_domain(geo, p))
            throw PointOutsideDomain("sample point outside the domain of '" + geo.name + "'");
        Inertia jg = rational_inertia(eval_sym_matrix(geo.g, p));
        Inertia jh = rational_inertia(eval_sym_matrix(geo.h, p));
        if (!ig) {
            ig = jg;
            ih = jh;
        } else if (jg != *ig || jh != *ih) {
            throw InconsistentSignature("signature of '" + geo.name +
                                        "' differs between sample points");
        }
    }
    // Generic-rank cross-check over the fraction field.
    if (symbolic_rank(geo.g) != ig->rank() || symbolic_rank(geo.h) != ih->rank())
        throw InconsistentSignature("pointwise rank of '" + geo.name +
                                    "' disagrees with the symbolic rank");
    SignatureDescriptor sig;
    sig.g_plus = ig->plus;
    sig.g_minus = ig->minus;
    sig.h_plus = ih->plus;
    sig.h_minus = ih->minus;
    return {{ig->rank(), ih->rank()}, sig};
}

void validate_map(const RationalMap& map) {
    for (int m = 0; m < 4; ++m) {
        RationalFn comp = map.inv[m].compose(map.fwd);
        if (comp != RationalFn::variable(Var(m)))
            throw NonInvertibleMap("map inverse does not compose to the identity");
    }
}

Geometry pullback(const RationalMap& map, const Geometry& geo) {
    validate_map(map);
    // A^a_m = d fwd^a / dx^m; B = (D inv)(fwd(x)) so that B A = 1.
    std::array<std::array<RationalFn, 4>, 4> a, b;
    for (int i = 0; i < 4; ++i)
        for (int m = 0; m < 4; ++m) {
            a[i][m] = map.fwd[i].derivative(Var(m));
            b[i][m] = map.inv[i].derivative(Var(m)).compose(map.fwd);
        }

    Geometry out = geo;
    out.g = TensorField::metric();
    out.h = TensorField::inverse_metric();

    TensorField gF = TensorField::metric(), hF = TensorField::inverse_metric();
    Connection cF;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            gF.at({i, j}) = geo.g.at({i, j}).compose(map.fwd);
            hF.at({i, j}) = geo.h.at({i, j}).compose(map.fwd);
        }
    for (int l = 0; l < 4; ++l)
        for (int m = 0; m < 4; ++m)
            for (int n = 0; n < 4; ++n) cF.gamma[l][m][n] = geo.conn.gamma[l][m][n].compose(map.fwd);

    for (int m = 0; m < 4; ++m)
        for (int n = 0; n < 4; ++n) {
            RationalFn accg(0), acch(0);
            for (int al = 0; al < 4; ++al)
                for (int be = 0; be < 4; ++be) {
                    if (!gF.at({al, be}).is_zero()) accg += a[al][m] * a[be][n] * gF.at({al, be});
                    if (!hF.at({al, be}).is_zero()) acch += b[m][al] * b[n][be] * hF.at({al, be});
                }
            out.g.at({m, n}) = accg;
            out.h.at({m, n}) = acch;
        }

    for (int l = 0; l < 4; ++l)
        for (int m = 0; m < 4; ++m)
            for (int n = m; n < 4; ++n) {
                RationalFn acc(0);
                for (int al = 0; al < 4; ++al) {
                    RationalFn inner = a[al][n].derivative(Var(m));
                    for (int be = 0; be < 4; ++be)
                        for (int ga = 0; ga < 4; ++ga) {
                            if (cF.gamma[al][be][ga].is_zero()) continue;
                            inner += a[be][m] * a[ga][n] * cF.gamma[al][be][ga];
                        }
                    if (!inner.is_zero()) acc += b[l][al] * inner;
                }
                out.conn.gamma[l][m][n] = acc;
                out.conn.gamma[l][n][m] = acc;
            }

    out.domain.clear();
    for (const auto& ineq : geo.domain)
        out.domain.push_back({ineq.fn.compose(map.fwd), ineq.sign});
    return out;
}

RationalMap fractional_linear_map(const std::array<std::array<Rational, 4>, 4>& s,
                                  const std::array<Rational, 4>& b,
                                  const std::array<int, 4>& form_diag) {
    // bt x under the form: sum_m form[m] b[m] x^m; the denominator is
    // 1 + bt x / l.
    auto build = [&](const std::array<std::array<Rational, 4>, 4>& mat,
                     const std::array<Rational, 4>& shift, int shift_sign) {
        MultiPoly denom = MultiPoly::constant(Rational(1));
        for (int m = 0; m < 4; ++m) {
            Monomial mono;
            mono.e[m] = 1;
            mono.e[VL] = -1;
            denom += MultiPoly::monomial(Rational(shift_sign * form_diag[m]) * shift[m], mono);
        }
        std::array<RationalFn, 4> comp;
        for (int i = 0; i < 4; ++i) {
            MultiPoly num;
            for (int m = 0; m < 4; ++m)
                num += mat[i][m] * MultiPoly::variable(Var(m));
            comp[i] = RationalFn::fraction(num, denom);
        }
        return comp;
    };
    // Inverse: x = S^-1 x' / (1 - (S b)t x' / l) for a form-orthogonal S.
    std::array<std::array<Rational, 4>, 4> sinv{};
    // Form-orthogonality gives S^-1 = F S^T F with F the form diagonal.
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            sinv[i][j] = Rational(form_diag[i]) * s[j][i] * Rational(form_diag[j]);
    std::array<Rational, 4> sb{};
    for (int i = 0; i < 4; ++i) {
        Rational acc(0);
        for (int j = 0; j < 4; ++j) acc += s[i][j] * b[j];
        sb[i] = acc;
    }
    RationalMap map;
    map.fwd = build(s, b, +1);
    map.inv = build(sinv, sb, -1);
    validate_map(map);
    return map;
}

}  // namespace kin
