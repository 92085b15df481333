#include "doctest.h"
#include "kin/linalg.hpp"
#include "kin/ratfn.hpp"

using namespace kin;

namespace {

MultiPoly X(int mu) { return MultiPoly::variable(Var(mu)); }

Point pt(long long x0, long long x1, long long x2, long long x3, long long c, long long l,
         Rational eps = Rational(1)) {
    return Point{Rational(x0), Rational(x1), Rational(x2), Rational(x3),
                 Rational(c), Rational(l), eps};
}

MultiPoly lpow(int k) { return MultiPoly::variable(VL, k); }

RationalFn random_fn(SampleStream& rng, int depth = 0) {
    MultiPoly num, den;
    for (int t = 0; t < 3; ++t) {
        Monomial m;
        m.e[VX0] = int(rng.next_u64() % 3);
        m.e[VX1] = int(rng.next_u64() % 3);
        m.e[VC] = int(rng.next_u64() % 2);
        num += MultiPoly::monomial(rng.next_rational(9), m);
    }
    Monomial d;
    d.e[VX1] = int(rng.next_u64() % 2);
    den += MultiPoly::monomial(rng.next_nonzero(5), d);
    d.e[VX0] = 1;
    den += MultiPoly::monomial(rng.next_rational(5), d);
    if (den.is_zero() || depth > 0) den = MultiPoly::constant(Rational(1));
    return RationalFn::fraction(num, den);
}

}  // namespace

TEST_CASE("rational basics") {
    Rational a(2, 4);
    CHECK(a.num() == 1);
    CHECK(a.den() == 2);
    CHECK((Rational(1, 3) + Rational(1, 6)) == Rational(1, 2));
    CHECK((Rational(-4, 6)).num() == -2);
    CHECK(Rational(3, 7).pow(-2) == Rational(49, 9));
    CHECK_THROWS_AS(Rational(1, 0), DivisionByZeroFn);
}

TEST_CASE("poly arithmetic: difference of squares and inverses") {
    MultiPoly a = X(1) + X(2), b = X(1) - X(2);
    CHECK(a * b == X(1) * X(1) - X(2) * X(2));
    MultiPoly p = a * a * b + X(0);
    CHECK((p - p).is_zero());
    CHECK(lpow(2) * MultiPoly::constant(Rational(1)) == lpow(2));
}

TEST_CASE("poly exact division") {
    MultiPoly p = (X(0) + X(1)) * (X(0) - X(1)) * (X(2) + MultiPoly::constant(Rational(3)));
    auto q = MultiPoly::divide_exact(p, X(0) + X(1));
    REQUIRE(q.has_value());
    CHECK(*q == (X(0) - X(1)) * (X(2) + MultiPoly::constant(Rational(3))));
    CHECK(!MultiPoly::divide_exact(p + MultiPoly::constant(Rational(1)), X(0) + X(1)));
}

TEST_CASE("rational function arithmetic") {
    MultiPoly sigma = MultiPoly::constant(Rational(1)) + lpow(-2) * (X(1) * X(1));
    RationalFn inv_sigma = RationalFn(1) / RationalFn(sigma);
    CHECK((inv_sigma * RationalFn(sigma)).is_one());

    RationalFn f = RationalFn::fraction(X(1), X(0));
    RationalFn g = RationalFn::fraction(MultiPoly::constant(Rational(1)), X(0));
    CHECK(f / g == RationalFn(X(1)));
    CHECK((f - f).is_zero());
    CHECK_THROWS_AS(f / RationalFn(0), DivisionByZeroFn);
}

TEST_CASE("is_zero on syntactically distinct zero and a nonzero sigma") {
    RationalFn z = RationalFn::fraction(X(0) * X(0) - X(0) * X(0), lpow(1));
    CHECK(z.is_zero());
    // sigma_E^+ cleared of denominators: l^2 + |x|^2, nonzero at x=(1,0,0,0), c=3, l=5
    MultiPoly cleared = lpow(2) + X(0) * X(0) + X(1) * X(1) + X(2) * X(2) + X(3) * X(3);
    RationalFn s(cleared);
    CHECK(!s.is_zero());
    CHECK(s.eval(pt(1, 0, 0, 0, 3, 5)) == Rational(26));
}

TEST_CASE("eval_at matches the worked sigma values") {
    // sigma_E^+ = 1 + (x.x)_E / l^2 at x=(1,0,0,0), l=5 -> 26/25
    MultiPoly sigEp =
        MultiPoly::constant(Rational(1)) +
        lpow(-2) * (X(0) * X(0) + X(1) * X(1) + X(2) * X(2) + X(3) * X(3));
    CHECK(RationalFn(sigEp).eval(pt(1, 0, 0, 0, 3, 5)) == Rational(26, 25));
    // sigma^- = 1 + (x.x)/l^2 at x=(0,1,0,0), l=5 -> 24/25
    MultiPoly sigM = MultiPoly::constant(Rational(1)) +
                     lpow(-2) * (X(0) * X(0) - X(1) * X(1) - X(2) * X(2) - X(3) * X(3));
    CHECK(RationalFn(sigM).eval(pt(0, 1, 0, 0, 3, 5)) == Rational(24, 25));
    RationalFn f = RationalFn::fraction(MultiPoly::constant(Rational(1)), X(0));
    CHECK_THROWS_AS(f.eval(pt(0, 1, 0, 0, 3, 5)), PoleAtPoint);
}

TEST_CASE("laurent limits") {
    // 1/sigma_r^+ with l_r = l/eps: sigma_r^+ = 1 - eps^2 (x.x)/l^2 -> finite, leading 1
    MultiPoly xxM = X(0) * X(0) - X(1) * X(1) - X(2) * X(2) - X(3) * X(3);
    MultiPoly sig = MultiPoly::constant(Rational(1)) - lpow(-2) * xxM;
    RationalFn f = RationalFn(1) / RationalFn(sig).subst_running(0, -1);
    LaurentLimit lim = laurent_limit(f, 0);
    CHECK(lim.verdict == LimitVerdict::Finite);
    CHECK(lim.order == 0);
    CHECK(lim.leading == RationalFn(1));

    Monomial eps2;
    eps2.e[VEPS] = 2;
    RationalFn zero_case(MultiPoly::monomial(Rational(1), eps2) * (X(1) + X(2)));
    CHECK(laurent_limit(zero_case, 0).verdict == LimitVerdict::Zero);

    Monomial epsm2;
    epsm2.e[VEPS] = -2;
    RationalFn div_case(MultiPoly::monomial(Rational(1), epsm2));
    CHECK(laurent_limit(div_case, 0).verdict == LimitVerdict::Divergent);
    CHECK(laurent_limit(div_case, 2).verdict == LimitVerdict::Finite);
}

TEST_CASE("laurent limit agrees with eval along eps -> 0") {
    MultiPoly xxM = X(0) * X(0) - X(1) * X(1);
    MultiPoly sig = MultiPoly::constant(Rational(1)) - lpow(-2) * xxM;
    RationalFn f = RationalFn(1) / RationalFn(sig).subst_running(0, -1);
    LaurentLimit lim = laurent_limit(f, 0);
    REQUIRE(lim.verdict == LimitVerdict::Finite);
    for (Point base : {pt(1, 2, 0, 0, 3, 5), pt(-2, 1, 3, 0, 2, 7), pt(3, 1, 0, 2, 5, 3)}) {
        Rational target = lim.leading.eval(base);
        Rational prev_gap;
        bool first = true;
        for (int k = 2; k <= 6; ++k) {
            Point p = base;
            p[VEPS] = Rational(1, 1 << k);
            Rational gap = (f.eval(p) - target).abs();
            if (!first) CHECK(gap < prev_gap);
            prev_gap = gap;
            first = false;
        }
    }
}

TEST_CASE("ring axioms on deterministic random rational functions") {
    SampleStream rng(0x4B494E);
    for (int trial = 0; trial < 12; ++trial) {
        RationalFn a = random_fn(rng), b = random_fn(rng), c = random_fn(rng);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + RationalFn(0) == a);
        CHECK(a * RationalFn(1) == a);
    }
}

TEST_CASE("integral domain: zero products") {
    SampleStream rng(0xBEEF);
    for (int trial = 0; trial < 20; ++trial) {
        RationalFn f = random_fn(rng), g = random_fn(rng);
        if (g.is_zero()) continue;
        CHECK((f * g).is_zero() == f.is_zero());
    }
}

TEST_CASE("randomized zero pre-check never contradicts the exact decision") {
    SampleStream rng(0x5EED);
    int zero_cases = 0, nonzero_cases = 0;
    for (int trial = 0; trial < 120; ++trial) {
        RationalFn a = random_fn(rng), b = random_fn(rng);
        // identity candidate: (a+b)^2 - a^2 - 2ab - b^2 == 0 and a perturbed one
        RationalFn sq = (a + b) * (a + b) - a * a - Rational(2) * (a * b) - b * b;
        CHECK(sq.is_zero());
        ++zero_cases;
        RationalFn perturbed = sq + RationalFn(X(0)) + RationalFn(1);
        bool eq = perturbed == RationalFn(0);
        CHECK(!eq);
        ++nonzero_cases;
    }
    CHECK(zero_cases == 120);
    CHECK(nonzero_cases == 120);
}

TEST_CASE("fraction-field gaussian elimination") {
    FnMatrix a(3, 3);
    a.at(0, 0) = RationalFn(X(0));
    a.at(0, 1) = RationalFn(1);
    a.at(1, 1) = RationalFn(X(1));
    a.at(1, 2) = RationalFn(1);
    a.at(2, 2) = RationalFn(Rational(2));
    std::vector<RationalFn> rhs = {RationalFn(X(0) * X(0)), RationalFn(0), RationalFn(1)};
    LinearSolve sol = solve_linear(a, rhs);
    REQUIRE(sol.consistent);
    REQUIRE(sol.unique);
    // x2 = 1/2, x1 = -1/(2 x1), x0 = (x0^2 + 1/(2 x1))/x0
    CHECK(sol.x[2] == RationalFn(Rational(1, 2)));
    CHECK(sol.x[1] * RationalFn(X(1)) + RationalFn(Rational(1, 2)) == RationalFn(0));

    auto inv = fn_inverse(a);
    REQUIRE(inv.has_value());
    CHECK(fn_rank(a) == 3);
    CHECK(fn_det(a) == RationalFn(Rational(2) * (X(0) * X(1))));
}

TEST_CASE("rational symmetric inertia") {
    std::vector<std::vector<Rational>> m(4, std::vector<Rational>(4));
    m[0][0] = Rational(1);
    m[1][1] = Rational(-2);
    m[2][2] = Rational(3);
    Inertia in = rational_inertia(m);
    CHECK(in.plus == 2);
    CHECK(in.minus == 1);
    // off-diagonal only: signature (+,-)
    std::vector<std::vector<Rational>> o(2, std::vector<Rational>(2));
    o[0][1] = o[1][0] = Rational(5);
    Inertia io = rational_inertia(o);
    CHECK(io.plus == 1);
    CHECK(io.minus == 1);
}
