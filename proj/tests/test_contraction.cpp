#include "doctest.h"
#include "kin/catalog.hpp"

using namespace kin;

namespace {

std::vector<Point> target_points(const std::string& name, int n = 3) {
    SampleStream rng(0x4B494E ^ 99);
    return sample_domain_points(Catalog::instance().geometry(name), n, rng);
}

const GeometryRecipe& find_geo_recipe(const std::string& src, const std::string& dst,
                                      RuleKind rule) {
    for (const auto& r : Catalog::instance().geometry_recipes())
        if (r.source == src && r.target == dst && r.rule == rule) return r;
    throw Error("recipe not found: " + src + "->" + dst);
}

}  // namespace

TEST_CASE("contract_generator: H_r^+/- -> H as l_r -> inf") {
    RuleInfo info = rule_info(RuleKind::LInf);
    for (GenSym s : {GenSym::Hplus, GenSym::Hminus}) {
        VectorField running = build_generator(s, 0, info.a, info.b);
        VectorField out = contract_generator(running, SlotScale{});
        CHECK(out == build_generator(GenSym::H, 0));
    }
}

TEST_CASE("contract_generator: (l_r^2/l^2) P_r^+ -> P' as l_r -> 0") {
    RuleInfo info = rule_info(RuleKind::LZero);
    for (int i = 1; i <= 3; ++i) {
        VectorField running = build_generator(GenSym::Pplus, i, info.a, info.b);
        VectorField out = contract_generator(running, SlotScale{Rational(1), 2});
        CHECK(out == build_generator(GenSym::Pprime, i));
    }
}

TEST_CASE("contract_generator: (c_r^2/c^2) K_r -> Kc as c_r -> 0") {
    RuleInfo info = rule_info(RuleKind::CZero);
    for (int i = 1; i <= 3; ++i) {
        VectorField running = build_generator(GenSym::K, i, info.a, info.b);
        VectorField out = contract_generator(running, SlotScale{Rational(1), 2});
        CHECK(out == build_generator(GenSym::Kc, i));
    }
}

TEST_CASE("divergent generator raises") {
    RuleInfo info = rule_info(RuleKind::LZero);
    VectorField running = build_generator(GenSym::Pplus, 1, info.a, info.b);
    CHECK_THROWS_AS(contract_generator(running, SlotScale{}), DivergentGenerator);
}

TEST_CASE("algebra contraction: d+ -> p and d+ -> n+") {
    const Catalog& cat = Catalog::instance();
    for (const auto& rec : cat.algebra_recipes()) {
        if (!((rec.source == "d+" && rec.target == "p") ||
              (rec.source == "d+" && rec.target == "n+")))
            continue;
        AlgebraContraction out = contract_algebra_basis(cat.algebra(rec.source), rec);
        const auto& dst = cat.algebra(rec.target);
        for (int k = 0; k < kAlgebraDim; ++k) CHECK(out.basis[k] == dst.basis[k]);
    }
}

TEST_CASE("geometry contraction: dS -> Min") {
    const Catalog& cat = Catalog::instance();
    const auto& rec = find_geo_recipe("dS", "Min", RuleKind::LInf);
    GeometryContraction out = contract_geometry(cat.geometry("dS"), rec, target_points("Min"));
    CHECK(!out.blocked);
    const Geometry& min = cat.geometry("Min");
    CHECK(out.g == min.g);
    CHECK(out.h == min.h);
    CHECK(out.conn == min.conn);
}

TEST_CASE("geometry contraction: LBdS is not contractible under l_r -> inf") {
    const Catalog& cat = Catalog::instance();
    const auto& rec = find_geo_recipe("LBdS", "Euc", RuleKind::LInf);
    CHECK(!rec.expect_contract);
    GeometryContraction out = contract_geometry(cat.geometry("LBdS"), rec, target_points("Min"));
    CHECK(out.blocked);
    REQUIRE(out.survival.size() == 1);
    CHECK(!out.survival[0].survives);
}

TEST_CASE("nu-fixed contractions: Lob -> ENH_+ and Riem -> ENH_- with h = -h_NH") {
    const Catalog& cat = Catalog::instance();
    {
        const auto& rec = find_geo_recipe("Lob", "ENH_+", RuleKind::NuFixedInf);
        GeometryContraction out =
            contract_geometry(cat.geometry("Lob"), rec, target_points("ENH_+"));
        CHECK(!out.blocked);
        CHECK(out.g == cat.geometry("ENH_+").g);
        CHECK(out.g == cat.geometry("NH_+").g);       // same covariant metric
        CHECK(out.h == -cat.geometry("NH_+").h);      // opposite contravariant sign
        CHECK(out.conn == cat.geometry("NH_+").conn);
    }
    {
        const auto& rec = find_geo_recipe("Riem", "ENH_-", RuleKind::NuFixedInf);
        GeometryContraction out =
            contract_geometry(cat.geometry("Riem"), rec, target_points("ENH_-"));
        CHECK(!out.blocked);
        CHECK(out.h == -cat.geometry("NH_-").h);
    }
}

TEST_CASE("fault injection: corrupting a target makes exactly that edge fail") {
    const Catalog& cat = Catalog::instance();
    const auto& rec = find_geo_recipe("dS", "NH_+", RuleKind::NuFixedInf);
    GeometryContraction out =
        contract_geometry(cat.geometry("dS"), rec, target_points("NH_+"));
    Geometry target = cat.geometry("NH_+");
    CHECK(out.g == target.g);
    target.g.at({0, 0}) += RationalFn(1);
    CHECK(!(out.g == target.g));
}

TEST_CASE("empty recipe set is a vacuous pass") {
    std::vector<GeometryRecipe> empty;
    int failures = 0;
    for (const auto& rec : empty) (void)rec, ++failures;
    CHECK(failures == 0);
}

TEST_CASE("factored limits commute: d+ -> p -> c equals d+ -> c") {
    const Catalog& cat = Catalog::instance();
    AlgebraRecipe leg1{"d+", "p", RuleKind::LInf, InvolutionKind::Identity, {}, {}, {}};
    AlgebraRecipe leg2{"p", "c", RuleKind::CZero, InvolutionKind::Identity, {}, {},
                       SlotScale{Rational(1), 2}};
    AlgebraRecipe direct{"d+", "c", RuleKind::LInfCZero, InvolutionKind::Identity, {}, {},
                         SlotScale{Rational(1), 2}};
    AlgebraContraction a = contract_algebra_basis(cat.algebra("d+"), leg1);
    AlgebraContraction b = contract_algebra_basis(cat.algebra("p"), leg2);
    AlgebraContraction c = contract_algebra_basis(cat.algebra("d+"), direct);
    for (int k = 0; k < kAlgebraDim; ++k) {
        CHECK(a.basis[k] == cat.algebra("p").basis[k]);
        CHECK(b.basis[k] == c.basis[k]);
        CHECK(c.basis[k] == cat.algebra("c").basis[k]);
    }
}

TEST_CASE("Bacry--Levy-Leblond prescription matches the recipe scalings") {
    const Catalog& cat = Catalog::instance();
    StructureConstants ds = closure(cat.algebra("d+"));
    CHECK(constants_equal(bll_contract(ds, block_weights(1, 1, 0, 0)),
                          closure(cat.algebra("p2"))));
    CHECK(constants_equal(bll_contract(ds, block_weights(0, 1, 1, 0)),
                          closure(cat.algebra("n+2"))));
    // A weighting that drops a needed constant must diverge:
    CHECK_THROWS_AS(bll_contract(ds, block_weights(-1, 0, 0, 0)), DivergentLimit);
}

TEST_CASE("compatibility is preserved through the P_2 limit") {
    const Catalog& cat = Catalog::instance();
    const auto& rec = find_geo_recipe("dS", "P_2+", RuleKind::LZero);
    GeometryContraction out =
        contract_geometry(cat.geometry("dS"), rec, target_points("P_2+"));
    Geometry assembled = cat.geometry("P_2+");
    assembled.g = out.g;
    assembled.h = out.h;
    assembled.conn = out.conn;
    CHECK(compat_check(assembled));
}

TEST_CASE("a wrong prefactor order raises DivergentTensor") {
    const Catalog& cat = Catalog::instance();
    GeometryRecipe rec = find_geo_recipe("dS", "P_2+", RuleKind::LZero);
    rec.g.order -= 2;  // under-compensates the blowing-up metric
    CHECK_THROWS_AS(contract_geometry(cat.geometry("dS"), rec, target_points("P_2+")),
                    DivergentTensor);
}
