#include "doctest.h"
#include "json.hpp"
#include "kin/specfile.hpp"
#include "kin/verify.hpp"

using namespace kin;

TEST_CASE("algebra declaration reproduces the catalog Poincare algebra") {
    SpecDocument doc = parse_spec("algebra p0 { time H; trans P; boost K; rot J }");
    REQUIRE(doc.algebras.size() == 1);
    AlgebraPresentation alg = realize_algebra(doc.algebras[0]);
    const auto& p = Catalog::instance().algebra("p");
    for (int k = 0; k < kAlgebraDim; ++k) CHECK(alg.basis[k] == p.basis[k]);
}

TEST_CASE("empty file parses to an empty document") {
    SpecDocument doc = parse_spec("  # nothing but a comment\n");
    CHECK(doc.empty());
}

TEST_CASE("unknown generator symbol") {
    CHECK_THROWS_AS(parse_spec("algebra bad { time Q; trans P; boost K; rot J }"),
                    UnknownSymbol);
}

TEST_CASE("syntax errors carry line and column") {
    try {
        parse_spec("algebra x {\n  time H\n  trans P; boost K; rot J }");
        FAIL("expected a syntax error");
    } catch (const SyntaxError& e) {
        CHECK(e.line == 3);
        CHECK(std::string(e.what()).find("expected ';'") != std::string::npos);
    }
}

TEST_CASE("duplicate names are rejected inside one document") {
    CHECK_THROWS_AS(parse_spec("algebra a { time H; trans P; boost K; rot J }\n"
                               "algebra a { time H; trans P; boost K; rot J }"),
                    DuplicateName);
}

TEST_CASE("expression sublanguage") {
    RationalFn f = parse_expression("(x1 + x2)^2 - x1^2 - 2*x1*x2 - x2^2");
    CHECK(f.is_zero());
    RationalFn g = parse_expression("l^2 / (x0^2 - x1^2)");
    CHECK(!g.is_zero());
    CHECK_THROWS_AS(parse_expression("q + 1"), UnknownSymbol);
    CHECK_THROWS_AS(parse_expression("1 / 0"), DivisionByZeroFn);
}

TEST_CASE("inline expr generators") {
    SpecDocument doc = parse_spec(
        "algebra inline_g {\n"
        "  time expr(c, 0, 0, 0);\n"
        "  trans expr(0, 1, 0, 0) expr(0, 0, 1, 0) expr(0, 0, 0, 1);\n"
        "  boost Kg;\n"
        "  rot J\n"
        "}");
    AlgebraPresentation alg = realize_algebra(doc.algebras[0]);
    const auto& g = Catalog::instance().algebra("g");
    for (int k = 0; k < kAlgebraDim; ++k) CHECK(alg.basis[k] == g.basis[k]);
}

TEST_CASE("geometry, contract, and dual declarations parse") {
    const char* text =
        "geometry flat {\n"
        "  algebra p;\n"
        "  g[0][0] = 1; g[1][1] = -1; g[2][2] = -1; g[3][3] = -1;\n"
        "  h[0][0] = 1; h[1][1] = -1; h[2][2] = -1; h[3][3] = -1;\n"
        "}\n"
        "contract dS -> Min { rule l_to_inf; expect contracts; }\n"
        "contract d+ -> p2 { rule l_to_zero; scale t = eps^2; scale p = eps^2; "
        "expect contracts; }\n"
        "dual Min <-> P';\n"
        "dual G <-> G' sign g = -1 sign h = -1;\n";
    SpecDocument doc = parse_spec(text);
    CHECK(doc.geometries.size() == 1);
    CHECK(doc.contractions.size() == 2);
    CHECK(doc.duals.size() == 2);
    CHECK(doc.duals[1].sign_g == -1);
    CHECK(doc.contractions[1].scales.at("t").order == 2);
}

TEST_CASE("parse-print-parse is idempotent") {
    const char* text =
        "algebra mine { time H+; trans P'; boost Kc; rot J }\n"
        "geometry flat { algebra mine; g[1][1] = -l^2/x0^2; h[0][0] = x0^2; "
        "domain x0^2 > 0; }\n"
        "contract d+ -> p { rule l_to_inf; expect contracts; }\n"
        "dual C <-> C_2;\n";
    SpecDocument once = parse_spec(text);
    std::string printed = print_spec(once);
    SpecDocument twice = parse_spec(printed);
    CHECK(print_spec(twice) == printed);
    CHECK(once.algebras.size() == twice.algebras.size());
    CHECK(once.geometries.size() == twice.geometries.size());
}

TEST_CASE("user spec redeclaring a catalog name is rejected by verification") {
    SpecDocument doc = parse_spec("algebra p { time H; trans P; boost K; rot J }");
    VerifyOptions opt;
    opt.user = &doc;
    opt.suites = {"closure"};
    CHECK_THROWS_AS(run_verification(opt), DuplicateName);
}

TEST_CASE("a correct user geometry passes the geometry suite") {
    // Minkowski clone under a fresh name, checked against the p algebra.
    SpecDocument doc = parse_spec(
        "geometry flat2 {\n"
        "  algebra p;\n"
        "  g[0][0] = 1; g[1][1] = -1; g[2][2] = -1; g[3][3] = -1;\n"
        "  h[0][0] = 1; h[1][1] = -1; h[2][2] = -1; h[3][3] = -1;\n"
        "}\n");
    VerifyOptions opt;
    opt.user = &doc;
    opt.suites = {"geometry"};
    opt.only = "flat2";
    VerificationReport rep = run_verification(opt);
    CHECK(rep.overall_pass());
    bool saw = false;
    for (const auto& c : rep.checks) saw |= c.subject.find("flat2") != std::string::npos;
    CHECK(saw);
}

TEST_CASE("json report re-emission is byte-identical") {
    VerifyOptions opt;
    opt.suites = {"additivity"};
    VerificationReport rep = run_verification(opt);
    std::string emitted = emit_json(rep);
    // Parsing and re-dumping with the same layout must reproduce the bytes.
    auto parsed = nlohmann::json::parse(emitted);
    CHECK(parsed.dump(2) + "\n" == emitted);
    CHECK(parsed["schema"] == 1);
    // And the emitter itself is a pure function of the report.
    CHECK(emit_json(rep) == emitted);
    CHECK(emit_text(rep) == emit_text(rep));
}
