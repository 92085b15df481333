#include <fstream>
#include <sstream>

#include "doctest.h"
#include "kin/catalog.hpp"

using namespace kin;

TEST_CASE("catalog sizes: 22 algebras, 45 geometries") {
    const Catalog& cat = Catalog::instance();
    CHECK(cat.algebra_names().size() == 22);
    CHECK(cat.geometry_names().size() == 45);
    CHECK(cat.duality_pairs().size() == 21);
    CHECK(cat.genuine_rows().size() == 9);
}

TEST_CASE("build_algebra: generator sets from the table") {
    const Catalog& cat = Catalog::instance();
    const auto& dplus = cat.algebra("d+");
    CHECK(dplus.slots[0].sym == GenSym::Hplus);
    CHECK(dplus.slots[1].sym == GenSym::Pplus);
    CHECK(dplus.slots[2].sym == GenSym::K);
    CHECK(dplus.basis[0] == build_generator(GenSym::Hplus, 0));
    const auto& gp = cat.algebra("g'");
    CHECK(gp.slots[0].sym == GenSym::Hprime);
    CHECK(gp.slots[1].sym == GenSym::P);
    CHECK(gp.slots[2].sym == GenSym::Kg);
    const auto& n2m = cat.algebra("n-2");
    CHECK(n2m.slots[0].sign == -1);  // (-H^-, P', Kc, J)
    CHECK(n2m.basis[0] == -build_generator(GenSym::Hminus, 0));
}

TEST_CASE("static rows are excluded, unknown names rejected") {
    const Catalog& cat = Catalog::instance();
    CHECK_THROWS_AS(cat.algebra("s"), StaticExcluded);
    CHECK_THROWS_AS(cat.algebra("s2"), StaticExcluded);
    CHECK_THROWS_AS(cat.algebra("nope"), UnknownAlgebra);
    CHECK_THROWS_AS(cat.geometry("nope"), UnknownGeometry);
}

TEST_CASE("build_geometry: table rows") {
    const Catalog& cat = Catalog::instance();
    const Geometry& p2m = cat.geometry("P_2-");
    CHECK(p2m.sig.str() == "(-,-,-;+)");
    REQUIRE(p2m.domain.size() == 1);
    CHECK(p2m.domain[0].sign == 1);  // x.x > 0
    CHECK(p2m.algebra == "p2");

    const Geometry& hn = cat.geometry("HN_+");
    CHECK(hn.sig.str() == "(-,-,-;+)");
    CHECK(hn.rank_g == 3);
    CHECK(hn.rank_h == 1);

    const Geometry& g2p = cat.geometry("G_2'");
    CHECK(g2p.rank_g == 2);
    CHECK(g2p.rank_h == 1);
    CHECK(g2p.sig.str() == "(-,-;+)");
    REQUIRE(g2p.free_parameters_sq.size() == 1);
    CHECK(g2p.free_parameter_display[0] == "l^2/sqrt(x.x)");
}

TEST_CASE("every geometry's algebra link resolves and the witness is interior") {
    const Catalog& cat = Catalog::instance();
    for (const auto& name : cat.geometry_names()) {
        const Geometry& geo = cat.geometry(name);
        CHECK_NOTHROW(cat.algebra(geo.algebra));
        CHECK(point_in_domain(geo, geo.witness));
    }
}

TEST_CASE("duality map is an involution") {
    const Catalog& cat = Catalog::instance();
    const RationalMap& map = cat.duality_map();
    validate_map(map);
    for (int i = 0; i < 4; ++i) CHECK(map.fwd[i] == map.inv[i]);
}

TEST_CASE("self-dual rows are the four stated ones") {
    const Catalog& cat = Catalog::instance();
    std::vector<std::string> selfdual;
    for (const auto& pair : cat.duality_pairs())
        if (pair.left == pair.right) selfdual.push_back(pair.left);
    CHECK(selfdual == std::vector<std::string>{"NH_-", "ENH_-", "ENH_2", "DTNH_2"});
}

TEST_CASE("catalog dump matches the golden files") {
    const Catalog& cat = Catalog::instance();
    for (const char* kind : {"text", "json"}) {
        std::string dumped = kind == std::string("text") ? cat.dump_text() : cat.dump_json();
        std::string path = std::string(GOLDEN_DIR) + "/catalog_dump." +
                           (kind == std::string("text") ? "txt" : "json");
        std::ifstream in(path, std::ios::binary);
        REQUIRE_MESSAGE(in.good(), "missing golden file " << path);
        std::stringstream buf;
        buf << in.rdbuf();
        CHECK_MESSAGE(dumped == buf.str(), "dump differs from " << path);
    }
}

TEST_CASE("dump header notes the 24-row classification vs the 22 encoded algebras") {
    std::string text = Catalog::instance().dump_text();
    CHECK(text.find("24 generator sets") != std::string::npos);
    CHECK(text.find("static rows are excluded") != std::string::npos);
}
