// Command-line driver: verify the built-in catalog (plus optional user spec
// files), show normalized catalog entries, or dump the whole catalog.

#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "kin/verify.hpp"

namespace {

int write_out(const std::string& path, const std::string& content) {
    if (path.empty()) {
        std::cout << content;
        return 0;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        std::cerr << "cannot open output file: " << path << "\n";
        return 2;
    }
    out << content;
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact verifier for the kinematical algebra/geometry catalog"};
    app.require_subcommand(1);

    // verify ---------------------------------------------------------------
    auto* verify = app.add_subcommand("verify", "run verification suites");
    std::vector<std::string> suites;
    verify->add_option("--suite", suites,
                       "all|closure|geometry|contraction|duality|additivity (repeatable)");
    std::string only;
    verify->add_option("--only", only, "restrict to subjects naming this entry");
    std::vector<std::string> spec_files;
    verify->add_option("--spec", spec_files, "user spec file (repeatable)");
    std::string seed_hex;
    verify->add_option("--seed", seed_hex, "sample-point seed (hex)");
    std::string format = "text";
    verify->add_option("--format", format, "text|json")
        ->check(CLI::IsMember({"text", "json"}));
    std::string out_path;
    verify->add_option("--out", out_path, "write the report to a file");
    bool timings = false;
    verify->add_flag("--timings", timings,
                     "include wall times in the report (breaks byte determinism)");
    std::string fault;
    verify->add_option("--inject-fault", fault,
                       "self-test hook: corrupt one catalog entry, e.g. geometry:NH_2:g00");

    // show -----------------------------------------------------------------
    auto* show = app.add_subcommand("show", "print a normalized catalog entry");
    std::string show_kind, show_name;
    show->add_option("kind", show_kind, "algebra|geometry")->required();
    show->add_option("name", show_name, "catalog name")->required();

    // dump-catalog -----------------------------------------------------------
    auto* dump = app.add_subcommand("dump-catalog", "dump every algebra and geometry");
    std::string dump_format = "text";
    dump->add_option("--format", dump_format, "text|json")
        ->check(CLI::IsMember({"text", "json"}));
    std::string dump_out;
    dump->add_option("--out", dump_out, "write the dump to a file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (verify->parsed()) {
            kin::VerifyOptions opt;
            for (const auto& s : suites) {
                if (s == "all") continue;
                if (s != "closure" && s != "geometry" && s != "contraction" &&
                    s != "duality" && s != "additivity") {
                    std::cerr << "unknown suite: " << s << "\n";
                    return 2;
                }
                opt.suites.insert(s);
            }
            opt.only = only;
            opt.timings = timings;
            opt.inject_fault = fault;
            if (!seed_hex.empty()) {
                try {
                    opt.seed = std::stoull(seed_hex, nullptr, 16);
                } catch (const std::exception&) {
                    std::cerr << "--seed expects a hex value\n";
                    return 2;
                }
            }
            kin::SpecDocument merged;
            for (const auto& path : spec_files) {
                std::ifstream in(path, std::ios::binary);
                if (!in) {
                    std::cerr << "cannot open spec file: " << path << "\n";
                    return 2;
                }
                std::string text((std::istreambuf_iterator<char>(in)),
                                 std::istreambuf_iterator<char>());
                kin::SpecDocument doc = kin::parse_spec(text);
                for (auto& d : doc.algebras) {
                    merged.order.emplace_back('a', int(merged.algebras.size()));
                    merged.algebras.push_back(std::move(d));
                }
                for (auto& d : doc.geometries) {
                    merged.order.emplace_back('g', int(merged.geometries.size()));
                    merged.geometries.push_back(std::move(d));
                }
                for (auto& d : doc.contractions) {
                    merged.order.emplace_back('c', int(merged.contractions.size()));
                    merged.contractions.push_back(std::move(d));
                }
                for (auto& d : doc.duals) {
                    merged.order.emplace_back('d', int(merged.duals.size()));
                    merged.duals.push_back(std::move(d));
                }
            }
            if (!merged.empty() || !spec_files.empty()) opt.user = &merged;
            kin::VerificationReport rep = kin::run_verification(opt);
            std::string rendered =
                format == "json" ? kin::emit_json(rep) : kin::emit_text(rep);
            int rc = write_out(out_path, rendered);
            if (rc != 0) return rc;
            return rep.overall_pass() ? 0 : 1;
        }
        if (show->parsed()) {
            const kin::Catalog& cat = kin::Catalog::instance();
            if (show_kind == "algebra") {
                const auto& alg = cat.algebra(show_name);
                std::cout << "algebra " << alg.name << " (" << alg.display << ")\n";
                for (int k = 0; k < kin::kAlgebraDim; ++k)
                    std::cout << "  " << alg.slot_name(k) << " = " << alg.basis[k].str() << "\n";
                return 0;
            }
            if (show_kind == "geometry") {
                const auto& geo = cat.geometry(show_name);
                std::cout << "geometry " << geo.name << " [algebra " << geo.algebra << "]\n";
                std::cout << "  ranks (" << geo.rank_g << ", " << geo.rank_h << ")  signature "
                          << geo.sig.str() << "\n";
                for (const auto& d : geo.domain)
                    std::cout << "  domain " << d.fn.str() << (d.sign > 0 ? " > 0" : " < 0")
                              << "\n";
                for (int m = 0; m < 4; ++m)
                    for (int n = m; n < 4; ++n)
                        if (!geo.g.at({m, n}).is_zero())
                            std::cout << "  g[" << m << "][" << n
                                      << "] = " << geo.g.at({m, n}).str() << "\n";
                for (int m = 0; m < 4; ++m)
                    for (int n = m; n < 4; ++n)
                        if (!geo.h.at({m, n}).is_zero())
                            std::cout << "  h[" << m << "][" << n
                                      << "] = " << geo.h.at({m, n}).str() << "\n";
                for (int l = 0; l < 4; ++l)
                    for (int m = 0; m < 4; ++m)
                        for (int n = m; n < 4; ++n)
                            if (!geo.conn.gamma[l][m][n].is_zero())
                                std::cout << "  gamma[" << l << "][" << m << "][" << n
                                          << "] = " << geo.conn.gamma[l][m][n].str() << "\n";
                return 0;
            }
            std::cerr << "unknown kind: " << show_kind << " (expected algebra|geometry)\n";
            return 2;
        }
        if (dump->parsed()) {
            const kin::Catalog& cat = kin::Catalog::instance();
            return write_out(dump_out,
                             dump_format == "json" ? cat.dump_json() : cat.dump_text());
        }
    } catch (const kin::SyntaxError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const kin::DuplicateName& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const kin::UnknownSymbol& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const kin::StaticExcluded& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const kin::UnknownAlgebra& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const kin::UnknownGeometry& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return 1;
    }
    return 2;
}
