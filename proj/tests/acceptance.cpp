// Acceptance runner: one line per criterion, nonzero exit when any fails.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "kin/verify.hpp"

using namespace kin;

namespace {

int g_failures = 0;

void report(int criterion, const std::string& what, bool ok, const std::string& detail) {
    std::printf("%s criterion %d: %s%s%s\n", ok ? "PASS" : "FAIL", criterion, what.c_str(),
                detail.empty() ? "" : " -- ", detail.c_str());
    if (!ok) ++g_failures;
}

struct Slice {
    int pass = 0, fail = 0;
    long long wall_us = 0;
    std::vector<std::string> failures;
};

Slice slice(const VerificationReport& rep, const std::string& suite,
            const std::string& subject_prefix = "") {
    Slice s;
    for (const auto& c : rep.checks) {
        if (c.suite != suite) continue;
        if (!subject_prefix.empty() && c.subject.rfind(subject_prefix, 0) != 0) continue;
        s.wall_us += c.wall_us;
        if (c.status == CheckStatus::Fail) {
            ++s.fail;
            s.failures.push_back(c.subject + ": " + c.diagnostic);
        } else if (c.status == CheckStatus::Pass) {
            ++s.pass;
        }
    }
    return s;
}

std::string within(const Slice& s, double seconds_budget) {
    std::ostringstream out;
    out << s.pass << " checks in " << s.wall_us / 1000 << " ms";
    if (double(s.wall_us) / 1e6 > seconds_budget) out << " (OVER BUDGET)";
    return out.str();
}

bool budget_ok(const Slice& s, double seconds_budget) {
    return double(s.wall_us) / 1e6 <= seconds_budget;
}

int run_cli(const std::string& bin, const std::string& args, const std::string& out_file) {
    std::string cmd = bin + " " + args;
    if (!out_file.empty()) cmd += " > " + out_file + " 2>&1";
    int rc = std::system(cmd.c_str());
    if (rc == -1) return -1;
    return WEXITSTATUS(rc);
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::stringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

}  // namespace

int main() {
    VerifyOptions opt;
    opt.timings = true;
    VerificationReport rep = run_verification(opt);

    // 1. Closure: all 22 algebras close with dimension 10, Jacobi holds, and
    //    parity/time reversal are automorphisms (the Bacry--Levy-Leblond
    //    kinematical algebras among them; the 11th BLL algebra is the static
    //    one, excluded from the catalog).
    {
        Slice closure = slice(rep, "closure", "closure ");
        Slice pi = slice(rep, "closure", "parity ");
        Slice theta = slice(rep, "closure", "time-reversal ");
        int bll = 0;
        for (const auto& n : Catalog::instance().algebra_names())
            if (Catalog::instance().algebra(n).bll) ++bll;
        bool ok = closure.fail == 0 && closure.pass == 22 && pi.fail == 0 && pi.pass == 22 &&
                  theta.fail == 0 && theta.pass == 22 && bll == 10;
        Slice all = slice(rep, "closure");
        ok = ok && budget_ok(all, 10.0);
        std::ostringstream detail;
        detail << "22/22 algebras, involutions on all (" << bll
               << " BLL kinematical algebras tagged), " << within(all, 10.0);
        report(1, "closure suite", ok,
               ok ? detail.str() : (closure.failures.empty()
                                        ? (pi.failures.empty() ? (theta.failures.empty()
                                                                      ? "count mismatch"
                                                                      : theta.failures[0])
                                                               : pi.failures[0])
                                        : closure.failures[0]));
    }

    // 2. Geometry: compatibility, 450 Killing triples, constant-curvature
    //    form, vanishing Weyl projective tensor for all 45 rows.
    {
        Slice compat = slice(rep, "geometry", "compat ");
        Slice killing = slice(rep, "geometry", "killing ");
        Slice curv = slice(rep, "geometry", "curvature ");
        Slice weyl = slice(rep, "geometry", "weyl ");
        Slice all = slice(rep, "geometry");
        bool ok = compat.fail == 0 && compat.pass == 45 && killing.fail == 0 &&
                  killing.pass == 45 && curv.fail == 0 && curv.pass == 45 && weyl.fail == 0 &&
                  weyl.pass == 45 && budget_ok(all, 120.0);
        std::string bad;
        for (const Slice* s : {&compat, &killing, &curv, &weyl})
            if (!s->failures.empty() && bad.empty()) bad = s->failures[0];
        report(2, "geometry suite (compat, Killing, curvature, Weyl)", ok,
               ok ? "45/45 geometries, 450 Killing triples, " + within(all, 120.0) : bad);
    }

    // 3. Ranks and signatures at five exact domain points each, including the
    //    rank-sum-3 rows.
    {
        Slice sig = slice(rep, "geometry", "rank-signature ");
        Slice free = slice(rep, "geometry", "free-parameter ");
        bool ok = sig.fail == 0 && sig.pass == 45 && free.fail == 0 && free.pass == 4 &&
                  budget_ok(sig, 30.0);
        report(3, "rank/signature suite", ok,
               ok ? "45 rows + 4 rank-sum-3 rows, " + within(sig, 30.0)
                  : (sig.failures.empty() ? (free.failures.empty() ? "count mismatch"
                                                                   : free.failures[0])
                                          : sig.failures[0]));
    }

    // 4. Contraction graph: every encoded edge lands on its target or is
    //    certified not contractible by domain survival.
    {
        Slice alg = slice(rep, "contraction", "algebra ");
        Slice geo = slice(rep, "contraction", "geometry ");
        size_t n_alg = Catalog::instance().algebra_recipes().size();
        size_t n_geo = Catalog::instance().geometry_recipes().size();
        int blocked = 0;
        for (const auto& r : Catalog::instance().geometry_recipes())
            if (!r.expect_contract) ++blocked;
        Slice all = slice(rep, "contraction");
        bool ok = alg.fail == 0 && alg.pass == int(n_alg) && geo.fail == 0 &&
                  geo.pass == int(n_geo) && budget_ok(all, 120.0);
        std::ostringstream detail;
        detail << n_alg << " algebra edges + " << n_geo << " geometry edges (" << blocked
               << " not contractible), " << within(all, 120.0);
        report(4, "contraction graph", ok,
               ok ? detail.str()
                  : (alg.failures.empty() ? (geo.failures.empty() ? "count mismatch"
                                                                  : geo.failures[0])
                                          : alg.failures[0]));
    }

    // 5. Duality: every pair under t -> 1/(nu^2 t), with the four self-dual
    //    fixed points.
    {
        Slice dual = slice(rep, "duality");
        bool ok = dual.fail == 0 && dual.pass == 22 && budget_ok(dual, 30.0);
        report(5, "duality suite", ok,
               ok ? "21 pairs + involution check, " + within(dual, 30.0)
                  : (dual.failures.empty() ? "count mismatch" : dual.failures[0]));
    }

    // 6. Additivity of the contravariant degenerate metrics.
    {
        Slice add = slice(rep, "additivity");
        bool ok = add.fail == 0 && add.pass == 2 && budget_ok(add, 5.0);
        report(6, "additivity identities", ok,
               ok ? "h_G2 + h_G2' = h_NH2 and h_EG2 + h_EG2' = h_ENH2, " + within(add, 5.0)
                  : (add.failures.empty() ? "count mismatch" : add.failures[0]));
    }

    // 7. Combinatory bases equal the contraction-limit bases.
    {
        Slice combo = slice(rep, "contraction", "combinatory ");
        bool ok = combo.fail == 0 && combo.pass == 9 && budget_ok(combo, 10.0);
        report(7, "combinatory = contraction consistency", ok,
               ok ? "p, e, n+, n-, h+, h-, g, c, g', " + within(combo, 10.0)
                  : (combo.failures.empty() ? "count mismatch" : combo.failures[0]));
    }

    // 8. Finite fractional-linear invariance for the E_2 and P_2 families.
    {
        Slice inv = slice(rep, "geometry", "invariance ");
        bool ok = inv.fail == 0 && inv.pass == 3 && budget_ok(inv, 10.0);
        report(8, "finite-transformation invariance", ok,
               ok ? "E_2 and P_2 under two maps each, " + within(inv, 10.0)
                  : (inv.failures.empty() ? "count mismatch" : inv.failures[0]));
    }

    // 9. CLI contract: exit codes, fault injection, byte-deterministic JSON.
    {
        const char* bin_env = std::getenv("KINVERIFY_BIN");
        if (!bin_env) {
            report(9, "CLI contract", false, "KINVERIFY_BIN not set");
        } else {
            std::string bin = bin_env;
            bool ok = true;
            std::string detail;
            int rc = run_cli(bin, "verify --suite all --format json --out acc_run1.json", "");
            if (rc != 0) {
                ok = false;
                detail = "pristine run exited " + std::to_string(rc);
            }
            if (ok) {
                rc = run_cli(bin, "verify --suite all --format json --out acc_run2.json", "");
                if (rc != 0 || read_file("acc_run1.json") != read_file("acc_run2.json")) {
                    ok = false;
                    detail = "JSON report is not byte-deterministic";
                }
            }
            if (ok) {
                std::string probe = read_file("acc_run1.json");
                if (probe.find("\"schema\": 1") == std::string::npos) {
                    ok = false;
                    detail = "JSON schema marker missing";
                }
            }
            if (ok) {
                rc = run_cli(bin, "verify --inject-fault geometry:NH_2:g00", "acc_fault1.txt");
                std::string out = read_file("acc_fault1.txt");
                if (rc != 1 || out.find("NH_2") == std::string::npos ||
                    out.find("FAIL") == std::string::npos) {
                    ok = false;
                    detail = "geometry fault not diagnosed (exit " + std::to_string(rc) + ")";
                }
            }
            if (ok) {
                rc = run_cli(bin, "verify --inject-fault algebra:p:boost", "acc_fault2.txt");
                std::string out = read_file("acc_fault2.txt");
                if (rc != 1 || out.find("closure p") == std::string::npos) {
                    ok = false;
                    detail = "algebra fault not diagnosed (exit " + std::to_string(rc) + ")";
                }
            }
            if (ok) {
                rc = run_cli(bin, "verify --inject-fault constant:E_2", "acc_fault3.txt");
                std::string out = read_file("acc_fault3.txt");
                if (rc != 1 || out.find("curvature E_2") == std::string::npos) {
                    ok = false;
                    detail = "curvature fault not diagnosed (exit " + std::to_string(rc) + ")";
                }
            }
            if (ok) {
                rc = run_cli(bin, "verify --suite nonsense", "acc_usage.txt");
                if (rc != 2) {
                    ok = false;
                    detail = "usage error should exit 2, got " + std::to_string(rc);
                }
            }
            report(9, "CLI contract", ok, ok ? "exit codes, fault injection, deterministic JSON"
                                             : detail);
        }
    }

    if (g_failures == 0) std::printf("acceptance: all 9 criteria pass\n");
    else std::printf("acceptance: %d criteria FAILED\n", g_failures);
    return g_failures == 0 ? 0 : 1;
}
