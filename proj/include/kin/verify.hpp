#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "kin/specfile.hpp"

namespace kin {

enum class CheckStatus { Pass, Fail, Skipped };

struct CheckResult {
    std::string suite;
    std::string subject;
    CheckStatus status = CheckStatus::Pass;
    std::string diagnostic;
    long long wall_us = 0;
};

struct VerificationReport {
    std::vector<CheckResult> checks;
    uint64_t seed = 0;
    std::string catalog_version;
    bool with_timings = false;

    bool overall_pass() const {
        for (const auto& c : checks)
            if (c.status == CheckStatus::Fail) return false;
        return true;
    }
};

constexpr uint64_t kDefaultSeed = 0x4B494E;  // "KIN"

struct VerifyOptions {
    std::set<std::string> suites;  // subset of {closure, geometry, contraction,
                                   // duality, additivity}; empty means all
    std::string only;              // restrict to subjects containing this name
    uint64_t seed = kDefaultSeed;
    bool timings = false;
    // Self-test hook: corrupt one catalog entry before running, e.g.
    // "geometry:NH_2:g00", "algebra:p:boost", "constant:E_2".
    std::string inject_fault;
    const SpecDocument* user = nullptr;
};

VerificationReport run_verification(const VerifyOptions& options);

std::string emit_text(const VerificationReport& report);
std::string emit_json(const VerificationReport& report);

}  // namespace kin
