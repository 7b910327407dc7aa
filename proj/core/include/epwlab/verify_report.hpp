#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace epwlab {

struct CheckResult {
    std::string id;
    std::string status; // pass | fail | inconclusive
    std::string detail;
    long millis = 0;
};

struct VerifyReport {
    std::string suite;
    uint64_t seed = 0;
    std::vector<CheckResult> checks;

    bool all_passed() const {
        for (const CheckResult& c : checks)
            if (c.status == "fail") return false;
        return true;
    }
};

// Runs the acceptance battery for a suite in {all, dcover, epw, k3}; checks
// are ordered by id and deterministic in the seed.
VerifyReport run_verify(const std::string& suite, uint64_t seed);

} // namespace epwlab
