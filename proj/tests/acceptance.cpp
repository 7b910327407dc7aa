// Acceptance suite: runs the full verify battery and prints one line per
// criterion. Exit code 0 iff every check passes.

#include "epwlab/json_io.hpp"
#include "epwlab/verify_report.hpp"

#include <cstdio>

int main(int argc, char** argv) {
    uint64_t seed = 0;
    if (argc > 1) seed = std::strtoull(argv[1], nullptr, 10);
    epwlab::VerifyReport report = epwlab::run_verify("all", seed);
    long total = 0;
    for (const epwlab::CheckResult& c : report.checks) {
        std::printf("%s %-32s %6ld ms  %s\n", c.status == "pass" ? "PASS" : "FAIL", c.id.c_str(), c.millis,
                    c.detail.c_str());
        total += c.millis;
    }
    std::printf("%s (%ld ms total, seed %llu)\n", report.all_passed() ? "ACCEPTANCE PASSED" : "ACCEPTANCE FAILED",
                total, static_cast<unsigned long long>(seed));
    return report.all_passed() ? 0 : 1;
}
