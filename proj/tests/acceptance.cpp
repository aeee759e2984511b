// SPDX-License-Identifier: Apache-2.0
//
// Acceptance gate: runs every verification suite at its default scope and
// prints one PASS/FAIL line per suite. Exits nonzero if any suite fails.

#include <chrono>
#include <cstdio>

#include "stringcone/verify.hpp"

int main() {
    bool all_pass = true;
    for (const std::string& name : stringcone::verify_suites()) {
        const auto start = std::chrono::steady_clock::now();
        const stringcone::VerifyResult r = stringcone::run_verify(name);
        const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
        std::printf("[%s] %-14s (%5.1fs): %s\n", r.pass ? "PASS" : "FAIL", name.c_str(),
                    elapsed.count(), r.detail.c_str());
        std::fflush(stdout);
        all_pass = all_pass && r.pass;
    }
    std::printf("ACCEPTANCE: %s\n", all_pass ? "PASS" : "FAIL");
    return all_pass ? 0 : 1;
}
