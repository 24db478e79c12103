// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure. The audit table is printed afterwards; MISMATCH rows there are
// expected findings (recomputed ground truth), not failures.

#include <cstdio>

#include "ctdesign/audit.hpp"
#include "ctdesign/verification.hpp"

int main() {
    const auto results = ctd::run_acceptance();
    int failures = 0;
    for (const auto& r : results) {
        std::printf("[%s] criterion %2d: %-46s (%.2fs / %.0fs)\n",
                    r.pass ? "PASS" : "FAIL", r.id, r.name.c_str(), r.seconds, r.budget);
        if (!r.detail.empty())
            std::printf("       %s\n", r.detail.c_str());
        failures += !r.pass;
    }

    std::printf("\naudit of published counts:\n");
    for (const auto& row : ctd::run_audits())
        std::printf("  [%-8s] %-26s %s -> %s\n", row.verdict.c_str(), row.name.c_str(),
                    row.claim.c_str(), row.recomputed.c_str());

    std::printf("\n%d/%zu criteria passed\n", static_cast<int>(results.size()) - failures,
                results.size());
    return failures == 0 ? 0 : 1;
}
