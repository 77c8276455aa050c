// Acceptance gate: every release-blocking identity in one binary, with pinned
// ranges and runtime budgets. Each criterion prints exactly one PASS/FAIL line.

#include <cstdio>
#include <optional>
#include <string>
#include <vector>

#include "plethy/verify.hpp"

namespace {

struct Criterion {
    int number;
    std::string label;
    plethy::SuiteResult result;
    std::optional<double> budget_seconds;
};

bool report(const Criterion& c) {
    bool pass = c.result.pass;
    std::string note;
    if (c.budget_seconds && c.result.seconds > *c.budget_seconds) {
        pass = false;
        note = " [budget " + std::to_string(*c.budget_seconds) + "s exceeded]";
    }
    if (!pass && !c.result.counterexample.empty()) {
        note += " | " + c.result.counterexample;
    }
    std::printf("%s criterion %d: %s (checks=%lld, %.2fs)%s\n",
                pass ? "PASS" : "FAIL", c.number, c.label.c_str(),
                c.result.checks, c.result.seconds, note.c_str());
    std::fflush(stdout);
    return pass;
}

}  // namespace

int main() {
    using namespace plethy;
    int failures = 0;
    auto gate = [&failures](int number, const std::string& label,
                            SuiteResult result,
                            std::optional<double> budget = std::nullopt) {
        if (!report({number, label, std::move(result), budget})) {
            ++failures;
        }
    };

    gate(1, "plethystic restriction equals brute-force decomposition (n<=5, d<=6)",
         check_littlewood_vs_brute(5, 6), 300.0);
    gate(2, "staircase alternating sums equal the plethystic route (n<=5, d<=6)",
         check_corollary_agreement(5, 6), 60.0);
    gate(3, "h_k[H] and e_k[H] coefficients count vector partitions (n<=4, d<=6, k<=5)",
         check_ehh(4, 6, 5), 60.0);
    gate(4, "matrix-orbit model equals the plethysm closed forms (n<=4, d<=5)",
         check_matrix_orbit(4, 5), 120.0);
    gate(5, "two-row shortcut equals full alternating sum and plethysm (sum<=8, n<=5)",
         check_two_row(8, 5));
    gate(6, "unimodality inequalities hold and differences are multiplicities (sum<=10, n<=6)",
         check_unimodality(10, 6));
    gate(7, "plethysm is additive, multiplicative, and power-compatible (200 cases)",
         check_plethysm_algebra(200, 0x5eed));
    gate(8, "induction adjunction: multiplicities match restriction (n<=3, d<=4)",
         check_adjunction(3, 4));
    gate(9, "dimension bookkeeping over all restriction tables (n<=5, d<=6)",
         check_dimension(5, 6));

    if (failures > 0) {
        std::printf("%d criterion(s) failed\n", failures);
        return 1;
    }
    std::printf("all criteria passed\n");
    return 0;
}
