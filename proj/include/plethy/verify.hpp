// Cross-verification suites: every computation with two or more independent
// routes is swept over a parameter box and compared cell by cell. Each suite
// reports the number of comparisons made and, on failure, the first
// counterexample.
#pragma once

#include <string>

namespace plethy {

struct SuiteResult {
    std::string suite;
    bool pass = true;
    long long checks = 0;
    std::string counterexample;  // first failing case; empty when pass
    double seconds = 0.0;
};

/// r_{lambda,mu} by the plethystic route vs brute-force character averaging,
/// for all n <= max_n, d <= max_d, lambda in Lambda(d,n), mu |- n.
SuiteResult check_littlewood_vs_brute(int max_n, int max_d);

/// The staircase alternating sums for mu = (n) and mu = (1^n) vs the
/// plethystic route, over the same box.
SuiteResult check_corollary_agreement(int max_n, int max_d);

/// h_k[H] and e_k[H] (both plethysm routes) vs the vector-partition table vs
/// explicit enumeration of multiset/set partitions, for n <= max_n,
/// |x| <= max_d, k <= max_k.
SuiteResult check_ehh(int max_n, int max_d, int max_k);

/// Closed-form induced characters vs matrix-orbit enumeration: permutation
/// modules for mu |- n <= max_n, 0 <= d <= max_d; the distinct-rows sign
/// variant for 1 <= d <= max_d.
SuiteResult check_matrix_orbit(int max_n, int max_d);

/// Two-row shortcut p_n(x1,x2) - p_n(x1+1,x2-1) vs the full staircase sum vs
/// the plethystic route, for lambda1 + lambda2 <= max_sum, n <= max_n.
SuiteResult check_two_row(int max_sum, int max_n);

/// Unimodality of the two-row counts and their identification with trivial /
/// sign multiplicities (wraps unimodality_sweep).
SuiteResult check_unimodality(int max_sum, int max_n);

/// Randomized algebra laws of plethysm: additivity and multiplicativity in
/// f, the p_1 identity, p_k[p_l] = p_{kl}, and route agreement on h input.
SuiteResult check_plethysm_algebra(int cases, unsigned int seed);

/// Frobenius reciprocity: <ch Ind(chi^mu), s_lambda> equals r_{lambda,mu},
/// for n <= max_n, d <= max_d.
SuiteResult check_adjunction(int max_n, int max_d);

/// Dimension bookkeeping: sum over mu of r_{lambda,mu} f^mu equals
/// s_lambda(1, ..., 1), for n <= max_n, d <= max_d.
SuiteResult check_dimension(int max_n, int max_d);

}  // namespace plethy
