#include "doctest.h"

#include <map>
#include <vector>

#include "plethy/numeric.hpp"
#include "plethy/partition.hpp"
#include "plethy/polynomial.hpp"
#include "plethy/restriction.hpp"
#include "plethy/symfn.hpp"
#include "plethy/vecpart.hpp"

using namespace plethy;

namespace {

SparsePolynomial expand_schur(const Partition& lam, int n_vars) {
    return expand_in_variables(
        SymmetricFunction::basis_element(Basis::s, lam), n_vars);
}

}  // namespace

TEST_CASE("coefficient extraction picks out Schur components") {
    // <s_lambda, s_lambda> = 1 through the bialternant.
    for (int n = 1; n <= 3; ++n) {
        for (int d = 0; d <= 4; ++d) {
            for (const Partition& lam : enumerate_partitions(d, n)) {
                CHECK(schur_coefficient_extraction(expand_schur(lam, n), lam) == 1);
                for (const Partition& other : enumerate_partitions(d, n)) {
                    if (other != lam) {
                        CHECK(schur_coefficient_extraction(
                                  expand_schur(lam, n), other) == 0);
                    }
                }
            }
        }
    }
    // h_2 in two variables is s_(2).
    SparsePolynomial h2 = expand_in_variables(
        SymmetricFunction::basis_element(Basis::h, Partition({2})), 2);
    CHECK(schur_coefficient_extraction(h2, Partition({2})) == 1);
    CHECK(schur_coefficient_extraction(h2, Partition({1, 1})) == 0);
}

TEST_CASE("coefficient extraction rejects non-homogeneous input") {
    SparsePolynomial f(2);
    f.add_term(ExponentVector({1, 0}), Rational(1));
    f.add_term(ExponentVector({1, 1}), Rational(1));
    CHECK_THROWS_AS(schur_coefficient_extraction(f, Partition({1})),
                    std::invalid_argument);
}

TEST_CASE("defining representation of S_3 decomposes into trivial plus standard") {
    CHECK(littlewood_restriction(Partition({1}), Partition({3})) == 1);
    CHECK(littlewood_restriction(Partition({1}), Partition({2, 1})) == 1);
    CHECK(littlewood_restriction(Partition({1}), Partition({1, 1, 1})) == 0);
}

TEST_CASE("quadratic forms on two letters decompose by hand") {
    CHECK(littlewood_restriction(Partition({2}), Partition({2})) == 2);
    CHECK(littlewood_restriction(Partition({2}), Partition({1, 1})) == 1);
    CHECK(littlewood_restriction(Partition({1, 1}), Partition({2})) == 0);
    CHECK(littlewood_restriction(Partition({1, 1}), Partition({1, 1})) == 1);
}

TEST_CASE("top exterior power restricts to the sign representation") {
    std::map<Partition, Integer> r =
        brute_force_restriction(Partition({1, 1, 1}), 3);
    CHECK(r.at(Partition({1, 1, 1})) == 1);
    CHECK(r.at(Partition({3})) == 0);
    CHECK(r.at(Partition({2, 1})) == 0);
}

TEST_CASE("empty shape restricts to the trivial representation") {
    for (int n = 1; n <= 4; ++n) {
        std::vector<int> ones(static_cast<size_t>(n), 1);
        CHECK(littlewood_restriction(Partition(), Partition({n})) == 1);
        if (n >= 2) {
            CHECK(littlewood_restriction(Partition(), Partition(ones)) == 0);
        }
        CHECK(corollary_trivial_multiplicity(Partition(), n) == 1);
        CHECK(corollary_sign_multiplicity(Partition(), n) == (n == 1 ? 1 : 0));
    }
}

TEST_CASE("staircase alternating sums match the plethysm route") {
    for (int n = 1; n <= 4; ++n) {
        std::vector<int> ones(static_cast<size_t>(n), 1);
        Partition column(ones);
        for (int d = 0; d <= 5; ++d) {
            for (const Partition& lam : enumerate_partitions(d, n)) {
                CHECK(corollary_trivial_multiplicity(lam, n) ==
                      littlewood_restriction(lam, Partition({n})));
                CHECK(corollary_sign_multiplicity(lam, n) ==
                      littlewood_restriction(lam, column));
            }
        }
    }
}

TEST_CASE("two-row staircase sums on hand examples") {
    // lambda = (2): p_2(2,0) - p_2(3,-1) = 2; q-version gives 1.
    CHECK(corollary_trivial_multiplicity(Partition({2}), 2) == 2);
    CHECK(corollary_sign_multiplicity(Partition({2}), 2) == 1);
    // lambda = (1,1): p_2(1,1) - p_2(2,0) = 0; q_2(1,1) - q_2(2,0) = 1.
    CHECK(corollary_trivial_multiplicity(Partition({1, 1}), 2) == 0);
    CHECK(corollary_sign_multiplicity(Partition({1, 1}), 2) == 1);
    // One variable: everything restricts to the trivial line.
    for (int d = 0; d <= 5; ++d) {
        CHECK(corollary_trivial_multiplicity(Partition({d}), 1) == 1);
        CHECK(corollary_sign_multiplicity(Partition({d}), 1) == 1);
    }
}

TEST_CASE("all three routes agree on a full small box") {
    for (int n = 1; n <= 4; ++n) {
        CharacterTable table(n);
        for (int d = 0; d <= 4; ++d) {
            LittlewoodContext context(n, d);
            for (const Partition& lam : enumerate_partitions(d, n)) {
                auto brute = brute_force_restriction(lam, table);
                Integer dim_sum = 0;
                for (const Partition& mu : enumerate_partitions(n, n)) {
                    Integer lw = context.restriction(lam, mu);
                    CHECK(lw >= 0);
                    CHECK(lw == brute.at(mu));
                    dim_sum += lw * table.dimension(mu);
                }
                // Dimension bookkeeping.
                CHECK(Rational(dim_sum) ==
                      evaluate_all_ones(expand_schur(lam, n)));
            }
        }
    }
}

TEST_CASE("context and free-function evaluations coincide") {
    LittlewoodContext context(3, 3);
    CHECK(context.n() == 3);
    CHECK(context.d() == 3);
    for (const Partition& lam : enumerate_partitions(3, 3)) {
        for (const Partition& mu : enumerate_partitions(3, 3)) {
            CHECK(context.restriction(lam, mu) ==
                  littlewood_restriction(lam, mu));
        }
    }
    // Shape/weight mismatches are usage errors.
    CHECK_THROWS_AS(context.restriction(Partition({2}), Partition({3})),
                    std::invalid_argument);
    CHECK_THROWS_AS(context.restriction(Partition({2, 1}), Partition({2})),
                    std::invalid_argument);
    CHECK_THROWS_AS(context.restriction(Partition({2, 1, 1, 1}), Partition({3})),
                    std::invalid_argument);
    CHECK_THROWS_AS(littlewood_restriction(Partition({1}), Partition()),
                    std::invalid_argument);
}

TEST_CASE("restriction tables are consistent across routes") {
    RestrictionTable lw = build_restriction_table(3, 3, RestrictionRoute::littlewood);
    RestrictionTable bf = build_restriction_table(3, 3, RestrictionRoute::brute);
    RestrictionTable co = build_restriction_table(3, 3, RestrictionRoute::corollary);
    CHECK(lw.n == 3);
    CHECK(lw.d == 3);
    CHECK(lw.lambdas.size() == enumerate_partitions(3, 3).size());
    CHECK(lw.mus.size() == enumerate_partitions(3, 3).size());
    // The corollary table covers only the two extreme columns.
    CHECK(co.mus.size() == 2);
    for (const Partition& lam : lw.lambdas) {
        for (const Partition& mu : lw.mus) {
            CHECK(lw.has(lam, mu));
            CHECK(lw.at(lam, mu) == bf.at(lam, mu));
            if (co.has(lam, mu)) {
                CHECK(co.at(lam, mu) == lw.at(lam, mu));
            }
        }
    }
    CHECK(route_name(RestrictionRoute::littlewood) == std::string("littlewood"));
    CHECK(route_name(RestrictionRoute::corollary) == std::string("corollary"));
    CHECK(route_name(RestrictionRoute::brute) == std::string("brute"));
    CHECK_THROWS_AS(lw.at(Partition({4}), Partition({3})), std::out_of_range);
}

TEST_CASE("slices of the Schur plethysm are cached per shape") {
    LittlewoodContext context(2, 3);
    const SparsePolynomial& first = context.schur_plethysm_slice(Partition({2}));
    const SparsePolynomial& second = context.schur_plethysm_slice(Partition({2}));
    CHECK(&first == &second);
    // The trivial shape gives the complete-partition counts.
    for (const auto& [x, c] : first.terms()) {
        CHECK(c == Rational(count_pk(x, 2)));
    }
}

TEST_CASE("unimodality sweep finds no violations and ties out to multiplicities") {
    UnimodalityReport report = unimodality_sweep(7, 4);
    CHECK(report.all_hold);
    CHECK(report.first_failure.empty());
    CHECK(report.max_sum == 7);
    CHECK(report.max_n == 4);
    CHECK(!report.entries.empty());
    for (const UnimodalityEntry& e : report.entries) {
        CHECK(e.holds);
        CHECK(e.p_difference >= 0);
        CHECK(e.q_difference >= 0);
        CHECK(e.x1 >= e.x2);
        CHECK(e.x2 >= 1);
        if (e.n >= 2) {
            CHECK(e.identity_checked);
        }
    }
}
