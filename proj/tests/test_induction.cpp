#include "doctest.h"

#include <vector>

#include "plethy/induction.hpp"
#include "plethy/numeric.hpp"
#include "plethy/partition.hpp"
#include "plethy/plethysm.hpp"
#include "plethy/polynomial.hpp"
#include "plethy/symfn.hpp"
#include "plethy/vecpart.hpp"

using namespace plethy;

TEST_CASE("induced trivial character on hand examples") {
    InducedCharacter a = ch_ind_trivial(2, 1);
    CHECK(a.character.coefficient(ExponentVector({1, 0})) == Rational(1));
    CHECK(a.character.coefficient(ExponentVector({0, 1})) == Rational(1));
    CHECK(a.dimension() == 2);

    InducedCharacter b = ch_ind_trivial(2, 2);
    CHECK(b.character.coefficient(ExponentVector({2, 0})) == Rational(2));
    CHECK(b.character.coefficient(ExponentVector({1, 1})) == Rational(2));
    CHECK(b.character.coefficient(ExponentVector({0, 2})) == Rational(2));
    CHECK(b.dimension() == 6);

    // One variable: a single monomial per degree.
    for (int d = 0; d <= 4; ++d) {
        InducedCharacter c = ch_ind_trivial(1, d);
        CHECK(c.character.coefficient(ExponentVector({d})) == Rational(1));
        CHECK(c.dimension() == 1);
    }
}

TEST_CASE("induced sign character on hand examples") {
    InducedCharacter a = ch_ind_sign(2, 2);
    CHECK(a.character.coefficient(ExponentVector({2, 0})) == Rational(1));
    CHECK(a.character.coefficient(ExponentVector({1, 1})) == Rational(2));
    CHECK(a.character.coefficient(ExponentVector({0, 2})) == Rational(1));
    CHECK(a.dimension() == 4);

    InducedCharacter b = ch_ind_sign(1, 1);
    CHECK(b.character.coefficient(ExponentVector({1})) == Rational(1));

    // Degree zero: the alternating part of C[M] in degree 0 is spanned by the
    // constants only for n = 1; for n >= 2 no nonzero alternating constant
    // exists, matching q_n(0) = 0 from the generating function.
    CHECK(ch_ind_sign(1, 0).dimension() == 1);
    CHECK(ch_ind_sign(2, 0).dimension() == 0);
    CHECK(ch_ind_sign(3, 0).dimension() == 0);
}

TEST_CASE("permutation module induction on hand examples") {
    // mu = (n) is the trivial case.
    for (int n = 1; n <= 3; ++n) {
        for (int d = 0; d <= 3; ++d) {
            CHECK(ch_ind_permutation_module(Partition({n}), d).character ==
                  ch_ind_trivial(n, d).character);
        }
    }
    InducedCharacter a = ch_ind_permutation_module(Partition({1, 1}), 1);
    CHECK(a.character.coefficient(ExponentVector({1, 0})) == Rational(2));
    CHECK(a.character.coefficient(ExponentVector({0, 1})) == Rational(2));

    InducedCharacter b = ch_ind_permutation_module(Partition({2, 1}), 1);
    CHECK(b.character.coefficient(ExponentVector({1, 0, 0})) == Rational(2));
    CHECK(b.character.coefficient(ExponentVector({0, 1, 0})) == Rational(2));
    CHECK(b.character.coefficient(ExponentVector({0, 0, 1})) == Rational(2));
}

TEST_CASE("orbit model on hand examples") {
    InducedCharacter a = matrix_orbit_character(Partition({2}), 1);
    CHECK(a.character.coefficient(ExponentVector({1, 0})) == Rational(1));
    CHECK(a.character.coefficient(ExponentVector({0, 1})) == Rational(1));
    CHECK(a.dimension() == 2);

    InducedCharacter b = matrix_orbit_character(Partition({1}), 2);
    CHECK(b.character.coefficient(ExponentVector({2})) == Rational(1));
    CHECK(b.dimension() == 1);

    InducedCharacter c = matrix_orbit_character(Partition({1, 1}), 1);
    CHECK(c.character.coefficient(ExponentVector({1, 0})) == Rational(2));
    CHECK(c.character.coefficient(ExponentVector({0, 1})) == Rational(2));
    CHECK(c.dimension() == 4);

    InducedCharacter s = matrix_orbit_sign_character(2, 2);
    CHECK(s.character.coefficient(ExponentVector({2, 0})) == Rational(1));
    CHECK(s.character.coefficient(ExponentVector({1, 1})) == Rational(2));
    CHECK(s.character.coefficient(ExponentVector({0, 2})) == Rational(1));

    CHECK(matrix_orbit_sign_character(1, 3).character.coefficient(
              ExponentVector({3})) == Rational(1));
}

TEST_CASE("orbit model matches the plethysm closed form") {
    for (int n = 1; n <= 4; ++n) {
        for (const Partition& mu : enumerate_partitions(n, n)) {
            for (int d = 0; d <= 4; ++d) {
                CHECK(matrix_orbit_character(mu, d).character ==
                      ch_ind_permutation_module(mu, d).character);
            }
        }
        for (int d = 1; d <= 4; ++d) {
            CHECK(matrix_orbit_sign_character(n, d).character ==
                  ch_ind_sign(n, d).character);
        }
        // Degree 0: the zero matrix has all rows equal, so for n >= 2 it is
        // never distinct-rowed, agreeing with q_n(0) = 0.
        CHECK(matrix_orbit_sign_character(n, 0).character ==
              ch_ind_sign(n, 0).character);
    }
}

TEST_CASE("general class-function induction reproduces the closed forms") {
    for (int n = 1; n <= 4; ++n) {
        for (int d = 0; d <= 4; ++d) {
            CHECK(ch_ind_general(trivial_class_function(n), d) ==
                  ch_ind_trivial(n, d).character);
            CHECK(ch_ind_general(sign_class_function(n), d) ==
                  ch_ind_sign(n, d).character);
            for (const Partition& mu : enumerate_partitions(n, n)) {
                CHECK(ch_ind_general(permutation_module_class_function(mu), d) ==
                      ch_ind_permutation_module(mu, d).character);
            }
        }
    }
}

TEST_CASE("inducing irreducibles gives Schur plethysm slices") {
    for (int n = 1; n <= 4; ++n) {
        for (int d = 0; d <= 4; ++d) {
            MonomialSeries H = h_series(n, d);
            for (const Partition& mu : enumerate_partitions(n, n)) {
                SparsePolynomial via_class =
                    ch_ind_general(irreducible_class_function(mu), d);
                SparsePolynomial via_schur = plethysm_into_series(
                    SymmetricFunction::basis_element(Basis::s, mu), H, d)
                    .degree_slice(d);
                CHECK(via_class == via_schur);
                CHECK(via_class.has_integer_coefficients());
                for (const auto& [x, c] : via_class.terms()) {
                    CHECK(c >= 0);
                }
            }
        }
    }
}

TEST_CASE("dimension bookkeeping against the regular character") {
    for (int n = 1; n <= 3; ++n) {
        CharacterTable table(n);
        for (int d = 0; d <= 4; ++d) {
            Rational lhs = evaluate_all_ones(
                ch_ind_general(regular_class_function(n), d));
            Rational rhs = 0;
            for (const Partition& mu : table.partitions()) {
                rhs += Rational(table.dimension(mu)) *
                       evaluate_all_ones(
                           ch_ind_general(irreducible_class_function(mu), d));
            }
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("induced characters validate their invariants") {
    InducedCharacter a = ch_ind_trivial(3, 2);
    CHECK(a.n == 3);
    CHECK(a.d == 2);
    CHECK(a.character.homogeneous_degree() == std::optional<int>(2));
    CHECK(a.source == "trivial");
    // A polynomial with a negative coefficient is not a character.
    SparsePolynomial bad(2);
    bad.add_term(ExponentVector({1, 1}), Rational(-1));
    CHECK_THROWS_AS(InducedCharacter(2, 2, bad, "trivial"), std::logic_error);
    // Degree mismatch is rejected.
    SparsePolynomial off(2);
    off.add_term(ExponentVector({1, 0}), Rational(1));
    CHECK_THROWS_AS(InducedCharacter(2, 2, off, "trivial"), std::logic_error);
}
