#include "doctest.h"

#include <map>
#include <vector>

#include "plethy/numeric.hpp"
#include "plethy/partition.hpp"
#include "plethy/polynomial.hpp"
#include "plethy/symfn.hpp"

using namespace plethy;

namespace {

SymmetricFunction s_elem(const Partition& mu) {
    return SymmetricFunction::basis_element(Basis::s, mu);
}

}  // namespace

TEST_CASE("character values on hand-checked cases") {
    // S_3 character table.
    CHECK(murnaghan_nakayama(Partition({3}), Partition({3})) == 1);
    CHECK(murnaghan_nakayama(Partition({2, 1}), Partition({3})) == -1);
    CHECK(murnaghan_nakayama(Partition({2, 1}), Partition({1, 1, 1})) == 2);
    CHECK(murnaghan_nakayama(Partition({2, 1}), Partition({2, 1})) == 0);
    CHECK(murnaghan_nakayama(Partition({1, 1, 1}), Partition({2, 1})) == -1);
    // chi^{(2,2)} of S_4: values 2, 0, 2, -1, 0 on the classes
    // (1^4), (2,1,1), (2,2), (3,1), (4).
    CHECK(murnaghan_nakayama(Partition({2, 2}), Partition({1, 1, 1, 1})) == 2);
    CHECK(murnaghan_nakayama(Partition({2, 2}), Partition({2, 1, 1})) == 0);
    CHECK(murnaghan_nakayama(Partition({2, 2}), Partition({2, 2})) == 2);
    CHECK(murnaghan_nakayama(Partition({2, 2}), Partition({3, 1})) == -1);
    CHECK(murnaghan_nakayama(Partition({2, 2}), Partition({4})) == 0);
    CHECK_THROWS_AS(murnaghan_nakayama(Partition({2}), Partition({3})),
                    std::invalid_argument);
}

TEST_CASE("trivial and sign rows of every character table") {
    for (int n = 1; n <= 7; ++n) {
        Partition row({n});
        std::vector<int> ones(static_cast<size_t>(n), 1);
        Partition column(ones);
        for (const auto& [nu, size] : enumerate_cycle_types(n)) {
            CHECK(murnaghan_nakayama(row, nu) == 1);
            // sgn on cycle type nu is (-1)^(n - length(nu)).
            int sgn = (n - nu.length()) % 2 == 0 ? 1 : -1;
            CHECK(murnaghan_nakayama(column, nu) == sgn);
        }
    }
}

TEST_CASE("conjugating the shape twists by sign") {
    for (int n = 2; n <= 6; ++n) {
        for (const Partition& lam : enumerate_partitions(n, n)) {
            for (const auto& [nu, size] : enumerate_cycle_types(n)) {
                int sgn = (n - nu.length()) % 2 == 0 ? 1 : -1;
                CHECK(murnaghan_nakayama(lam.conjugate(), nu) ==
                      sgn * murnaghan_nakayama(lam, nu));
            }
        }
    }
}

TEST_CASE("character table rows are orthogonal with norm n!") {
    for (int n = 1; n <= 6; ++n) {
        CharacterTable table(n);
        const auto& parts = table.partitions();
        for (const Partition& lam : parts) {
            for (const Partition& mu : parts) {
                Integer dot = 0;
                for (const auto& [nu, size] : enumerate_cycle_types(n)) {
                    dot += size * table.chi(lam, nu) * table.chi(mu, nu);
                }
                CHECK(dot == (lam == mu ? factorial(n) : Integer(0)));
            }
        }
    }
}

TEST_CASE("dimensions satisfy the Burnside sum of squares") {
    for (int n = 1; n <= 7; ++n) {
        CharacterTable table(n);
        Integer total = 0;
        for (const Partition& lam : table.partitions()) {
            Integer d = table.dimension(lam);
            CHECK(d > 0);
            total += d * d;
        }
        CHECK(total == factorial(n));
    }
    CharacterTable t5(5);
    CHECK(t5.dimension(Partition({3, 2})) == 5);
    CHECK(t5.dimension(Partition({3, 1, 1})) == 6);
    CHECK(t5.dimension(Partition({2, 2, 1})) == 5);
}

TEST_CASE("Jacobi-Trudi expansions on small shapes") {
    SymmetricFunction f = schur_to_h(Partition({2, 1}));
    CHECK(f.coefficient(Partition({2, 1})) == Rational(1));
    CHECK(f.coefficient(Partition({3})) == Rational(-1));
    CHECK(f.terms().size() == 2);

    SymmetricFunction g = schur_to_h(Partition({1, 1, 1}));
    CHECK(g.coefficient(Partition({1, 1, 1})) == Rational(1));
    CHECK(g.coefficient(Partition({2, 1})) == Rational(-2));
    CHECK(g.coefficient(Partition({3})) == Rational(1));

    // Single rows are already complete homogeneous functions.
    SymmetricFunction h4 = schur_to_h(Partition({4}));
    CHECK(h4.terms().size() == 1);
    CHECK(h4.coefficient(Partition({4})) == Rational(1));
}

TEST_CASE("power sum expansion of Schur functions uses normalized characters") {
    for (int d = 1; d <= 6; ++d) {
        for (const Partition& lam : enumerate_partitions(d, d)) {
            SymmetricFunction f = schur_to_p(lam);
            CHECK(f.basis() == Basis::p);
            for (const auto& [nu, size] : enumerate_cycle_types(d)) {
                Rational expect(murnaghan_nakayama(lam, nu));
                expect /= Rational(z_factor(nu));
                CHECK(f.coefficient(nu) == expect);
            }
        }
    }
}

TEST_CASE("expanding in variables is independent of the basis presentation") {
    for (int d = 1; d <= 5; ++d) {
        for (const Partition& lam : enumerate_partitions(d, d)) {
            for (int n_vars = 1; n_vars <= 3; ++n_vars) {
                SparsePolynomial via_s = expand_in_variables(s_elem(lam), n_vars);
                SparsePolynomial via_h =
                    expand_in_variables(schur_to_h(lam), n_vars);
                SparsePolynomial via_p =
                    expand_in_variables(schur_to_p(lam), n_vars);
                CHECK(via_s == via_h);
                CHECK(via_s == via_p);
                if (lam.length() > n_vars) {
                    CHECK(via_s.is_zero());
                }
            }
        }
    }
}

TEST_CASE("hand expansions in two variables") {
    CHECK(expand_in_variables(s_elem(Partition({1, 1})), 2)
              .coefficient(ExponentVector({1, 1})) == Rational(1));
    SparsePolynomial s2 = expand_in_variables(s_elem(Partition({2})), 2);
    CHECK(s2.coefficient(ExponentVector({2, 0})) == Rational(1));
    CHECK(s2.coefficient(ExponentVector({1, 1})) == Rational(1));
    CHECK(s2.coefficient(ExponentVector({0, 2})) == Rational(1));

    SparsePolynomial p2 = expand_in_variables(
        SymmetricFunction::basis_element(Basis::p, Partition({2})), 2);
    CHECK(p2.coefficient(ExponentVector({2, 0})) == Rational(1));
    CHECK(p2.coefficient(ExponentVector({1, 1})) == Rational(0));

    SparsePolynomial e2 = expand_in_variables(
        SymmetricFunction::basis_element(Basis::e, Partition({2})), 2);
    CHECK(e2.coefficient(ExponentVector({1, 1})) == Rational(1));
    CHECK(e2.terms().size() == 1);

    SparsePolynomial m21 = expand_in_variables(
        SymmetricFunction::basis_element(Basis::m, Partition({2, 1})), 2);
    CHECK(m21.coefficient(ExponentVector({2, 1})) == Rational(1));
    CHECK(m21.coefficient(ExponentVector({1, 2})) == Rational(1));
    CHECK(m21.terms().size() == 2);
}

TEST_CASE("monomial expansion in the power basis inverts exactly") {
    // m_{(1,1)} = p_{(1,1)}/2 - p_{(2)}/2.
    SymmetricFunction m11 = to_p_basis(
        SymmetricFunction::basis_element(Basis::m, Partition({1, 1})));
    CHECK(m11.coefficient(Partition({1, 1})) == Rational(1, 2));
    CHECK(m11.coefficient(Partition({2})) == Rational(-1, 2));
    // Round trip through variables for several shapes.
    for (int d = 1; d <= 5; ++d) {
        for (const Partition& lam : enumerate_partitions(d, d)) {
            SymmetricFunction m =
                SymmetricFunction::basis_element(Basis::m, lam);
            CHECK(expand_in_variables(m, 3) ==
                  expand_in_variables(to_p_basis(m), 3));
        }
    }
}

TEST_CASE("hall inner product pairs the classical bases correctly") {
    for (int d = 1; d <= 5; ++d) {
        auto parts = enumerate_partitions(d, d);
        for (const Partition& lam : parts) {
            for (const Partition& mu : parts) {
                Rational delta = lam == mu ? Rational(1) : Rational(0);
                CHECK(hall_inner_product(s_elem(lam), s_elem(mu)) == delta);
                CHECK(hall_inner_product(
                          SymmetricFunction::basis_element(Basis::h, lam),
                          SymmetricFunction::basis_element(Basis::m, mu)) ==
                      delta);
                Rational pp = lam == mu ? Rational(z_factor(lam)) : Rational(0);
                CHECK(hall_inner_product(
                          SymmetricFunction::basis_element(Basis::p, lam),
                          SymmetricFunction::basis_element(Basis::p, mu)) ==
                      pp);
            }
        }
    }
}

TEST_CASE("multiplying multiplicative basis elements merges indices") {
    SymmetricFunction a = SymmetricFunction::basis_element(Basis::h, Partition({2}));
    SymmetricFunction b =
        SymmetricFunction::basis_element(Basis::h, Partition({3, 1}));
    SymmetricFunction ab = multiply(a, b);
    CHECK(ab.coefficient(Partition({3, 2, 1})) == Rational(1));
    CHECK(ab.terms().size() == 1);
    CHECK(merge_partitions(Partition({2}), Partition({3, 1})) ==
          Partition({3, 2, 1}));
    // Termwise products only exist in the multiplicative bases.
    SymmetricFunction s1 = s_elem(Partition({1}));
    CHECK_THROWS_AS(multiply(s1, s1), std::logic_error);
    // Cross-check a power basis product against the variable expansion.
    SymmetricFunction p2 = SymmetricFunction::basis_element(Basis::p, Partition({2}));
    SymmetricFunction p21 = SymmetricFunction::basis_element(Basis::p, Partition({2, 1}));
    CHECK(expand_in_variables(multiply(p2, p21), 3) ==
          multiply(expand_in_variables(p2, 3), expand_in_variables(p21, 3)));
}

TEST_CASE("permutation module character counts fixed rearrangements") {
    // Value at the identity is the multinomial coefficient.
    ClassFunction v = permutation_module_class_function(Partition({2, 1}));
    CHECK(v.value(Partition({1, 1, 1})) == 3);
    CHECK(v.value(Partition({2, 1})) == 1);
    CHECK(v.value(Partition({3})) == 0);
    // Frobenius characteristic of the permutation module is h_mu.
    for (int d = 1; d <= 5; ++d) {
        for (const Partition& mu : enumerate_partitions(d, d)) {
            SymmetricFunction lhs =
                to_p_basis(frobenius_characteristic_of_permutation_module(mu));
            SymmetricFunction rhs = to_p_basis(
                SymmetricFunction::basis_element(Basis::h, mu));
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("Kostka multiplicities of h in the Schur basis") {
    // <h_mu, s_lambda> counts semistandard tableaux: hand values for d = 3.
    SymmetricFunction h21 = SymmetricFunction::basis_element(Basis::h, Partition({2, 1}));
    SymmetricFunction h111 =
        SymmetricFunction::basis_element(Basis::h, Partition({1, 1, 1}));
    CHECK(hall_inner_product(h21, s_elem(Partition({2, 1}))) == Rational(1));
    CHECK(hall_inner_product(h21, s_elem(Partition({3}))) == Rational(1));
    CHECK(hall_inner_product(h21, s_elem(Partition({1, 1, 1}))) == Rational(0));
    CHECK(hall_inner_product(h111, s_elem(Partition({2, 1}))) == Rational(2));
    CHECK(hall_inner_product(h111, s_elem(Partition({1, 1, 1}))) == Rational(1));
}

TEST_CASE("power sums at a cycle type count fixed points of the power") {
    // p_1 is the trace: the number of fixed points.
    CHECK(power_sum_at_cycle_type(1, Partition({2, 1})) == 1);
    CHECK(power_sum_at_cycle_type(2, Partition({2, 1})) == 3);
    CHECK(power_sum_at_cycle_type(3, Partition({2, 1})) == 1);
    CHECK(power_sum_at_cycle_type(2, Partition({4})) == 0);
    CHECK(power_sum_at_cycle_type(4, Partition({4})) == 4);
    CHECK(power_sum_at_cycle_type(6, Partition({3, 2, 2})) == 7);
}

TEST_CASE("class functions assemble into consistent characteristics") {
    for (int n = 1; n <= 5; ++n) {
        // ch of the trivial character is h_n; of the sign character, e_n.
        SymmetricFunction ch_triv =
            frobenius_characteristic(trivial_class_function(n));
        CHECK(to_p_basis(SymmetricFunction::basis_element(
                  Basis::h, Partition({n}))) == ch_triv);
        SymmetricFunction ch_sign =
            frobenius_characteristic(sign_class_function(n));
        CHECK(to_p_basis(SymmetricFunction::basis_element(
                  Basis::e, Partition({n}))) == ch_sign);
        // ch of an irreducible is the corresponding Schur function.
        for (const Partition& mu : enumerate_partitions(n, n)) {
            CHECK(frobenius_characteristic(irreducible_class_function(mu)) ==
                  schur_to_p(mu));
        }
        // The regular character decomposes with multiplicity = dimension.
        ClassFunction reg = regular_class_function(n);
        CHECK(reg.value(Partition(std::vector<int>(static_cast<size_t>(n), 1))) ==
              factorial(n));
        CharacterTable table(n);
        SymmetricFunction ch_reg = frobenius_characteristic(reg);
        SymmetricFunction rebuilt(Basis::p);
        for (const Partition& mu : table.partitions()) {
            SymmetricFunction part = schur_to_p(mu);
            part.scale(Rational(table.dimension(mu)));
            rebuilt += part;
        }
        CHECK(ch_reg == rebuilt);
    }
}
