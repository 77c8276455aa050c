#include "doctest.h"

#include <random>
#include <vector>

#include "plethy/numeric.hpp"
#include "plethy/partition.hpp"
#include "plethy/polynomial.hpp"

using namespace plethy;

namespace {

SparsePolynomial random_polynomial(std::mt19937& rng, int n_vars, int max_deg,
                                   std::optional<int> trunc) {
    SparsePolynomial p(n_vars, trunc);
    auto support = vectors_up_to_degree(n_vars, max_deg);
    int terms = 1 + static_cast<int>(rng() % 4);
    for (int t = 0; t < terms; ++t) {
        const auto& x = support[rng() % support.size()];
        int c = static_cast<int>(rng() % 7) - 3;
        p.add_term(x, Rational(c));
    }
    return p;
}

}  // namespace

TEST_CASE("add_term drops zeros and accumulates") {
    SparsePolynomial p(2);
    p.add_term(ExponentVector({1, 0}), Rational(2));
    p.add_term(ExponentVector({1, 0}), Rational(-2));
    CHECK(p.is_zero());
    p.add_term(ExponentVector({0, 1}), Rational(0));
    CHECK(p.is_zero());
}

TEST_CASE("truncation drops high-degree terms on entry") {
    SparsePolynomial p(2, 2);
    p.add_term(ExponentVector({3, 0}), Rational(1));
    CHECK(p.is_zero());
    p.add_term(ExponentVector({1, 1}), Rational(1));
    CHECK(p.coefficient(ExponentVector({1, 1})) == Rational(1));
    CHECK(p.coefficient(ExponentVector({3, 0})) == Rational(0));
}

TEST_CASE("multiply respects the tighter truncation bound") {
    SparsePolynomial a(1, 3);
    a.add_term(ExponentVector({1}), Rational(1));
    a.add_term(ExponentVector({3}), Rational(1));
    SparsePolynomial b(1, 2);
    b.add_term(ExponentVector({0}), Rational(1));
    b.add_term(ExponentVector({2}), Rational(1));
    SparsePolynomial ab = multiply(a, b);
    CHECK(ab.truncation_degree() == std::optional<int>(2));
    CHECK(ab.coefficient(ExponentVector({1})) == Rational(1));
    CHECK(ab.coefficient(ExponentVector({3})) == Rational(0));
    // An explicit bound overrides both.
    SparsePolynomial wide = multiply(a.untruncated(), b.untruncated(), 5);
    CHECK(wide.coefficient(ExponentVector({3})) == Rational(2));
    CHECK(wide.coefficient(ExponentVector({5})) == Rational(1));
}

TEST_CASE("untruncated preserves terms and removes the bound") {
    SparsePolynomial p(2, 2);
    p.add_term(ExponentVector({1, 1}), Rational(5));
    SparsePolynomial u = p.untruncated();
    CHECK(!u.truncation_degree().has_value());
    CHECK(u.coefficient(ExponentVector({1, 1})) == Rational(5));
    u.add_term(ExponentVector({4, 0}), Rational(1));
    CHECK(u.coefficient(ExponentVector({4, 0})) == Rational(1));
}

TEST_CASE("multiplication is commutative and associative on random inputs") {
    std::mt19937 rng(20260819);
    for (int trial = 0; trial < 60; ++trial) {
        int n_vars = 1 + static_cast<int>(rng() % 3);
        SparsePolynomial a = random_polynomial(rng, n_vars, 3, {});
        SparsePolynomial b = random_polynomial(rng, n_vars, 3, {});
        SparsePolynomial c = random_polynomial(rng, n_vars, 3, {});
        CHECK(multiply(a, b) == multiply(b, a));
        CHECK(multiply(multiply(a, b), c) == multiply(a, multiply(b, c)));
        // Distributivity over addition.
        CHECK(multiply(a, b + c) == multiply(a, b) + multiply(a, c));
    }
}

TEST_CASE("truncated multiply agrees with truncating the exact product") {
    std::mt19937 rng(917);
    for (int trial = 0; trial < 60; ++trial) {
        int n_vars = 1 + static_cast<int>(rng() % 3);
        int bound = static_cast<int>(rng() % 5);
        SparsePolynomial a = random_polynomial(rng, n_vars, 4, {});
        SparsePolynomial b = random_polynomial(rng, n_vars, 4, {});
        CHECK(multiply(a, b, bound) == multiply(a, b).truncated(bound));
    }
}

TEST_CASE("homogeneous_degree detects homogeneity") {
    SparsePolynomial p(2);
    CHECK(!p.homogeneous_degree().has_value());  // zero polynomial: no degree
    p.add_term(ExponentVector({2, 0}), Rational(1));
    p.add_term(ExponentVector({1, 1}), Rational(-4));
    CHECK(p.homogeneous_degree() == std::optional<int>(2));
    p.add_term(ExponentVector({0, 1}), Rational(1));
    CHECK(!p.homogeneous_degree().has_value());
}

TEST_CASE("degree_slice extracts one homogeneous component") {
    SparsePolynomial p(2);
    p.add_term(ExponentVector({2, 0}), Rational(1));
    p.add_term(ExponentVector({1, 0}), Rational(3));
    SparsePolynomial s = p.degree_slice(1);
    CHECK(s.coefficient(ExponentVector({1, 0})) == Rational(3));
    CHECK(s.coefficient(ExponentVector({2, 0})) == Rational(0));
    CHECK(s.homogeneous_degree() == std::optional<int>(1));
}

TEST_CASE("vandermonde alternant is antisymmetric with n! monomials") {
    for (int n = 1; n <= 5; ++n) {
        AlternantPolynomial a = vandermonde_alternant(n);
        CHECK(a.terms().size() == static_cast<size_t>(to_int64(factorial(n), "n!")));
        ExponentVector delta = staircase(n);
        CHECK(a.coefficient(delta) == Rational(1));
        for (const auto& [x, c] : a.terms()) {
            CHECK(x.total_degree() == delta.total_degree());
            CHECK((c == Rational(1) || c == Rational(-1)));
        }
    }
    // n = 2: x0 - x1.
    AlternantPolynomial a2 = vandermonde_alternant(2);
    CHECK(a2.coefficient(ExponentVector({1, 0})) == Rational(1));
    CHECK(a2.coefficient(ExponentVector({0, 1})) == Rational(-1));
}

TEST_CASE("evaluate_all_ones sums coefficients") {
    SparsePolynomial p(3);
    p.add_term(ExponentVector({1, 0, 2}), Rational(2));
    p.add_term(ExponentVector({0, 0, 0}), Rational(1, 2));
    CHECK(evaluate_all_ones(p) == Rational(5, 2));
}

TEST_CASE("integer coefficient detection and exact rational arithmetic") {
    SparsePolynomial p(1);
    p.add_term(ExponentVector({1}), Rational(1, 3));
    CHECK(!p.has_integer_coefficients());
    p.add_term(ExponentVector({1}), Rational(2, 3));
    CHECK(p.has_integer_coefficients());
    CHECK(p.coefficient(ExponentVector({1})) == Rational(1));
}
