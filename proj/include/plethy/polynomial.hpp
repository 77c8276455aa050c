// Sparse exact-rational polynomial / truncated-series ring in n variables.
// Terms are kept in lexicographic order of their exponent vectors, so all
// iteration (and hence all output) is deterministic.
#pragma once

#include <map>
#include <optional>
#include <string>

#include "plethy/numeric.hpp"
#include "plethy/partition.hpp"

namespace plethy {

class SparsePolynomial {
  public:
    explicit SparsePolynomial(int n_vars, std::optional<int> truncation_degree = {});

    static SparsePolynomial constant(int n_vars, const Rational& c,
                                     std::optional<int> truncation_degree = {});
    static SparsePolynomial monomial(const ExponentVector& x, const Rational& c,
                                     std::optional<int> truncation_degree = {});

    int n_vars() const { return n_vars_; }
    std::optional<int> truncation_degree() const { return truncation_degree_; }
    const std::map<ExponentVector, Rational>& terms() const { return terms_; }

    /// Adds c * t^x, dropping the term if it cancels or exceeds the truncation
    /// bound. x must be nonnegative with length n_vars.
    void add_term(const ExponentVector& x, const Rational& c);

    SparsePolynomial& operator+=(const SparsePolynomial& o);
    SparsePolynomial& operator-=(const SparsePolynomial& o);
    SparsePolynomial operator+(const SparsePolynomial& o) const;
    SparsePolynomial operator-(const SparsePolynomial& o) const;
    SparsePolynomial& scale(const Rational& c);

    /// Equality of stored terms (truncation metadata not compared).
    bool operator==(const SparsePolynomial& o) const;

    bool is_zero() const { return terms_.empty(); }
    Rational coefficient(const ExponentVector& x) const;

    /// The common total degree of all terms, if the polynomial is homogeneous;
    /// nullopt for 0 or inhomogeneous polynomials.
    std::optional<int> homogeneous_degree() const;

    bool has_integer_coefficients() const;

    /// Terms of total degree exactly d.
    SparsePolynomial degree_slice(int d) const;

    /// Same terms with a (possibly tighter) truncation bound applied.
    SparsePolynomial truncated(int degree) const;

    /// Same terms with no truncation bound, so that later products may grow
    /// past the bound this polynomial was built under.
    SparsePolynomial untruncated() const;

    std::string to_string() const;

  private:
    int n_vars_ = 0;
    std::optional<int> truncation_degree_;
    std::map<ExponentVector, Rational> terms_;
};

/// Alternants (e.g. the Vandermonde a_delta and a_delta * f) are carried by
/// the same sparse representation; antisymmetry is a property, not a shape.
using AlternantPolynomial = SparsePolynomial;

/// Exact product with terms above truncate_at discarded. The result's bound
/// is the tightest of truncate_at and the operands' own bounds.
SparsePolynomial multiply(const SparsePolynomial& a, const SparsePolynomial& b,
                          std::optional<int> truncate_at = {});

/// a_delta = det(t_i^{n-j}) = sum over w in S_n of sgn(w) t^{w.delta}.
AlternantPolynomial vandermonde_alternant(int n);

Rational coefficient_of(const SparsePolynomial& p, const ExponentVector& x);

/// Sum of all coefficients, i.e. the value at t_1 = ... = t_n = 1.
Rational evaluate_all_ones(const SparsePolynomial& p);

}  // namespace plethy
