// Plethystic substitution f[g] of a symmetric function into a truncated
// monomial series, centered on the series H(t) = sum over x in N^n of t^x.
#pragma once

#include <map>
#include <vector>

#include "plethy/numeric.hpp"
#include "plethy/partition.hpp"
#include "plethy/polynomial.hpp"
#include "plethy/symfn.hpp"

namespace plethy {

/// Truncated series with positive integer coefficients: a sum of monic
/// monomials, possibly repeated. The substitution target of a plethysm.
class MonomialSeries {
  public:
    MonomialSeries(int n_vars, int truncation_degree);

    int n_vars() const { return n_vars_; }
    int truncation_degree() const { return truncation_degree_; }
    const std::map<ExponentVector, Integer>& terms() const { return terms_; }

    /// Adds `multiplicity` copies of the monomial t^x; exponents above the
    /// truncation degree are dropped.
    void add_monomial(const ExponentVector& x, const Integer& multiplicity = 1);

    /// Reads off a polynomial with nonnegative integer coefficients.
    static MonomialSeries from_polynomial(const SparsePolynomial& p, int truncation_degree);

    SparsePolynomial to_polynomial() const;

  private:
    int n_vars_;
    int truncation_degree_;
    std::map<ExponentVector, Integer> terms_;
};

/// H(t) truncated at degree d: every x in N^n with |x| <= d, once. The
/// constant term (x = 0) is part of the series.
MonomialSeries h_series(int n_vars, int d);

/// p_k[g]: every exponent scaled by k, the truncation degree kept, scaled-out
/// terms dropped. p_1 is the identity.
MonomialSeries power_plethysm(int k, const MonomialSeries& g);

enum class PlethysmRoute {
    /// f -> p basis; p_nu[g] = prod_i p_{nu_i}[g]; truncated products.
    power_sum,
    /// f -> h basis (via Jacobi-Trudi for s, conjugate Jacobi-Trudi for e);
    /// h_k[g] by degree-bounded multiset convolution over g's monomials.
    convolution,
};

/// f[g] truncated to total degree <= d. Requires d <= g.truncation_degree().
/// When f has integer coefficients in the h, e or s basis the result is
/// asserted to have integer coefficients.
SparsePolynomial plethysm_into_series(const SymmetricFunction& f, const MonomialSeries& g,
                                      int d, PlethysmRoute route = PlethysmRoute::power_sum);

/// h_j[g] (or e_j[g] with elementary set) for all j <= k at once, truncated
/// at degree d: the u-coefficients of prod over monomials t^x of
/// (1 - t^x u)^{-1} (resp. (1 + t^x u)).
std::vector<SparsePolynomial> complete_plethysm_slices(const MonomialSeries& g, int k,
                                                       int d, bool elementary);

}  // namespace plethy
