// Symmetric functions as tagged basis expansions (h, e, p, m, s), conversions
// among the bases, expansion into a concrete variable set, characters of the
// symmetric group, and the Frobenius characteristic of class functions.
#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "plethy/numeric.hpp"
#include "plethy/partition.hpp"
#include "plethy/polynomial.hpp"

namespace plethy {

enum class Basis { h, e, p, m, s };

std::string basis_name(Basis b);

/// True for the bases where f_mu = f_{mu_1} f_{mu_2} ... (h, e, p).
bool is_multiplicative(Basis b);

/// Exact-rational linear combination of basis elements indexed by partitions.
class SymmetricFunction {
  public:
    explicit SymmetricFunction(Basis basis) : basis_(basis) {}

    static SymmetricFunction basis_element(Basis basis, const Partition& mu,
                                           const Rational& c = 1);

    Basis basis() const { return basis_; }
    const std::map<Partition, Rational>& terms() const { return terms_; }

    void add_term(const Partition& mu, const Rational& c);
    SymmetricFunction& operator+=(const SymmetricFunction& o);
    SymmetricFunction& operator-=(const SymmetricFunction& o);
    SymmetricFunction& scale(const Rational& c);

    bool is_zero() const { return terms_.empty(); }
    Rational coefficient(const Partition& mu) const;

    /// Largest weight among the indexing partitions; 0 for the zero function.
    int max_weight() const;

    bool operator==(const SymmetricFunction& o) const;

    std::string to_string() const;

  private:
    Basis basis_;
    std::map<Partition, Rational> terms_;
};

/// Indices concatenated and re-sorted: h_mu h_nu = h_{mu union nu}, etc.
Partition merge_partitions(const Partition& a, const Partition& b);

/// Product in a multiplicative basis (h, e, p). Other bases are a usage error.
SymmetricFunction multiply(const SymmetricFunction& a, const SymmetricFunction& b);

/// chi^lambda(nu) by border-strip recursion (computed on beta-numbers).
Integer murnaghan_nakayama(const Partition& lambda, const CycleType& nu);

/// All irreducible character values of S_n, with class sizes and centralizer
/// orders, rows and columns indexed by partitions of n in reverse-lexicographic
/// order. Built once per n; read-only afterwards.
class CharacterTable {
  public:
    explicit CharacterTable(int n);

    int n() const { return n_; }
    const std::vector<Partition>& partitions() const { return partitions_; }
    int index_of(const Partition& p) const;

    Integer chi(const Partition& lambda, const CycleType& nu) const;
    Integer class_size(const CycleType& nu) const;
    Integer z(const CycleType& nu) const;

    /// Dimension f^lambda = chi^lambda(1^n).
    Integer dimension(const Partition& lambda) const;

  private:
    int n_;
    std::vector<Partition> partitions_;
    std::map<Partition, int> index_;
    std::vector<std::vector<Integer>> values_;
    std::vector<Integer> class_sizes_;
    std::vector<Integer> z_factors_;
};

/// Jacobi-Trudi: s_lambda = det(h_{lambda_i - i + j}) expanded as a signed
/// integer combination of h_mu (h_0 = 1, negative index = 0).
SymmetricFunction schur_to_h(const Partition& lambda);

/// Character expansion s_lambda = sum_nu chi^lambda(nu)/z_nu p_nu.
SymmetricFunction schur_to_p(const Partition& lambda);

/// Rewrites f in the power-sum basis (identity on p input; classical
/// expansions for h, e, s; exact linear-system inversion for m).
SymmetricFunction to_p_basis(const SymmetricFunction& f);

/// The polynomial f(t_1, ..., t_n), identical for every basis presentation
/// of the same function; s_lambda with more than n parts expands to 0.
SparsePolynomial expand_in_variables(const SymmetricFunction& f, int n_vars,
                                     std::optional<int> truncate_at = {});

/// p_k evaluated at the eigenvalues of a permutation of cycle type rho:
/// the sum of the parts of rho dividing k (= fixed points of w^k). No root
/// of unity is ever materialized.
Integer power_sum_at_cycle_type(int k, const CycleType& rho);

/// F(C[X_mu]) = h_mu.
SymmetricFunction frobenius_characteristic_of_permutation_module(const Partition& mu);

/// Hall inner product, computed in the p basis via <p_nu, p_rho> = z_nu [nu=rho].
Rational hall_inner_product(const SymmetricFunction& f, const SymmetricFunction& g);

/// Integer-valued class function on S_n (a virtual character), stored by
/// cycle type with every class present.
struct ClassFunction {
    int n = 0;
    std::map<CycleType, Integer> values;

    Integer value(const CycleType& rho) const;
    ClassFunction& operator+=(const ClassFunction& o);
    ClassFunction& scale(const Integer& c);
};

ClassFunction trivial_class_function(int n);
ClassFunction sign_class_function(int n);
/// chi^mu as a class function.
ClassFunction irreducible_class_function(const Partition& mu);
/// Character of C[X_mu]: fixed ordered set partitions of shape mu, counted by
/// assigning whole cycles to blocks (an oracle independent of h_mu).
ClassFunction permutation_module_class_function(const Partition& mu);
ClassFunction regular_class_function(int n);

/// F(V) = sum_nu z_nu^{-1} V(nu) p_nu, in the p basis.
SymmetricFunction frobenius_characteristic(const ClassFunction& v);

}  // namespace plethy
