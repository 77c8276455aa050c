// Restriction coefficients r_{lambda,mu} — the multiplicity of the
// irreducible S_n-representation indexed by mu inside the degree-d polynomial
// GL_n-irreducible indexed by lambda, restricted to permutation matrices —
// by three independent routes: the plethystic inner product
// <s_lambda, s_mu[H]>, the staircase alternating sums for the trivial and
// sign cases, and brute-force character decomposition over S_n.
#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "plethy/partition.hpp"
#include "plethy/polynomial.hpp"
#include "plethy/symfn.hpp"
#include "plethy/vecpart.hpp"

namespace plethy {

/// <f, s_lambda> for a symmetric polynomial f, homogeneous of degree
/// |lambda|, in n >= length(lambda) variables: the coefficient of
/// t^{lambda+delta} in a_delta * f. Non-homogeneous f is a usage error; the
/// zero polynomial extracts to 0.
Integer schur_coefficient_extraction(const SparsePolynomial& f, const Partition& lambda);

/// Shared per-(n, d) machinery for the plethystic route: the slices h_k[H]
/// built from vector-partition counts, the Jacobi-Trudi assembly of s_mu[H],
/// and the alternant products, all cached across queries.
class LittlewoodContext {
  public:
    LittlewoodContext(int n, int d);

    int n() const { return n_; }
    int d() const { return d_; }

    /// Degree-d slice of s_mu[H] in n variables, mu a partition of n.
    const SparsePolynomial& schur_plethysm_slice(const Partition& mu);

    /// r_{lambda,mu} = <s_lambda, s_mu[H]> via coefficient extraction.
    Integer restriction(const Partition& lambda, const Partition& mu);

  private:
    /// Product of h-slices along a weakly decreasing index tuple, memoized
    /// on suffixes: Jacobi-Trudi terms share most of their factors.
    const SparsePolynomial& h_product(const std::vector<int>& parts);

    int n_;
    int d_;
    std::vector<SparsePolynomial> h_slices_;  // h_k[H] truncated at d
    AlternantPolynomial alternant_;
    std::map<Partition, SparsePolynomial> h_product_cache_;
    std::map<Partition, SparsePolynomial> slice_cache_;
    std::map<Partition, SparsePolynomial> product_cache_;  // a_delta * slice
};

/// One-shot r_{lambda,mu}; builds a LittlewoodContext per call.
Integer littlewood_restriction(const Partition& lambda, const Partition& mu);

/// sum over w in S_n of sgn(w) p_n(lambda+delta-w.delta): the multiplicity
/// of the trivial representation. The table overloads reuse one table across
/// many lambdas; it must cover n variables up to degree |lambda| with parts
/// bound at least min(n, |lambda| + 1).
Integer corollary_trivial_multiplicity(const Partition& lambda, int n);
Integer corollary_trivial_multiplicity(const Partition& lambda, int n,
                                       const VectorPartitionTable& table);

/// The same alternating sum with q_n: the multiplicity of sign.
Integer corollary_sign_multiplicity(const Partition& lambda, int n);
Integer corollary_sign_multiplicity(const Partition& lambda, int n,
                                    const VectorPartitionTable& table);

/// Full decomposition of the restriction by character theory: evaluate
/// s_lambda at the eigenvalues of each cycle type through its power-sum
/// expansion, then average against each irreducible character. Every
/// multiplicity is asserted to be a nonnegative integer (a violation halts
/// with a diagnostic).
std::map<Partition, Integer> brute_force_restriction(const Partition& lambda, int n);
std::map<Partition, Integer> brute_force_restriction(const Partition& lambda,
                                                     const CharacterTable& table);

enum class RestrictionRoute { littlewood, corollary, brute };

std::string route_name(RestrictionRoute route);

/// All r_{lambda,mu} for lambda in Lambda(d,n), with the producing route
/// recorded. The corollary route only fills mu = (n) and mu = (1^n).
struct RestrictionTable {
    int n = 0;
    int d = 0;
    std::string route;
    std::vector<Partition> lambdas;  // Lambda(d, n), reverse-lexicographic
    std::vector<Partition> mus;      // filled columns, reverse-lexicographic
    std::map<std::pair<Partition, Partition>, Integer> entries;

    bool has(const Partition& lambda, const Partition& mu) const;
    Integer at(const Partition& lambda, const Partition& mu) const;
};

RestrictionTable build_restriction_table(int n, int d, RestrictionRoute route);

/// One row of the two-row unimodality sweep: both count differences, and
/// whether each difference was cross-identified with the corresponding
/// multiplicity (possible for n >= 2, where (x1, x2) indexes a GL_n weight).
struct UnimodalityEntry {
    int x1 = 0;
    int x2 = 0;
    int n = 0;
    Integer p_difference;
    Integer q_difference;
    bool identity_checked = false;
    bool holds = false;
};

struct UnimodalityReport {
    int max_sum = 0;
    int max_n = 0;
    std::vector<UnimodalityEntry> entries;
    bool all_hold = true;
    std::string first_failure;
};

/// Verifies p_n(x1,x2) >= p_n(x1+1,x2-1) and q_n(x1,x2) >= q_n(x1+1,x2-1)
/// for all x1 >= x2 >= 1 with x1+x2 <= max_sum and 0 <= n <= max_n, and for
/// n >= 2 identifies each difference with the trivial (resp. sign)
/// multiplicity from the staircase sums.
UnimodalityReport unimodality_sweep(int max_sum, int max_n);

}  // namespace plethy
