// Partitions, exponent vectors, cycle types, staircase vectors and the
// enumeration primitives everything else indexes by.
#pragma once

#include <compare>
#include <string>
#include <utility>
#include <vector>

#include "plethy/numeric.hpp"

namespace plethy {

/// Element of Z^n used as the exponent of a monomial t^x.  Constructed
/// nonnegative by default; signed vectors (needed for staircase arithmetic
/// such as lambda + delta - w.delta) go through the explicit factory.
class ExponentVector {
  public:
    ExponentVector() = default;
    explicit ExponentVector(std::vector<int> coords);

    /// Admits negative coordinates. Counting functions treat any vector with
    /// a negative coordinate as having count zero.
    static ExponentVector signed_lattice(std::vector<int> coords);

    int size() const { return static_cast<int>(coords_.size()); }
    int operator[](int i) const { return coords_[static_cast<size_t>(i)]; }
    const std::vector<int>& coords() const { return coords_; }

    int total_degree() const;
    bool is_nonnegative() const;
    bool is_zero() const;

    ExponentVector operator+(const ExponentVector& o) const;
    ExponentVector operator-(const ExponentVector& o) const;  // may go negative
    ExponentVector scaled(int k) const;

    auto operator<=>(const ExponentVector&) const = default;  // lexicographic

    std::string to_string() const;

  private:
    std::vector<int> coords_;
};

/// Weakly decreasing sequence of positive integers, stored without trailing
/// zeros so that equal partitions compare equal.
class Partition {
  public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    int length() const { return static_cast<int>(parts_.size()); }
    int weight() const;
    bool empty() const { return parts_.empty(); }
    const std::vector<int>& parts() const { return parts_; }

    /// part(i) with zero beyond the last part (0-based row index).
    int part(int i) const;

    /// The view (lambda_1, ..., lambda_n) padded with zeros; n >= length().
    ExponentVector pad_to(int n) const;

    Partition conjugate() const;

    auto operator<=>(const Partition&) const = default;

    std::string to_string() const;

  private:
    std::vector<int> parts_;
};

/// Conjugacy-class datum of a permutation: the partition of n recording its
/// cycle lengths.
using CycleType = Partition;

/// Permutation of {0, ..., n-1} given by its images: w[i] is where i goes.
using Permutation = std::vector<int>;

/// All of Lambda(d, max_parts), in reverse-lexicographic order:
/// (4) before (3,1) before (2,2).
std::vector<Partition> enumerate_partitions(int d, int max_parts);

/// z_nu = prod_i i^{m_i} m_i!, the centralizer order of cycle type nu.
Integer z_factor(const CycleType& nu);

/// One (cycle type, class size) entry per partition of n; sizes sum to n!.
std::vector<std::pair<CycleType, Integer>> enumerate_cycle_types(int n);

/// The staircase delta = (n-1, n-2, ..., 1, 0).
ExponentVector staircase(int n);

/// w.delta = (n - w(1), ..., n - w(n)), a permutation of delta's entries.
ExponentVector staircase_action(const Permutation& w);

/// All n! permutations of {0..n-1} in lexicographic order.
std::vector<Permutation> all_permutations(int n);

/// +1 for even permutations, -1 for odd.
int permutation_sign(const Permutation& w);

/// All x in N^n with |x| = d, in lexicographic order.
std::vector<ExponentVector> vectors_with_degree(int n, int d);

/// All x in N^n with |x| <= d, in lexicographic order.
std::vector<ExponentVector> vectors_up_to_degree(int n, int d);

}  // namespace plethy
