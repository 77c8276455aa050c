// Multipartite (vector) partition counting. p_k(x) counts partitions of
// x in N^n into at most k nonzero vector parts; q_k(x) counts those with
// exactly k or k-1 distinct parts. Both vanish when x has a negative
// coordinate, which is what makes the staircase alternating sums correct
// term-for-term.
#pragma once

#include <map>
#include <optional>
#include <vector>

#include "plethy/numeric.hpp"
#include "plethy/partition.hpp"

namespace plethy {

/// Bulk dynamic-programming table: one build covers every x with |x| <=
/// max_degree and every parts bound <= max_parts. Built single-threaded,
/// immutable afterwards.
class VectorPartitionTable {
  public:
    VectorPartitionTable(int n_vars, int max_degree, int max_parts,
                         std::optional<std::size_t> memory_cap_bytes = {});

    int n_vars() const { return n_vars_; }
    int max_degree() const { return max_degree_; }
    int max_parts() const { return max_parts_; }

    /// p_k(x). Zero when x has a negative coordinate; k above max_parts or
    /// |x| above max_degree is a usage error.
    Integer count_pk(const ExponentVector& x, int k) const;

    /// q_k(x) = (# with exactly k distinct parts) + (# with exactly k-1).
    Integer count_qk(const ExponentVector& x, int k) const;

    /// Number of partitions of x into exactly j parts (repetition allowed).
    Integer exact_parts(const ExponentVector& x, int j) const;

    /// Number of partitions of x into exactly j pairwise distinct parts.
    Integer exact_distinct_parts(const ExponentVector& x, int j) const;

  private:
    int lookup(const ExponentVector& x) const;  // -1 for negative coordinates

    int n_vars_;
    int max_degree_;
    int max_parts_;
    std::vector<ExponentVector> vectors_;
    std::map<ExponentVector, int> index_;
    std::vector<std::vector<Integer>> exact_;     // [vector][j]: exactly j parts
    std::vector<std::vector<Integer>> distinct_;  // [vector][j]: exactly j distinct parts
};

/// One-shot conveniences; they build a minimal table per call. Use a shared
/// VectorPartitionTable in loops.
Integer count_pk(const ExponentVector& x, int k);
Integer count_qk(const ExponentVector& x, int k);

/// Every multiset of nonzero vectors in N^n summing to x (each part listed in
/// ascending lexicographic order); with distinct set, every set of pairwise
/// distinct parts. The brute-force oracle for the counting functions. A
/// vector with negative coordinates has no partitions (empty result).
std::vector<std::vector<ExponentVector>> enumerate_vector_partitions(
    const ExponentVector& x, bool distinct);

}  // namespace plethy
