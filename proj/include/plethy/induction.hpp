// Characters of the degree-d polynomial induction functor: closed forms
// driven by vector-partition counts and plethysm, plus an independent
// matrix-orbit model for permutation modules.
#pragma once

#include <string>

#include "plethy/partition.hpp"
#include "plethy/polynomial.hpp"
#include "plethy/symfn.hpp"
#include "plethy/vecpart.hpp"

namespace plethy {

/// The degree-d homogeneous character slice of an induced representation:
/// every monomial has total degree exactly d and every coefficient is a
/// nonnegative integer (validated on construction).
struct InducedCharacter {
    int n;
    int d;
    SparsePolynomial character;
    std::string source;

    InducedCharacter(int n, int d, SparsePolynomial character, std::string source);

    Integer dimension() const;
};

/// Sum over |x| = d of p_n(x) t^x: the character of degree-d polynomials
/// on n x n matrix space invariant under the row-permutation action.
InducedCharacter ch_ind_trivial(int n, int d);

/// Sum over |x| = d of q_n(x) t^x: the sign-isotypic analogue.
InducedCharacter ch_ind_sign(int n, int d);

/// Degree-d slice of prod_i sum_x p_{mu_i}(x) t^x, mu a partition of n.
InducedCharacter ch_ind_permutation_module(const Partition& mu, int d);

/// Independent oracle: enumerates canonical representatives of the orbits of
/// n x n nonnegative integer matrices with entry sum d under permutations of
/// rows within blocks of sizes mu_1, ..., mu_m; each orbit contributes the
/// monomial of its column sums. Canonical form: each block's rows sorted
/// lexicographically non-decreasing.
InducedCharacter matrix_orbit_character(const Partition& mu, int d);

/// Distinct-rows variant: orbits of matrices with pairwise distinct rows
/// under the full row-permutation group (canonical form: rows strictly
/// increasing), the oracle for ch_ind_sign.
InducedCharacter matrix_orbit_sign_character(int n, int d);

/// ch of the induction of an arbitrary virtual character: F(V)[H] sliced at
/// degree d. Integer coefficients are asserted; positivity is not (V may be
/// virtual).
SparsePolynomial ch_ind_general(const ClassFunction& v, int d);

}  // namespace plethy
