#include "plethy/induction.hpp"

#include <stdexcept>

#include "plethy/plethysm.hpp"

namespace plethy {

InducedCharacter::InducedCharacter(int n_, int d_, SparsePolynomial character_,
                                   std::string source_)
    : n(n_), d(d_), character(std::move(character_)), source(std::move(source_)) {
    for (const auto& [x, c] : character.terms()) {
        if (x.total_degree() != d) {
            throw std::logic_error("InducedCharacter(" + source + "): term " +
                                   x.to_string() + " is not of degree " +
                                   std::to_string(d));
        }
        if (!is_integer(c) || c < 0) {
            throw std::logic_error("InducedCharacter(" + source +
                                   "): coefficient of " + x.to_string() +
                                   " is not a nonnegative integer: " + c.str());
        }
    }
}

Integer InducedCharacter::dimension() const {
    return require_integer(evaluate_all_ones(character), "InducedCharacter::dimension");
}

InducedCharacter ch_ind_trivial(int n, int d) {
    if (n < 1 || d < 0) {
        throw std::invalid_argument("ch_ind_trivial: bad arguments");
    }
    VectorPartitionTable table(n, d, n);
    SparsePolynomial ch(n);
    for (const ExponentVector& x : vectors_with_degree(n, d)) {
        ch.add_term(x, Rational(table.count_pk(x, n)));
    }
    return InducedCharacter(n, d, std::move(ch), "trivial");
}

InducedCharacter ch_ind_sign(int n, int d) {
    if (n < 1 || d < 0) {
        throw std::invalid_argument("ch_ind_sign: bad arguments");
    }
    VectorPartitionTable table(n, d, n);
    SparsePolynomial ch(n);
    for (const ExponentVector& x : vectors_with_degree(n, d)) {
        ch.add_term(x, Rational(table.count_qk(x, n)));
    }
    return InducedCharacter(n, d, std::move(ch), "sign");
}

InducedCharacter ch_ind_permutation_module(const Partition& mu, int d) {
    int n = mu.weight();
    if (n < 1 || d < 0) {
        throw std::invalid_argument("ch_ind_permutation_module: bad arguments");
    }
    VectorPartitionTable table(n, d, mu.part(0));
    SparsePolynomial product = SparsePolynomial::constant(n, 1, d);
    for (int part : mu.parts()) {
        SparsePolynomial factor(n, d);
        for (const ExponentVector& x : vectors_up_to_degree(n, d)) {
            factor.add_term(x, Rational(table.count_pk(x, part)));
        }
        product = multiply(product, factor, d);
    }
    return InducedCharacter(n, d, product.degree_slice(d),
                            "permutation module " + mu.to_string());
}

namespace {

// Canonical orbit representatives: rows chosen per block with non-decreasing
// lexicographic rank (strictly increasing for the distinct-rows model), total
// entry sum exactly d. Row ranks index the lex-ordered list of candidate rows.
void descend_orbits(const std::vector<ExponentVector>& rows,
                    const std::vector<int>& block_sizes, size_t block, int row_in_block,
                    size_t min_rank, int remaining, bool strict,
                    std::vector<int>& column_sums, SparsePolynomial& out) {
    if (block == block_sizes.size()) {
        if (remaining == 0) {
            out.add_term(ExponentVector(column_sums), 1);
        }
        return;
    }
    if (row_in_block == block_sizes[block]) {
        descend_orbits(rows, block_sizes, block + 1, 0, 0, remaining, strict,
                       column_sums, out);
        return;
    }
    for (size_t rank = min_rank; rank < rows.size(); ++rank) {
        const ExponentVector& row = rows[rank];
        int rd = row.total_degree();
        if (rd > remaining) {
            continue;
        }
        for (size_t j = 0; j < column_sums.size(); ++j) {
            column_sums[j] += row[static_cast<int>(j)];
        }
        descend_orbits(rows, block_sizes, block, row_in_block + 1,
                       strict ? rank + 1 : rank, remaining - rd, strict, column_sums,
                       out);
        for (size_t j = 0; j < column_sums.size(); ++j) {
            column_sums[j] -= row[static_cast<int>(j)];
        }
    }
}

SparsePolynomial orbit_character(int n, const std::vector<int>& block_sizes, int d,
                                 bool strict) {
    std::vector<ExponentVector> rows = vectors_up_to_degree(n, d);  // lex order
    SparsePolynomial out(n);
    std::vector<int> column_sums(static_cast<size_t>(n), 0);
    descend_orbits(rows, block_sizes, 0, 0, 0, d, strict, column_sums, out);
    return out;
}

}  // namespace

InducedCharacter matrix_orbit_character(const Partition& mu, int d) {
    int n = mu.weight();
    if (n < 1 || d < 0) {
        throw std::invalid_argument("matrix_orbit_character: bad arguments");
    }
    return InducedCharacter(n, d, orbit_character(n, mu.parts(), d, false),
                            "matrix orbits of shape " + mu.to_string());
}

InducedCharacter matrix_orbit_sign_character(int n, int d) {
    if (n < 1 || d < 0) {
        throw std::invalid_argument("matrix_orbit_sign_character: bad arguments");
    }
    return InducedCharacter(n, d, orbit_character(n, {n}, d, true),
                            "distinct-row matrix orbits");
}

SparsePolynomial ch_ind_general(const ClassFunction& v, int d) {
    if (v.n < 1 || d < 0) {
        throw std::invalid_argument("ch_ind_general: bad arguments");
    }
    SymmetricFunction fv = frobenius_characteristic(v);
    SparsePolynomial full = plethysm_into_series(fv, h_series(v.n, d), d);
    SparsePolynomial slice = full.degree_slice(d);
    for (const auto& [x, c] : slice.terms()) {
        if (!is_integer(c)) {
            throw std::logic_error(
                "ch_ind_general: non-integer coefficient " + c.str() + " at " +
                x.to_string() + "; arithmetic bug");
        }
    }
    return slice;
}

}  // namespace plethy
