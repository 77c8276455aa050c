#include "plethy/restriction.hpp"

#include <algorithm>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace plethy {

namespace {

// p_k(x) with k clamped to |x|: no partition of x has more than |x| nonzero
// parts, so the counts stabilize there and one table of parts bound
// min(k_max, max_degree) serves every query.
Integer clamped_pk(const VectorPartitionTable& table, const ExponentVector& x, int k) {
    if (k < 0 || !x.is_nonnegative()) return 0;
    return table.count_pk(x, std::min(k, x.total_degree()));
}

// q_k(x) similarly: a partition into distinct parts has at most |x| parts,
// so q_k(x) = 0 once k >= |x| + 2. x = 0 does not stabilize the same way
// (q_k(0) = 1 exactly for k <= 1) and is answered directly.
Integer clamped_qk(const VectorPartitionTable& table, const ExponentVector& x, int k) {
    if (k < 0 || !x.is_nonnegative()) return 0;
    int deg = x.total_degree();
    if (deg == 0) return k <= 1 ? Integer(1) : Integer(0);
    if (k >= deg + 2) return 0;
    return table.count_qk(x, k);
}

VectorPartitionTable staircase_sum_table(int n, int d) {
    return VectorPartitionTable(n, d, std::min(n, d + 1));
}

template <typename CountFn>
Integer staircase_alternating_sum(const Partition& lambda, int n, CountFn&& count) {
    if (n < 0) throw std::invalid_argument("staircase sum: n must be nonnegative");
    if (lambda.length() > n)
        throw std::invalid_argument("staircase sum: lambda has more than n parts");
    ExponentVector lam_delta = lambda.pad_to(n) + staircase(n);
    Integer total = 0;
    for (const Permutation& w : all_permutations(n)) {
        Integer c = count(lam_delta - staircase_action(w));
        if (permutation_sign(w) > 0) {
            total += c;
        } else {
            total -= c;
        }
    }
    return total;
}

}  // namespace

Integer schur_coefficient_extraction(const SparsePolynomial& f, const Partition& lambda) {
    int n = f.n_vars();
    if (lambda.length() > n)
        throw std::invalid_argument(
            "schur_coefficient_extraction: lambda has more parts than variables");
    if (f.is_zero()) return 0;
    std::optional<int> deg = f.homogeneous_degree();
    if (!deg)
        throw std::invalid_argument("schur_coefficient_extraction: f is not homogeneous");
    if (*deg != lambda.weight())
        throw std::invalid_argument(
            "schur_coefficient_extraction: deg f does not match |lambda|");
    AlternantPolynomial product = multiply(vandermonde_alternant(n), f.untruncated());
    ExponentVector target = lambda.pad_to(n) + staircase(n);
    return require_integer(product.coefficient(target), "Schur coefficient");
}

LittlewoodContext::LittlewoodContext(int n, int d)
    : n_(n), d_(d), alternant_(vandermonde_alternant(std::max(n, 0))) {
    if (n < 0 || d < 0)
        throw std::invalid_argument("LittlewoodContext: n and d must be nonnegative");
    // Jacobi-Trudi determinants for mu |- n reach h-indices up to 2n - 1.
    int max_index = std::max(2 * n - 1, 0);
    VectorPartitionTable table(n, d, std::min(max_index, d));
    h_slices_.reserve(static_cast<size_t>(max_index) + 1);
    for (int k = 0; k <= max_index; ++k) {
        SparsePolynomial slice(n, d);
        for (const ExponentVector& x : vectors_up_to_degree(n, d)) {
            slice.add_term(x, Rational(clamped_pk(table, x, k)));
        }
        h_slices_.push_back(std::move(slice));
    }
}

const SparsePolynomial& LittlewoodContext::h_product(const std::vector<int>& parts) {
    Partition key(parts);
    auto it = h_product_cache_.find(key);
    if (it != h_product_cache_.end()) return it->second;
    SparsePolynomial result(n_, d_);
    if (parts.empty()) {
        result = SparsePolynomial::constant(n_, 1, d_);
    } else {
        if (parts.front() >= static_cast<int>(h_slices_.size()))
            throw std::logic_error("LittlewoodContext: h-index out of range");
        std::vector<int> rest(parts.begin() + 1, parts.end());
        result = multiply(h_product(rest), h_slices_[static_cast<size_t>(parts.front())], d_);
    }
    return h_product_cache_.emplace(std::move(key), std::move(result)).first->second;
}

const SparsePolynomial& LittlewoodContext::schur_plethysm_slice(const Partition& mu) {
    if (mu.weight() != n_)
        throw std::invalid_argument("schur_plethysm_slice: mu must be a partition of n");
    auto it = slice_cache_.find(mu);
    if (it != slice_cache_.end()) return it->second;
    SymmetricFunction jacobi_trudi = schur_to_h(mu);
    SparsePolynomial acc(n_, d_);
    for (const auto& [kappa, c] : jacobi_trudi.terms()) {
        SparsePolynomial term = h_product(kappa.parts());
        term.scale(c);
        acc += term;
    }
    return slice_cache_.emplace(mu, acc.degree_slice(d_)).first->second;
}

Integer LittlewoodContext::restriction(const Partition& lambda, const Partition& mu) {
    if (lambda.weight() != d_ || lambda.length() > n_)
        throw std::invalid_argument("restriction: lambda must lie in Lambda(d, n)");
    auto it = product_cache_.find(mu);
    if (it == product_cache_.end()) {
        const SparsePolynomial& slice = schur_plethysm_slice(mu);
        it = product_cache_.emplace(mu, multiply(alternant_, slice.untruncated())).first;
    }
    ExponentVector target = lambda.pad_to(n_) + staircase(n_);
    return require_integer(it->second.coefficient(target), "Littlewood restriction coefficient");
}

Integer littlewood_restriction(const Partition& lambda, const Partition& mu) {
    LittlewoodContext context(mu.weight(), lambda.weight());
    return context.restriction(lambda, mu);
}

Integer corollary_trivial_multiplicity(const Partition& lambda, int n,
                                       const VectorPartitionTable& table) {
    return staircase_alternating_sum(
        lambda, n, [&](const ExponentVector& x) { return clamped_pk(table, x, n); });
}

Integer corollary_trivial_multiplicity(const Partition& lambda, int n) {
    if (n < 0) throw std::invalid_argument("corollary_trivial_multiplicity: n must be nonnegative");
    VectorPartitionTable table = staircase_sum_table(n, lambda.weight());
    return corollary_trivial_multiplicity(lambda, n, table);
}

Integer corollary_sign_multiplicity(const Partition& lambda, int n,
                                    const VectorPartitionTable& table) {
    return staircase_alternating_sum(
        lambda, n, [&](const ExponentVector& x) { return clamped_qk(table, x, n); });
}

Integer corollary_sign_multiplicity(const Partition& lambda, int n) {
    if (n < 0) throw std::invalid_argument("corollary_sign_multiplicity: n must be nonnegative");
    VectorPartitionTable table = staircase_sum_table(n, lambda.weight());
    return corollary_sign_multiplicity(lambda, n, table);
}

std::map<Partition, Integer> brute_force_restriction(const Partition& lambda,
                                                     const CharacterTable& table) {
    int n = table.n();
    if (lambda.length() > n)
        throw std::invalid_argument("brute_force_restriction: lambda has more than n parts");
    SymmetricFunction in_p = schur_to_p(lambda);
    // Character of the restricted representation: s_lambda evaluated at the
    // eigenvalue multiset of each cycle type, through the power sums.
    std::map<CycleType, Rational> restricted;
    for (const Partition& rho : table.partitions()) {
        Rational value = 0;
        for (const auto& [nu, c] : in_p.terms()) {
            Rational product = c;
            for (int part : nu.parts()) {
                product *= Rational(power_sum_at_cycle_type(part, rho));
            }
            value += product;
        }
        restricted.emplace(rho, value);
    }
    Integer group_order = factorial(n);
    std::map<Partition, Integer> out;
    for (const Partition& mu : table.partitions()) {
        Rational sum = 0;
        for (const Partition& rho : table.partitions()) {
            sum += Rational(table.class_size(rho)) * restricted.at(rho) *
                   Rational(table.chi(mu, rho));
        }
        Integer r = require_integer(sum / Rational(group_order), "restriction multiplicity");
        if (r < 0) {
            std::ostringstream msg;
            msg << "brute_force_restriction: negative multiplicity " << r
                << " at lambda=" << lambda.to_string() << " mu=" << mu.to_string();
            throw std::logic_error(msg.str());
        }
        out.emplace(mu, std::move(r));
    }
    return out;
}

std::map<Partition, Integer> brute_force_restriction(const Partition& lambda, int n) {
    CharacterTable table(n);
    return brute_force_restriction(lambda, table);
}

std::string route_name(RestrictionRoute route) {
    switch (route) {
        case RestrictionRoute::littlewood: return "littlewood";
        case RestrictionRoute::corollary: return "corollary";
        case RestrictionRoute::brute: return "brute";
    }
    throw std::logic_error("route_name: unknown route");
}

bool RestrictionTable::has(const Partition& lambda, const Partition& mu) const {
    return entries.contains({lambda, mu});
}

Integer RestrictionTable::at(const Partition& lambda, const Partition& mu) const {
    auto it = entries.find({lambda, mu});
    if (it == entries.end()) {
        std::ostringstream msg;
        msg << "RestrictionTable: no entry for lambda=" << lambda.to_string()
            << " mu=" << mu.to_string() << " (route " << route << ")";
        throw std::out_of_range(msg.str());
    }
    return it->second;
}

RestrictionTable build_restriction_table(int n, int d, RestrictionRoute route) {
    if (n < 0 || d < 0)
        throw std::invalid_argument("build_restriction_table: n and d must be nonnegative");
    RestrictionTable table;
    table.n = n;
    table.d = d;
    table.route = route_name(route);
    table.lambdas = enumerate_partitions(d, n);
    if (route == RestrictionRoute::corollary) {
        Partition row(n > 0 ? std::vector<int>{n} : std::vector<int>{});
        Partition column(std::vector<int>(static_cast<size_t>(n), 1));
        table.mus.push_back(row);
        if (column != row) table.mus.push_back(column);
        VectorPartitionTable counts = staircase_sum_table(n, d);
        for (const Partition& lambda : table.lambdas) {
            table.entries[{lambda, row}] = corollary_trivial_multiplicity(lambda, n, counts);
            table.entries[{lambda, column}] = corollary_sign_multiplicity(lambda, n, counts);
        }
    } else if (route == RestrictionRoute::brute) {
        table.mus = enumerate_partitions(n, n);
        CharacterTable characters(n);
        for (const Partition& lambda : table.lambdas) {
            for (auto& [mu, r] : brute_force_restriction(lambda, characters)) {
                table.entries[{lambda, mu}] = std::move(r);
            }
        }
    } else {
        table.mus = enumerate_partitions(n, n);
        LittlewoodContext context(n, d);
        for (const Partition& mu : table.mus) {
            for (const Partition& lambda : table.lambdas) {
                table.entries[{lambda, mu}] = context.restriction(lambda, mu);
            }
        }
    }
    return table;
}

UnimodalityReport unimodality_sweep(int max_sum, int max_n) {
    if (max_sum < 0 || max_n < 0)
        throw std::invalid_argument("unimodality_sweep: bounds must be nonnegative");
    UnimodalityReport report;
    report.max_sum = max_sum;
    report.max_n = max_n;
    VectorPartitionTable flat(2, max_sum, max_n);
    std::map<std::pair<int, int>, VectorPartitionTable> staircase_tables;
    for (int x1 = 1; x1 < max_sum; ++x1) {
        for (int x2 = 1; x2 <= x1 && x1 + x2 <= max_sum; ++x2) {
            ExponentVector left({x1, x2});
            ExponentVector right({x1 + 1, x2 - 1});
            for (int n = 0; n <= max_n; ++n) {
                UnimodalityEntry entry;
                entry.x1 = x1;
                entry.x2 = x2;
                entry.n = n;
                entry.p_difference = flat.count_pk(left, n) - flat.count_pk(right, n);
                entry.q_difference = flat.count_qk(left, n) - flat.count_qk(right, n);
                entry.holds = entry.p_difference >= 0 && entry.q_difference >= 0;
                std::ostringstream why;
                if (!entry.holds) {
                    why << "count drop at x=(" << x1 << "," << x2 << ") n=" << n
                        << ": p difference " << entry.p_difference << ", q difference "
                        << entry.q_difference;
                }
                if (n >= 2) {
                    entry.identity_checked = true;
                    auto key = std::make_pair(n, x1 + x2);
                    auto it = staircase_tables.find(key);
                    if (it == staircase_tables.end()) {
                        it = staircase_tables
                                 .emplace(key, staircase_sum_table(n, x1 + x2))
                                 .first;
                    }
                    Partition lambda(std::vector<int>{x1, x2});
                    Integer trivial = corollary_trivial_multiplicity(lambda, n, it->second);
                    Integer sign = corollary_sign_multiplicity(lambda, n, it->second);
                    if (trivial != entry.p_difference || sign != entry.q_difference) {
                        entry.holds = false;
                        why << "difference/multiplicity mismatch at x=(" << x1 << "," << x2
                            << ") n=" << n << ": p difference " << entry.p_difference
                            << " vs trivial multiplicity " << trivial << ", q difference "
                            << entry.q_difference << " vs sign multiplicity " << sign;
                    }
                }
                if (!entry.holds && report.all_hold) {
                    report.all_hold = false;
                    report.first_failure = why.str();
                }
                report.entries.push_back(std::move(entry));
            }
        }
    }
    return report;
}

}  // namespace plethy
