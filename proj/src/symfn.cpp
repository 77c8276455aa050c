#include "plethy/symfn.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace plethy {

std::string basis_name(Basis b) {
    switch (b) {
        case Basis::h: return "h";
        case Basis::e: return "e";
        case Basis::p: return "p";
        case Basis::m: return "m";
        case Basis::s: return "s";
    }
    throw std::logic_error("basis_name: unknown basis");
}

bool is_multiplicative(Basis b) {
    return b == Basis::h || b == Basis::e || b == Basis::p;
}

SymmetricFunction SymmetricFunction::basis_element(Basis basis, const Partition& mu,
                                                   const Rational& c) {
    SymmetricFunction f(basis);
    f.add_term(mu, c);
    return f;
}

void SymmetricFunction::add_term(const Partition& mu, const Rational& c) {
    if (c == 0) {
        return;
    }
    auto it = terms_.find(mu);
    if (it == terms_.end()) {
        terms_.emplace(mu, c);
    } else {
        it->second += c;
        if (it->second == 0) {
            terms_.erase(it);
        }
    }
}

SymmetricFunction& SymmetricFunction::operator+=(const SymmetricFunction& o) {
    if (o.basis_ != basis_) {
        throw std::logic_error("cannot add symmetric functions in different bases");
    }
    for (const auto& [mu, c] : o.terms_) {
        add_term(mu, c);
    }
    return *this;
}

SymmetricFunction& SymmetricFunction::operator-=(const SymmetricFunction& o) {
    if (o.basis_ != basis_) {
        throw std::logic_error("cannot subtract symmetric functions in different bases");
    }
    for (const auto& [mu, c] : o.terms_) {
        add_term(mu, -c);
    }
    return *this;
}

SymmetricFunction& SymmetricFunction::scale(const Rational& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [mu, coeff] : terms_) {
        coeff *= c;
    }
    return *this;
}

Rational SymmetricFunction::coefficient(const Partition& mu) const {
    auto it = terms_.find(mu);
    return it == terms_.end() ? Rational(0) : it->second;
}

int SymmetricFunction::max_weight() const {
    int w = 0;
    for (const auto& [mu, c] : terms_) {
        w = std::max(w, mu.weight());
    }
    return w;
}

bool SymmetricFunction::operator==(const SymmetricFunction& o) const {
    return basis_ == o.basis_ && terms_ == o.terms_;
}

std::string SymmetricFunction::to_string() const {
    if (terms_.empty()) {
        return "0";
    }
    std::ostringstream out;
    bool first = true;
    for (const auto& [mu, c] : terms_) {
        Rational mag = c < 0 ? Rational(-c) : c;
        if (first) {
            if (c < 0) {
                out << "-";
            }
            first = false;
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        if (mag != 1) {
            out << mag.str() << "*";
        }
        out << basis_name(basis_) << mu.to_string();
    }
    return out.str();
}

Partition merge_partitions(const Partition& a, const Partition& b) {
    std::vector<int> parts = a.parts();
    parts.insert(parts.end(), b.parts().begin(), b.parts().end());
    std::sort(parts.begin(), parts.end(), std::greater<int>());
    return Partition(std::move(parts));
}

SymmetricFunction multiply(const SymmetricFunction& a, const SymmetricFunction& b) {
    if (a.basis() != b.basis()) {
        throw std::logic_error("cannot multiply symmetric functions in different bases");
    }
    if (!is_multiplicative(a.basis())) {
        throw std::logic_error("product is only defined termwise in the h, e, p bases");
    }
    SymmetricFunction out(a.basis());
    for (const auto& [mu, ca] : a.terms()) {
        for (const auto& [nu, cb] : b.terms()) {
            out.add_term(merge_partitions(mu, nu), ca * cb);
        }
    }
    return out;
}

namespace {

// Border-strip recursion on beta-numbers: the shape with rows lambda_1..lambda_m
// is encoded as the strictly decreasing set {lambda_i + m - i}; removing a strip
// of length l moves one beta-number down by l onto an unoccupied value, and the
// strip height is the number of occupied values jumped over.
Integer mn_on_beta(std::vector<int>& beta, const std::vector<int>& cycles, size_t ci) {
    if (ci == cycles.size()) {
        return 1;  // equal weights guarantee the shape is exhausted here
    }
    int l = cycles[ci];
    Integer total = 0;
    for (size_t i = 0; i < beta.size(); ++i) {
        int target = beta[i] - l;
        if (target < 0) {
            continue;
        }
        bool occupied = false;
        int jumped = 0;
        for (size_t j = 0; j < beta.size(); ++j) {
            if (j == i) {
                continue;
            }
            if (beta[j] == target) {
                occupied = true;
                break;
            }
            if (beta[j] > target && beta[j] < beta[i]) {
                ++jumped;
            }
        }
        if (occupied) {
            continue;
        }
        std::vector<int> next = beta;
        next[i] = target;
        std::sort(next.begin(), next.end(), std::greater<int>());
        Integer sub = mn_on_beta(next, cycles, ci + 1);
        total += (jumped % 2 == 0) ? sub : -sub;
    }
    return total;
}

}  // namespace

Integer murnaghan_nakayama(const Partition& lambda, const CycleType& nu) {
    if (lambda.weight() != nu.weight()) {
        throw std::invalid_argument("murnaghan_nakayama: |lambda| != |nu|");
    }
    int m = std::max(lambda.length(), 1);
    std::vector<int> beta(static_cast<size_t>(m));
    for (int i = 0; i < m; ++i) {
        beta[static_cast<size_t>(i)] = lambda.part(i) + (m - 1 - i);
    }
    return mn_on_beta(beta, nu.parts(), 0);
}

CharacterTable::CharacterTable(int n) : n_(n) {
    if (n < 1) {
        throw std::invalid_argument("CharacterTable: n must be positive");
    }
    partitions_ = enumerate_partitions(n, n);
    for (size_t i = 0; i < partitions_.size(); ++i) {
        index_.emplace(partitions_[i], static_cast<int>(i));
    }
    Integer nfact = factorial(n);
    for (const Partition& nu : partitions_) {
        z_factors_.push_back(z_factor(nu));
        class_sizes_.push_back(nfact / z_factors_.back());
    }
    values_.resize(partitions_.size());
    for (size_t i = 0; i < partitions_.size(); ++i) {
        values_[i].reserve(partitions_.size());
        for (size_t j = 0; j < partitions_.size(); ++j) {
            values_[i].push_back(murnaghan_nakayama(partitions_[i], partitions_[j]));
        }
    }
}

int CharacterTable::index_of(const Partition& p) const {
    auto it = index_.find(p);
    if (it == index_.end()) {
        throw std::invalid_argument("CharacterTable: " + p.to_string() +
                                    " is not a partition of " + std::to_string(n_));
    }
    return it->second;
}

Integer CharacterTable::chi(const Partition& lambda, const CycleType& nu) const {
    return values_[static_cast<size_t>(index_of(lambda))][static_cast<size_t>(index_of(nu))];
}

Integer CharacterTable::class_size(const CycleType& nu) const {
    return class_sizes_[static_cast<size_t>(index_of(nu))];
}

Integer CharacterTable::z(const CycleType& nu) const {
    return z_factors_[static_cast<size_t>(index_of(nu))];
}

Integer CharacterTable::dimension(const Partition& lambda) const {
    return chi(lambda, Partition(std::vector<int>(static_cast<size_t>(n_), 1)));
}

SymmetricFunction schur_to_h(const Partition& lambda) {
    SymmetricFunction out(Basis::h);
    int l = lambda.length();
    for (const Permutation& sigma : all_permutations(l)) {
        std::vector<int> indices;
        bool vanishes = false;
        for (int i = 0; i < l; ++i) {
            int k = lambda.part(i) - i + sigma[static_cast<size_t>(i)];
            if (k < 0) {
                vanishes = true;
                break;
            }
            if (k > 0) {
                indices.push_back(k);
            }
        }
        if (vanishes) {
            continue;
        }
        std::sort(indices.begin(), indices.end(), std::greater<int>());
        out.add_term(Partition(std::move(indices)), Rational(permutation_sign(sigma)));
    }
    return out;
}

SymmetricFunction schur_to_p(const Partition& lambda) {
    SymmetricFunction out(Basis::p);
    int d = lambda.weight();
    for (const Partition& nu : enumerate_partitions(d, d)) {
        Integer chi = murnaghan_nakayama(lambda, nu);
        if (chi != 0) {
            out.add_term(nu, Rational(chi) / Rational(z_factor(nu)));
        }
    }
    return out;
}

namespace {

// h_k = sum over nu of p_nu / z_nu; e_k the same with sign (-1)^{k - l(nu)}.
SymmetricFunction one_part_to_p(int k, bool elementary) {
    SymmetricFunction out(Basis::p);
    for (const Partition& nu : enumerate_partitions(k, k)) {
        Rational c = Rational(1) / Rational(z_factor(nu));
        if (elementary && (k - nu.length()) % 2 != 0) {
            c = -c;
        }
        out.add_term(nu, c);
    }
    return out;
}

SymmetricFunction multiplicative_to_p(const SymmetricFunction& f, bool elementary) {
    SymmetricFunction out(Basis::p);
    for (const auto& [mu, c] : f.terms()) {
        SymmetricFunction acc = SymmetricFunction::basis_element(Basis::p, Partition(), c);
        for (int k : mu.parts()) {
            acc = multiply(acc, one_part_to_p(k, elementary));
        }
        out += acc;
    }
    return out;
}

// Coefficient of the monomial t_1^{lambda_1}...t_l^{lambda_l} in p_nu: the
// number of ways to assign each part of nu to a slot so that slot j receives
// total lambda_j. Memoized on the remaining-targets vector (the consumed
// prefix of nu is recoverable from its sum, since parts are positive).
Integer monomial_coefficient_of_p(const Partition& nu, const Partition& lambda) {
    const std::vector<int>& parts = nu.parts();
    std::map<std::vector<int>, Integer> memo;
    std::function<Integer(size_t, std::vector<int>&)> go =
        [&](size_t i, std::vector<int>& remaining) -> Integer {
        if (i == parts.size()) {
            return 1;  // equal weights force every slot to be exactly filled
        }
        auto it = memo.find(remaining);
        if (it != memo.end()) {
            return it->second;
        }
        Integer total = 0;
        for (size_t j = 0; j < remaining.size(); ++j) {
            if (remaining[j] >= parts[i]) {
                remaining[j] -= parts[i];
                total += go(i + 1, remaining);
                remaining[j] += parts[i];
            }
        }
        memo.emplace(remaining, total);
        return total;
    };
    std::vector<int> targets = lambda.parts();
    return go(0, targets);
}

// Gauss-Jordan inverse over exact rationals; the input is a change-of-basis
// matrix and is always invertible.
std::vector<std::vector<Rational>> invert_matrix(std::vector<std::vector<Rational>> a) {
    size_t m = a.size();
    std::vector<std::vector<Rational>> inv(m, std::vector<Rational>(m, 0));
    for (size_t i = 0; i < m; ++i) {
        inv[i][i] = 1;
    }
    for (size_t col = 0; col < m; ++col) {
        size_t pivot = col;
        while (pivot < m && a[pivot][col] == 0) {
            ++pivot;
        }
        if (pivot == m) {
            throw std::logic_error("invert_matrix: singular change-of-basis matrix");
        }
        std::swap(a[pivot], a[col]);
        std::swap(inv[pivot], inv[col]);
        Rational lead = a[col][col];
        for (size_t j = 0; j < m; ++j) {
            a[col][j] /= lead;
            inv[col][j] /= lead;
        }
        for (size_t row = 0; row < m; ++row) {
            if (row == col || a[row][col] == 0) {
                continue;
            }
            Rational factor = a[row][col];
            for (size_t j = 0; j < m; ++j) {
                a[row][j] -= factor * a[col][j];
                inv[row][j] -= factor * inv[col][j];
            }
        }
    }
    return inv;
}

SymmetricFunction monomial_to_p(const SymmetricFunction& f) {
    SymmetricFunction out(Basis::p);
    std::map<int, std::vector<std::pair<Partition, Rational>>> by_weight;
    for (const auto& [mu, c] : f.terms()) {
        by_weight[mu.weight()].emplace_back(mu, c);
    }
    for (const auto& [d, fterms] : by_weight) {
        std::vector<Partition> ps = enumerate_partitions(d, d);
        std::map<Partition, size_t> where;
        for (size_t i = 0; i < ps.size(); ++i) {
            where.emplace(ps[i], i);
        }
        // p_nu = sum_lambda A[nu][lambda] m_lambda, so m = A^{-1} p.
        std::vector<std::vector<Rational>> a(ps.size(), std::vector<Rational>(ps.size(), 0));
        for (size_t i = 0; i < ps.size(); ++i) {
            for (size_t j = 0; j < ps.size(); ++j) {
                a[i][j] = Rational(monomial_coefficient_of_p(ps[i], ps[j]));
            }
        }
        std::vector<std::vector<Rational>> b = invert_matrix(std::move(a));
        for (const auto& [mu, c] : fterms) {
            size_t j = where.at(mu);
            for (size_t i = 0; i < ps.size(); ++i) {
                out.add_term(ps[i], c * b[j][i]);
            }
        }
    }
    return out;
}

}  // namespace

SymmetricFunction to_p_basis(const SymmetricFunction& f) {
    switch (f.basis()) {
        case Basis::p:
            return f;
        case Basis::h:
            return multiplicative_to_p(f, false);
        case Basis::e:
            return multiplicative_to_p(f, true);
        case Basis::s: {
            SymmetricFunction out(Basis::p);
            for (const auto& [mu, c] : f.terms()) {
                SymmetricFunction expanded = schur_to_p(mu);
                expanded.scale(c);
                out += expanded;
            }
            return out;
        }
        case Basis::m:
            return monomial_to_p(f);
    }
    throw std::logic_error("to_p_basis: unknown basis");
}

namespace {

SparsePolynomial power_sum_poly(int k, int n_vars, std::optional<int> trunc) {
    SparsePolynomial out(n_vars, trunc);
    for (int i = 0; i < n_vars; ++i) {
        std::vector<int> c(static_cast<size_t>(n_vars), 0);
        c[static_cast<size_t>(i)] = k;
        out.add_term(ExponentVector(std::move(c)), 1);
    }
    return out;
}

SparsePolynomial complete_poly(int k, int n_vars, std::optional<int> trunc) {
    SparsePolynomial out(n_vars, trunc);
    if (trunc && k > *trunc) {
        return out;  // every term would be discarded
    }
    for (const ExponentVector& x : vectors_with_degree(n_vars, k)) {
        out.add_term(x, 1);
    }
    return out;
}

// Sum of t^alpha over the distinct rearrangements alpha of mu padded to
// n_vars slots; covers e_k as the special case mu = (1^k).
SparsePolynomial monomial_sym_poly(const Partition& mu, int n_vars,
                                   std::optional<int> trunc) {
    SparsePolynomial out(n_vars, trunc);
    if (mu.length() > n_vars) {
        return out;
    }
    std::vector<int> slots = mu.pad_to(n_vars).coords();
    std::sort(slots.begin(), slots.end());
    do {
        out.add_term(ExponentVector(slots), 1);
    } while (std::next_permutation(slots.begin(), slots.end()));
    return out;
}

SparsePolynomial expand_basis_element(Basis basis, const Partition& mu, int n_vars,
                                      std::optional<int> trunc) {
    switch (basis) {
        case Basis::m:
            return monomial_sym_poly(mu, n_vars, trunc);
        case Basis::s: {
            if (mu.length() > n_vars) {
                return SparsePolynomial(n_vars, trunc);
            }
            return expand_in_variables(schur_to_h(mu), n_vars, trunc);
        }
        case Basis::h:
        case Basis::e:
        case Basis::p: {
            SparsePolynomial acc = SparsePolynomial::constant(n_vars, 1, trunc);
            for (int k : mu.parts()) {
                SparsePolynomial factor =
                    basis == Basis::h   ? complete_poly(k, n_vars, trunc)
                    : basis == Basis::e ? monomial_sym_poly(Partition(std::vector<int>(
                                                                static_cast<size_t>(k), 1)),
                                                            n_vars, trunc)
                                        : power_sum_poly(k, n_vars, trunc);
                acc = multiply(acc, factor, trunc);
            }
            return acc;
        }
    }
    throw std::logic_error("expand_basis_element: unknown basis");
}

}  // namespace

SparsePolynomial expand_in_variables(const SymmetricFunction& f, int n_vars,
                                     std::optional<int> truncate_at) {
    SparsePolynomial out(n_vars, truncate_at);
    for (const auto& [mu, c] : f.terms()) {
        SparsePolynomial term = expand_basis_element(f.basis(), mu, n_vars, truncate_at);
        term.scale(c);
        out += term;
    }
    return out;
}

Integer power_sum_at_cycle_type(int k, const CycleType& rho) {
    if (k < 1) {
        throw std::invalid_argument("power_sum_at_cycle_type: k must be positive");
    }
    Integer total = 0;
    for (int part : rho.parts()) {
        if (k % part == 0) {
            total += part;
        }
    }
    return total;
}

SymmetricFunction frobenius_characteristic_of_permutation_module(const Partition& mu) {
    return SymmetricFunction::basis_element(Basis::h, mu);
}

Rational hall_inner_product(const SymmetricFunction& f, const SymmetricFunction& g) {
    SymmetricFunction a = to_p_basis(f);
    SymmetricFunction b = to_p_basis(g);
    Rational total = 0;
    for (const auto& [nu, ca] : a.terms()) {
        Rational cb = b.coefficient(nu);
        if (cb != 0) {
            total += ca * cb * Rational(z_factor(nu));
        }
    }
    return total;
}

Integer ClassFunction::value(const CycleType& rho) const {
    auto it = values.find(rho);
    if (it == values.end()) {
        throw std::invalid_argument("ClassFunction: no value stored for class " +
                                    rho.to_string());
    }
    return it->second;
}

ClassFunction& ClassFunction::operator+=(const ClassFunction& o) {
    if (o.n != n) {
        throw std::logic_error("cannot add class functions on different groups");
    }
    for (const auto& [rho, val] : o.values) {
        values[rho] += val;
    }
    return *this;
}

ClassFunction& ClassFunction::scale(const Integer& c) {
    for (auto& [rho, val] : values) {
        val *= c;
    }
    return *this;
}

ClassFunction trivial_class_function(int n) {
    ClassFunction v{n, {}};
    for (const auto& [rho, size] : enumerate_cycle_types(n)) {
        v.values.emplace(rho, 1);
    }
    return v;
}

ClassFunction sign_class_function(int n) {
    ClassFunction v{n, {}};
    for (const auto& [rho, size] : enumerate_cycle_types(n)) {
        v.values.emplace(rho, (n - rho.length()) % 2 == 0 ? 1 : -1);
    }
    return v;
}

ClassFunction irreducible_class_function(const Partition& mu) {
    int n = mu.weight();
    if (n < 1) {
        throw std::invalid_argument("irreducible_class_function: mu must be nonempty");
    }
    ClassFunction v{n, {}};
    for (const auto& [rho, size] : enumerate_cycle_types(n)) {
        v.values.emplace(rho, murnaghan_nakayama(mu, rho));
    }
    return v;
}

namespace {

// Number of ways to distribute the (distinguishable) cycles onto blocks with
// the given remaining capacities; every block is exactly filled at the end
// because the total cycle length equals the total capacity.
Integer count_cycle_assignments(const std::vector<int>& cycles, size_t i,
                                std::vector<int>& caps) {
    if (i == cycles.size()) {
        return 1;
    }
    Integer total = 0;
    for (size_t j = 0; j < caps.size(); ++j) {
        if (caps[j] >= cycles[i]) {
            caps[j] -= cycles[i];
            total += count_cycle_assignments(cycles, i + 1, caps);
            caps[j] += cycles[i];
        }
    }
    return total;
}

}  // namespace

ClassFunction permutation_module_class_function(const Partition& mu) {
    int n = mu.weight();
    if (n < 1) {
        throw std::invalid_argument("permutation_module_class_function: mu must be nonempty");
    }
    ClassFunction v{n, {}};
    for (const auto& [rho, size] : enumerate_cycle_types(n)) {
        // An ordered set partition of shape mu is fixed by w exactly when each
        // block is a union of w's cycles.
        std::vector<int> caps = mu.parts();
        v.values.emplace(rho, count_cycle_assignments(rho.parts(), 0, caps));
    }
    return v;
}

ClassFunction regular_class_function(int n) {
    ClassFunction v{n, {}};
    for (const auto& [rho, size] : enumerate_cycle_types(n)) {
        v.values.emplace(rho, rho.length() == n ? factorial(n) : Integer(0));
    }
    return v;
}

SymmetricFunction frobenius_characteristic(const ClassFunction& v) {
    SymmetricFunction out(Basis::p);
    for (const auto& [rho, val] : v.values) {
        if (val != 0) {
            out.add_term(rho, Rational(val) / Rational(z_factor(rho)));
        }
    }
    return out;
}

}  // namespace plethy
