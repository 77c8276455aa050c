#include "plethy/vecpart.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace plethy {

VectorPartitionTable::VectorPartitionTable(int n_vars, int max_degree, int max_parts,
                                           std::optional<std::size_t> memory_cap_bytes)
    : n_vars_(n_vars), max_degree_(max_degree), max_parts_(max_parts) {
    if (n_vars < 1 || max_degree < 0 || max_parts < 0) {
        throw std::invalid_argument("VectorPartitionTable: bad dimensions");
    }
    if (memory_cap_bytes) {
        // Two tables of (max_parts+1) big integers per lattice point.
        Integer points = binomial(Integer(n_vars + max_degree), n_vars);
        Integer estimate = points * (max_parts + 1) * 2 * 48;
        if (estimate > Integer(*memory_cap_bytes)) {
            throw resource_cap_error(
                "vector partition table over N^" + std::to_string(n_vars) +
                " up to degree " + std::to_string(max_degree) + " needs about " +
                estimate.str() + " bytes, above the cap of " +
                std::to_string(*memory_cap_bytes));
        }
    }

    vectors_ = vectors_up_to_degree(n_vars, max_degree);
    for (size_t i = 0; i < vectors_.size(); ++i) {
        index_.emplace(vectors_[i], static_cast<int>(i));
    }
    size_t width = static_cast<size_t>(max_parts) + 1;
    exact_.assign(vectors_.size(), std::vector<Integer>(width, 0));
    distinct_.assign(vectors_.size(), std::vector<Integer>(width, 0));
    int zero = index_.at(ExponentVector(std::vector<int>(static_cast<size_t>(n_vars), 0)));
    exact_[static_cast<size_t>(zero)][0] = 1;
    distinct_[static_cast<size_t>(zero)][0] = 1;

    // Lattice points ordered by total degree. Per candidate part we walk
    // sources and push into source+part, so the unbounded update must see
    // already-updated sources (ascending degree) and the zero-one update
    // untouched ones (descending degree).
    std::vector<int> by_degree(vectors_.size());
    std::iota(by_degree.begin(), by_degree.end(), 0);
    std::stable_sort(by_degree.begin(), by_degree.end(), [&](int a, int b) {
        return vectors_[static_cast<size_t>(a)].total_degree() <
               vectors_[static_cast<size_t>(b)].total_degree();
    });
    std::vector<int> degree_of(by_degree.size());
    for (size_t r = 0; r < by_degree.size(); ++r) {
        degree_of[r] = vectors_[static_cast<size_t>(by_degree[r])].total_degree();
    }

    for (const ExponentVector& part : vectors_) {
        int pd = part.total_degree();
        if (pd == 0) {
            continue;  // parts are nonzero vectors
        }
        // Only sources fitting the degree budget can produce a table entry.
        size_t end = static_cast<size_t>(
            std::upper_bound(degree_of.begin(), degree_of.end(), max_degree_ - pd) -
            degree_of.begin());
        // Repetition allowed: entry[src + part][j] += entry[src][j - 1] with
        // the source already reflecting this part.
        for (size_t r = 0; r < end; ++r) {
            size_t si = static_cast<size_t>(by_degree[r]);
            size_t di = static_cast<size_t>(index_.at(vectors_[si] + part));
            const std::vector<Integer>& from = exact_[si];
            std::vector<Integer>& into = exact_[di];
            for (int j = max_parts_; j >= 1; --j) {
                into[static_cast<size_t>(j)] += from[static_cast<size_t>(j - 1)];
            }
        }
        // At most once: the source must not yet include this part, hence the
        // descending order.
        for (size_t r = end; r-- > 0;) {
            size_t si = static_cast<size_t>(by_degree[r]);
            size_t di = static_cast<size_t>(index_.at(vectors_[si] + part));
            const std::vector<Integer>& from = distinct_[si];
            std::vector<Integer>& into = distinct_[di];
            for (int j = max_parts_; j >= 1; --j) {
                into[static_cast<size_t>(j)] += from[static_cast<size_t>(j - 1)];
            }
        }
    }
}

int VectorPartitionTable::lookup(const ExponentVector& x) const {
    if (x.size() != n_vars_) {
        throw std::invalid_argument("VectorPartitionTable: vector has wrong length");
    }
    if (!x.is_nonnegative()) {
        return -1;
    }
    if (x.total_degree() > max_degree_) {
        throw std::invalid_argument("VectorPartitionTable: |x| exceeds table degree " +
                                    std::to_string(max_degree_));
    }
    return index_.at(x);
}

Integer VectorPartitionTable::count_pk(const ExponentVector& x, int k) const {
    if (k < 0) {
        return 0;
    }
    if (k > max_parts_) {
        throw std::invalid_argument("VectorPartitionTable: parts bound exceeds table");
    }
    int i = lookup(x);
    if (i < 0) {
        return 0;
    }
    Integer total = 0;
    for (int j = 0; j <= k; ++j) {
        total += exact_[static_cast<size_t>(i)][static_cast<size_t>(j)];
    }
    return total;
}

Integer VectorPartitionTable::count_qk(const ExponentVector& x, int k) const {
    if (k < 0) {
        return 0;
    }
    if (k > max_parts_) {
        throw std::invalid_argument("VectorPartitionTable: parts bound exceeds table");
    }
    int i = lookup(x);
    if (i < 0) {
        return 0;
    }
    const std::vector<Integer>& row = distinct_[static_cast<size_t>(i)];
    Integer total = row[static_cast<size_t>(k)];
    if (k >= 1) {
        total += row[static_cast<size_t>(k - 1)];
    }
    return total;
}

Integer VectorPartitionTable::exact_parts(const ExponentVector& x, int j) const {
    if (j < 0 || j > max_parts_) {
        return 0;
    }
    int i = lookup(x);
    return i < 0 ? Integer(0) : exact_[static_cast<size_t>(i)][static_cast<size_t>(j)];
}

Integer VectorPartitionTable::exact_distinct_parts(const ExponentVector& x, int j) const {
    if (j < 0 || j > max_parts_) {
        return 0;
    }
    int i = lookup(x);
    return i < 0 ? Integer(0) : distinct_[static_cast<size_t>(i)][static_cast<size_t>(j)];
}

Integer count_pk(const ExponentVector& x, int k) {
    if (x.size() == 0) {
        return k >= 0 ? 1 : 0;  // the empty vector has only the empty partition
    }
    if (!x.is_nonnegative()) {
        return 0;
    }
    VectorPartitionTable table(x.size(), x.total_degree(), std::max(k, 0));
    return table.count_pk(x, k);
}

Integer count_qk(const ExponentVector& x, int k) {
    if (x.size() == 0) {
        return (k == 0 || k == 1) ? 1 : 0;
    }
    if (!x.is_nonnegative()) {
        return 0;
    }
    VectorPartitionTable table(x.size(), x.total_degree(), std::max(k, 0));
    return table.count_qk(x, k);
}

namespace {

bool componentwise_leq(const ExponentVector& a, const ExponentVector& b) {
    for (int i = 0; i < a.size(); ++i) {
        if (a[i] > b[i]) {
            return false;
        }
    }
    return true;
}

void descend_vector_partitions(const ExponentVector& remaining,
                               const std::vector<ExponentVector>& candidates,
                               size_t min_index, bool distinct,
                               std::vector<ExponentVector>& current,
                               std::vector<std::vector<ExponentVector>>& out) {
    if (remaining.is_zero()) {
        out.push_back(current);
        return;
    }
    for (size_t i = min_index; i < candidates.size(); ++i) {
        const ExponentVector& part = candidates[i];
        if (!componentwise_leq(part, remaining)) {
            continue;
        }
        current.push_back(part);
        descend_vector_partitions(remaining - part, candidates, distinct ? i + 1 : i,
                                  distinct, current, out);
        current.pop_back();
    }
}

}  // namespace

std::vector<std::vector<ExponentVector>> enumerate_vector_partitions(
    const ExponentVector& x, bool distinct) {
    std::vector<std::vector<ExponentVector>> out;
    if (!x.is_nonnegative()) {
        return out;
    }
    if (x.size() == 0 || x.is_zero()) {
        out.push_back({});
        return out;
    }
    // Any part of any partition of x is componentwise at most x.
    std::vector<ExponentVector> candidates;
    for (const ExponentVector& y : vectors_up_to_degree(x.size(), x.total_degree())) {
        if (!y.is_zero() && componentwise_leq(y, x)) {
            candidates.push_back(y);
        }
    }
    std::vector<ExponentVector> current;
    descend_vector_partitions(x, candidates, 0, distinct, current, out);
    return out;
}

}  // namespace plethy
