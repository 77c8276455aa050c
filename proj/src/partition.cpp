#include "plethy/partition.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace plethy {

ExponentVector::ExponentVector(std::vector<int> coords) : coords_(std::move(coords)) {
    for (int c : coords_) {
        if (c < 0) {
            throw std::invalid_argument(
                "ExponentVector: negative coordinate; use signed_lattice for "
                "lattice vectors");
        }
    }
}

ExponentVector ExponentVector::signed_lattice(std::vector<int> coords) {
    ExponentVector v;
    v.coords_ = std::move(coords);
    return v;
}

int ExponentVector::total_degree() const {
    return std::accumulate(coords_.begin(), coords_.end(), 0);
}

bool ExponentVector::is_nonnegative() const {
    return std::all_of(coords_.begin(), coords_.end(), [](int c) { return c >= 0; });
}

bool ExponentVector::is_zero() const {
    return std::all_of(coords_.begin(), coords_.end(), [](int c) { return c == 0; });
}

ExponentVector ExponentVector::operator+(const ExponentVector& o) const {
    if (size() != o.size()) throw std::invalid_argument("ExponentVector: size mismatch");
    std::vector<int> c(coords_);
    for (size_t i = 0; i < c.size(); ++i) c[i] += o.coords_[i];
    return signed_lattice(std::move(c));
}

ExponentVector ExponentVector::operator-(const ExponentVector& o) const {
    if (size() != o.size()) throw std::invalid_argument("ExponentVector: size mismatch");
    std::vector<int> c(coords_);
    for (size_t i = 0; i < c.size(); ++i) c[i] -= o.coords_[i];
    return signed_lattice(std::move(c));
}

ExponentVector ExponentVector::scaled(int k) const {
    std::vector<int> c(coords_);
    for (int& v : c) v *= k;
    return signed_lattice(std::move(c));
}

std::string ExponentVector::to_string() const {
    std::ostringstream os;
    os << '(';
    for (size_t i = 0; i < coords_.size(); ++i) {
        if (i) os << ',';
        os << coords_[i];
    }
    os << ')';
    return os.str();
}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0) throw std::invalid_argument("Partition: parts must be positive");
        if (i + 1 < parts_.size() && parts_[i] < parts_[i + 1]) {
            throw std::invalid_argument("Partition: parts must be weakly decreasing");
        }
    }
}

int Partition::weight() const {
    return std::accumulate(parts_.begin(), parts_.end(), 0);
}

int Partition::part(int i) const {
    return (i >= 0 && i < length()) ? parts_[static_cast<size_t>(i)] : 0;
}

ExponentVector Partition::pad_to(int n) const {
    if (n < length()) throw std::invalid_argument("Partition::pad_to: n below length");
    std::vector<int> c(parts_);
    c.resize(static_cast<size_t>(n), 0);
    return ExponentVector(std::move(c));
}

Partition Partition::conjugate() const {
    std::vector<int> cols;
    for (int c = 0; c < part(0); ++c) {
        int count = 0;
        for (int p : parts_) count += (p > c) ? 1 : 0;
        cols.push_back(count);
    }
    return Partition(std::move(cols));
}

std::string Partition::to_string() const {
    std::ostringstream os;
    os << '(';
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i) os << ',';
        os << parts_[i];
    }
    os << ')';
    return os.str();
}

namespace {

void descend_partitions(int remaining, int max_part, int parts_left,
                        std::vector<int>& acc, std::vector<Partition>& out) {
    if (remaining == 0) {
        out.emplace_back(acc);
        return;
    }
    if (parts_left == 0) return;
    // Largest first part first gives reverse-lexicographic output order.
    int hi = std::min(remaining, max_part);
    // Feasibility: parts_left parts of size <= p must reach remaining.
    for (int p = hi; p >= 1; --p) {
        if (static_cast<long long>(p) * parts_left < remaining) break;
        acc.push_back(p);
        descend_partitions(remaining - p, p, parts_left - 1, acc, out);
        acc.pop_back();
    }
}

}  // namespace

std::vector<Partition> enumerate_partitions(int d, int max_parts) {
    if (d < 0 || max_parts < 0) throw std::invalid_argument("enumerate_partitions: negative input");
    std::vector<Partition> out;
    std::vector<int> acc;
    descend_partitions(d, d, max_parts, acc, out);
    return out;
}

Integer z_factor(const CycleType& nu) {
    std::map<int, int> mult;
    for (int p : nu.parts()) ++mult[p];
    Integer z = 1;
    for (auto [part, m] : mult) {
        for (int i = 0; i < m; ++i) z *= part;
        z *= factorial(m);
    }
    return z;
}

std::vector<std::pair<CycleType, Integer>> enumerate_cycle_types(int n) {
    if (n < 1) throw std::invalid_argument("enumerate_cycle_types: n must be positive");
    std::vector<std::pair<CycleType, Integer>> out;
    Integer nfact = factorial(n);
    for (const Partition& nu : enumerate_partitions(n, n)) {
        out.emplace_back(nu, nfact / z_factor(nu));
    }
    return out;
}

ExponentVector staircase(int n) {
    std::vector<int> c(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) c[static_cast<size_t>(i)] = n - 1 - i;
    return ExponentVector(std::move(c));
}

ExponentVector staircase_action(const Permutation& w) {
    int n = static_cast<int>(w.size());
    std::vector<int> seen(w.size(), 0);
    for (int img : w) {
        if (img < 0 || img >= n || seen[static_cast<size_t>(img)]++) {
            throw std::invalid_argument("staircase_action: not a permutation");
        }
    }
    std::vector<int> c(w.size());
    for (int i = 0; i < n; ++i) c[static_cast<size_t>(i)] = n - 1 - w[static_cast<size_t>(i)];
    return ExponentVector(std::move(c));
}

std::vector<Permutation> all_permutations(int n) {
    Permutation w(static_cast<size_t>(n));
    std::iota(w.begin(), w.end(), 0);
    std::vector<Permutation> out;
    do {
        out.push_back(w);
    } while (std::next_permutation(w.begin(), w.end()));
    return out;
}

int permutation_sign(const Permutation& w) {
    int inversions = 0;
    for (size_t i = 0; i < w.size(); ++i) {
        for (size_t j = i + 1; j < w.size(); ++j) {
            inversions += (w[i] > w[j]) ? 1 : 0;
        }
    }
    return (inversions % 2 == 0) ? 1 : -1;
}

namespace {

void descend_vectors(int n, int pos, int remaining, bool exact,
                     std::vector<int>& acc, std::vector<ExponentVector>& out) {
    if (pos == n) {
        if (!exact || remaining == 0) out.push_back(ExponentVector(acc));
        return;
    }
    if (pos == n - 1 && exact) {
        acc[static_cast<size_t>(pos)] = remaining;
        out.push_back(ExponentVector(acc));
        acc[static_cast<size_t>(pos)] = 0;
        return;
    }
    for (int v = 0; v <= remaining; ++v) {
        acc[static_cast<size_t>(pos)] = v;
        descend_vectors(n, pos + 1, remaining - v, exact, acc, out);
    }
    acc[static_cast<size_t>(pos)] = 0;
}

}  // namespace

std::vector<ExponentVector> vectors_with_degree(int n, int d) {
    if (n < 1 || d < 0) throw std::invalid_argument("vectors_with_degree: bad arguments");
    std::vector<ExponentVector> out;
    std::vector<int> acc(static_cast<size_t>(n), 0);
    descend_vectors(n, 0, d, true, acc, out);
    return out;
}

std::vector<ExponentVector> vectors_up_to_degree(int n, int d) {
    if (n < 1 || d < 0) throw std::invalid_argument("vectors_up_to_degree: bad arguments");
    std::vector<ExponentVector> out;
    std::vector<int> acc(static_cast<size_t>(n), 0);
    descend_vectors(n, 0, d, false, acc, out);
    return out;
}

}  // namespace plethy
