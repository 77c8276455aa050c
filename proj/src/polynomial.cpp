#include "plethy/polynomial.hpp"

#include <sstream>
#include <stdexcept>

namespace plethy {

SparsePolynomial::SparsePolynomial(int n_vars, std::optional<int> truncation_degree)
    : n_vars_(n_vars), truncation_degree_(truncation_degree) {
    if (n_vars < 0) {
        throw std::logic_error("polynomial needs a nonnegative variable count");
    }
    if (truncation_degree_ && *truncation_degree_ < 0) {
        throw std::logic_error("truncation degree must be nonnegative");
    }
}

SparsePolynomial SparsePolynomial::constant(int n_vars, const Rational& c,
                                            std::optional<int> truncation_degree) {
    SparsePolynomial p(n_vars, truncation_degree);
    p.add_term(ExponentVector(std::vector<int>(n_vars, 0)), c);
    return p;
}

SparsePolynomial SparsePolynomial::monomial(const ExponentVector& x, const Rational& c,
                                            std::optional<int> truncation_degree) {
    SparsePolynomial p(x.size(), truncation_degree);
    p.add_term(x, c);
    return p;
}

void SparsePolynomial::add_term(const ExponentVector& x, const Rational& c) {
    if (x.size() != n_vars_) {
        throw std::logic_error("term has wrong number of variables");
    }
    if (!x.is_nonnegative()) {
        throw std::logic_error("term has a negative exponent");
    }
    if (c == 0) {
        return;
    }
    if (truncation_degree_ && x.total_degree() > *truncation_degree_) {
        return;
    }
    auto it = terms_.find(x);
    if (it == terms_.end()) {
        terms_.emplace(x, c);
    } else {
        it->second += c;
        if (it->second == 0) {
            terms_.erase(it);
        }
    }
}

SparsePolynomial& SparsePolynomial::operator+=(const SparsePolynomial& o) {
    if (o.n_vars_ != n_vars_) {
        throw std::logic_error("cannot add polynomials in different variable counts");
    }
    for (const auto& [x, c] : o.terms_) {
        add_term(x, c);
    }
    return *this;
}

SparsePolynomial& SparsePolynomial::operator-=(const SparsePolynomial& o) {
    if (o.n_vars_ != n_vars_) {
        throw std::logic_error("cannot subtract polynomials in different variable counts");
    }
    for (const auto& [x, c] : o.terms_) {
        add_term(x, -c);
    }
    return *this;
}

SparsePolynomial SparsePolynomial::operator+(const SparsePolynomial& o) const {
    SparsePolynomial r = *this;
    r += o;
    return r;
}

SparsePolynomial SparsePolynomial::operator-(const SparsePolynomial& o) const {
    SparsePolynomial r = *this;
    r -= o;
    return r;
}

SparsePolynomial& SparsePolynomial::scale(const Rational& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [x, coeff] : terms_) {
        coeff *= c;
    }
    return *this;
}

bool SparsePolynomial::operator==(const SparsePolynomial& o) const {
    return n_vars_ == o.n_vars_ && terms_ == o.terms_;
}

Rational SparsePolynomial::coefficient(const ExponentVector& x) const {
    auto it = terms_.find(x);
    return it == terms_.end() ? Rational(0) : it->second;
}

std::optional<int> SparsePolynomial::homogeneous_degree() const {
    std::optional<int> d;
    for (const auto& [x, c] : terms_) {
        int xd = x.total_degree();
        if (!d) {
            d = xd;
        } else if (*d != xd) {
            return std::nullopt;
        }
    }
    return d;
}

bool SparsePolynomial::has_integer_coefficients() const {
    for (const auto& [x, c] : terms_) {
        if (!is_integer(c)) {
            return false;
        }
    }
    return true;
}

SparsePolynomial SparsePolynomial::degree_slice(int d) const {
    SparsePolynomial r(n_vars_, truncation_degree_);
    for (const auto& [x, c] : terms_) {
        if (x.total_degree() == d) {
            r.add_term(x, c);
        }
    }
    return r;
}

SparsePolynomial SparsePolynomial::truncated(int degree) const {
    int bound = truncation_degree_ ? std::min(*truncation_degree_, degree) : degree;
    SparsePolynomial r(n_vars_, bound);
    for (const auto& [x, c] : terms_) {
        r.add_term(x, c);
    }
    return r;
}

SparsePolynomial SparsePolynomial::untruncated() const {
    SparsePolynomial r(n_vars_);
    for (const auto& [x, c] : terms_) {
        r.add_term(x, c);
    }
    return r;
}

std::string SparsePolynomial::to_string() const {
    if (terms_.empty()) {
        return "0";
    }
    std::ostringstream out;
    bool first = true;
    for (const auto& [x, c] : terms_) {
        Rational mag = c < 0 ? Rational(-c) : c;
        if (first) {
            if (c < 0) {
                out << "-";
            }
            first = false;
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        bool is_const = x.is_zero();
        if (mag != 1 || is_const) {
            out << mag.str();
            if (!is_const) {
                out << "*";
            }
        }
        bool first_var = true;
        for (int i = 0; i < x.size(); ++i) {
            if (x[i] == 0) {
                continue;
            }
            if (!first_var) {
                out << "*";
            }
            first_var = false;
            out << "t" << (i + 1);
            if (x[i] > 1) {
                out << "^" << x[i];
            }
        }
    }
    return out.str();
}

SparsePolynomial multiply(const SparsePolynomial& a, const SparsePolynomial& b,
                          std::optional<int> truncate_at) {
    if (a.n_vars() != b.n_vars()) {
        throw std::logic_error("cannot multiply polynomials in different variable counts");
    }
    std::optional<int> bound = truncate_at;
    for (std::optional<int> ob : {a.truncation_degree(), b.truncation_degree()}) {
        if (ob) {
            bound = bound ? std::min(*bound, *ob) : ob;
        }
    }
    SparsePolynomial r(a.n_vars(), bound);
    for (const auto& [xa, ca] : a.terms()) {
        if (bound && xa.total_degree() > *bound) {
            continue;
        }
        for (const auto& [xb, cb] : b.terms()) {
            if (bound && xa.total_degree() + xb.total_degree() > *bound) {
                // terms() is ordered lexicographically, not by degree, so
                // later xb may still fit; just skip this pair.
                continue;
            }
            r.add_term(xa + xb, ca * cb);
        }
    }
    return r;
}

AlternantPolynomial vandermonde_alternant(int n) {
    AlternantPolynomial a(n);
    for (const Permutation& w : all_permutations(n)) {
        a.add_term(staircase_action(w), Rational(permutation_sign(w)));
    }
    return a;
}

Rational coefficient_of(const SparsePolynomial& p, const ExponentVector& x) {
    return p.coefficient(x);
}

Rational evaluate_all_ones(const SparsePolynomial& p) {
    Rational total = 0;
    for (const auto& [x, c] : p.terms()) {
        total += c;
    }
    return total;
}

}  // namespace plethy
