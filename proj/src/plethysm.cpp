#include "plethy/plethysm.hpp"

#include <stdexcept>

namespace plethy {

MonomialSeries::MonomialSeries(int n_vars, int truncation_degree)
    : n_vars_(n_vars), truncation_degree_(truncation_degree) {
    if (n_vars < 1 || truncation_degree < 0) {
        throw std::invalid_argument("MonomialSeries: bad dimensions");
    }
}

void MonomialSeries::add_monomial(const ExponentVector& x, const Integer& multiplicity) {
    if (x.size() != n_vars_) {
        throw std::invalid_argument("MonomialSeries: monomial has wrong variable count");
    }
    if (!x.is_nonnegative()) {
        throw std::invalid_argument("MonomialSeries: negative exponent");
    }
    if (multiplicity <= 0) {
        throw std::invalid_argument("MonomialSeries: multiplicity must be positive");
    }
    if (x.total_degree() > truncation_degree_) {
        return;
    }
    terms_[x] += multiplicity;
}

MonomialSeries MonomialSeries::from_polynomial(const SparsePolynomial& p,
                                               int truncation_degree) {
    MonomialSeries g(p.n_vars(), truncation_degree);
    for (const auto& [x, c] : p.terms()) {
        Integer mult = require_integer(c, "MonomialSeries::from_polynomial");
        g.add_monomial(x, mult);
    }
    return g;
}

SparsePolynomial MonomialSeries::to_polynomial() const {
    SparsePolynomial p(n_vars_, truncation_degree_);
    for (const auto& [x, c] : terms_) {
        p.add_term(x, Rational(c));
    }
    return p;
}

MonomialSeries h_series(int n_vars, int d) {
    MonomialSeries g(n_vars, d);
    for (const ExponentVector& x : vectors_up_to_degree(n_vars, d)) {
        g.add_monomial(x);
    }
    return g;
}

MonomialSeries power_plethysm(int k, const MonomialSeries& g) {
    if (k < 1) {
        throw std::invalid_argument("power_plethysm: k must be positive");
    }
    MonomialSeries out(g.n_vars(), g.truncation_degree());
    for (const auto& [x, c] : g.terms()) {
        ExponentVector scaled = x.scaled(k);
        if (scaled.total_degree() <= g.truncation_degree()) {
            out.add_monomial(scaled, c);
        }
    }
    return out;
}

std::vector<SparsePolynomial> complete_plethysm_slices(const MonomialSeries& g, int k,
                                                       int d, bool elementary) {
    if (k < 0 || d < 0) {
        throw std::invalid_argument("complete_plethysm_slices: bad bounds");
    }
    // Coefficients of u^0..u^k in prod over monomials t^x of (1 -+ t^x u)^{-+1},
    // every t-degree above d discarded. A monomial of multiplicity c carries
    // the factor (1 - t^x u)^{-c} (binomial weight C(c+r-1, r) for u^r), or
    // (1 + t^x u)^c (weight C(c, r)).
    std::vector<SparsePolynomial> acc;
    acc.reserve(static_cast<size_t>(k) + 1);
    acc.push_back(SparsePolynomial::constant(g.n_vars(), 1, d));
    for (int j = 1; j <= k; ++j) {
        acc.emplace_back(g.n_vars(), d);
    }
    for (const auto& [x, c] : g.terms()) {
        int xd = x.total_degree();
        std::vector<SparsePolynomial> next = acc;
        for (int r = 1; r <= k; ++r) {
            if (xd > 0 && r * xd > d) {
                break;  // t^{rx} already out of range, and r only grows
            }
            Integer weight = elementary ? binomial(c, r) : binomial(c + r - 1, r);
            if (weight == 0) {
                break;  // C(c, r) stays zero for larger r as well
            }
            SparsePolynomial shift =
                SparsePolynomial::monomial(x.scaled(r), Rational(weight), d);
            for (int j = r; j <= k; ++j) {
                next[static_cast<size_t>(j)] +=
                    multiply(acc[static_cast<size_t>(j - r)], shift, d);
            }
        }
        acc = std::move(next);
    }
    return acc;
}

namespace {

/// Integer-coefficient h-basis rewrite for h, e and s input (the bases whose
/// plethysms stay integral); e_k goes through its column-shape Schur form.
SymmetricFunction to_h_basis(const SymmetricFunction& f) {
    switch (f.basis()) {
        case Basis::h:
            return f;
        case Basis::s: {
            SymmetricFunction out(Basis::h);
            for (const auto& [mu, c] : f.terms()) {
                SymmetricFunction jt = schur_to_h(mu);
                jt.scale(c);
                out += jt;
            }
            return out;
        }
        case Basis::e: {
            SymmetricFunction out(Basis::h);
            for (const auto& [mu, c] : f.terms()) {
                SymmetricFunction acc =
                    SymmetricFunction::basis_element(Basis::h, Partition(), c);
                for (int part : mu.parts()) {
                    acc = multiply(acc, schur_to_h(Partition(std::vector<int>(
                                            static_cast<size_t>(part), 1))));
                }
                out += acc;
            }
            return out;
        }
        case Basis::p:
        case Basis::m:
            throw std::invalid_argument(
                "convolution route needs an h-, e- or s-basis input");
    }
    throw std::logic_error("to_h_basis: unknown basis");
}

SparsePolynomial plethysm_power_sum_route(const SymmetricFunction& f,
                                          const MonomialSeries& g, int d) {
    SymmetricFunction in_p = to_p_basis(f);
    SparsePolynomial out(g.n_vars(), d);
    for (const auto& [nu, c] : in_p.terms()) {
        SparsePolynomial term = SparsePolynomial::constant(g.n_vars(), c, d);
        for (int part : nu.parts()) {
            term = multiply(term, power_plethysm(part, g).to_polynomial(), d);
        }
        out += term;
    }
    return out;
}

SparsePolynomial plethysm_convolution_route(const SymmetricFunction& f,
                                            const MonomialSeries& g, int d) {
    SymmetricFunction in_h = to_h_basis(f);
    int max_part = 0;
    for (const auto& [mu, c] : in_h.terms()) {
        max_part = std::max(max_part, mu.part(0));
    }
    std::vector<SparsePolynomial> slices = complete_plethysm_slices(g, max_part, d, false);
    SparsePolynomial out(g.n_vars(), d);
    for (const auto& [mu, c] : in_h.terms()) {
        SparsePolynomial term = SparsePolynomial::constant(g.n_vars(), c, d);
        for (int part : mu.parts()) {
            term = multiply(term, slices[static_cast<size_t>(part)], d);
        }
        out += term;
    }
    return out;
}

}  // namespace

SparsePolynomial plethysm_into_series(const SymmetricFunction& f, const MonomialSeries& g,
                                      int d, PlethysmRoute route) {
    if (d < 0) {
        throw std::invalid_argument("plethysm_into_series: negative degree bound");
    }
    if (d > g.truncation_degree()) {
        throw std::invalid_argument(
            "plethysm_into_series: degree bound exceeds the series truncation");
    }
    SparsePolynomial out = route == PlethysmRoute::power_sum
                               ? plethysm_power_sum_route(f, g, d)
                               : plethysm_convolution_route(f, g, d);
    bool integral_input = (f.basis() == Basis::h || f.basis() == Basis::e ||
                           f.basis() == Basis::s);
    if (integral_input) {
        for (const auto& [mu, c] : f.terms()) {
            if (!is_integer(c)) {
                integral_input = false;
                break;
            }
        }
    }
    if (integral_input && !out.has_integer_coefficients()) {
        throw std::logic_error(
            "plethysm_into_series: integral input produced a non-integer "
            "coefficient; arithmetic bug");
    }
    return out;
}

}  // namespace plethy
