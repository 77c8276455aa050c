#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "plethy/induction.hpp"
#include "plethy/numeric.hpp"
#include "plethy/partition.hpp"
#include "plethy/plethysm.hpp"
#include "plethy/polynomial.hpp"
#include "plethy/restriction.hpp"
#include "plethy/symfn.hpp"
#include "plethy/vecpart.hpp"

namespace py = pybind11;

namespace {

using plethy::ExponentVector;
using plethy::Integer;
using plethy::Partition;
using plethy::Rational;

py::int_ to_py_int(const Integer& v) {
    std::string text = v.str();
    PyObject* obj = PyLong_FromString(text.c_str(), nullptr, 10);
    if (!obj) throw py::error_already_set();
    return py::reinterpret_steal<py::int_>(obj);
}

py::object to_py_number(const Rational& v) {
    if (plethy::is_integer(v)) return to_py_int(numerator(v));
    py::object fraction = py::module_::import("fractions").attr("Fraction");
    return fraction(to_py_int(numerator(v)), to_py_int(denominator(v)));
}

py::tuple partition_tuple(const Partition& p) {
    py::tuple t(p.length());
    for (int i = 0; i < p.length(); ++i) t[i] = p.parts()[static_cast<size_t>(i)];
    return t;
}

py::tuple coords_tuple(const ExponentVector& x) {
    py::tuple t(x.size());
    for (int i = 0; i < x.size(); ++i) t[i] = x[i];
    return t;
}

py::dict polynomial_dict(const plethy::SparsePolynomial& poly) {
    py::dict out;
    for (const auto& [x, c] : poly.terms()) out[coords_tuple(x)] = to_py_number(c);
    return out;
}

plethy::Basis parse_basis(const std::string& name) {
    if (name == "h") return plethy::Basis::h;
    if (name == "e") return plethy::Basis::e;
    if (name == "p") return plethy::Basis::p;
    if (name == "m") return plethy::Basis::m;
    if (name == "s") return plethy::Basis::s;
    throw std::invalid_argument("unknown basis '" + name + "' (expected h, e, p, m or s)");
}

plethy::PlethysmRoute parse_route(const std::string& name) {
    if (name == "power-sum" || name == "power_sum") return plethy::PlethysmRoute::power_sum;
    if (name == "convolution") return plethy::PlethysmRoute::convolution;
    throw std::invalid_argument("unknown plethysm route '" + name + "'");
}

}  // namespace

PYBIND11_MODULE(_plethy, m) {
    m.doc() = "Exact restriction coefficients of polynomial GL_n representations to S_n";

    m.def(
        "enumerate_partitions",
        [](int d, int max_parts) {
            py::list out;
            for (const Partition& p : plethy::enumerate_partitions(d, max_parts)) {
                out.append(partition_tuple(p));
            }
            return out;
        },
        py::arg("d"), py::arg("max_parts"),
        "All partitions of d with at most max_parts parts, reverse-lexicographic.");

    m.def(
        "count_pk",
        [](const std::vector<int>& x, int k) {
            return to_py_int(plethy::count_pk(ExponentVector::signed_lattice(x), k));
        },
        py::arg("x"), py::arg("k"),
        "Partitions of the vector x into at most k nonzero parts (0 if any coordinate is "
        "negative).");

    m.def(
        "count_qk",
        [](const std::vector<int>& x, int k) {
            return to_py_int(plethy::count_qk(ExponentVector::signed_lattice(x), k));
        },
        py::arg("x"), py::arg("k"),
        "Partitions of the vector x into exactly k or k-1 pairwise distinct parts.");

    m.def(
        "enumerate_vector_partitions",
        [](const std::vector<int>& x, bool distinct) {
            py::list out;
            for (const auto& parts :
                 plethy::enumerate_vector_partitions(ExponentVector::signed_lattice(x), distinct)) {
                py::list one;
                for (const ExponentVector& part : parts) one.append(coords_tuple(part));
                out.append(one);
            }
            return out;
        },
        py::arg("x"), py::arg("distinct") = false,
        "Every multiset (or, with distinct=True, set) of nonzero vectors summing to x.");

    m.def(
        "murnaghan_nakayama",
        [](const std::vector<int>& lambda, const std::vector<int>& nu) {
            return to_py_int(plethy::murnaghan_nakayama(Partition(lambda), Partition(nu)));
        },
        py::arg("lambda_"), py::arg("nu"),
        "Irreducible S_n character value chi^lambda(nu) by border-strip recursion.");

    m.def(
        "littlewood_restriction",
        [](const std::vector<int>& lambda, const std::vector<int>& mu) {
            return to_py_int(plethy::littlewood_restriction(Partition(lambda), Partition(mu)));
        },
        py::arg("lambda_"), py::arg("mu"),
        "r_{lambda,mu} = <s_lambda, s_mu[H]> via the plethystic route.");

    m.def(
        "corollary_trivial_multiplicity",
        [](const std::vector<int>& lambda, int n) {
            return to_py_int(plethy::corollary_trivial_multiplicity(Partition(lambda), n));
        },
        py::arg("lambda_"), py::arg("n"),
        "Multiplicity of the trivial representation via the staircase alternating sum.");

    m.def(
        "corollary_sign_multiplicity",
        [](const std::vector<int>& lambda, int n) {
            return to_py_int(plethy::corollary_sign_multiplicity(Partition(lambda), n));
        },
        py::arg("lambda_"), py::arg("n"),
        "Multiplicity of the sign representation via the staircase alternating sum.");

    m.def(
        "brute_force_restriction",
        [](const std::vector<int>& lambda, int n) {
            py::dict out;
            for (const auto& [mu, r] : plethy::brute_force_restriction(Partition(lambda), n)) {
                out[partition_tuple(mu)] = to_py_int(r);
            }
            return out;
        },
        py::arg("lambda_"), py::arg("n"),
        "Full decomposition {mu: multiplicity} by character averaging over S_n.");

    m.def(
        "restriction_table",
        [](int n, int d, const std::string& route) {
            plethy::RestrictionRoute r;
            if (route == "littlewood") r = plethy::RestrictionRoute::littlewood;
            else if (route == "corollary") r = plethy::RestrictionRoute::corollary;
            else if (route == "brute") r = plethy::RestrictionRoute::brute;
            else throw std::invalid_argument("unknown route '" + route + "'");
            py::dict out;
            for (const auto& [key, value] : plethy::build_restriction_table(n, d, r).entries) {
                out[py::make_tuple(partition_tuple(key.first), partition_tuple(key.second))] =
                    to_py_int(value);
            }
            return out;
        },
        py::arg("n"), py::arg("d"), py::arg("route") = "littlewood",
        "{(lambda, mu): r_{lambda,mu}} over Lambda(d,n); the corollary route fills only "
        "mu=(n) and mu=(1^n).");

    m.def(
        "plethysm",
        [](const std::string& basis, const std::vector<int>& partition, int n, int d,
           const std::string& route) {
            plethy::SymmetricFunction f =
                plethy::SymmetricFunction::basis_element(parse_basis(basis), Partition(partition));
            return polynomial_dict(
                plethy::plethysm_into_series(f, plethy::h_series(n, d), d, parse_route(route)));
        },
        py::arg("basis"), py::arg("partition"), py::arg("n"), py::arg("d"),
        py::arg("route") = "power-sum",
        "f[H] truncated at degree d, as {exponent tuple: coefficient}.");

    m.def(
        "ch_ind",
        [](const std::string& source, int d, std::optional<int> n,
           std::optional<std::vector<int>> mu, bool orbit) {
            Partition mup = mu ? Partition(*mu) : Partition();
            int group = 0;
            if (source == "permutation" || source == "irreducible") {
                if (!mu) throw std::invalid_argument("ch_ind: mu is required for this source");
                group = mup.weight();
                if (n && *n != group)
                    throw std::invalid_argument("ch_ind: n disagrees with |mu|");
            } else {
                if (!n) throw std::invalid_argument("ch_ind: n is required for this source");
                group = *n;
            }
            std::optional<plethy::InducedCharacter> ch;
            if (source == "trivial") {
                ch = orbit ? plethy::matrix_orbit_character(Partition(std::vector<int>{group}), d)
                           : plethy::ch_ind_trivial(group, d);
            } else if (source == "sign") {
                ch = orbit ? plethy::matrix_orbit_sign_character(group, d)
                           : plethy::ch_ind_sign(group, d);
            } else if (source == "permutation") {
                ch = orbit ? plethy::matrix_orbit_character(mup, d)
                           : plethy::ch_ind_permutation_module(mup, d);
            } else if (source == "irreducible" || source == "regular") {
                if (orbit) {
                    throw std::invalid_argument(
                        "ch_ind: the orbit model only applies to trivial, sign and permutation "
                        "sources");
                }
                plethy::ClassFunction v = source == "irreducible"
                                              ? plethy::irreducible_class_function(mup)
                                              : plethy::regular_class_function(group);
                ch.emplace(group, d, plethy::ch_ind_general(v, d), source);
            } else {
                throw std::invalid_argument("ch_ind: unknown source '" + source + "'");
            }
            py::dict out;
            out["source"] = source;
            out["n"] = group;
            out["d"] = d;
            out["dimension"] = to_py_int(ch->dimension());
            out["terms"] = polynomial_dict(ch->character);
            return out;
        },
        py::arg("source"), py::arg("d"), py::arg("n") = std::nullopt,
        py::arg("mu") = std::nullopt, py::arg("orbit") = false,
        "Character of the degree-d induced representation, as monomial dict plus dimension.");
}
