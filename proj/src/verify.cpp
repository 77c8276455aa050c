#include "plethy/verify.hpp"

#include <chrono>
#include <map>
#include <random>
#include <sstream>
#include <utility>
#include <vector>

#include "plethy/induction.hpp"
#include "plethy/partition.hpp"
#include "plethy/plethysm.hpp"
#include "plethy/polynomial.hpp"
#include "plethy/restriction.hpp"
#include "plethy/symfn.hpp"
#include "plethy/vecpart.hpp"

namespace plethy {

namespace {

class Stopwatch {
  public:
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

  private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

void record_failure(SuiteResult& result, const std::string& message) {
    result.pass = false;
    if (result.counterexample.empty()) result.counterexample = message;
}

Partition one_row(int n) {
    return n > 0 ? Partition(std::vector<int>{n}) : Partition();
}

Partition one_column(int n) {
    return Partition(std::vector<int>(static_cast<size_t>(n), 1));
}

}  // namespace

SuiteResult check_littlewood_vs_brute(int max_n, int max_d) {
    Stopwatch timer;
    SuiteResult result;
    result.suite = "littlewood-vs-brute";
    for (int n = 1; n <= max_n && result.pass; ++n) {
        CharacterTable characters(n);
        for (int d = 0; d <= max_d && result.pass; ++d) {
            LittlewoodContext context(n, d);
            for (const Partition& lambda : enumerate_partitions(d, n)) {
                std::map<Partition, Integer> brute = brute_force_restriction(lambda, characters);
                for (const Partition& mu : characters.partitions()) {
                    Integer plethystic = context.restriction(lambda, mu);
                    ++result.checks;
                    if (plethystic != brute.at(mu)) {
                        std::ostringstream msg;
                        msg << "n=" << n << " d=" << d << " lambda=" << lambda.to_string()
                            << " mu=" << mu.to_string() << ": littlewood=" << plethystic
                            << " brute=" << brute.at(mu);
                        record_failure(result, msg.str());
                        break;
                    }
                }
                if (!result.pass) break;
            }
        }
    }
    result.seconds = timer.seconds();
    return result;
}

SuiteResult check_corollary_agreement(int max_n, int max_d) {
    Stopwatch timer;
    SuiteResult result;
    result.suite = "corollary-vs-littlewood";
    for (int n = 1; n <= max_n && result.pass; ++n) {
        Partition trivial_mu = one_row(n);
        Partition sign_mu = one_column(n);
        for (int d = 0; d <= max_d && result.pass; ++d) {
            LittlewoodContext context(n, d);
            VectorPartitionTable counts(n, d, std::min(n, d + 1));
            for (const Partition& lambda : enumerate_partitions(d, n)) {
                Integer trivial_sum = corollary_trivial_multiplicity(lambda, n, counts);
                Integer trivial_plethystic = context.restriction(lambda, trivial_mu);
                ++result.checks;
                if (trivial_sum != trivial_plethystic) {
                    std::ostringstream msg;
                    msg << "n=" << n << " d=" << d << " lambda=" << lambda.to_string()
                        << " mu=" << trivial_mu.to_string() << ": corollary=" << trivial_sum
                        << " littlewood=" << trivial_plethystic;
                    record_failure(result, msg.str());
                    break;
                }
                Integer sign_sum = corollary_sign_multiplicity(lambda, n, counts);
                Integer sign_plethystic = context.restriction(lambda, sign_mu);
                ++result.checks;
                if (sign_sum != sign_plethystic) {
                    std::ostringstream msg;
                    msg << "n=" << n << " d=" << d << " lambda=" << lambda.to_string()
                        << " mu=" << sign_mu.to_string() << ": corollary=" << sign_sum
                        << " littlewood=" << sign_plethystic;
                    record_failure(result, msg.str());
                    break;
                }
            }
        }
    }
    result.seconds = timer.seconds();
    return result;
}

SuiteResult check_ehh(int max_n, int max_d, int max_k) {
    Stopwatch timer;
    SuiteResult result;
    result.suite = "ehH";
    for (int n = 1; n <= max_n && result.pass; ++n) {
        VectorPartitionTable table(n, max_d, max_k);
        // Table vs explicit enumeration of multiset / distinct-set partitions.
        for (const ExponentVector& x : vectors_up_to_degree(n, max_d)) {
            auto multisets = enumerate_vector_partitions(x, false);
            auto sets = enumerate_vector_partitions(x, true);
            for (int k = 0; k <= max_k; ++k) {
                Integer p_expected = 0;
                for (const auto& parts : multisets) {
                    if (static_cast<int>(parts.size()) <= k) ++p_expected;
                }
                Integer q_expected = 0;
                for (const auto& parts : sets) {
                    int size = static_cast<int>(parts.size());
                    if (size == k || size == k - 1) ++q_expected;
                }
                ++result.checks;
                if (table.count_pk(x, k) != p_expected) {
                    std::ostringstream msg;
                    msg << "p_" << k << "(" << x.to_string() << "): table="
                        << table.count_pk(x, k) << " enumeration=" << p_expected;
                    record_failure(result, msg.str());
                    break;
                }
                ++result.checks;
                if (table.count_qk(x, k) != q_expected) {
                    std::ostringstream msg;
                    msg << "q_" << k << "(" << x.to_string() << "): table="
                        << table.count_qk(x, k) << " enumeration=" << q_expected;
                    record_failure(result, msg.str());
                    break;
                }
            }
            if (!result.pass) break;
        }
        if (!result.pass) break;
        // Both plethysm routes vs the table.
        MonomialSeries all_monomials = h_series(n, max_d);
        for (int k = 1; k <= max_k && result.pass; ++k) {
            SparsePolynomial p_expected(n, max_d);
            SparsePolynomial q_expected(n, max_d);
            for (const ExponentVector& x : vectors_up_to_degree(n, max_d)) {
                p_expected.add_term(x, Rational(table.count_pk(x, k)));
                q_expected.add_term(x, Rational(table.count_qk(x, k)));
            }
            SymmetricFunction h_k = SymmetricFunction::basis_element(Basis::h, Partition({k}));
            SymmetricFunction e_k = SymmetricFunction::basis_element(Basis::e, Partition({k}));
            struct Case {
                const char* name;
                const SymmetricFunction* f;
                PlethysmRoute route;
                const SparsePolynomial* expected;
            };
            Case cases[] = {
                {"h (power-sum route)", &h_k, PlethysmRoute::power_sum, &p_expected},
                {"h (convolution route)", &h_k, PlethysmRoute::convolution, &p_expected},
                {"e (power-sum route)", &e_k, PlethysmRoute::power_sum, &q_expected},
                {"e (convolution route)", &e_k, PlethysmRoute::convolution, &q_expected},
            };
            for (const Case& c : cases) {
                SparsePolynomial got = plethysm_into_series(*c.f, all_monomials, max_d, c.route);
                ++result.checks;
                if (!(got == *c.expected)) {
                    std::ostringstream msg;
                    msg << "n=" << n << " k=" << k << " " << c.name
                        << " disagrees with the vector-partition table";
                    record_failure(result, msg.str());
                    break;
                }
            }
        }
    }
    result.seconds = timer.seconds();
    return result;
}

SuiteResult check_matrix_orbit(int max_n, int max_d) {
    Stopwatch timer;
    SuiteResult result;
    result.suite = "orbit";
    for (int n = 1; n <= max_n && result.pass; ++n) {
        for (const Partition& mu : enumerate_partitions(n, n)) {
            for (int d = 0; d <= max_d; ++d) {
                InducedCharacter closed = ch_ind_permutation_module(mu, d);
                InducedCharacter orbit = matrix_orbit_character(mu, d);
                ++result.checks;
                if (!(closed.character == orbit.character)) {
                    std::ostringstream msg;
                    msg << "permutation module mu=" << mu.to_string() << " d=" << d
                        << ": closed form and orbit enumeration differ";
                    record_failure(result, msg.str());
                    break;
                }
            }
            if (!result.pass) break;
        }
        if (!result.pass) break;
        for (int d = 1; d <= max_d; ++d) {
            InducedCharacter closed = ch_ind_sign(n, d);
            InducedCharacter orbit = matrix_orbit_sign_character(n, d);
            ++result.checks;
            if (!(closed.character == orbit.character)) {
                std::ostringstream msg;
                msg << "sign induction n=" << n << " d=" << d
                    << ": closed form and distinct-rows orbit enumeration differ";
                record_failure(result, msg.str());
                break;
            }
        }
    }
    result.seconds = timer.seconds();
    return result;
}

SuiteResult check_two_row(int max_sum, int max_n) {
    Stopwatch timer;
    SuiteResult result;
    result.suite = "two-row";
    VectorPartitionTable flat(2, max_sum, max_n);
    std::map<std::pair<int, int>, LittlewoodContext> contexts;
    std::map<std::pair<int, int>, VectorPartitionTable> tables;
    for (int lambda1 = 0; lambda1 <= max_sum && result.pass; ++lambda1) {
        for (int lambda2 = 0; lambda2 <= lambda1 && lambda1 + lambda2 <= max_sum; ++lambda2) {
            int d = lambda1 + lambda2;
            std::vector<int> parts;
            if (lambda1 > 0) parts.push_back(lambda1);
            if (lambda2 > 0) parts.push_back(lambda2);
            Partition lambda(parts);
            for (int n = std::max(lambda.length(), 1); n <= max_n; ++n) {
                Integer shortcut =
                    flat.count_pk(ExponentVector({lambda1, lambda2}), n) -
                    flat.count_pk(ExponentVector::signed_lattice({lambda1 + 1, lambda2 - 1}), n);
                auto key = std::make_pair(n, d);
                auto table_it = tables.find(key);
                if (table_it == tables.end()) {
                    table_it =
                        tables.emplace(key, VectorPartitionTable(n, d, std::min(n, d + 1))).first;
                }
                Integer staircase_sum = corollary_trivial_multiplicity(lambda, n, table_it->second);
                auto context_it = contexts.find(key);
                if (context_it == contexts.end()) {
                    context_it = contexts.emplace(key, LittlewoodContext(n, d)).first;
                }
                Integer plethystic = context_it->second.restriction(lambda, one_row(n));
                result.checks += 2;
                if (shortcut != staircase_sum || shortcut != plethystic) {
                    std::ostringstream msg;
                    msg << "lambda=" << lambda.to_string() << " n=" << n
                        << ": two-row shortcut=" << shortcut << " staircase sum=" << staircase_sum
                        << " littlewood=" << plethystic;
                    record_failure(result, msg.str());
                    break;
                }
            }
            if (!result.pass) break;
        }
    }
    result.seconds = timer.seconds();
    return result;
}

SuiteResult check_unimodality(int max_sum, int max_n) {
    Stopwatch timer;
    SuiteResult result;
    result.suite = "unimodality";
    UnimodalityReport report = unimodality_sweep(max_sum, max_n);
    for (const UnimodalityEntry& entry : report.entries) {
        result.checks += entry.identity_checked ? 4 : 2;
    }
    if (!report.all_hold) record_failure(result, report.first_failure);
    result.seconds = timer.seconds();
    return result;
}

SuiteResult check_plethysm_algebra(int cases, unsigned int seed) {
    Stopwatch timer;
    SuiteResult result;
    result.suite = "plethysm-algebra";
    std::mt19937 rng(seed);
    auto random_p_function = [&](int max_weight) {
        SymmetricFunction f(Basis::p);
        int terms = 1 + static_cast<int>(rng() % 3);
        for (int t = 0; t < terms; ++t) {
            int w = static_cast<int>(rng() % static_cast<unsigned>(max_weight + 1));
            std::vector<Partition> candidates = enumerate_partitions(w, std::max(w, 1));
            const Partition& nu = candidates[rng() % candidates.size()];
            int c = static_cast<int>(rng() % 7) - 3;
            f.add_term(nu, Rational(c));
        }
        return f;
    };
    for (int case_index = 0; case_index < cases && result.pass; ++case_index) {
        int n_vars = 1 + static_cast<int>(rng() % 3);
        int d = 2 + static_cast<int>(rng() % 4);
        MonomialSeries g(n_vars, d);
        std::vector<ExponentVector> pool = vectors_up_to_degree(n_vars, 2);
        int monomials = 1 + static_cast<int>(rng() % 4);
        for (int m = 0; m < monomials; ++m) {
            g.add_monomial(pool[rng() % pool.size()], Integer(1 + rng() % 2));
        }
        auto describe = [&](const char* law) {
            std::ostringstream msg;
            msg << "case " << case_index << " (seed " << seed << ", n_vars=" << n_vars
                << ", d=" << d << "): " << law;
            return msg.str();
        };

        SymmetricFunction f1 = random_p_function(3);
        SymmetricFunction f2 = random_p_function(3);
        SymmetricFunction f_sum = f1;
        f_sum += f2;
        SparsePolynomial r1 = plethysm_into_series(f1, g, d);
        SparsePolynomial r2 = plethysm_into_series(f2, g, d);
        ++result.checks;
        if (!(plethysm_into_series(f_sum, g, d) == r1 + r2)) {
            record_failure(result, describe("additivity (f1+f2)[g] = f1[g]+f2[g] failed"));
            break;
        }
        ++result.checks;
        if (!(plethysm_into_series(multiply(f1, f2), g, d) == multiply(r1, r2, d))) {
            record_failure(result, describe("multiplicativity (f1*f2)[g] = f1[g]*f2[g] failed"));
            break;
        }

        SymmetricFunction p1 = SymmetricFunction::basis_element(Basis::p, Partition({1}));
        ++result.checks;
        if (!(plethysm_into_series(p1, g, d) == g.to_polynomial())) {
            record_failure(result, describe("identity p_1[g] = g failed"));
            break;
        }

        int k = 1 + static_cast<int>(rng() % 3);
        int l = 1 + static_cast<int>(rng() % 3);
        SymmetricFunction p_k = SymmetricFunction::basis_element(Basis::p, Partition({k}));
        SymmetricFunction p_kl = SymmetricFunction::basis_element(Basis::p, Partition({k * l}));
        ++result.checks;
        if (!(plethysm_into_series(p_k, power_plethysm(l, g), d) ==
              plethysm_into_series(p_kl, g, d))) {
            record_failure(result, describe("composition p_k[p_l[g]] = p_{kl}[g] failed"));
            break;
        }

        SymmetricFunction f3(Basis::h);
        int h_terms = 1 + static_cast<int>(rng() % 2);
        for (int t = 0; t < h_terms; ++t) {
            int w = 1 + static_cast<int>(rng() % 3);
            std::vector<Partition> candidates = enumerate_partitions(w, w);
            f3.add_term(candidates[rng() % candidates.size()],
                        Rational(static_cast<int>(rng() % 5) - 2));
        }
        ++result.checks;
        if (!(plethysm_into_series(f3, g, d, PlethysmRoute::power_sum) ==
              plethysm_into_series(f3, g, d, PlethysmRoute::convolution))) {
            record_failure(result, describe("route agreement on an h-basis input failed"));
            break;
        }
    }
    result.seconds = timer.seconds();
    return result;
}

SuiteResult check_adjunction(int max_n, int max_d) {
    Stopwatch timer;
    SuiteResult result;
    result.suite = "adjunction";
    for (int n = 1; n <= max_n && result.pass; ++n) {
        for (int d = 0; d <= max_d && result.pass; ++d) {
            LittlewoodContext context(n, d);
            for (const Partition& mu : enumerate_partitions(n, n)) {
                SparsePolynomial induced = ch_ind_general(irreducible_class_function(mu), d);
                for (const Partition& lambda : enumerate_partitions(d, n)) {
                    Integer via_induction = schur_coefficient_extraction(induced, lambda);
                    Integer via_restriction = context.restriction(lambda, mu);
                    ++result.checks;
                    if (via_induction != via_restriction) {
                        std::ostringstream msg;
                        msg << "n=" << n << " d=" << d << " lambda=" << lambda.to_string()
                            << " mu=" << mu.to_string() << ": <ch Ind, s_lambda>=" << via_induction
                            << " r=" << via_restriction;
                        record_failure(result, msg.str());
                        break;
                    }
                }
                if (!result.pass) break;
            }
        }
    }
    result.seconds = timer.seconds();
    return result;
}

SuiteResult check_dimension(int max_n, int max_d) {
    Stopwatch timer;
    SuiteResult result;
    result.suite = "dimension";
    for (int n = 1; n <= max_n && result.pass; ++n) {
        CharacterTable characters(n);
        for (int d = 0; d <= max_d && result.pass; ++d) {
            LittlewoodContext context(n, d);
            for (const Partition& lambda : enumerate_partitions(d, n)) {
                Integer from_restrictions = 0;
                for (const Partition& mu : characters.partitions()) {
                    from_restrictions += context.restriction(lambda, mu) * characters.dimension(mu);
                }
                SymmetricFunction schur = SymmetricFunction::basis_element(Basis::s, lambda);
                Integer gl_dimension = require_integer(
                    evaluate_all_ones(expand_in_variables(schur, n)), "GL dimension");
                ++result.checks;
                if (from_restrictions != gl_dimension) {
                    std::ostringstream msg;
                    msg << "n=" << n << " d=" << d << " lambda=" << lambda.to_string()
                        << ": sum of r*f^mu=" << from_restrictions
                        << " s_lambda(1,...,1)=" << gl_dimension;
                    record_failure(result, msg.str());
                    break;
                }
            }
        }
    }
    result.seconds = timer.seconds();
    return result;
}

}  // namespace plethy
