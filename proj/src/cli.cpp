#include "plethy/cli.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "plethy/induction.hpp"
#include "plethy/numeric.hpp"
#include "plethy/partition.hpp"
#include "plethy/plethysm.hpp"
#include "plethy/polynomial.hpp"
#include "plethy/restriction.hpp"
#include "plethy/symfn.hpp"
#include "plethy/vecpart.hpp"
#include "plethy/verify.hpp"

namespace plethy {

namespace {

using nlohmann::ordered_json;

struct Caps {
    int degree = 12;
    int n = 8;
    std::uint64_t memory_bytes = std::uint64_t(2) << 30;
};

void check_caps(const Caps& caps, int n, int d) {
    if (n > caps.n) {
        throw resource_cap_error("n=" + std::to_string(n) + " exceeds the cap " +
                                 std::to_string(caps.n) + " (raise with --cap-n)");
    }
    if (d > caps.degree) {
        throw resource_cap_error("degree " + std::to_string(d) + " exceeds the cap " +
                                 std::to_string(caps.degree) + " (raise with --cap-degree)");
    }
}

// Same size model the table builder uses, applied before any compound
// command allocates.
void check_table_memory(const Caps& caps, int n_vars, int degree, int parts) {
    Integer bytes = binomial(Integer(n_vars + degree), n_vars) * (parts + 1) * 2 * 48;
    if (bytes > Integer(caps.memory_bytes)) {
        throw resource_cap_error(
            "counting table for " + std::to_string(n_vars) + " variables, degree " +
            std::to_string(degree) + ", parts bound " + std::to_string(parts) +
            " would need about " + bytes.str() + " bytes (raise with --max-mem)");
    }
}

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> values;
    if (text.empty()) return values;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        try {
            std::size_t pos = 0;
            int v = std::stoi(item, &pos);
            if (pos != item.size()) throw std::invalid_argument("trailing characters");
            values.push_back(v);
        } catch (const std::exception&) {
            throw std::invalid_argument("malformed integer list '" + text + "'");
        }
    }
    return values;
}

Partition parse_partition(const std::string& text, const char* what) {
    try {
        return Partition(parse_int_list(text));
    } catch (const std::invalid_argument& e) {
        throw std::invalid_argument(std::string(what) + ": " + e.what());
    }
}

ordered_json json_integer(const Integer& v) {
    static const Integer min64 = std::numeric_limits<std::int64_t>::min();
    static const Integer max64 = std::numeric_limits<std::int64_t>::max();
    if (v >= min64 && v <= max64) return static_cast<std::int64_t>(v);
    return v.str();
}

ordered_json json_rational(const Rational& v) {
    if (is_integer(v)) return json_integer(numerator(v));
    return v.str();
}

ordered_json partition_json(const Partition& p) { return ordered_json(p.parts()); }

std::string join_ints(const std::vector<int>& v) {
    std::ostringstream os;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) os << ',';
        os << v[i];
    }
    return os.str();
}

std::string csv_quote(const std::string& s) { return '"' + s + '"'; }

void print_aligned(std::ostream& out, const std::vector<std::vector<std::string>>& rows) {
    if (rows.empty()) return;
    std::vector<std::size_t> width(rows.front().size(), 0);
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            width[i] = std::max(width[i], row[i].size());
        }
    }
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            out << row[i];
            if (i + 1 < row.size()) out << std::string(width[i] - row[i].size() + 2, ' ');
        }
        out << "\n";
    }
}

ordered_json polynomial_terms_json(const SparsePolynomial& poly) {
    ordered_json terms = ordered_json::array();
    for (const auto& [x, c] : poly.terms()) {
        ordered_json term;
        term["x"] = ordered_json(x.coords());
        term["coefficient"] = json_rational(c);
        terms.push_back(std::move(term));
    }
    return terms;
}

void emit_polynomial_csv(std::ostream& out, const SparsePolynomial& poly) {
    out << "x,coefficient\n";
    for (const auto& [x, c] : poly.terms()) {
        out << csv_quote(join_ints(x.coords())) << ',' << c.str() << "\n";
    }
}

void emit_polynomial_pretty(std::ostream& out, const SparsePolynomial& poly) {
    std::vector<std::vector<std::string>> rows;
    rows.push_back({"monomial", "coefficient"});
    for (const auto& [x, c] : poly.terms()) {
        rows.push_back({x.to_string(), c.str()});
    }
    print_aligned(out, rows);
}

// ---------------------------------------------------------------- restrict

struct RestrictConfig {
    int n = 0;
    int d = 0;
    std::string lambda_text;
    bool lambda_given = false;
    std::string mu_text;
    bool mu_given = false;
    std::string route = "all";
    std::string format = "pretty";
};

struct RestrictCell {
    Partition lambda;
    Partition mu;
    std::optional<Integer> littlewood;
    std::optional<Integer> corollary;
    std::optional<Integer> brute;
    bool agree = true;
};

int cmd_restrict(const RestrictConfig& cfg, const Caps& caps, std::ostream& out,
                 std::ostream& err) {
    if (cfg.n < 1) throw std::invalid_argument("restrict: --n must be at least 1");
    if (cfg.d < 0) throw std::invalid_argument("restrict: --d must be nonnegative");
    check_caps(caps, cfg.n, cfg.d);
    const bool want_littlewood = cfg.route == "littlewood" || cfg.route == "all";
    const bool want_corollary = cfg.route == "corollary" || cfg.route == "all";
    const bool want_brute = cfg.route == "brute" || cfg.route == "all";
    if (want_littlewood) {
        check_table_memory(caps, cfg.n, cfg.d, std::min(2 * cfg.n - 1, cfg.d));
    }
    if (want_corollary) {
        check_table_memory(caps, cfg.n, cfg.d, std::min(cfg.n, cfg.d + 1));
    }

    std::vector<Partition> lambdas;
    if (cfg.lambda_given) {
        Partition lambda = parse_partition(cfg.lambda_text, "restrict --lambda");
        if (lambda.weight() != cfg.d) {
            throw std::invalid_argument("restrict: --lambda must be a partition of d=" +
                                        std::to_string(cfg.d));
        }
        if (lambda.length() > cfg.n) {
            throw std::invalid_argument("restrict: --lambda has more than n parts");
        }
        lambdas.push_back(std::move(lambda));
    } else {
        lambdas = enumerate_partitions(cfg.d, cfg.n);
    }

    Partition trivial_mu(std::vector<int>{cfg.n});
    Partition sign_mu(std::vector<int>(static_cast<std::size_t>(cfg.n), 1));
    std::vector<Partition> mus;
    if (cfg.mu_given) {
        Partition mu = parse_partition(cfg.mu_text, "restrict --mu");
        if (mu.weight() != cfg.n) {
            throw std::invalid_argument("restrict: --mu must be a partition of n=" +
                                        std::to_string(cfg.n));
        }
        mus.push_back(std::move(mu));
    } else if (cfg.route == "corollary") {
        mus.push_back(trivial_mu);
        if (sign_mu != trivial_mu) mus.push_back(sign_mu);
    } else {
        mus = enumerate_partitions(cfg.n, cfg.n);
    }

    std::optional<LittlewoodContext> context;
    if (want_littlewood) context.emplace(cfg.n, cfg.d);
    std::optional<VectorPartitionTable> counts;
    if (want_corollary) counts.emplace(cfg.n, cfg.d, std::min(cfg.n, cfg.d + 1));
    std::optional<CharacterTable> characters;
    if (want_brute) characters.emplace(cfg.n);
    std::map<Partition, std::map<Partition, Integer>> brute_rows;

    std::vector<RestrictCell> cells;
    std::string first_disagreement;
    for (const Partition& lambda : lambdas) {
        for (const Partition& mu : mus) {
            RestrictCell cell;
            cell.lambda = lambda;
            cell.mu = mu;
            if (want_littlewood) cell.littlewood = context->restriction(lambda, mu);
            if (want_corollary && mu == trivial_mu) {
                cell.corollary = corollary_trivial_multiplicity(lambda, cfg.n, *counts);
            } else if (want_corollary && mu == sign_mu) {
                cell.corollary = corollary_sign_multiplicity(lambda, cfg.n, *counts);
            }
            if (want_brute) {
                auto it = brute_rows.find(lambda);
                if (it == brute_rows.end()) {
                    it = brute_rows.emplace(lambda, brute_force_restriction(lambda, *characters))
                             .first;
                }
                cell.brute = it->second.at(mu);
            }
            std::vector<const Integer*> present;
            if (cell.littlewood) present.push_back(&*cell.littlewood);
            if (cell.corollary) present.push_back(&*cell.corollary);
            if (cell.brute) present.push_back(&*cell.brute);
            for (const Integer* v : present) {
                if (*v != *present.front()) cell.agree = false;
            }
            if (!cell.agree && first_disagreement.empty()) {
                first_disagreement =
                    "lambda=" + lambda.to_string() + " mu=" + mu.to_string();
            }
            cells.push_back(std::move(cell));
        }
    }

    auto value_or_dash = [](const std::optional<Integer>& v) {
        return v ? v->str() : std::string("-");
    };
    if (cfg.format == "json") {
        for (const RestrictCell& cell : cells) {
            ordered_json rec;
            rec["n"] = cfg.n;
            rec["d"] = cfg.d;
            rec["lambda"] = partition_json(cell.lambda);
            rec["mu"] = partition_json(cell.mu);
            ordered_json routes;
            if (want_littlewood) routes["littlewood"] = json_integer(*cell.littlewood);
            if (want_corollary) {
                routes["corollary"] = cell.corollary ? json_integer(*cell.corollary)
                                                     : ordered_json(nullptr);
            }
            if (want_brute) routes["brute"] = json_integer(*cell.brute);
            rec["routes"] = std::move(routes);
            if (cfg.route == "all") rec["agree"] = cell.agree;
            out << rec.dump() << "\n";
        }
    } else if (cfg.format == "csv") {
        out << "n,d,lambda,mu";
        if (want_littlewood) out << ",littlewood";
        if (want_corollary) out << ",corollary";
        if (want_brute) out << ",brute";
        if (cfg.route == "all") out << ",agree";
        out << "\n";
        for (const RestrictCell& cell : cells) {
            out << cfg.n << ',' << cfg.d << ','
                << csv_quote(join_ints(cell.lambda.parts())) << ','
                << csv_quote(join_ints(cell.mu.parts()));
            if (want_littlewood) out << ',' << cell.littlewood->str();
            if (want_corollary) out << ',' << (cell.corollary ? cell.corollary->str() : "");
            if (want_brute) out << ',' << cell.brute->str();
            if (cfg.route == "all") out << ',' << (cell.agree ? "true" : "false");
            out << "\n";
        }
    } else {
        std::vector<std::vector<std::string>> rows;
        std::vector<std::string> header = {"lambda", "mu"};
        if (want_littlewood) header.push_back("littlewood");
        if (want_corollary) header.push_back("corollary");
        if (want_brute) header.push_back("brute");
        if (cfg.route == "all") header.push_back("agree");
        rows.push_back(std::move(header));
        for (const RestrictCell& cell : cells) {
            std::vector<std::string> row = {cell.lambda.to_string(), cell.mu.to_string()};
            if (want_littlewood) row.push_back(cell.littlewood->str());
            if (want_corollary) row.push_back(value_or_dash(cell.corollary));
            if (want_brute) row.push_back(cell.brute->str());
            if (cfg.route == "all") row.push_back(cell.agree ? "yes" : "NO");
            rows.push_back(std::move(row));
        }
        print_aligned(out, rows);
    }

    if (!first_disagreement.empty()) {
        err << "route disagreement at " << first_disagreement << "\n";
        return 2;
    }
    return 0;
}

// ----------------------------------------------------------------- vecpart

struct VecpartConfig {
    std::string x_text;
    int k = 0;
    std::string variant = "p";
    bool enumerate = false;
    std::string format = "pretty";
};

int cmd_vecpart(const VecpartConfig& cfg, const Caps& caps, std::ostream& out) {
    std::vector<int> coords = parse_int_list(cfg.x_text);
    if (coords.empty()) {
        throw std::invalid_argument("vecpart: --x needs at least one coordinate");
    }
    if (cfg.k < 0) throw std::invalid_argument("vecpart: --k must be nonnegative");
    ExponentVector x = ExponentVector::signed_lattice(coords);
    const bool negative = !x.is_nonnegative();
    const int degree = negative ? 0 : x.total_degree();
    check_caps(caps, static_cast<int>(coords.size()), degree);
    const bool want_q = cfg.variant == "q";

    Integer count = 0;
    if (!negative) {
        int n_vars = static_cast<int>(coords.size());
        if (!want_q) {
            int width = std::min(cfg.k, degree);
            VectorPartitionTable table(n_vars, degree, width, caps.memory_bytes);
            count = table.count_pk(x, width);
        } else if (degree == 0) {
            count = cfg.k <= 1 ? 1 : 0;
        } else if (cfg.k >= degree + 2) {
            count = 0;
        } else {
            VectorPartitionTable table(n_vars, degree, cfg.k, caps.memory_bytes);
            count = table.count_qk(x, cfg.k);
        }
    }

    std::vector<std::vector<ExponentVector>> listed;
    if (cfg.enumerate) {
        for (auto& parts : enumerate_vector_partitions(x, want_q)) {
            int size = static_cast<int>(parts.size());
            bool keep = want_q ? (size == cfg.k || size == cfg.k - 1) : size <= cfg.k;
            if (keep) listed.push_back(std::move(parts));
        }
        if (Integer(listed.size()) != count) {
            throw std::logic_error("vecpart: enumeration found " +
                                   std::to_string(listed.size()) + " partitions but the table says " +
                                   count.str());
        }
    }

    auto partition_text = [](const std::vector<ExponentVector>& parts) {
        if (parts.empty()) return std::string("empty");
        std::string s;
        for (std::size_t i = 0; i < parts.size(); ++i) {
            if (i) s += " + ";
            s += parts[i].to_string();
        }
        return s;
    };

    if (cfg.format == "json") {
        ordered_json rec;
        rec["x"] = ordered_json(coords);
        rec["k"] = cfg.k;
        rec["variant"] = cfg.variant;
        rec["count"] = json_integer(count);
        if (cfg.enumerate) {
            ordered_json all = ordered_json::array();
            for (const auto& parts : listed) {
                ordered_json one = ordered_json::array();
                for (const ExponentVector& part : parts) one.push_back(ordered_json(part.coords()));
                all.push_back(std::move(one));
            }
            rec["partitions"] = std::move(all);
        }
        out << rec.dump() << "\n";
    } else if (cfg.format == "csv") {
        out << "x,k,variant,count,partition\n";
        if (listed.empty()) {
            out << csv_quote(join_ints(coords)) << ',' << cfg.k << ',' << cfg.variant << ','
                << count.str() << ",\n";
        } else {
            for (const auto& parts : listed) {
                out << csv_quote(join_ints(coords)) << ',' << cfg.k << ',' << cfg.variant << ','
                    << count.str() << ',' << csv_quote(partition_text(parts)) << "\n";
            }
        }
    } else {
        out << count.str() << "\n";
        for (const auto& parts : listed) out << partition_text(parts) << "\n";
    }
    return 0;
}

// ---------------------------------------------------------------- plethysm

struct PlethysmConfig {
    std::string basis = "h";
    std::string partition_text;
    int n = 1;
    int d = 0;
    std::string route = "power-sum";
    std::string format = "pretty";
};

int cmd_plethysm(const PlethysmConfig& cfg, const Caps& caps, std::ostream& out) {
    if (cfg.n < 1) throw std::invalid_argument("plethysm: --n must be at least 1");
    if (cfg.d < 0) throw std::invalid_argument("plethysm: --d must be nonnegative");
    check_caps(caps, cfg.n, cfg.d);
    check_table_memory(caps, cfg.n, cfg.d, 1);
    Basis basis;
    if (cfg.basis == "h") basis = Basis::h;
    else if (cfg.basis == "e") basis = Basis::e;
    else if (cfg.basis == "p") basis = Basis::p;
    else if (cfg.basis == "m") basis = Basis::m;
    else basis = Basis::s;
    Partition mu = parse_partition(cfg.partition_text, "plethysm --partition");
    SymmetricFunction f = SymmetricFunction::basis_element(basis, mu);
    PlethysmRoute route = cfg.route == "convolution" ? PlethysmRoute::convolution
                                                     : PlethysmRoute::power_sum;
    SparsePolynomial result = plethysm_into_series(f, h_series(cfg.n, cfg.d), cfg.d, route);

    if (cfg.format == "json") {
        ordered_json rec;
        rec["basis"] = cfg.basis;
        rec["partition"] = partition_json(mu);
        rec["n"] = cfg.n;
        rec["d"] = cfg.d;
        rec["route"] = cfg.route;
        rec["terms"] = polynomial_terms_json(result);
        out << rec.dump() << "\n";
    } else if (cfg.format == "csv") {
        emit_polynomial_csv(out, result);
    } else {
        emit_polynomial_pretty(out, result);
    }
    return 0;
}

// ------------------------------------------------------------------ ch-ind

struct ChIndConfig {
    std::string source;
    int n = -1;
    bool n_given = false;
    int d = 0;
    std::string mu_text;
    bool mu_given = false;
    std::string model = "closed";
    std::string format = "pretty";
};

int cmd_ch_ind(const ChIndConfig& cfg, const Caps& caps, std::ostream& out) {
    if (cfg.d < 0) throw std::invalid_argument("ch-ind: --d must be nonnegative");
    const bool needs_mu = cfg.source == "permutation" || cfg.source == "irreducible";
    Partition mu;
    int n = cfg.n;
    if (needs_mu) {
        if (!cfg.mu_given) {
            throw std::invalid_argument("ch-ind: --mu is required for source " + cfg.source);
        }
        mu = parse_partition(cfg.mu_text, "ch-ind --mu");
        if (cfg.n_given && cfg.n != mu.weight()) {
            throw std::invalid_argument("ch-ind: --n disagrees with |mu|");
        }
        n = mu.weight();
    } else {
        if (!cfg.n_given) {
            throw std::invalid_argument("ch-ind: --n is required for source " + cfg.source);
        }
        if (n < 1) throw std::invalid_argument("ch-ind: --n must be at least 1");
    }
    check_caps(caps, n, cfg.d);
    check_table_memory(caps, n, cfg.d, std::min(n, cfg.d + 1));
    const bool orbit = cfg.model == "orbit";
    if (orbit && cfg.source != "trivial" && cfg.source != "sign" && cfg.source != "permutation") {
        throw std::invalid_argument("ch-ind: --model orbit only applies to trivial, sign and "
                                    "permutation sources");
    }

    std::optional<InducedCharacter> character;
    if (cfg.source == "trivial") {
        character = orbit ? matrix_orbit_character(Partition(std::vector<int>{n}), cfg.d)
                          : ch_ind_trivial(n, cfg.d);
    } else if (cfg.source == "sign") {
        character = orbit ? matrix_orbit_sign_character(n, cfg.d) : ch_ind_sign(n, cfg.d);
    } else if (cfg.source == "permutation") {
        character = orbit ? matrix_orbit_character(mu, cfg.d)
                          : ch_ind_permutation_module(mu, cfg.d);
    } else if (cfg.source == "irreducible") {
        character.emplace(n, cfg.d, ch_ind_general(irreducible_class_function(mu), cfg.d),
                          "irreducible");
    } else {
        character.emplace(n, cfg.d, ch_ind_general(regular_class_function(n), cfg.d), "regular");
    }

    if (cfg.format == "json") {
        ordered_json rec;
        rec["source"] = cfg.source;
        rec["model"] = cfg.model;
        rec["n"] = n;
        rec["d"] = cfg.d;
        if (needs_mu) rec["mu"] = partition_json(mu);
        rec["dimension"] = json_integer(character->dimension());
        rec["terms"] = polynomial_terms_json(character->character);
        out << rec.dump() << "\n";
    } else if (cfg.format == "csv") {
        emit_polynomial_csv(out, character->character);
    } else {
        out << "dimension: " << character->dimension().str() << "\n";
        emit_polynomial_pretty(out, character->character);
    }
    return 0;
}

// ------------------------------------------------------------------ verify

struct VerifyConfig {
    std::string suite;
    int n = -1;
    int d = -1;
    int k = -1;
    int max_sum = -1;
    int max_n = -1;
};

int cmd_verify(const VerifyConfig& cfg, const Caps& caps, std::ostream& out) {
    auto resolve = [](int flag, int fallback) { return flag >= 0 ? flag : fallback; };
    std::vector<SuiteResult> results;
    auto run_ehh = [&] {
        int n = resolve(cfg.n, 3), d = resolve(cfg.d, 5), k = resolve(cfg.k, 4);
        check_caps(caps, n, d);
        results.push_back(check_ehh(n, d, k));
    };
    auto run_orbit = [&] {
        int n = resolve(cfg.n, 4), d = resolve(cfg.d, 5);
        check_caps(caps, n, d);
        results.push_back(check_matrix_orbit(n, d));
    };
    auto run_littlewood = [&] {
        int n = resolve(cfg.n, 4), d = resolve(cfg.d, 5);
        check_caps(caps, n, d);
        results.push_back(check_littlewood_vs_brute(n, d));
        results.push_back(check_corollary_agreement(n, d));
    };
    auto run_unimodality = [&] {
        int max_sum = resolve(cfg.max_sum, 8), max_n = resolve(cfg.max_n, 5);
        check_caps(caps, max_n, max_sum);
        results.push_back(check_unimodality(max_sum, max_n));
    };
    auto run_adjunction = [&] {
        int n = resolve(cfg.n, 3), d = resolve(cfg.d, 4);
        check_caps(caps, n, d);
        results.push_back(check_adjunction(n, d));
    };
    if (cfg.suite == "ehH") run_ehh();
    else if (cfg.suite == "orbit") run_orbit();
    else if (cfg.suite == "littlewood") run_littlewood();
    else if (cfg.suite == "unimodality") run_unimodality();
    else if (cfg.suite == "adjunction") run_adjunction();
    else {
        run_ehh();
        run_orbit();
        run_littlewood();
        run_unimodality();
        run_adjunction();
    }
    bool all_pass = true;
    for (const SuiteResult& result : results) {
        if (result.pass) {
            out << result.suite << ": PASS (" << result.checks << " checks)\n";
        } else {
            all_pass = false;
            out << result.suite << ": FAIL (" << result.checks << " checks) "
                << result.counterexample << "\n";
        }
    }
    return all_pass ? 0 : 2;
}

}  // namespace

int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact restriction coefficients of polynomial GL_n representations to S_n,"
                 " with cross-verifying combinatorial oracles",
                 "plethy"};
    Caps caps;
    app.add_option("--cap-degree", caps.degree, "Largest degree any command may request")
        ->capture_default_str();
    app.add_option("--cap-n", caps.n, "Largest n / variable count any command may request")
        ->capture_default_str();
    app.add_option("--max-mem", caps.memory_bytes, "Counting-table memory budget in bytes")
        ->envname("PLETHY_MAX_MEM")
        ->capture_default_str();
    app.require_subcommand(1);

    RestrictConfig restrict_cfg;
    CLI::App* restrict_cmd = app.add_subcommand(
        "restrict", "Restriction coefficients r_{lambda,mu} of GL_n irreducibles to S_n");
    restrict_cmd->add_option("--n", restrict_cfg.n, "Symmetric group size")->required();
    restrict_cmd->add_option("--d", restrict_cfg.d, "Polynomial degree")->required();
    CLI::Option* restrict_lambda = restrict_cmd->add_option(
        "--lambda", restrict_cfg.lambda_text,
        "Single lambda, comma-separated parts (default: all of Lambda(d,n))");
    CLI::Option* restrict_mu = restrict_cmd->add_option(
        "--mu", restrict_cfg.mu_text,
        "Single mu, comma-separated parts (default: all partitions of n)");
    restrict_cmd->add_option("--route", restrict_cfg.route, "Computation route")
        ->check(CLI::IsMember({"littlewood", "corollary", "brute", "all"}))
        ->capture_default_str();
    restrict_cmd->add_option("--format", restrict_cfg.format, "Output format")
        ->check(CLI::IsMember({"json", "csv", "pretty"}))
        ->capture_default_str();

    VecpartConfig vecpart_cfg;
    CLI::App* vecpart_cmd =
        app.add_subcommand("vecpart", "Vector-partition counts p_k(x) and q_k(x)");
    vecpart_cmd->add_option("--x", vecpart_cfg.x_text, "Target vector, comma-separated integers")
        ->required();
    vecpart_cmd->add_option("--k", vecpart_cfg.k, "Parts bound k")->required();
    vecpart_cmd->add_option("--variant", vecpart_cfg.variant,
                            "p: at most k parts; q: exactly k or k-1 distinct parts")
        ->check(CLI::IsMember({"p", "q"}))
        ->capture_default_str();
    vecpart_cmd->add_flag("--enumerate", vecpart_cfg.enumerate,
                          "List every counted partition (cross-checks the table)");
    vecpart_cmd->add_option("--format", vecpart_cfg.format, "Output format")
        ->check(CLI::IsMember({"json", "csv", "pretty"}))
        ->capture_default_str();

    PlethysmConfig plethysm_cfg;
    CLI::App* plethysm_cmd = app.add_subcommand(
        "plethysm", "Plethysm f[H] of a basis element into H = sum over N^n of t^x");
    plethysm_cmd->add_option("--basis", plethysm_cfg.basis, "Basis of f")
        ->check(CLI::IsMember({"h", "e", "p", "m", "s"}))
        ->capture_default_str();
    plethysm_cmd
        ->add_option("--partition", plethysm_cfg.partition_text,
                     "Index partition of f, comma-separated parts")
        ->required();
    plethysm_cmd->add_option("--n", plethysm_cfg.n, "Number of variables")->required();
    plethysm_cmd->add_option("--d", plethysm_cfg.d, "Truncation degree")->required();
    plethysm_cmd->add_option("--route", plethysm_cfg.route, "Computation route")
        ->check(CLI::IsMember({"power-sum", "convolution"}))
        ->capture_default_str();
    plethysm_cmd->add_option("--format", plethysm_cfg.format, "Output format")
        ->check(CLI::IsMember({"json", "csv", "pretty"}))
        ->capture_default_str();

    ChIndConfig ch_ind_cfg;
    CLI::App* ch_ind_cmd = app.add_subcommand(
        "ch-ind", "Character of the degree-d induced representation, by source");
    ch_ind_cmd->add_option("--source", ch_ind_cfg.source, "Representation being induced")
        ->check(CLI::IsMember({"trivial", "sign", "permutation", "irreducible", "regular"}))
        ->required();
    CLI::Option* ch_ind_n = ch_ind_cmd->add_option("--n", ch_ind_cfg.n, "Symmetric group size");
    ch_ind_cmd->add_option("--d", ch_ind_cfg.d, "Polynomial degree")->required();
    CLI::Option* ch_ind_mu = ch_ind_cmd->add_option(
        "--mu", ch_ind_cfg.mu_text, "Partition for permutation/irreducible sources");
    ch_ind_cmd->add_option("--model", ch_ind_cfg.model,
                           "closed: counting formulas; orbit: matrix-orbit enumeration")
        ->check(CLI::IsMember({"closed", "orbit"}))
        ->capture_default_str();
    ch_ind_cmd->add_option("--format", ch_ind_cfg.format, "Output format")
        ->check(CLI::IsMember({"json", "csv", "pretty"}))
        ->capture_default_str();

    VerifyConfig verify_cfg;
    CLI::App* verify_cmd =
        app.add_subcommand("verify", "Cross-verification suites over parameter boxes");
    verify_cmd->add_option("--suite", verify_cfg.suite, "Suite to run")
        ->check(CLI::IsMember({"ehH", "orbit", "littlewood", "unimodality", "adjunction", "all"}))
        ->required();
    verify_cmd->add_option("--n", verify_cfg.n, "Largest n");
    verify_cmd->add_option("--d", verify_cfg.d, "Largest degree");
    verify_cmd->add_option("--k", verify_cfg.k, "Largest parts bound (ehH suite)");
    verify_cmd->add_option("--max-sum", verify_cfg.max_sum,
                           "Largest x1+x2 (unimodality suite)");
    verify_cmd->add_option("--max-n", verify_cfg.max_n, "Largest n (unimodality suite)");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(std::move(reversed));
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            return app.exit(e, out, err);
        }
        err << "invalid input: " << e.what() << "\n";
        return 1;
    }

    restrict_cfg.lambda_given = restrict_lambda->count() > 0;
    restrict_cfg.mu_given = restrict_mu->count() > 0;
    ch_ind_cfg.n_given = ch_ind_n->count() > 0;
    ch_ind_cfg.mu_given = ch_ind_mu->count() > 0;

    try {
        if (restrict_cmd->parsed()) return cmd_restrict(restrict_cfg, caps, out, err);
        if (vecpart_cmd->parsed()) return cmd_vecpart(vecpart_cfg, caps, out);
        if (plethysm_cmd->parsed()) return cmd_plethysm(plethysm_cfg, caps, out);
        if (ch_ind_cmd->parsed()) return cmd_ch_ind(ch_ind_cfg, caps, out);
        if (verify_cmd->parsed()) return cmd_verify(verify_cfg, caps, out);
        err << "invalid input: no subcommand selected\n";
        return 1;
    } catch (const resource_cap_error& e) {
        err << "resource cap exceeded: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        err << "invalid input: " << e.what() << "\n";
        return 1;
    } catch (const std::logic_error& e) {
        err << "internal consistency failure: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
    return run_cli(std::move(args), out, err);
}

}  // namespace plethy
