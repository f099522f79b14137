#ifndef CONVSUM_TOOLS_CLI_HPP
#define CONVSUM_TOOLS_CLI_HPP

#include <cstdlib>
#include <iostream>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "convsum/convsum.hpp"

namespace convsum::cli {

enum ExitCode : int { ok = 0, verification_failed = 1, usage_error = 2 };

/// Thrown for bad argument combinations the parser itself cannot see.
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline constexpr const char* precision_env = "CONVSUM_PRECISION";

inline std::size_t precision_from_env()
{
    const char* v = std::getenv(precision_env);
    if (v == nullptr || *v == '\0') {
        return default_precision;
    }
    try {
        std::size_t used = 0;
        const unsigned long p = std::stoul(v, &used);
        if (used != std::string(v).size() || p == 0) {
            throw std::invalid_argument(v);
        }
        return p;
    } catch (const std::exception&) {
        throw UsageError(std::string(precision_env) + " must be a positive integer, got '" + v + "'");
    }
}

struct RunConfig {
    std::string command;
    std::size_t precision = default_precision;
    std::string output_format = "text";
    std::int64_t max_n = 0;
};

namespace detail {

inline EisensteinPair closed_pair(std::int64_t alpha, std::int64_t beta)
{
    if (!has_closed_form(alpha, beta)) {
        throw UsageError("closed form unavailable for (" + std::to_string(alpha) + "," + std::to_string(beta) + ")");
    }
    return EisensteinPair(alpha, beta);
}

inline ConvolutionFormula formula_for(const EisensteinPair& pair, const std::string& source, const SpaceBasis& basis)
{
    if (source == "derived") {
        return formula_from_solution(derive_coefficients(pair, basis));
    }
    return published_formula(pair);
}

inline std::size_t basis_precision(std::size_t wanted, std::int64_t level)
{
    return std::max<std::size_t>(wanted, 2 * static_cast<std::size_t>(dim_spaces(level, 4).modular));
}

/// W values for rep-count: (1,b) always by oracle, (4,b) and (1,4b) per `source`.
class RepW {
public:
    RepW(std::string source, std::int64_t b, std::int64_t n) : source_(std::move(source))
    {
        if (source_ == "oracle") {
            return;
        }
        basis_ = build_basis(4 * b, basis_precision(static_cast<std::size_t>(n), 4 * b));
        for (const EisensteinPair& p : {EisensteinPair(4, b), EisensteinPair(1, 4 * b)}) {
            formulas_.emplace(p.alpha, formula_for(p, source_, *basis_));
        }
    }

    Integer operator()(std::int64_t alpha, std::int64_t beta, std::int64_t n) const
    {
        if (n <= 0) {
            return 0;
        }
        if (basis_ && has_closed_form(alpha, beta)) {
            return w_closed(formulas_.at(alpha), n, *basis_);
        }
        return w_oracle(alpha, beta, n);
    }

private:
    std::string source_;
    std::optional<SpaceBasis> basis_;
    std::map<std::int64_t, ConvolutionFormula> formulas_;
};

inline void print_solution_text(std::ostream& out, const CoefficientSolution& sol, const ConvolutionFormula& f)
{
    const char prefix = sol.level == 44 ? 'a' : 'b';
    out << "pair " << sol.pair.label() << " level " << sol.level << " precision " << sol.precision << "\n";
    out << "solving indices:";
    for (std::size_t n : sol.solving_indices) {
        out << ' ' << n;
    }
    out << "\n\nexpansion of (" << sol.pair.alpha << " L(q^" << sol.pair.alpha << ") - " << sol.pair.beta << " L(q^"
        << sol.pair.beta << "))^2\n";
    out << "  constant " << to_string(sol.constant_term()) << "\n";
    for (const auto& [d, x] : sol.X) {
        out << "  sigma3(n/" << d << ") " << to_string(sol.sigma3_coefficient(d)) << "\n";
    }
    for (std::size_t j = 0; j < sol.Y.size(); ++j) {
        out << "  " << prefix << j + 1 << "(n) " << to_string(sol.Y[j]) << "\n";
    }
    out << "\nW" << sol.pair.label() << "(n)\n";
    for (const auto& [d, c] : f.sigma3_terms) {
        out << "  sigma3(n/" << d << ") " << to_string(c) << "\n";
    }
    for (const auto& t : f.sigma1_terms) {
        out << "  sigma(n/" << t.delta << ") " << to_string(t.c0) << " + " << to_string(t.c1) << " n\n";
    }
    for (std::size_t j = 0; j < f.cusp_terms.size(); ++j) {
        out << "  " << prefix << j + 1 << "(n) " << to_string(f.cusp_terms[j]) << "\n";
    }
}

} // namespace detail

/// Runs one CLI invocation. Exit codes: 0 success, 1 verification failure, 2 usage error.
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Exact evaluation and verification of the convolution sums W_(a,b)(n) for ab = 44, 52"};
    app.require_subcommand(1);

    std::optional<std::size_t> precision_flag;
    app.add_option("--precision", precision_flag, "q-series precision (default 1000, or $CONVSUM_PRECISION)")
        ->check(CLI::PositiveNumber);

    std::int64_t alpha = 0, beta = 0, n = 0, max_n = 0, a = 1, b = 0, level = 0;
    int weight = 4;
    std::string eval_method, eval_source, table_method, table_source, table_format;
    std::string rep_method, rep_source, export_format, suite, what;
    bool as_json = false;

    auto* eval = app.add_subcommand("eval-w", "evaluate W_(alpha,beta)(n)");
    eval->add_option("--alpha", alpha)->required()->check(CLI::PositiveNumber);
    eval->add_option("--beta", beta)->required()->check(CLI::PositiveNumber);
    eval->add_option("--n", n)->required()->check(CLI::NonNegativeNumber);
    eval->add_option("--method", eval_method)->check(CLI::IsMember({"closed", "oracle"}))->default_val("oracle");
    eval->add_option("--source", eval_source, "closed-form coefficients")
        ->check(CLI::IsMember({"published", "derived"}))
        ->default_val("published");

    auto* table = app.add_subcommand("table-w", "tabulate W_(alpha,beta)(n) for 1 <= n <= max-n");
    table->add_option("--alpha", alpha)->required()->check(CLI::PositiveNumber);
    table->add_option("--beta", beta)->required()->check(CLI::PositiveNumber);
    table->add_option("--max-n", max_n)->required()->check(CLI::PositiveNumber);
    table->add_option("--format", table_format)->check(CLI::IsMember({"csv", "json"}))->default_val("csv");
    table->add_option("--method", table_method)->check(CLI::IsMember({"closed", "oracle"}))->default_val("oracle");
    table->add_option("--source", table_source)->check(CLI::IsMember({"published", "derived"}))->default_val("published");

    auto* rep = app.add_subcommand("rep-count", "N_(a,b)(n) for a(x1^2+..+x4^2) + b(x5^2+..+x8^2)");
    rep->add_option("--a", a)->required()->check(CLI::PositiveNumber);
    rep->add_option("--b", b)->required()->check(CLI::PositiveNumber);
    rep->add_option("--n", n)->required()->check(CLI::NonNegativeNumber);
    rep->add_option("--method", rep_method)->check(CLI::IsMember({"closed", "oracle"}))->default_val("closed");
    rep->add_option("--w-source", rep_source, "convolution sums used by the closed form")
        ->check(CLI::IsMember({"oracle", "published", "derived"}))
        ->default_val("oracle");

    auto* derive = app.add_subcommand("derive", "solve for the basis coefficients of (aL(q^a) - bL(q^b))^2");
    derive->add_option("--alpha", alpha)->required()->check(CLI::PositiveNumber);
    derive->add_option("--beta", beta)->required()->check(CLI::PositiveNumber);
    derive->add_flag("--json", as_json);

    auto* ver = app.add_subcommand("verify", "run a verification suite");
    ver->add_option("suite", suite)
        ->required()
        ->check(CLI::IsMember(
            {"all", "ligozat", "basis", "dilation", "identity", "lemma32", "closed-forms", "reps", "dims"}));
    ver->add_option("--level", level)->check(CLI::IsMember({44, 52}));
    ver->add_option("--alpha", alpha)->check(CLI::PositiveNumber);
    ver->add_option("--beta", beta)->check(CLI::PositiveNumber);
    ver->add_option("--max-n", max_n)->check(CLI::PositiveNumber);

    auto* exp = app.add_subcommand("export", "export embedded data");
    exp->add_option("what", what)->required()->check(CLI::IsMember({"tables"}));
    exp->add_option("--format", export_format)->check(CLI::IsMember({"csv", "json"}))->default_val("json");

    auto* dimc = app.add_subcommand("dims", "dimensions of M_k, E_k, S_k for Gamma0(N)");
    dimc->add_option("--level", level)->required()->check(CLI::PositiveNumber);
    dimc->add_option("--weight", weight)->default_val(4);
    dimc->add_flag("--json", as_json);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, err, err);
        err << app.help();
        return usage_error;
    }

    try {
        RunConfig cfg;
        cfg.precision = precision_flag ? *precision_flag : precision_from_env();

        if (eval->parsed()) {
            cfg.command = "eval-w";
            if (eval_method == "oracle") {
                out << to_string(w_oracle(alpha, beta, n)) << "\n";
                return ok;
            }
            const EisensteinPair pair = detail::closed_pair(alpha, beta);
            if (n < 1) {
                throw UsageError("closed forms are stated for n >= 1");
            }
            if (static_cast<std::size_t>(n) > cfg.precision) {
                throw UsageError("n = " + std::to_string(n) + " exceeds precision " + std::to_string(cfg.precision));
            }
            const SpaceBasis basis =
                build_basis(pair.level(), detail::basis_precision(static_cast<std::size_t>(n), pair.level()));
            out << to_string(w_closed(detail::formula_for(pair, eval_source, basis), n, basis)) << "\n";
            return ok;
        }

        if (table->parsed()) {
            cfg.command = "table-w";
            cfg.output_format = table_format;
            cfg.max_n = max_n;
            std::vector<Integer> values;
            if (table_method == "oracle") {
                auto w = w_series_oracle(alpha, beta, static_cast<std::size_t>(max_n));
                values.assign(w.begin() + 1, w.end());
            } else {
                const EisensteinPair pair = detail::closed_pair(alpha, beta);
                if (static_cast<std::size_t>(max_n) > cfg.precision) {
                    throw UsageError("max-n exceeds precision " + std::to_string(cfg.precision));
                }
                const SpaceBasis basis = build_basis(
                    pair.level(), detail::basis_precision(static_cast<std::size_t>(max_n), pair.level()));
                const ConvolutionFormula f = detail::formula_for(pair, table_source, basis);
                for (std::int64_t k = 1; k <= max_n; ++k) {
                    values.push_back(w_closed(f, k, basis));
                }
            }
            if (table_format == "csv") {
                out << "n,value,method\n";
                for (std::size_t i = 0; i < values.size(); ++i) {
                    out << i + 1 << ',' << to_string(values[i]) << ',' << table_method << "\n";
                }
            } else {
                json rows = json::array();
                for (std::size_t i = 0; i < values.size(); ++i) {
                    rows.push_back(json{{"n", i + 1}, {"value", to_string(values[i])}});
                }
                out << json{{"alpha", alpha}, {"beta", beta}, {"method", table_method}, {"rows", rows}}.dump(2) << "\n";
            }
            return ok;
        }

        if (rep->parsed()) {
            cfg.command = "rep-count";
            const RepQuery q{a, b, n};
            if (rep_method == "oracle") {
                out << to_string(rep_count_enumerate(q)) << "\n";
                return ok;
            }
            if (!has_rep_closed_form(a, b)) {
                throw UsageError("closed form unavailable for N_(" + std::to_string(a) + "," + std::to_string(b)
                                 + "); supported: (1,11), (1,13)");
            }
            out << to_string(rep_count_closed(q, detail::RepW(rep_source, b, n))) << "\n";
            return ok;
        }

        if (derive->parsed()) {
            cfg.command = "derive";
            const EisensteinPair pair = detail::closed_pair(alpha, beta);
            const SpaceBasis basis = build_basis(pair.level(), detail::basis_precision(cfg.precision, pair.level()));
            const CoefficientSolution sol = derive_coefficients(pair, basis);
            const ConvolutionFormula f = formula_from_solution(sol);
            if (as_json) {
                out << json{{"solution", solution_to_json(sol)}, {"formula", formula_to_json(f)}}.dump(2) << "\n";
            } else {
                detail::print_solution_text(out, sol, f);
            }
            return ok;
        }

        if (ver->parsed()) {
            cfg.command = "verify " + suite;
            std::vector<verify::SuiteReport> reports;
            const bool all = suite == "all";
            if (all || suite == "ligozat") {
                reports.push_back(level ? verify::ligozat({level}) : verify::ligozat());
            }
            if (all || suite == "dims") {
                reports.push_back(verify::dims());
            }
            if (all || suite == "basis") {
                reports.push_back(verify::basis(cfg.precision));
            }
            if (all || suite == "dilation") {
                reports.push_back(verify::dilation(std::min<std::size_t>(cfg.precision, 500)));
            }
            if (all || suite == "identity") {
                std::vector<EisensteinPair> pairs = covered_pairs();
                if (alpha || beta) {
                    pairs = {EisensteinPair(alpha, beta)};
                }
                reports.push_back(verify::identity(pairs, max_n ? static_cast<std::size_t>(max_n) : 300));
            }
            if (all || suite == "lemma32") {
                reports.push_back(verify::lemma32(std::min<std::size_t>(cfg.precision, 300)));
            }
            if (all || suite == "closed-forms") {
                reports.push_back(verify::closed_forms(max_n ? static_cast<std::size_t>(max_n) : cfg.precision));
            }
            if (all || suite == "reps") {
                reports.push_back(verify::reps(max_n && !all ? max_n : 100));
            }
            bool passed = true;
            for (const auto& r : reports) {
                out << verify::render(r);
                passed = passed && r.passed;
            }
            out << (passed ? "all checks passed" : "verification FAILED") << "\n";
            return passed ? ok : verification_failed;
        }

        if (exp->parsed()) {
            cfg.command = "export";
            if (export_format == "csv") {
                out << eta_tables_to_csv();
            } else {
                out << eta_tables_to_json().dump(2) << "\n";
            }
            return ok;
        }

        if (dimc->parsed()) {
            cfg.command = "dims";
            const SpaceDimensions d = dim_spaces(level, weight);
            if (as_json) {
                out << json{{"level", level}, {"weight", weight}, {"modular", d.modular}, {"eisenstein", d.eisenstein},
                            {"cusp", d.cusp}}
                           .dump()
                    << "\n";
            } else {
                out << "dim M=" << d.modular << " dim E=" << d.eisenstein << " dim S=" << d.cusp << "\n";
            }
            return ok;
        }
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return usage_error;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return usage_error;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return verification_failed;
    }
    return usage_error;
}

} // namespace convsum::cli

#endif // CONVSUM_TOOLS_CLI_HPP
