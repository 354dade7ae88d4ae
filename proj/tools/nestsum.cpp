// nestsum — exact m-nested power sums, the Saras triangle, closed-form
// polynomial expansion, identity verification, and benchmarking.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <iostream>
#include <limits>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "nestsum/nestsum.hpp"

namespace {

using nlohmann::ordered_json;

// Exit-code contract: scripts can tell falsified math (1) from operational
// failures (2 usage, 3 resource cap, 4 time budget).
constexpr int kExitOk = 0;
constexpr int kExitCounterexample = 1;
constexpr int kExitUsage = 2;
constexpr int kExitCap = 3;
constexpr int kExitBudget = 4;

struct CliConfig {
    std::uint64_t row_cap = nestsum::kDefaultRowCap;
    std::uint64_t degree_cap = nestsum::kDefaultDegreeCap;
    std::uint64_t time_budget_secs = 30;

    std::chrono::milliseconds budget() const {
        // clamped so deadline arithmetic cannot overflow
        const std::uint64_t secs = std::min<std::uint64_t>(time_budget_secs, 10'000'000);
        return std::chrono::milliseconds(secs * 1000);
    }
};

ordered_json row_json(std::uint64_t k, const std::vector<nestsum::ExactInt>& row) {
    ordered_json entries = ordered_json::array();
    for (const nestsum::ExactInt& e : row) entries.push_back(e.str());
    return ordered_json{{"k", k}, {"entries", std::move(entries)}};
}

std::string row_text(const std::vector<nestsum::ExactInt>& row) {
    std::string line;
    for (const nestsum::ExactInt& e : row) {
        if (!line.empty()) line += ' ';
        line += e.str();
    }
    return line;
}

int run_saras(const CliConfig& cfg, std::uint64_t k, bool table, const std::string& format) {
    nestsum::SarasTriangle tri(cfg.row_cap);
    if (format == "json") {
        if (table) {
            ordered_json rows = ordered_json::array();
            for (std::uint64_t kk = 0; kk <= k; ++kk) rows.push_back(row_json(kk, tri.row(kk)));
            std::cout << ordered_json{{"rows", std::move(rows)}}.dump() << "\n";
        } else {
            std::cout << row_json(k, tri.row(k)).dump() << "\n";
        }
    } else {
        for (std::uint64_t kk = table ? 0 : k; kk <= k; ++kk)
            std::cout << row_text(tri.row(kk)) << "\n";
    }
    return kExitOk;
}

int run_eval(const CliConfig& cfg, const nestsum::NestedSumQuery& q, const std::string& method,
             const std::string& format) {
    nestsum::ExactInt value;
    if (method == "naive") {
        value = nestsum::naive_nested_sum(q, cfg.budget());
    } else if (method == "weighted") {
        value = nestsum::weighted_sum(q);
    } else {
        nestsum::SarasTriangle tri(cfg.row_cap);
        value = nestsum::formula_nested_sum(q, tri);
    }
    if (format == "json")
        std::cout << ordered_json{{"value", value.str()}}.dump() << "\n";
    else
        std::cout << value.str() << "\n";
    return kExitOk;
}

int run_formula(const CliConfig& cfg, std::uint64_t m, std::uint64_t k,
                const std::string& format) {
    nestsum::SarasTriangle tri(cfg.row_cap);
    const nestsum::Polynomial p = nestsum::expand_formula(m, k, tri, cfg.degree_cap);
    if (format == "json") {
        ordered_json out{{"m", m}, {"k", k}, {"degree", p.degree()}};
        out["coefficients"] =
            ordered_json::parse(nestsum::render(p, nestsum::RenderFormat::json));
        std::cout << out.dump() << "\n";
    } else {
        const auto fmt =
            format == "latex" ? nestsum::RenderFormat::latex : nestsum::RenderFormat::text;
        std::cout << nestsum::render(p, fmt) << "\n";
    }
    return kExitOk;
}

ordered_json counterexample_json(const nestsum::Counterexample& c) {
    ordered_json params;
    for (const auto& [name, value] : c.params) params[name] = value;
    return ordered_json{{"params", std::move(params)}, {"lhs", c.lhs}, {"rhs", c.rhs}};
}

int run_verify(const CliConfig& cfg, const std::string& identity, std::uint64_t max_m,
               std::uint64_t max_n, std::uint64_t max_k, const std::string& format) {
    nestsum::SarasTriangle tri(cfg.row_cap);
    std::vector<nestsum::Identity> ids;
    if (identity.empty())
        ids.assign(nestsum::kAllIdentities.begin(), nestsum::kAllIdentities.end());
    else
        ids.push_back(*nestsum::identity_from_name(identity));  // choices pre-validated

    std::vector<nestsum::IdentityReport> reports;
    reports.reserve(ids.size());
    for (nestsum::Identity id : ids)
        reports.push_back(nestsum::check_identity(id, max_m, max_n, max_k, tri, cfg.budget()));

    std::size_t failed = 0;
    for (const auto& r : reports)
        if (!r.passed()) ++failed;

    if (format == "json") {
        ordered_json out = ordered_json::array();
        for (const auto& r : reports) {
            ordered_json failures = ordered_json::array();
            for (const auto& c : r.failures) failures.push_back(counterexample_json(c));
            out.push_back({{"identity", nestsum::identity_name(r.identity)},
                           {"ranges", r.ranges},
                           {"checked", r.checked},
                           {"failures", std::move(failures)}});
        }
        std::cout << out.dump() << "\n";
    } else {
        for (const auto& r : reports) {
            std::cout << nestsum::identity_name(r.identity) << ": "
                      << (r.passed() ? "PASS" : "FAIL") << " (checked " << r.checked << "; "
                      << r.ranges << ")\n";
            std::size_t shown = 0;
            for (const auto& c : r.failures) {
                if (shown++ == 10) {
                    std::cout << "  ... " << r.failures.size() - 10 << " more\n";
                    break;
                }
                std::cout << "  counterexample";
                for (const auto& [name, value] : c.params) std::cout << ' ' << name << '=' << value;
                std::cout << ": lhs=" << c.lhs << " rhs=" << c.rhs << "\n";
            }
        }
        std::cout << reports.size() - failed << "/" << reports.size() << " identities passed\n";
    }
    return failed == 0 ? kExitOk : kExitCounterexample;
}

int run_bench(const CliConfig& cfg, const nestsum::NestedSumQuery& q, std::uint64_t repeat,
              const std::string& format) {
    nestsum::SarasTriangle tri(cfg.row_cap);
    using fsec = std::chrono::duration<double, std::milli>;

    double formula_ms = 0.0;
    nestsum::ExactInt formula_value;
    nestsum::EvalStats formula_stats;
    for (std::uint64_t r = 0; r < repeat; ++r) {
        nestsum::EvalStats stats;
        const auto t0 = std::chrono::steady_clock::now();
        formula_value = nestsum::formula_nested_sum(q, tri, &stats);
        const double ms = fsec(std::chrono::steady_clock::now() - t0).count();
        if (r == 0 || ms < formula_ms) formula_ms = ms;
        formula_stats = stats;
    }

    bool naive_ran = false;
    double naive_ms = 0.0;
    nestsum::ExactInt naive_value;
    nestsum::EvalStats naive_stats;
    std::string skip_reason;
    try {
        for (std::uint64_t r = 0; r < repeat; ++r) {
            nestsum::EvalStats stats;
            const auto t0 = std::chrono::steady_clock::now();
            naive_value = nestsum::naive_nested_sum(q, cfg.budget(), &stats);
            const double ms = fsec(std::chrono::steady_clock::now() - t0).count();
            if (r == 0 || ms < naive_ms) naive_ms = ms;
            naive_stats = stats;
        }
        naive_ran = true;
    } catch (const nestsum::budget_error&) {
        skip_reason = "time budget (" + std::to_string(cfg.time_budget_secs) + "s) exceeded";
    }

    const bool equal = naive_ran && formula_value == naive_value;

    if (format == "json") {
        ordered_json out{{"m", q.m}, {"n", q.n}, {"k", q.k}, {"repeat", repeat}};
        out["formula"] = ordered_json{{"completed", true},
                                      {"ms", formula_ms},
                                      {"big_ops", formula_stats.big_ops},
                                      {"value", formula_value.str()}};
        if (naive_ran)
            out["naive"] = ordered_json{{"completed", true},
                                        {"ms", naive_ms},
                                        {"big_ops", naive_stats.big_ops},
                                        {"value", naive_value.str()}};
        else
            out["naive"] = ordered_json{{"completed", false}, {"reason", skip_reason}};
        out["equal"] = naive_ran ? ordered_json(equal) : ordered_json(nullptr);
        std::cout << out.dump() << "\n";
    } else {
        std::cout << "m=" << q.m << " n=" << q.n << " k=" << q.k << " repeat=" << repeat << "\n";
        std::cout << "formula  " << formula_ms << " ms  big_ops=" << formula_stats.big_ops
                  << "  value=" << formula_value.str() << "\n";
        if (naive_ran)
            std::cout << "naive    " << naive_ms << " ms  big_ops=" << naive_stats.big_ops
                      << "  value=" << naive_value.str() << "\n";
        else
            std::cout << "naive    skipped: " << skip_reason << "\n";
        if (naive_ran) std::cout << "equal: " << (equal ? "yes" : "NO") << "\n";
    }
    // A value mismatch is falsified math, not an operational failure.
    return !naive_ran || equal ? kExitOk : kExitCounterexample;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact m-nested power sums via the Saras triangle"};
    const CLI::Range at_least_one(std::uint64_t(1), std::numeric_limits<std::uint64_t>::max());
    app.require_subcommand(1);

    CliConfig cfg;
    app.add_option("--row-cap", cfg.row_cap, "Saras triangle row cap")
        ->envname("NESTSUM_ROW_CAP")
        ->check(at_least_one)
        ->capture_default_str();
    app.add_option("--degree-cap", cfg.degree_cap, "max m+k accepted by formula expansion")
        ->check(at_least_one)
        ->capture_default_str();
    app.add_option("--time-budget", cfg.time_budget_secs,
                   "per-operation wall-clock budget, seconds")
        ->envname("NESTSUM_TIME_BUDGET")
        ->check(at_least_one)
        ->capture_default_str();

    std::uint64_t saras_k = 0;
    bool saras_table = false;
    std::string saras_fmt = "text";
    CLI::App* saras = app.add_subcommand("saras", "print triangle row k (entries mu[k][0..k])");
    saras->add_option("k", saras_k, "row index")->required();
    saras->add_flag("--table", saras_table, "print all rows 0..k");
    saras->add_option("--format", saras_fmt, "output format")
        ->check(CLI::IsMember({"text", "json"}));

    nestsum::NestedSumQuery eval_q;
    std::string eval_method = "formula";
    std::string eval_fmt = "text";
    CLI::App* eval = app.add_subcommand("eval", "evaluate the m-nested sum of k-th powers up to n");
    eval->add_option("m", eval_q.m, "nesting depth")->required();
    eval->add_option("n", eval_q.n, "upper limit")->required();
    eval->add_option("k", eval_q.k, "power")->required();
    eval->add_option("--method", eval_method, "evaluator")
        ->check(CLI::IsMember({"formula", "naive", "weighted"}));
    eval->add_option("--format", eval_fmt, "output format")
        ->check(CLI::IsMember({"text", "json"}));

    std::uint64_t formula_m = 0;
    std::uint64_t formula_k = 0;
    std::string formula_fmt = "text";
    CLI::App* formula =
        app.add_subcommand("formula", "expand the closed form as a polynomial in n");
    formula->add_option("m", formula_m, "nesting depth")->required();
    formula->add_option("k", formula_k, "power")->required();
    formula->add_option("--format", formula_fmt, "output format")
        ->check(CLI::IsMember({"text", "latex", "json"}));

    std::string verify_identity;
    std::uint64_t verify_m = 3;
    std::uint64_t verify_n = 8;
    std::uint64_t verify_k = 4;
    std::string verify_fmt = "text";
    CLI::App* verify =
        app.add_subcommand("verify", "machine-check the identities over a parameter box");
    std::vector<std::string> identity_names;
    for (nestsum::Identity id : nestsum::kAllIdentities)
        identity_names.emplace_back(nestsum::identity_name(id));
    verify->add_option("--identity", verify_identity, "check a single identity")
        ->check(CLI::IsMember(identity_names));
    verify->add_option("--max-m", verify_m, "m bound")
        ->check(at_least_one)
        ->capture_default_str();
    verify->add_option("--max-n", verify_n, "n bound")
        ->check(at_least_one)
        ->capture_default_str();
    verify->add_option("--max-k", verify_k, "k bound")
        ->check(at_least_one)
        ->capture_default_str();
    verify->add_option("--format", verify_fmt, "output format")
        ->check(CLI::IsMember({"text", "json"}));

    nestsum::NestedSumQuery bench_q;
    std::uint64_t bench_repeat = 1;
    std::string bench_fmt = "text";
    CLI::App* bench =
        app.add_subcommand("bench", "time the closed form against the brute-force recursion");
    bench->add_option("--m", bench_q.m, "nesting depth")->required();
    bench->add_option("--n", bench_q.n, "upper limit")->required();
    bench->add_option("--k", bench_q.k, "power")->required();
    bench->add_option("--repeat", bench_repeat, "timing repetitions, best-of")
        ->check(at_least_one)
        ->capture_default_str();
    bench->add_option("--format", bench_fmt, "output format")
        ->check(CLI::IsMember({"text", "json"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (saras->parsed()) return run_saras(cfg, saras_k, saras_table, saras_fmt);
        if (eval->parsed()) return run_eval(cfg, eval_q, eval_method, eval_fmt);
        if (formula->parsed()) return run_formula(cfg, formula_m, formula_k, formula_fmt);
        if (verify->parsed())
            return run_verify(cfg, verify_identity, verify_m, verify_n, verify_k, verify_fmt);
        if (bench->parsed()) return run_bench(cfg, bench_q, bench_repeat, bench_fmt);
    } catch (const nestsum::cap_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitCap;
    } catch (const nestsum::budget_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBudget;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::bad_alloc&) {
        std::cerr << "error: out of memory\n";
        return kExitCap;
    }
    return kExitOk;
}
