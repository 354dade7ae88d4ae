#pragma once

#include <array>
#include <bit>
#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "nestsum/error.hpp"
#include "nestsum/exact.hpp"
#include "nestsum/saras.hpp"

namespace nestsum {

/// (m, n, k): apply the summation operator m times to j^k, j = 1..n.
/// m = 0 is the bare power n^k.
///
/// n = 0 is a domain extension: the empty sum is 0 for m >= 1, and at m = 0
/// we take 0^0 = 1 and 0^k = 0 for k >= 1. This keeps recurrences that step
/// down to n - 1 well-defined at n = 1.
struct NestedSumQuery {
    std::uint64_t m = 0;
    std::uint64_t n = 0;
    std::uint64_t k = 0;
};

inline constexpr std::chrono::milliseconds kDefaultBudget{30'000};

/// Tally of big-integer add/mul/div operations an evaluator performed;
/// used by the bench command to compare evaluator cost.
struct EvalStats {
    std::uint64_t big_ops = 0;
};

namespace detail {

class Deadline {
public:
    explicit Deadline(std::chrono::milliseconds budget)
        : end_(std::chrono::steady_clock::now() + budget) {}

    void check(const char* what) const {
        if (std::chrono::steady_clock::now() >= end_)
            throw budget_error(std::string(what) + ": time budget exceeded");
    }

private:
    std::chrono::steady_clock::time_point end_;
};

// Multiplications pow_int performs for exponent k.
inline std::uint64_t pow_ops(std::uint64_t k) {
    if (k == 0) return 0;
    return static_cast<std::uint64_t>(std::bit_width(k) - 1) +
           static_cast<std::uint64_t>(std::popcount(k));
}

// Multiply/divide steps binomial(n, r) performs.
inline std::uint64_t binomial_ops(const ExactInt& n, const ExactInt& r) {
    if (r < 0 || r > n) return 0;
    ExactInt steps = r <= n - r ? r : ExactInt(n - r);
    return 2 * steps.convert_to<std::uint64_t>();
}

inline ExactInt naive_impl(const NestedSumQuery& q, const Deadline& deadline, EvalStats* stats) {
    if (q.n == 0) return q.m == 0 && q.k == 0 ? ExactInt(1) : ExactInt(0);
    if (q.m == 0) {
        if (stats) stats->big_ops += pow_ops(q.k);
        return pow_int(ExactInt(q.n), q.k);
    }
    // level[j-1] starts as j^k and is replaced by its running sum once per
    // nesting level; this memoizes every (level, j) value within the call.
    std::vector<ExactInt> level(q.n);
    for (std::uint64_t j = 1; j <= q.n; ++j) {
        level[j - 1] = pow_int(ExactInt(j), q.k);
        if (stats) stats->big_ops += pow_ops(q.k);
        if ((j & 1023) == 0) deadline.check("naive_nested_sum");
    }
    for (std::uint64_t lev = 1; lev <= q.m; ++lev) {
        ExactInt running = 0;
        for (std::uint64_t j = 1; j <= q.n; ++j) {
            running += level[j - 1];
            level[j - 1] = running;
            if (stats) ++stats->big_ops;
            if ((j & 1023) == 0) deadline.check("naive_nested_sum");
        }
    }
    return level[q.n - 1];
}

}  // namespace detail

/// Brute-force oracle. Follows the defining recursion directly: level 0 is
/// the sequence j^k, and each further level sums the previous one from 1 to
/// j. Costs about m*n additions plus n power computations; aborts with
/// budget_error once the wall-clock budget is spent.
inline ExactInt naive_nested_sum(const NestedSumQuery& q,
                                 std::chrono::milliseconds budget = kDefaultBudget,
                                 EvalStats* stats = nullptr) {
    return detail::naive_impl(q, detail::Deadline(budget), stats);
}

/// Single binomial-weighted sum  sum_{r=1}^{n} C(n-r+m-1, m-1) r^k.
/// The weight is the multiplicity with which r^k appears after m nestings,
/// so this is only defined for m >= 1.
inline ExactInt weighted_sum(const NestedSumQuery& q, EvalStats* stats = nullptr) {
    if (q.m == 0) throw std::invalid_argument("weighted_sum: m must be >= 1");
    ExactInt total = 0;
    for (std::uint64_t r = 1; r <= q.n; ++r) {
        const ExactInt upper = ExactInt(q.n - r) + ExactInt(q.m - 1);
        const ExactInt lower = ExactInt(q.m - 1);
        if (stats) stats->big_ops += detail::binomial_ops(upper, lower) + detail::pow_ops(q.k) + 2;
        total += binomial(upper, lower) * pow_int(ExactInt(r), q.k);
    }
    return total;
}

/// Closed form  sum_{i=0}^{k} C(n+m-1, m+i) mu[k][i]: k+1 terms taken from
/// row k of the triangle, so the cost is independent of n except through the
/// size of the integers involved.
inline ExactInt formula_nested_sum(const NestedSumQuery& q, SarasTriangle& tri,
                                   EvalStats* stats = nullptr) {
    if (q.n == 0) return q.m == 0 && q.k == 0 ? ExactInt(1) : ExactInt(0);
    const std::vector<ExactInt>& mu_row = tri.row(q.k);
    const ExactInt upper = ExactInt(q.n) + ExactInt(q.m) - 1;
    ExactInt total = 0;
    for (std::uint64_t i = 0; i <= q.k; ++i) {
        const ExactInt lower = ExactInt(q.m + i);
        if (stats) stats->big_ops += detail::binomial_ops(upper, lower) + 2;
        total += binomial(upper, lower) * mu_row[i];
    }
    return total;
}

/// The machine-checkable identities.
///
///   L51:  nesting once more equals summing the previous nesting over j = 1..n
///   L52:  power bump: S(m, n, k+1) = n S(m, n, k) - m S(m+1, n-1, k), n >= 2
///   L53:  limit bump: S(m, n+1, k) = sum_{t=1}^{m} S(t, n, k) + (n+1)^k, m >= 1
///   L55:  sum_{i=0}^{k} C(n,i) mu[k][i] = (n+1)^k
///   MU_EQUIV:            the three triangle generators agree (incl. r > k)
///   MAIN_VS_ORACLE:      closed form vs. brute-force recursion
///   WEIGHTED_VS_ORACLE:  weighted single sum vs. brute-force recursion
enum class Identity {
    L51,
    L52,
    L53,
    L55,
    MuEquiv,
    MainVsOracle,
    WeightedVsOracle,
};

inline constexpr std::array<Identity, 7> kAllIdentities{
    Identity::L51,          Identity::L52,          Identity::L53,     Identity::L55,
    Identity::MuEquiv,      Identity::MainVsOracle, Identity::WeightedVsOracle,
};

inline const char* identity_name(Identity id) {
    switch (id) {
        case Identity::L51: return "L51";
        case Identity::L52: return "L52";
        case Identity::L53: return "L53";
        case Identity::L55: return "L55";
        case Identity::MuEquiv: return "MU_EQUIV";
        case Identity::MainVsOracle: return "MAIN_VS_ORACLE";
        case Identity::WeightedVsOracle: return "WEIGHTED_VS_ORACLE";
    }
    return "?";
}

inline std::optional<Identity> identity_from_name(std::string_view name) {
    for (Identity id : kAllIdentities)
        if (name == identity_name(id)) return id;
    return std::nullopt;
}

/// A point where an identity failed, with the values of both sides.
struct Counterexample {
    std::vector<std::pair<std::string, std::string>> params;
    std::string lhs;
    std::string rhs;
};

struct IdentityReport {
    Identity identity{};
    std::string ranges;       // the box of parameters that was checked
    std::uint64_t checked = 0;
    std::vector<Counterexample> failures;

    bool passed() const noexcept { return failures.empty(); }
};

/// Exhaustively checks one identity over the box bounded by max_m / max_n /
/// max_k (each >= 1; bounds that an identity does not use are ignored).
/// Counterexamples are collected in loop order rather than asserted, so a
/// falsified identity comes back as data.
inline IdentityReport check_identity(Identity id, std::uint64_t max_m, std::uint64_t max_n,
                                     std::uint64_t max_k, SarasTriangle& tri,
                                     std::chrono::milliseconds budget = kDefaultBudget) {
    if (max_m < 1 || max_n < 1 || max_k < 1)
        throw std::invalid_argument("check_identity: bounds must be >= 1");

    const detail::Deadline deadline(budget);
    IdentityReport report;
    report.identity = id;

    const auto naive = [&](std::uint64_t m, std::uint64_t n, std::uint64_t k) {
        return detail::naive_impl({m, n, k}, deadline, nullptr);
    };
    const auto record = [&](std::vector<std::pair<std::string, std::string>> params,
                            const ExactInt& lhs, const ExactInt& rhs) {
        report.failures.push_back({std::move(params), lhs.str(), rhs.str()});
    };
    const auto mnk = [](std::uint64_t m, std::uint64_t n, std::uint64_t k) {
        return std::vector<std::pair<std::string, std::string>>{
            {"m", std::to_string(m)}, {"n", std::to_string(n)}, {"k", std::to_string(k)}};
    };

    switch (id) {
        case Identity::L51:
            report.ranges = "m in [0," + std::to_string(max_m) + "], n in [1," +
                            std::to_string(max_n) + "], k in [0," + std::to_string(max_k) + "]";
            for (std::uint64_t m = 0; m <= max_m; ++m)
                for (std::uint64_t n = 1; n <= max_n; ++n)
                    for (std::uint64_t k = 0; k <= max_k; ++k) {
                        deadline.check("check_identity");
                        const ExactInt lhs = naive(m + 1, n, k);
                        ExactInt rhs = 0;
                        for (std::uint64_t j = 1; j <= n; ++j) rhs += naive(m, j, k);
                        ++report.checked;
                        if (lhs != rhs) record(mnk(m, n, k), lhs, rhs);
                    }
            break;

        case Identity::L52:
            report.ranges = "m in [0," + std::to_string(max_m) + "], n in [2," +
                            std::to_string(max_n) + "], k in [0," + std::to_string(max_k) + "]";
            for (std::uint64_t m = 0; m <= max_m; ++m)
                for (std::uint64_t n = 2; n <= max_n; ++n)
                    for (std::uint64_t k = 0; k <= max_k; ++k) {
                        deadline.check("check_identity");
                        const ExactInt lhs = naive(m, n, k + 1);
                        const ExactInt rhs =
                            ExactInt(n) * naive(m, n, k) - ExactInt(m) * naive(m + 1, n - 1, k);
                        ++report.checked;
                        if (lhs != rhs) record(mnk(m, n, k), lhs, rhs);
                    }
            break;

        case Identity::L53:
            // The expansion needs m >= 1; the m = 0 boundary is left unchecked.
            report.ranges = "m in [1," + std::to_string(max_m) + "], n in [1," +
                            std::to_string(max_n) + "], k in [0," + std::to_string(max_k) + "]";
            for (std::uint64_t m = 1; m <= max_m; ++m)
                for (std::uint64_t n = 1; n <= max_n; ++n)
                    for (std::uint64_t k = 0; k <= max_k; ++k) {
                        deadline.check("check_identity");
                        const ExactInt lhs = naive(m, n + 1, k);
                        ExactInt rhs = pow_int(ExactInt(n + 1), k);
                        for (std::uint64_t t = 1; t <= m; ++t) rhs += naive(t, n, k);
                        ++report.checked;
                        if (lhs != rhs) record(mnk(m, n, k), lhs, rhs);
                    }
            break;

        case Identity::L55:
            report.ranges = "n in [0," + std::to_string(max_n) + "], k in [0," +
                            std::to_string(max_k) + "]";
            for (std::uint64_t n = 0; n <= max_n; ++n)
                for (std::uint64_t k = 0; k <= max_k; ++k) {
                    deadline.check("check_identity");
                    ExactInt lhs = 0;
                    for (std::uint64_t i = 0; i <= k; ++i)
                        lhs += binomial(ExactInt(n), ExactInt(i)) *
                               tri.mu(k, static_cast<std::int64_t>(i));
                    const ExactInt rhs = pow_int(ExactInt(n + 1), k);
                    ++report.checked;
                    if (lhs != rhs)
                        record({{"n", std::to_string(n)}, {"k", std::to_string(k)}}, lhs, rhs);
                }
            break;

        case Identity::MuEquiv:
            // r runs past the diagonal so the vanishing convention is checked too.
            report.ranges = "k in [0," + std::to_string(max_k) + "], r in [0,k+2]";
            for (std::uint64_t k = 0; k <= max_k; ++k)
                for (std::uint64_t r = 0; r <= k + 2; ++r) {
                    deadline.check("check_identity");
                    const auto rr = static_cast<std::int64_t>(r);
                    const ExactInt by_recurrence = tri.mu(k, rr);
                    const ExactInt by_closed_form = mu_closed_form(k, rr);
                    const ExactInt by_binomial = mu_binomial_recursion(k, rr);
                    ++report.checked;
                    const auto kr = [&](const char* method) {
                        return std::vector<std::pair<std::string, std::string>>{
                            {"k", std::to_string(k)},
                            {"r", std::to_string(r)},
                            {"method", method}};
                    };
                    if (by_closed_form != by_recurrence)
                        record(kr("closed_form"), by_recurrence, by_closed_form);
                    if (by_binomial != by_recurrence)
                        record(kr("binomial_recursion"), by_recurrence, by_binomial);
                }
            break;

        case Identity::MainVsOracle:
            report.ranges = "m in [0," + std::to_string(max_m) + "], n in [1," +
                            std::to_string(max_n) + "], k in [0," + std::to_string(max_k) + "]";
            for (std::uint64_t m = 0; m <= max_m; ++m)
                for (std::uint64_t n = 1; n <= max_n; ++n)
                    for (std::uint64_t k = 0; k <= max_k; ++k) {
                        deadline.check("check_identity");
                        const ExactInt lhs = formula_nested_sum({m, n, k}, tri);
                        const ExactInt rhs = naive(m, n, k);
                        ++report.checked;
                        if (lhs != rhs) record(mnk(m, n, k), lhs, rhs);
                    }
            break;

        case Identity::WeightedVsOracle:
            report.ranges = "m in [1," + std::to_string(max_m) + "], n in [1," +
                            std::to_string(max_n) + "], k in [0," + std::to_string(max_k) + "]";
            for (std::uint64_t m = 1; m <= max_m; ++m)
                for (std::uint64_t n = 1; n <= max_n; ++n)
                    for (std::uint64_t k = 0; k <= max_k; ++k) {
                        deadline.check("check_identity");
                        const ExactInt lhs = weighted_sum({m, n, k});
                        const ExactInt rhs = naive(m, n, k);
                        ++report.checked;
                        if (lhs != rhs) record(mnk(m, n, k), lhs, rhs);
                    }
            break;
    }
    return report;
}

}  // namespace nestsum
