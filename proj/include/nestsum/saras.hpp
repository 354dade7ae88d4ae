#pragma once

#include <cstdint>
#include <deque>
#include <string>
#include <vector>

#include "nestsum/error.hpp"
#include "nestsum/exact.hpp"

namespace nestsum {

inline constexpr std::size_t kDefaultRowCap = 512;

/// The Saras triangle mu[k][r]:
///
///   mu[k][0] = 1,
///   mu[k][r] = r * mu[k-1][r-1] + (r+1) * mu[k-1][r]   for 1 <= r <= k,
///   mu[k][r] = 0                                        for r > k,
///
/// so every row starts with 1 and row k ends in k!. Rows are built on demand
/// from the previous row and cached; the cap turns runaway requests into a
/// clean cap_error (entries grow super-exponentially down the triangle).
///
/// The cache is an explicit handle: share one instance to reuse rows, or give
/// each thread its own. A row is fully formed before it becomes visible, and
/// references returned by row() stay valid while the cache grows.
class SarasTriangle {
public:
    explicit SarasTriangle(std::size_t row_cap = kDefaultRowCap) : row_cap_(row_cap) {
        rows_.push_back({ExactInt(1)});
    }

    std::size_t row_cap() const noexcept { return row_cap_; }
    std::size_t rows_cached() const noexcept { return rows_.size(); }

    /// Row k as the k+1 entries mu[k][0..k].
    const std::vector<ExactInt>& row(std::size_t k) {
        if (k > row_cap_)
            throw cap_error("saras: row " + std::to_string(k) + " exceeds row cap " +
                            std::to_string(row_cap_));
        extend_to(k);
        return rows_[k];
    }

    /// mu[k][r] via the cached row recurrence; 0 when r is outside 0..k.
    ExactInt mu(std::size_t k, std::int64_t r) {
        if (r < 0 || static_cast<std::size_t>(r) > k) return 0;
        return row(k)[static_cast<std::size_t>(r)];
    }

private:
    void extend_to(std::size_t k) {
        while (rows_.size() <= k) {
            const std::vector<ExactInt>& prev = rows_.back();
            const std::size_t kk = rows_.size();
            std::vector<ExactInt> next(kk + 1);
            next[0] = 1;
            for (std::size_t r = 1; r < kk; ++r)
                next[r] = ExactInt(r) * prev[r - 1] + ExactInt(r + 1) * prev[r];
            next[kk] = ExactInt(kk) * prev[kk - 1];
            rows_.push_back(std::move(next));
        }
    }

    std::size_t row_cap_;
    std::deque<std::vector<ExactInt>> rows_;
};

/// mu[k][r] as the alternating sum  sum_{i=0}^{r} C(r,i) (-1)^i (r+1-i)^k.
/// References no other triangle entries, which makes it the independent
/// generator of choice for cross-checks. Vanishes for r > k.
inline ExactInt mu_closed_form(std::size_t k, std::int64_t r) {
    if (r < 0) return 0;
    const std::uint64_t rr = static_cast<std::uint64_t>(r);
    ExactInt total = 0;
    for (std::uint64_t i = 0; i <= rr; ++i) {
        ExactInt term = binomial(ExactInt(rr), ExactInt(i)) * pow_int(ExactInt(rr + 1 - i), k);
        if (i % 2 == 0)
            total += term;
        else
            total -= term;
    }
    return total;
}

/// mu[k][r] by recursion on earlier rows of the previous column:
///
///   mu[k][r] = sum_{i=r-1}^{k-1} C(k,i) mu[i][r-1]   for 1 <= r <= k,
///
/// with column 0 all ones and 0 past the diagonal. Built column by column,
/// independently of the linear row recurrence.
inline ExactInt mu_binomial_recursion(std::size_t k, std::int64_t r) {
    if (r < 0) return 0;
    const std::size_t rr = static_cast<std::size_t>(r);
    if (rr > k) return 0;
    if (rr == 0) return 1;
    // col[i] holds mu[i][c] for the current column c (zero for i < c).
    std::vector<ExactInt> col(k + 1, ExactInt(1));
    for (std::size_t c = 1; c <= rr; ++c) {
        std::vector<ExactInt> next(k + 1, ExactInt(0));
        for (std::size_t i = c; i <= k; ++i) {
            ExactInt sum = 0;
            for (std::size_t j = c - 1; j < i; ++j)
                sum += binomial(ExactInt(i), ExactInt(j)) * col[j];
            next[i] = sum;
        }
        col = std::move(next);
    }
    return col[k];
}

/// Stirling subset number S(n, j) by its own recurrence
/// S(n, j) = j * S(n-1, j) + S(n-1, j-1); rebuilt per call.
inline ExactInt stirling_second(std::size_t n, std::size_t j) {
    if (j > n) return 0;
    std::vector<ExactInt> row(n + 1, ExactInt(0));
    row[0] = 1;
    for (std::size_t nn = 1; nn <= n; ++nn) {
        for (std::size_t jj = nn; jj >= 1; --jj)
            row[jj] = ExactInt(jj) * row[jj] + row[jj - 1];
        row[0] = 0;
    }
    return row[j];
}

/// True iff mu[k][r] == r! * S(k+1, r+1) across the whole of row k,
/// with S computed by the independent Stirling recurrence above.
inline bool stirling_cross_check(SarasTriangle& tri, std::size_t k) {
    const std::vector<ExactInt>& mu_row = tri.row(k);
    for (std::size_t r = 0; r <= k; ++r)
        if (mu_row[r] != factorial(r) * stirling_second(k + 1, r + 1)) return false;
    return true;
}

}  // namespace nestsum
