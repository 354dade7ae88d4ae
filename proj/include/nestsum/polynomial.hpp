#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "nestsum/error.hpp"
#include "nestsum/exact.hpp"
#include "nestsum/saras.hpp"

namespace nestsum {

inline constexpr std::size_t kDefaultDegreeCap = 256;

/// Dense polynomial in one indeterminate n over ExactRational.
/// Coefficients are stored ascending by power. The top coefficient is nonzero
/// unless the polynomial is identically zero, which is stored as a single 0.
class Polynomial {
public:
    Polynomial() : coeffs_(1) {}
    explicit Polynomial(std::vector<ExactRational> coeffs) : coeffs_(std::move(coeffs)) {
        if (coeffs_.empty()) coeffs_.emplace_back();
        trim();
    }

    std::size_t degree() const noexcept { return coeffs_.size() - 1; }
    bool is_zero() const { return coeffs_.size() == 1 && coeffs_[0].is_zero(); }
    const std::vector<ExactRational>& coefficients() const noexcept { return coeffs_; }
    const ExactRational& leading() const { return coeffs_.back(); }

    /// Coefficient of n^i; 0 beyond the degree.
    const ExactRational& operator[](std::size_t i) const {
        static const ExactRational zero;
        return i < coeffs_.size() ? coeffs_[i] : zero;
    }

    /// Horner evaluation at an integer point.
    ExactRational evaluate(const ExactInt& n) const {
        const ExactRational x(n);
        ExactRational acc = coeffs_.back();
        for (std::size_t i = coeffs_.size() - 1; i-- > 0;) acc = acc * x + coeffs_[i];
        return acc;
    }

    Polynomial& operator+=(const Polynomial& o) {
        if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
        trim();
        return *this;
    }
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<ExactRational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
                out[i + j] += a.coeffs_[i] * b.coeffs_[j];
        return Polynomial(std::move(out));
    }

    friend Polynomial operator*(const Polynomial& p, const ExactRational& s) {
        if (s.is_zero()) return {};
        std::vector<ExactRational> out = p.coeffs_;
        for (ExactRational& c : out) c *= s;
        return Polynomial(std::move(out));
    }

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        return a.coeffs_ == b.coeffs_;
    }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

private:
    void trim() {
        while (coeffs_.size() > 1 && coeffs_.back().is_zero()) coeffs_.pop_back();
    }

    std::vector<ExactRational> coeffs_;
};

/// Expand  sum_{i=0}^{k} C(n+m-1, m+i) mu[k][i]  with n as the indeterminate.
/// Each binomial is the degree-(m+i) polynomial
/// (n+m-1)(n+m-2)...(n-i) / (m+i)!, built up one linear factor at a time, so
/// the running product is shared across terms. The result has degree m + k
/// with leading coefficient k!/(m+k)!.
inline Polynomial expand_formula(std::uint64_t m, std::uint64_t k, SarasTriangle& tri,
                                 std::size_t degree_cap = kDefaultDegreeCap) {
    if (m + k > degree_cap)
        throw cap_error("expand_formula: degree " + std::to_string(m + k) + " exceeds cap " +
                        std::to_string(degree_cap));
    const std::vector<ExactInt>& mu_row = tri.row(k);
    Polynomial result;
    Polynomial product(std::vector<ExactRational>{ExactRational(1)});
    ExactInt fact = 1;  // t! for the t factors multiplied in so far
    std::uint64_t t = 0;
    for (std::uint64_t i = 0; i <= k; ++i) {
        while (t < m + i) {
            const ExactInt c = ExactInt(m) - 1 - ExactInt(t);  // factor (n + m - 1 - t)
            product = product * Polynomial({ExactRational(c), ExactRational(1)});
            ++t;
            fact *= t;
        }
        result += product * ExactRational(mu_row[i], fact);
    }
    return result;
}

enum class RenderFormat { text, latex, json };

namespace detail {

inline std::string text_term(const ExactRational& c, std::size_t power, bool abs_value) {
    ExactRational v = abs_value && c.num() < 0 ? -c : c;
    std::string s = v.str();
    if (power >= 1) s += "*n";
    if (power >= 2) s += "^" + std::to_string(power);
    return s;
}

inline std::string latex_term(const ExactRational& c, std::size_t power, bool abs_value) {
    const ExactRational v = abs_value && c.num() < 0 ? -c : c;
    std::string s;
    if (v.is_integer()) {
        // coefficients +-1 are left implicit except on the constant term
        if (power == 0 || (v.num() != 1 && v.num() != -1))
            s = v.num().str();
        else if (v.num() == -1)
            s = "-";
    } else {
        s = "\\frac{" + v.num().str() + "}{" + v.den().str() + "}";
    }
    if (power >= 1) s += "n";
    if (power >= 2) s += "^{" + std::to_string(power) + "}";
    return s;
}

}  // namespace detail

/// Deterministic rendering: text and latex list terms by descending power
/// with reduced fractions; json is the exact coefficient array, ascending by
/// power, with numerator and denominator as decimal strings.
inline std::string render(const Polynomial& p, RenderFormat format) {
    if (format == RenderFormat::json) {
        nlohmann::ordered_json arr = nlohmann::ordered_json::array();
        for (const ExactRational& c : p.coefficients())
            arr.push_back({{"num", c.num().str()}, {"den", c.den().str()}});
        return arr.dump();
    }
    if (p.is_zero()) return "0";
    const bool latex = format == RenderFormat::latex;
    std::string out;
    for (std::size_t i = p.coefficients().size(); i-- > 0;) {
        const ExactRational& c = p[i];
        if (c.is_zero()) continue;
        if (out.empty()) {
            out = latex ? detail::latex_term(c, i, false) : detail::text_term(c, i, false);
        } else {
            out += c.num() < 0 ? " - " : " + ";
            out += latex ? detail::latex_term(c, i, true) : detail::text_term(c, i, true);
        }
    }
    return out;
}

/// Inverse of render(p, json): parses the coefficient array back into a
/// polynomial. Malformed input is reported as std::invalid_argument.
inline Polynomial parse_json_coefficients(const std::string& text) {
    nlohmann::json arr;
    try {
        arr = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("polynomial json: ") + e.what());
    }
    if (!arr.is_array() || arr.empty())
        throw std::invalid_argument("polynomial json: expected a non-empty array");
    std::vector<ExactRational> coeffs;
    coeffs.reserve(arr.size());
    for (const auto& item : arr) {
        if (!item.is_object() || !item.contains("num") || !item.contains("den") ||
            !item["num"].is_string() || !item["den"].is_string())
            throw std::invalid_argument("polynomial json: coefficients need num/den strings");
        try {
            coeffs.emplace_back(ExactInt(item["num"].get<std::string>()),
                                ExactInt(item["den"].get<std::string>()));
        } catch (const std::runtime_error& e) {
            throw std::invalid_argument(std::string("polynomial json: ") + e.what());
        }
    }
    return Polynomial(std::move(coeffs));
}

inline std::ostream& operator<<(std::ostream& os, const Polynomial& p) {
    return os << render(p, RenderFormat::text);
}

}  // namespace nestsum
