#pragma once

#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>

namespace nestsum {

/// Arbitrary-precision signed integer; all arithmetic is exact.
using ExactInt = boost::multiprecision::cpp_int;

/// base^exp with the convention 0^0 = 1.
inline ExactInt pow_int(const ExactInt& base, std::uint64_t exp) {
    ExactInt result = 1;
    ExactInt b = base;
    while (exp != 0) {
        if (exp & 1) result *= b;
        exp >>= 1;
        if (exp != 0) b *= b;
    }
    return result;
}

inline ExactInt factorial(std::uint64_t n) {
    ExactInt result = 1;
    for (std::uint64_t i = 2; i <= n; ++i) result *= i;
    return result;
}

/// C(n, r) by the multiplicative product with running exact division.
/// Out-of-range r (r < 0 or r > n) gives 0, so sums over binomials may run
/// past their support and the vanishing terms take care of themselves.
/// Negative n is rejected.
inline ExactInt binomial(const ExactInt& n, const ExactInt& r) {
    if (n < 0) throw std::invalid_argument("binomial: negative upper argument");
    if (r < 0 || r > n) return 0;
    const ExactInt steps = r <= n - r ? r : ExactInt(n - r);
    ExactInt result = 1;
    for (ExactInt i = 1; i <= steps; ++i) {
        result *= n - steps + i;
        result /= i;  // exact: result is C(n - steps + i, i) after this step
    }
    return result;
}

/// Rational in lowest terms: gcd(|num|, den) = 1, den >= 1, zero is 0/1.
/// The constructor performs the reduction; values stay canonical under
/// arithmetic.
class ExactRational {
public:
    ExactRational() : num_(0), den_(1) {}
    ExactRational(std::int64_t value) : num_(value), den_(1) {}
    ExactRational(ExactInt value) : num_(std::move(value)), den_(1) {}
    ExactRational(ExactInt numerator, ExactInt denominator)
        : num_(std::move(numerator)), den_(std::move(denominator)) {
        if (den_ == 0) throw std::invalid_argument("ExactRational: zero denominator");
        reduce();
    }

    const ExactInt& num() const noexcept { return num_; }
    const ExactInt& den() const noexcept { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_ == 1; }

    ExactRational operator-() const {
        ExactRational r = *this;
        r.num_ = -r.num_;
        return r;
    }

    ExactRational& operator+=(const ExactRational& o) {
        return *this = ExactRational(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
    }
    ExactRational& operator-=(const ExactRational& o) {
        return *this = ExactRational(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
    }
    ExactRational& operator*=(const ExactRational& o) {
        return *this = ExactRational(num_ * o.num_, den_ * o.den_);
    }
    ExactRational& operator/=(const ExactRational& o) {
        if (o.num_ == 0) throw std::invalid_argument("ExactRational: division by zero");
        return *this = ExactRational(num_ * o.den_, den_ * o.num_);
    }

    friend ExactRational operator+(ExactRational a, const ExactRational& b) { return a += b; }
    friend ExactRational operator-(ExactRational a, const ExactRational& b) { return a -= b; }
    friend ExactRational operator*(ExactRational a, const ExactRational& b) { return a *= b; }
    friend ExactRational operator/(ExactRational a, const ExactRational& b) { return a /= b; }

    friend bool operator==(const ExactRational& a, const ExactRational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const ExactRational& a, const ExactRational& b) { return !(a == b); }
    friend bool operator<(const ExactRational& a, const ExactRational& b) {
        return a.num_ * b.den_ < b.num_ * a.den_;  // denominators are positive
    }
    friend bool operator>(const ExactRational& a, const ExactRational& b) { return b < a; }
    friend bool operator<=(const ExactRational& a, const ExactRational& b) { return !(b < a); }
    friend bool operator>=(const ExactRational& a, const ExactRational& b) { return !(a < b); }

    /// "num/den", or just "num" when the value is integral.
    std::string str() const {
        return den_ == 1 ? num_.str() : num_.str() + "/" + den_.str();
    }

    friend std::ostream& operator<<(std::ostream& os, const ExactRational& r) {
        return os << r.str();
    }

private:
    void reduce() {
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        ExactInt g = boost::multiprecision::gcd(boost::multiprecision::abs(num_), den_);
        if (g > 1) {
            num_ /= g;
            den_ /= g;
        }
    }

    ExactInt num_;
    ExactInt den_;
};

}  // namespace nestsum
