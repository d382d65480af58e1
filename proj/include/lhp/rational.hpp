#pragma once

/**
 * @file rational.hpp
 * @brief Exact rational numbers on checked 64-bit integers.
 *
 * Values are kept in lowest terms with a positive denominator, so they can be
 * printed and compared as certificates. Construction and arithmetic throw
 * lhp::overflow_error if a numerator or denominator would leave the 64-bit
 * range; comparisons go through 128-bit cross-multiplication and are total.
 */

#include <compare>
#include <numeric>
#include <ostream>
#include <string>

#include "lhp/core.hpp"

namespace lhp {

class rational {
public:
    rational() : num_(0), den_(1) {}
    rational(i64 value) : num_(value), den_(1) {} // NOLINT(google-explicit-constructor)

    rational(i64 num, i64 den) {
        if (den == 0) throw std::invalid_argument("rational: zero denominator");
        if (den < 0) { num = checked_mul(num, -1); den = checked_mul(den, -1); }
        const i64 g = std::gcd(num, den);
        num_ = g ? num / g : num;
        den_ = g ? den / g : den;
    }

    i64 num() const { return num_; }
    i64 den() const { return den_; }

    bool is_integer() const { return den_ == 1; }

    friend rational operator+(const rational& a, const rational& b) {
        const i64 g = std::gcd(a.den_, b.den_);
        const i64 bd = b.den_ / g;
        const i64 n = checked_add(checked_mul(a.num_, bd),
                                  checked_mul(b.num_, a.den_ / g));
        return rational(n, checked_mul(a.den_, bd));
    }

    friend rational operator-(const rational& a, const rational& b) {
        return a + rational(checked_mul(b.num_, -1), b.den_);
    }

    friend bool operator==(const rational& a, const rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    friend std::strong_ordering operator<=>(const rational& a, const rational& b) {
        const i128 lhs = static_cast<i128>(a.num_) * b.den_;
        const i128 rhs = static_cast<i128>(b.num_) * a.den_;
        if (lhs < rhs) return std::strong_ordering::less;
        if (lhs > rhs) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    std::string str() const {
        if (den_ == 1) return std::to_string(num_);
        return std::to_string(num_) + "/" + std::to_string(den_);
    }

    friend std::ostream& operator<<(std::ostream& os, const rational& r) {
        return os << r.str();
    }

private:
    i64 num_;
    i64 den_;
};

} // namespace lhp
