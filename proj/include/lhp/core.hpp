#pragma once

/**
 * @file core.hpp
 * @brief Checked 64-bit integer arithmetic and the error types used
 *        throughout the library.
 *
 * Every quantity in this library is an exact integer or an exact rational.
 * Arithmetic that could leave the representable range throws
 * lhp::overflow_error instead of wrapping. Rational comparisons are done by
 * cross-multiplication in a 128-bit intermediate, which cannot overflow for
 * 64-bit operands, so ordering decisions are always bit-exact.
 */

#include <cstdint>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>

namespace lhp {

using i64 = std::int64_t;
using i128 = __int128;

/// Default cap on enumeration work (number of lattice points / inversion
/// sequences visited). Overridable per call and via the CLI.
inline constexpr i64 default_budget = 100'000'000;

class overflow_error : public std::overflow_error {
public:
    explicit overflow_error(const std::string& what)
        : std::overflow_error(what) {}
};

class budget_error : public std::runtime_error {
public:
    explicit budget_error(const std::string& what)
        : std::runtime_error(what) {}
};

/// Two provably-equivalent computations disagreed. This is a bug detector,
/// not a user error.
class consistency_error : public std::logic_error {
public:
    explicit consistency_error(const std::string& what)
        : std::logic_error(what) {}
};

inline i64 checked_add(i64 a, i64 b) {
    i64 r;
    if (__builtin_add_overflow(a, b, &r))
        throw overflow_error("integer addition overflow");
    return r;
}

inline i64 checked_sub(i64 a, i64 b) {
    i64 r;
    if (__builtin_sub_overflow(a, b, &r))
        throw overflow_error("integer subtraction overflow");
    return r;
}

inline i64 checked_mul(i64 a, i64 b) {
    i64 r;
    if (__builtin_mul_overflow(a, b, &r))
        throw overflow_error("integer multiplication overflow");
    return r;
}

/// a/b < c/d with b, d > 0, decided by cross-multiplication in 128 bits.
inline bool ratio_less(i64 a, i64 b, i64 c, i64 d) {
    return static_cast<i128>(a) * d < static_cast<i128>(c) * b;
}

inline bool ratio_less_equal(i64 a, i64 b, i64 c, i64 d) {
    return static_cast<i128>(a) * d <= static_cast<i128>(c) * b;
}

/// Exact binomial coefficient; throws on overflow rather than saturating.
inline i64 checked_binomial(i64 n, i64 k) {
    if (k < 0 || n < 0 || k > n) return 0;
    k = std::min(k, n - k);
    i64 result = 1;
    for (i64 i = 1; i <= k; ++i) {
        // multiply first, divide after: the running value stays integral
        i128 wide = static_cast<i128>(result) * (n - k + i);
        wide /= i;
        if (wide > std::numeric_limits<i64>::max())
            throw overflow_error("binomial coefficient overflow");
        result = static_cast<i64>(wide);
    }
    return result;
}

/// Counts enumeration work against a budget; throws budget_error when spent.
class work_meter {
public:
    explicit work_meter(i64 budget) : remaining_(budget) {}

    void charge(i64 units = 1) {
        remaining_ -= units;
        if (remaining_ < 0)
            throw budget_error("enumeration budget exceeded");
    }

    i64 remaining() const { return remaining_; }

private:
    i64 remaining_;
};

} // namespace lhp
