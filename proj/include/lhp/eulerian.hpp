#pragma once

/**
 * @file eulerian.hpp
 * @brief The h*-polynomial of the simplex of s, computed two independent
 *        ways, plus the coefficient predicates used by the classifiers.
 *
 * The primary route counts inversion sequences by ascents; the oracle route
 * counts parallelepiped points by height. Both are exact integer counts; no
 * generating-function shortcuts.
 */

#include <algorithm>
#include <optional>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "lhp/geometry.hpp"
#include "lhp/sequence.hpp"

namespace lhp {

class hstar_polynomial {
public:
    explicit hstar_polynomial(std::vector<i64> coeffs) : coeffs_(std::move(coeffs)) {
        if (coeffs_.empty())
            throw std::invalid_argument("h* polynomial needs at least one coefficient");
        for (i64 c : coeffs_)
            if (c < 0) throw std::invalid_argument("h* coefficients must be >= 0");
        if (coeffs_[0] != 1)
            throw std::invalid_argument("h*_0 must equal 1");
    }

    const std::vector<i64>& coeffs() const { return coeffs_; }
    i64 coeff(int i) const {
        return i >= 0 && i < static_cast<int>(coeffs_.size())
                   ? coeffs_[static_cast<std::size_t>(i)]
                   : 0;
    }

    /// Largest index with a nonzero coefficient (not the ambient dimension).
    int degree() const {
        int r = 0;
        for (int i = 0; i < static_cast<int>(coeffs_.size()); ++i)
            if (coeffs_[static_cast<std::size_t>(i)] != 0) r = i;
        return r;
    }

    i64 sum() const {
        i64 total = 0;
        for (i64 c : coeffs_) total = checked_add(total, c);
        return total;
    }

    /// Coefficients up to the degree, dropping trailing zeros.
    std::vector<i64> trimmed() const {
        return std::vector<i64>(coeffs_.begin(),
                                coeffs_.begin() + degree() + 1);
    }

    std::string str() const {
        std::string out;
        bool first = true;
        for (int i = 0; i <= degree(); ++i) {
            const i64 c = coeff(i);
            if (c == 0) continue;
            if (!first) out += " + ";
            first = false;
            if (i == 0 || c != 1) out += std::to_string(c);
            if (i == 1) out += "z";
            if (i > 1) out += "z^" + std::to_string(i);
        }
        return out.empty() ? "0" : out;
    }

    friend bool operator==(const hstar_polynomial&, const hstar_polynomial&) = default;

private:
    std::vector<i64> coeffs_;
};

/// coeffs[k] = number of inversion sequences of s with exactly k ascents.
/// With workers > 1 the lexicographic range splits into blocks with
/// per-thread histograms merged at the end.
inline hstar_polynomial hstar_by_ascents(const s_sequence& s,
                                         i64 budget = default_budget,
                                         int workers = 1) {
    ensure_enumerable(s, budget);
    const std::size_t slots = static_cast<std::size_t>(s.dim()) + 1;
    std::vector<i64> histogram(slots, 0);
    const i64 total = s.product();
    if (workers <= 1 || total < 4096) {
        for_each_inversion_sequence(s, [&](std::span<const i64> e) {
            ++histogram[static_cast<std::size_t>(ascent_count(s, e))];
        }, budget);
    } else {
        const int threads = static_cast<int>(std::min<i64>(workers, total));
        std::vector<std::vector<i64>> partial(
            static_cast<std::size_t>(threads), std::vector<i64>(slots, 0));
        std::vector<std::thread> pool;
        for (int w = 0; w < threads; ++w) {
            const i64 first = total * w / threads;
            const i64 last = total * (w + 1) / threads;
            pool.emplace_back([&, w, first, last] {
                auto& mine = partial[static_cast<std::size_t>(w)];
                for_each_inversion_sequence_range(s, first, last,
                    [&](std::span<const i64> e) {
                        ++mine[static_cast<std::size_t>(ascent_count(s, e))];
                    });
            });
        }
        for (auto& t : pool) t.join();
        for (const auto& part : partial)
            for (std::size_t i = 0; i < slots; ++i)
                histogram[i] = checked_add(histogram[i], part[i]);
    }
    return hstar_polynomial(std::move(histogram));
}

/// coeffs[k] = number of parallelepiped points at height k. Independent of
/// the ascent route; their agreement is a standing cross-check.
inline hstar_polynomial hstar_by_parallelepiped(const s_sequence& s,
                                                i64 budget = default_budget) {
    std::vector<i64> histogram(static_cast<std::size_t>(s.dim()) + 1, 0);
    for_each_parallelepiped_point(s, [&](std::span<const i64>, i64 k) {
        if (k < 0 || k > s.dim())
            throw consistency_error("parallelepiped height out of range");
        ++histogram[static_cast<std::size_t>(k)];
    }, budget);
    return hstar_polynomial(std::move(histogram));
}

inline bool is_palindromic(const hstar_polynomial& h) {
    const int r = h.degree();
    for (int i = 0; i <= r; ++i)
        if (h.coeff(i) != h.coeff(r - i)) return false;
    return true;
}

/// Rise-then-fall with ties allowed, over indices 0..degree.
inline bool is_unimodal(const hstar_polynomial& h) {
    const int r = h.degree();
    int i = 0;
    while (i < r && h.coeff(i) <= h.coeff(i + 1)) ++i;
    while (i < r && h.coeff(i) >= h.coeff(i + 1)) ++i;
    return i == r;
}

/// Ordered pairs (i, j) with h_{i+j} > 0 and h_i > h_j * h_{i+j}. A level
/// simplex admits none of these, so any hit refutes levelness.
inline std::vector<std::pair<int, int>>
level_inequality_violations(const hstar_polynomial& h) {
    std::vector<std::pair<int, int>> violations;
    const int r = h.degree();
    for (int i = 0; i <= r; ++i)
        for (int j = 0; i + j <= r; ++j)
            if (h.coeff(i + j) > 0 &&
                h.coeff(i) > checked_mul(h.coeff(j), h.coeff(i + j)))
                violations.emplace_back(i, j);
    return violations;
}

/// Power-series expansion of h(z)/(1-z)^(dim+1): the lattice-point counts of
/// the dilates. Term t is sum_j h_j * C(t - j + dim, dim).
inline std::vector<i64> ehrhart_series_expand(const hstar_polynomial& h, int dim,
                                              i64 t_max) {
    if (t_max < 0) throw std::invalid_argument("t_max must be >= 0");
    std::vector<i64> counts;
    counts.reserve(static_cast<std::size_t>(t_max) + 1);
    for (i64 t = 0; t <= t_max; ++t) {
        i64 total = 0;
        for (int j = 0; j <= h.degree(); ++j)
            total = checked_add(total,
                                checked_mul(h.coeff(j), checked_binomial(t - j + dim, dim)));
        counts.push_back(total);
    }
    return counts;
}

/// Index of the first zero coefficient strictly inside 0..degree, if any.
/// Computed polynomials are expected to have none; a hit is reported as a
/// finding rather than asserted.
inline std::optional<int> first_internal_zero(const hstar_polynomial& h) {
    const int r = h.degree();
    for (int i = 1; i < r; ++i)
        if (h.coeff(i) == 0) return i;
    return std::nullopt;
}

} // namespace lhp
