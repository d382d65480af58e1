#pragma once

/**
 * @file level.hpp
 * @brief Levelness decisions.
 *
 * Fast path: the simplex of s is level iff every inversion sequence with
 * 1 <= k < r ascents (r = max ascent count) gains exactly one ascent after
 * componentwise mod-s addition of some single-ascent sequence. The witness
 * search runs strata top-down (k = r-1 first) and lexicographically within
 * a stratum, so the reported counterexample is deterministic.
 *
 * Oracle: the socle of the parallelepiped quotient. A point q is in the
 * socle when q + m leaves the parallelepiped for every height-1 point m
 * (integer vector addition, heights add). Level <=> all socle heights equal.
 */

#include <optional>
#include <string>
#include <unordered_set>
#include <vector>

#include "lhp/eulerian.hpp"
#include "lhp/geometry.hpp"
#include "lhp/sequence.hpp"

namespace lhp {

struct levelness_report {
    bool level = false;
    int r = 0; ///< max ascent count over all inversion sequences
    std::optional<inversion_sequence> witness; ///< first unliftable e, if any
    int witness_stratum = -1;
    std::optional<std::vector<i64>> socle_heights; ///< sorted, oracle runs only
    std::string method;
};

/// Does some single-ascent e' lift e from stratum k to stratum k+1?
inline bool lift_exists(const s_sequence& s, const inversion_sequence& e, int k,
                        const std::vector<inversion_sequence>& single_ascent) {
    for (const auto& other : single_ascent)
        if (ascent_count(s, add_mod(s, e, other)) == k + 1) return true;
    return false;
}

namespace detail {

inline int max_stratum(const std::vector<std::vector<inversion_sequence>>& strata) {
    int r = 0;
    for (int k = 0; k < static_cast<int>(strata.size()); ++k)
        if (!strata[static_cast<std::size_t>(k)].empty()) r = k;
    return r;
}

} // namespace detail

/// Every failing (e, stratum) pair, over all strata 1..r-1.
inline std::vector<std::pair<inversion_sequence, int>>
lifting_failures(const s_sequence& s, i64 budget = default_budget) {
    const auto strata = stratify_by_ascents(s, budget);
    const int r = detail::max_stratum(strata);
    const auto& ones = strata[1];
    std::vector<std::pair<inversion_sequence, int>> failures;
    for (int k = 1; k < r; ++k)
        for (const auto& e : strata[static_cast<std::size_t>(k)])
            if (!lift_exists(s, e, k, ones)) failures.emplace_back(e, k);
    return failures;
}

/// Fast levelness decision. The coefficient-inequality refuter runs first;
/// when it fires the search below is guaranteed to locate a witness, and
/// failing to do so is reported as a bug.
inline levelness_report is_level_by_lifting(const s_sequence& s,
                                            i64 budget = default_budget) {
    levelness_report report;
    report.method = "ascent-lifting";
    const auto strata = stratify_by_ascents(s, budget);
    report.r = detail::max_stratum(strata);

    std::vector<i64> coeffs(strata.size());
    for (std::size_t k = 0; k < strata.size(); ++k)
        coeffs[k] = static_cast<i64>(strata[k].size());
    const bool refuted = !level_inequality_violations(hstar_polynomial(coeffs)).empty();
    if (refuted) report.method += ", refuted by coefficient inequality";

    const auto& ones = strata[1];
    for (int k = report.r - 1; k >= 1; --k) {
        for (const auto& e : strata[static_cast<std::size_t>(k)]) {
            if (!lift_exists(s, e, k, ones)) {
                report.level = false;
                report.witness = e;
                report.witness_stratum = k;
                return report;
            }
        }
    }
    if (refuted)
        throw consistency_error("coefficient inequality refuted levelness but every "
                                "inversion sequence lifts, s=" + s.str());
    report.level = true;
    return report;
}

namespace detail {

struct point_key_hash {
    std::size_t operator()(const std::vector<i64>& v) const {
        std::size_t h = 1469598103934665603ull;
        for (i64 x : v) {
            h ^= static_cast<std::size_t>(x);
            h *= 1099511628211ull;
        }
        return h;
    }
};

} // namespace detail

/// Socle of the parallelepiped quotient: the points no height-1 point can be
/// added to without leaving the parallelepiped. Sorted by height, then lex.
inline std::vector<parallelepiped_point> socle_points(const s_sequence& s,
                                                      i64 budget = default_budget) {
    const auto points = enumerate_parallelepiped(s, budget);
    std::unordered_set<std::vector<i64>, detail::point_key_hash> member;
    member.reserve(points.size() * 2);
    for (const auto& p : points) {
        std::vector<i64> key = p.coords;
        key.push_back(p.height);
        member.insert(std::move(key));
    }
    std::vector<const parallelepiped_point*> height_one;
    for (const auto& p : points)
        if (p.height == 1) height_one.push_back(&p);

    std::vector<parallelepiped_point> socle;
    std::vector<i64> sum(static_cast<std::size_t>(s.dim()) + 1);
    for (const auto& p : points) {
        bool annihilated = true;
        for (const auto* m : height_one) {
            for (std::size_t i = 0; i < p.coords.size(); ++i)
                sum[i] = checked_add(p.coords[i], m->coords[i]);
            sum[p.coords.size()] = p.height + 1;
            if (member.contains(sum)) {
                annihilated = false;
                break;
            }
        }
        if (annihilated) socle.push_back(p);
    }
    return socle; // inherits the (height, lex) order of the enumeration
}

/// Independent levelness oracle via the socle.
inline levelness_report is_level_by_socle(const s_sequence& s,
                                          i64 budget = default_budget) {
    levelness_report report;
    report.method = "socle oracle";
    const auto socle = socle_points(s, budget);
    std::vector<i64> heights;
    heights.reserve(socle.size());
    for (const auto& p : socle) heights.push_back(p.height);
    report.r = heights.empty() ? 0 : static_cast<int>(heights.back());
    report.level = true;
    for (i64 h : heights)
        if (h != heights.back()) report.level = false;
    if (!report.level) {
        // lowest socle element corresponds to an unliftable inversion sequence
        report.witness = point_to_inversion(s, socle.front());
        report.witness_stratum = static_cast<int>(socle.front().height);
    }
    report.socle_heights = std::move(heights);
    return report;
}

/// Gorenstein = level with a one-element top stratum.
inline bool is_gorenstein_via_level(const s_sequence& s, i64 budget = default_budget) {
    const auto strata = stratify_by_ascents(s, budget);
    const int r = detail::max_stratum(strata);
    if (strata[static_cast<std::size_t>(r)].size() != 1) return false;
    return is_level_by_lifting(s, budget).level;
}

/// Leading/trailing 1-entries never change the verdict; strip them and
/// decide on the core. Disengaged when there is nothing to strip.
inline std::optional<bool> level_by_stripping_ones(const s_sequence& s,
                                                   i64 budget = default_budget) {
    const auto& entries = s.entries();
    std::size_t lo = 0, hi = entries.size();
    while (lo < hi && entries[lo] == 1) ++lo;
    while (hi > lo && entries[hi - 1] == 1) --hi;
    if (lo == 0 && hi == entries.size()) return std::nullopt;
    if (lo == hi) return true; // all-ones simplex is unimodular, hence level
    const s_sequence core(std::vector<i64>(entries.begin() + static_cast<std::ptrdiff_t>(lo),
                                           entries.begin() + static_cast<std::ptrdiff_t>(hi)));
    return is_level_by_lifting(core, budget).level;
}

/// One-directional construction: both factors level implies the
/// concatenation (s, 1, t) is level. Abstains otherwise.
inline std::optional<bool> level_free_product(const s_sequence& s, const s_sequence& t,
                                              i64 budget = default_budget) {
    if (is_level_by_lifting(s, budget).level && is_level_by_lifting(t, budget).level)
        return true;
    return std::nullopt;
}

} // namespace lhp
