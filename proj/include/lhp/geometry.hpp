#pragma once

/**
 * @file geometry.hpp
 * @brief Exact lattice-point geometry of the simplex attached to s.
 *
 * The simplex lives in R^n: 0 <= x_1/s_1 <= ... <= x_n/s_n <= 1, with
 * vertices v_0 = 0 and v_i = (0,...,0,s_i,...,s_n). Everything here works by
 * direct enumeration with exact arithmetic and serves as the independent
 * oracle layer: the fast counting paths live elsewhere and are tested
 * against these routines.
 *
 * A lattice point of the half-open fundamental parallelepiped over the
 * vertex rays is stored together with its height k and its barycentric
 * coordinates eta_0..eta_n, which satisfy
 *     lambda_j = s_j (eta_1 + ... + eta_j),   k = eta_0 + ... + eta_n,
 * all eta_i in [0,1). The triangular solve is
 *     eta_j = lambda_j/s_j - lambda_{j-1}/s_{j-1}   (lambda_0/s_0 := 0),
 *     eta_0 = k - lambda_n/s_n.
 */

#include <optional>
#include <span>
#include <vector>

#include "lhp/rational.hpp"
#include "lhp/sequence.hpp"

namespace lhp {

struct parallelepiped_point {
    std::vector<i64> coords; ///< lambda_1..lambda_n
    i64 height = 0;          ///< k, the last coordinate in R^{n+1}
    std::vector<rational> eta; ///< eta_0..eta_n, each in [0,1)

    friend bool operator==(const parallelepiped_point& a, const parallelepiped_point& b) {
        return a.coords == b.coords && a.height == b.height;
    }
};

/// Vertices in the fixed report order: v_0 = origin, then v_i for i = 1..n.
inline std::vector<std::vector<i64>> polytope_vertices(const s_sequence& s) {
    const int n = s.dim();
    std::vector<std::vector<i64>> verts;
    verts.reserve(static_cast<std::size_t>(n) + 1);
    verts.emplace_back(static_cast<std::size_t>(n), 0);
    for (int i = 1; i <= n; ++i) {
        std::vector<i64> v(static_cast<std::size_t>(n), 0);
        for (int j = i; j <= n; ++j) v[static_cast<std::size_t>(j - 1)] = s.at(j - 1);
        verts.push_back(std::move(v));
    }
    return verts;
}

/// Membership of an integer point in the t-th dilate: the chain
/// 0 <= x_1/s_1 <= ... <= x_n/s_n <= t, cross-multiplied.
inline bool contains_dilate(const s_sequence& s, std::span<const i64> point, i64 t) {
    if (static_cast<int>(point.size()) != s.dim() || t < 0) return false;
    if (point[0] < 0) return false;
    for (int j = 1; j < s.dim(); ++j)
        if (!ratio_less_equal(point[static_cast<std::size_t>(j - 1)], s.at(j - 1),
                              point[static_cast<std::size_t>(j)], s.at(j)))
            return false;
    return point[static_cast<std::size_t>(s.dim() - 1)] <= t * s.at(s.dim() - 1);
}

namespace detail {

// Chain enumeration of the dilate: level j ranges over the integers x with
// x/s_j >= prev/s_{j-1} and x <= t*s_j. Every visited node is charged.
template <class F>
void dilate_rec(const s_sequence& s, i64 t, int j, std::vector<i64>& point,
                work_meter& meter, F&& fn) {
    const int n = s.dim();
    if (j == n) {
        fn(std::span<const i64>(point));
        return;
    }
    i64 lo = 0;
    if (j > 0) {
        const i128 num = static_cast<i128>(point[static_cast<std::size_t>(j - 1)]) * s.at(j);
        const i64 den = s.at(j - 1);
        lo = static_cast<i64>((num + den - 1) / den); // ceil, operands nonnegative
    }
    const i64 hi = checked_mul(t, s.at(j));
    for (i64 v = lo; v <= hi; ++v) {
        meter.charge();
        point[static_cast<std::size_t>(j)] = v;
        dilate_rec(s, t, j + 1, point, meter, fn);
    }
}

} // namespace detail

/// Visits every lattice point of the t-th dilate exactly once, in
/// lexicographic order.
template <class F>
void for_each_dilate_point(const s_sequence& s, i64 t, F&& fn,
                           i64 budget = default_budget) {
    if (t < 0) throw std::invalid_argument("dilation factor must be >= 0");
    work_meter meter(budget);
    std::vector<i64> point(static_cast<std::size_t>(s.dim()), 0);
    detail::dilate_rec(s, t, 0, point, meter, fn);
}

inline i64 count_dilate_points(const s_sequence& s, i64 t, i64 budget = default_budget) {
    i64 count = 0;
    for_each_dilate_point(s, t, [&](std::span<const i64>) { ++count; }, budget);
    return count;
}

inline std::vector<std::vector<i64>> dilate_lattice_points(const s_sequence& s, i64 t,
                                                           i64 budget = default_budget) {
    std::vector<std::vector<i64>> points;
    for_each_dilate_point(s, t, [&](std::span<const i64> p) {
        points.emplace_back(p.begin(), p.end());
    }, budget);
    return points;
}

/// Number of lattice points with 0 < x_1/s_1 < ... < x_n/s_n < t (all strict).
inline i64 count_interior_points(const s_sequence& s, i64 t, i64 budget = default_budget) {
    if (t < 1) throw std::invalid_argument("dilation factor must be >= 1");
    work_meter meter(budget);
    const int n = s.dim();
    i64 count = 0;
    std::vector<i64> point(static_cast<std::size_t>(n), 0);
    auto rec = [&](auto&& self, int j) -> void {
        if (j == n) {
            ++count;
            return;
        }
        i64 lo = 1;
        if (j > 0) {
            // smallest integer strictly above prev*s_j/s_{j-1}
            const i128 num = static_cast<i128>(point[static_cast<std::size_t>(j - 1)]) * s.at(j);
            const i64 den = s.at(j - 1);
            lo = static_cast<i64>(num / den) + 1;
        }
        const i64 hi = checked_mul(t, s.at(j)) - 1;
        for (i64 v = lo; v <= hi; ++v) {
            meter.charge();
            point[static_cast<std::size_t>(j)] = v;
            self(self, j + 1);
        }
    };
    rec(rec, 0);
    return count;
}

/// Solves the triangular eta-system for (lambda, k). Returns the point with
/// its exact barycentric coordinates iff every eta_i lies in [0,1).
inline std::optional<parallelepiped_point>
parallelepiped_membership(const s_sequence& s, std::span<const i64> coords, i64 k) {
    const int n = s.dim();
    if (static_cast<int>(coords.size()) != n)
        throw std::invalid_argument("point has wrong dimension");
    std::vector<rational> eta(static_cast<std::size_t>(n) + 1);
    rational prev(0);
    for (int j = 0; j < n; ++j) {
        const rational r(coords[static_cast<std::size_t>(j)], s.at(j));
        const rational e = r - prev;
        if (e < rational(0) || e >= rational(1)) return std::nullopt;
        eta[static_cast<std::size_t>(j) + 1] = e;
        prev = r;
    }
    const rational eta0 = rational(k) - prev;
    if (eta0 < rational(0) || eta0 >= rational(1)) return std::nullopt;
    eta[0] = eta0;
    parallelepiped_point point;
    point.coords.assign(coords.begin(), coords.end());
    point.height = k;
    point.eta = std::move(eta);
    return point;
}

/// Visits every integer point of the fundamental parallelepiped. Level j
/// scans lambda_j over [0, n*s_j) and keeps the values whose eta_j lands in
/// [0,1); the height is then forced by the eta_0 window.
template <class F>
void for_each_parallelepiped_point(const s_sequence& s, F&& fn,
                                   i64 budget = default_budget) {
    ensure_enumerable(s, budget); // the parallelepiped holds exactly prod(s_i) points
    const int n = s.dim();
    std::vector<i64> lam(static_cast<std::size_t>(n), 0);
    auto rec = [&](auto&& self, int j) -> void {
        if (j == n) {
            const i64 last = lam[static_cast<std::size_t>(n - 1)];
            const i64 k = (last + s.at(n - 1) - 1) / s.at(n - 1); // unique height
            fn(std::span<const i64>(lam), k);
            return;
        }
        const i64 prev = j == 0 ? 0 : lam[static_cast<std::size_t>(j - 1)];
        const i64 prev_s = j == 0 ? 1 : s.at(j - 1);
        const i64 window = checked_mul(static_cast<i64>(n), s.at(j));
        // eta_j in [0,1)  <=>  prev*s_j <= v*prev_s < (prev + prev_s)*s_j
        const i128 lo = static_cast<i128>(prev) * s.at(j);
        const i128 hi = lo + static_cast<i128>(prev_s) * s.at(j);
        for (i64 v = 0; v < window; ++v) {
            const i128 scaled = static_cast<i128>(v) * prev_s;
            if (scaled < lo) continue;
            if (scaled >= hi) break;
            lam[static_cast<std::size_t>(j)] = v;
            self(self, j + 1);
        }
    };
    rec(rec, 0);
}

/// All parallelepiped points, grouped by ascending height (lexicographic
/// within a height class). Each emitted point is re-verified through the
/// independent eta-solve.
inline std::vector<parallelepiped_point>
enumerate_parallelepiped(const s_sequence& s, i64 budget = default_budget) {
    std::vector<parallelepiped_point> points;
    points.reserve(static_cast<std::size_t>(s.product()));
    for_each_parallelepiped_point(s, [&](std::span<const i64> lam, i64 k) {
        auto point = parallelepiped_membership(s, lam, k);
        if (!point)
            throw consistency_error("enumerated point failed the eta-solve filter");
        points.push_back(std::move(*point));
    }, budget);
    std::stable_sort(points.begin(), points.end(),
                     [](const parallelepiped_point& a, const parallelepiped_point& b) {
                         if (a.height != b.height) return a.height < b.height;
                         return a.coords < b.coords;
                     });
    return points;
}

/// e_i = (-lambda_i) mod s_i. Inverse of inversion_to_point.
inline inversion_sequence point_to_inversion(const s_sequence& s,
                                             std::span<const i64> coords) {
    const int n = s.dim();
    if (static_cast<int>(coords.size()) != n)
        throw std::invalid_argument("point has wrong dimension");
    std::vector<i64> e(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        const i64 m = s.at(i);
        const i64 rem = coords[static_cast<std::size_t>(i)] % m;
        e[static_cast<std::size_t>(i)] = rem == 0 ? 0 : (rem > 0 ? m - rem : -rem);
    }
    return inversion_sequence::trusted(std::move(e));
}

inline inversion_sequence point_to_inversion(const s_sequence& s,
                                             const parallelepiped_point& p) {
    return point_to_inversion(s, std::span<const i64>(p.coords));
}

/// lambda_j = l*s_j - e_j where l counts the ascents at positions < j.
/// The image lies in the parallelepiped at height asc(e).
inline parallelepiped_point inversion_to_point(const s_sequence& s,
                                               const inversion_sequence& e) {
    const int n = s.dim();
    if (e.dim() != n) throw std::invalid_argument("inversion sequence has wrong dimension");
    std::vector<i64> lam(static_cast<std::size_t>(n));
    i64 ascents_before = 0;
    for (int j = 0; j < n; ++j) {
        if (ascent_at(s, std::span<const i64>(e.entries()), j)) ++ascents_before;
        lam[static_cast<std::size_t>(j)] =
            checked_sub(checked_mul(ascents_before, s.at(j)), e.at(j));
    }
    const i64 k = ascent_count(s, e);
    auto point = parallelepiped_membership(s, lam, k);
    if (!point)
        throw consistency_error("inversion-sequence image not in the parallelepiped");
    return *point;
}

/// The degree-one correspondence: non-vertex lattice points of the simplex
/// paired with their single-ascent inversion sequences via
/// x_i -> (s_i - x_i) mod s_i. Returned in lexicographic point order.
inline std::vector<std::pair<std::vector<i64>, inversion_sequence>>
height1_bijection(const s_sequence& s, i64 budget = default_budget) {
    const auto verts = polytope_vertices(s);
    std::vector<std::pair<std::vector<i64>, inversion_sequence>> pairs;
    for_each_dilate_point(s, 1, [&](std::span<const i64> p) {
        std::vector<i64> point(p.begin(), p.end());
        for (const auto& v : verts)
            if (point == v) return;
        pairs.emplace_back(point, point_to_inversion(s, p));
    }, budget);
    return pairs;
}

} // namespace lhp
