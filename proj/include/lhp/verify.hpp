#pragma once

/**
 * @file verify.hpp
 * @brief Built-in golden suite: reference sequences with known h*-vectors
 *        and chain certificates, plus a handful of named spot checks. Every
 *        value here was independently recomputed by brute force before
 *        being frozen.
 */

#include <string>
#include <vector>

#include "lhp/eulerian.hpp"
#include "lhp/geometry.hpp"
#include "lhp/gorenstein.hpp"
#include "lhp/level.hpp"

namespace lhp {

struct reference_row {
    std::vector<i64> s;
    std::vector<i64> c; ///< forward chain, no tail
    std::vector<i64> d; ///< chain of the reversed sequence, no tail
    std::vector<i64> hstar; ///< trimmed coefficients
};

/// Thirteen palindromic reference instances. All are Gorenstein; the chain
/// certificates re-substitute exactly.
inline const std::vector<reference_row>& reference_rows() {
    static const std::vector<reference_row> rows = {
        {{2, 1, 3, 2, 1}, {1, 1, 4, 3, 2}, {1, 3, 5, 2, 5}, {1, 5, 5, 1}},
        {{3, 2, 3, 1, 2}, {1, 1, 2, 1, 3}, {1, 1, 4, 3, 5}, {1, 9, 16, 9, 1}},
        {{1, 4, 3, 2, 3}, {1, 5, 4, 3, 5}, {1, 1, 2, 3, 1}, {1, 16, 38, 16, 1}},
        {{3, 5, 2, 3, 1}, {1, 2, 1, 2, 1}, {1, 4, 3, 8, 5}, {1, 20, 48, 20, 1}},
        {{1, 2, 3, 4, 5}, {1, 3, 5, 7, 9}, {1, 1, 1, 1, 1}, {1, 26, 66, 26, 1}},
        {{1, 2, 5, 8, 3}, {1, 3, 8, 13, 5}, {1, 3, 2, 1, 1}, {1, 50, 138, 50, 1}},
        {{4, 3, 2, 5, 3}, {1, 1, 1, 3, 2}, {1, 2, 1, 2, 3}, {1, 30, 149, 149, 30, 1}},
        {{4, 7, 3, 2, 3}, {1, 2, 1, 1, 2}, {1, 1, 2, 5, 3}, {1, 43, 208, 208, 43, 1}},
        {{5, 9, 4, 3, 2}, {1, 2, 1, 1, 1}, {1, 2, 3, 7, 4}, {1, 82, 457, 457, 82, 1}},
        {{3, 5, 12, 7, 2}, {1, 2, 5, 3, 1}, {1, 4, 7, 3, 2}, {1, 175, 1084, 1084, 175, 1}},
        {{3, 11, 8, 5, 2}, {1, 4, 3, 2, 1}, {1, 3, 5, 7, 2}, {1, 180, 1139, 1139, 180, 1}},
        {{2, 7, 5, 10, 4}, {1, 4, 3, 7, 3}, {1, 3, 2, 3, 1}, {1, 181, 1218, 1218, 181, 1}},
        {{3, 8, 13, 5, 2}, {1, 3, 5, 2, 1}, {1, 3, 8, 5, 2}, {1, 213, 1346, 1346, 213, 1}},
    };
    return rows;
}

struct verify_check {
    std::string name;
    bool pass = false;
    std::string detail; ///< expected-vs-actual on failure
};

namespace detail {

inline std::string vec_str(const std::vector<i64>& v) {
    std::string out = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(v[i]);
    }
    return out + ")";
}

} // namespace detail

/// Recomputes every reference row and the named spot checks. A failed check
/// carries an expected-vs-actual message.
inline std::vector<verify_check> verify_reference_suite(i64 budget = default_budget) {
    std::vector<verify_check> checks;
    auto expect = [&](const std::string& name, bool pass, const std::string& detail) {
        checks.push_back({name, pass, pass ? "" : detail});
    };

    int row_number = 0;
    for (const auto& row : reference_rows()) {
        ++row_number;
        const s_sequence s(row.s);
        const std::string label = "row " + std::to_string(row_number) + " s=" + s.str();

        const auto h = hstar_by_ascents(s, budget).trimmed();
        expect(label + " h*", h == row.hstar,
               "expected " + detail::vec_str(row.hstar) + " got " + detail::vec_str(h));

        const auto c = solve_c_chain(s, false);
        expect(label + " c", c.has_value() && *c == row.c,
               "expected " + detail::vec_str(row.c) +
                   (c ? " got " + detail::vec_str(*c) : " got none"));

        const auto d = solve_c_chain(s.reversed(), false);
        expect(label + " d", d.has_value() && *d == row.d,
               "expected " + detail::vec_str(row.d) +
                   (d ? " got " + detail::vec_str(*d) : " got none"));

        expect(label + " gorenstein", is_gorenstein_full_chain(s).gorenstein,
               "expected a full-chain certificate");
    }

    {
        const s_sequence s({8, 6, 10, 10, 5});
        const i64 interior = count_interior_points(s, 1, budget);
        expect("interior count s=" + s.str(), interior == 39,
               "expected 39 got " + std::to_string(interior));
        expect("non-gorenstein s=" + s.str(), !is_gorenstein_full_chain(s).gorenstein,
               "expected no certificate");
    }
    {
        const s_sequence s({8, 6, 10, 10, 5, 2, 4});
        expect("gorenstein s=" + s.str(), is_gorenstein_full_chain(s).gorenstein,
               "expected a full-chain certificate");
        expect("palindromic h* s=" + s.str(),
               is_palindromic(hstar_by_ascents(s, budget)),
               "expected a palindromic h*");
    }
    {
        const s_sequence s({2, 3, 5, 9});
        const auto h = hstar_by_ascents(s, budget).trimmed();
        const std::vector<i64> expected = {1, 48, 154, 66, 1};
        expect("counterexample h* s=" + s.str(), h == expected,
               "expected " + detail::vec_str(expected) + " got " + detail::vec_str(h));

        const auto level = is_level_by_lifting(s, budget);
        expect("counterexample non-level", !level.level && level.witness_stratum == 3,
               "expected a stratum-3 witness");

        const auto strata = stratify_by_ascents(s, budget);
        expect("counterexample unliftable witness",
               !lift_exists(s, inversion_sequence(s, {1, 1, 2, 4}), 3, strata[1]),
               "(1,1,2,4) unexpectedly lifts");

        const auto violations = level_inequality_violations(hstar_by_ascents(s, budget));
        const bool has31 = std::find(violations.begin(), violations.end(),
                                     std::pair<int, int>(3, 1)) != violations.end();
        expect("counterexample coefficient violation", has31,
               "expected the (3,1) inequality violation");
    }
    return checks;
}

} // namespace lhp
