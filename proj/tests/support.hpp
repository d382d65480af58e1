#pragma once

// Shared test helpers: seeded random sequence generation and the sumset
// decomposition oracle used by the integer-decomposition checks.

#include <random>
#include <set>
#include <vector>

#include "lhp/geometry.hpp"
#include "lhp/sequence.hpp"

namespace lhp::test {

/// Random sequence with dim in [1, max_dim], entries in [1, max_entry],
/// product capped by rejection sampling.
inline s_sequence random_sequence(std::mt19937_64& rng, int max_dim, i64 max_entry,
                                  i64 product_cap) {
    std::uniform_int_distribution<int> dim_dist(1, max_dim);
    std::uniform_int_distribution<i64> entry_dist(1, max_entry);
    for (;;) {
        const int n = dim_dist(rng);
        std::vector<i64> entries(static_cast<std::size_t>(n));
        i64 product = 1;
        bool ok = true;
        for (auto& v : entries) {
            v = entry_dist(rng);
            product *= v;
            if (product > product_cap) {
                ok = false;
                break;
            }
        }
        if (ok) return s_sequence(std::move(entries));
    }
}

/// Exhaustive grid {s : dim in [1, max_dim], 1 <= s_i <= max_entry}.
inline std::vector<s_sequence> grid_of_sequences(int max_dim, i64 max_entry) {
    std::vector<s_sequence> grid;
    for (int n = 1; n <= max_dim; ++n) {
        std::vector<i64> entries(static_cast<std::size_t>(n), 1);
        for (;;) {
            grid.emplace_back(entries);
            int i = n - 1;
            while (i >= 0 && entries[static_cast<std::size_t>(i)] == max_entry) {
                entries[static_cast<std::size_t>(i)] = 1;
                --i;
            }
            if (i < 0) break;
            ++entries[static_cast<std::size_t>(i)];
        }
    }
    return grid;
}

/// Does every lattice point of the t-th dilate split into t points of the
/// polytope? Decided by iterated sumsets.
inline bool decomposes_into_degree_one(const s_sequence& s, int t,
                                       i64 budget = default_budget) {
    const auto base = dilate_lattice_points(s, 1, budget);
    std::set<std::vector<i64>> reachable(base.begin(), base.end());
    for (int step = 2; step <= t; ++step) {
        std::set<std::vector<i64>> next;
        for (const auto& a : reachable)
            for (const auto& b : base) {
                std::vector<i64> sum(a.size());
                for (std::size_t i = 0; i < a.size(); ++i) sum[i] = a[i] + b[i];
                next.insert(std::move(sum));
            }
        reachable = std::move(next);
    }
    for (const auto& p : dilate_lattice_points(s, t, budget))
        if (!reachable.contains(p)) return false;
    return true;
}

} // namespace lhp::test
