#pragma once

/**
 * @file scan.hpp
 * @brief Grid scanning: exhaustive or seeded-sample iteration over sequence
 *        space, a bounded worker pool feeding a single writer, row filters,
 *        and the two conjecture scanners.
 */

#include <algorithm>
#include <atomic>
#include <condition_variable>
#include <functional>
#include <mutex>
#include <numeric>
#include <optional>
#include <random>
#include <thread>
#include <vector>

#include "lhp/records.hpp"

namespace lhp {

/// All sequences with dim_lo <= n <= dim_hi and 1 <= s_i <= max_entry,
/// ordered by dimension, then lexicographically.
inline std::vector<s_sequence> scan_grid(int dim_lo, int dim_hi, i64 max_entry) {
    if (dim_lo < 1 || dim_hi < dim_lo) throw std::invalid_argument("bad dimension range");
    if (max_entry < 1) throw std::invalid_argument("max entry must be >= 1");
    std::vector<s_sequence> grid;
    for (int n = dim_lo; n <= dim_hi; ++n) {
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

/// Seeded sample without replacement, in grid order (deterministic for a
/// fixed seed regardless of worker count).
inline std::vector<s_sequence> sample_grid(const std::vector<s_sequence>& grid,
                                           i64 count, std::uint64_t seed) {
    if (count >= static_cast<i64>(grid.size())) return grid;
    std::vector<std::size_t> index(grid.size());
    std::iota(index.begin(), index.end(), std::size_t{0});
    std::mt19937_64 rng(seed);
    std::shuffle(index.begin(), index.end(), rng);
    index.resize(static_cast<std::size_t>(count));
    std::sort(index.begin(), index.end());
    std::vector<s_sequence> out;
    out.reserve(index.size());
    for (std::size_t i : index) out.push_back(grid[i]);
    return out;
}

enum class scan_filter {
    none,
    gorenstein,
    level,
    non_level,
    palindromic,
    conjecture51,
    conjecture52,
};

inline scan_filter parse_filter(const std::string& name) {
    if (name.empty() || name == "none") return scan_filter::none;
    if (name == "gorenstein") return scan_filter::gorenstein;
    if (name == "level") return scan_filter::level;
    if (name == "non-level") return scan_filter::non_level;
    if (name == "palindromic") return scan_filter::palindromic;
    if (name == "conjecture51") return scan_filter::conjecture51;
    if (name == "conjecture52") return scan_filter::conjecture52;
    throw std::invalid_argument("unknown filter '" + name + "'");
}

/// Chain variant with the gcd term shifted one step forward: the j-th step
/// uses gcd(s_j, s_{j+1}), so the final step has no defined term and is skipped.
inline std::optional<std::vector<i64>> solve_shifted_chain(const s_sequence& s) {
    std::vector<i64> c{1};
    for (int j = 1; j + 1 < s.dim(); ++j) {
        const i64 num = checked_add(checked_mul(c.back(), s.at(j)),
                                    std::gcd(s.at(j), s.at(j + 1)));
        if (num % s.at(j - 1) != 0) return std::nullopt;
        c.push_back(num / s.at(j - 1));
    }
    return c;
}

inline bool all_adjacent_gcds_at_least_two(const s_sequence& s) {
    if (s.dim() < 2) return false;
    for (int i = 0; i + 1 < s.dim(); ++i)
        if (std::gcd(s.at(i), s.at(i + 1)) < 2) return false;
    return true;
}

/// Does the record pass the filter? Conjecture filters select counterexample
/// rows: sequences where the conjectured criterion and the computed truth
/// disagree.
inline bool record_matches_filter(const scan_record& record, const s_sequence& s,
                                  scan_filter filter) {
    if (record.error) return filter == scan_filter::none;
    switch (filter) {
    case scan_filter::none: return true;
    case scan_filter::gorenstein: return record.gorenstein;
    case scan_filter::level: return record.level;
    case scan_filter::non_level: return !record.level;
    case scan_filter::palindromic: return record.palindromic;
    case scan_filter::conjecture51: {
        if (!all_adjacent_gcds_at_least_two(s)) return false;
        const bool two_chain = solve_c_chain(s, false).has_value() &&
                               solve_c_chain(s.reversed(), false).has_value();
        return two_chain != record.palindromic;
    }
    case scan_filter::conjecture52:
        return solve_c_chain(s, false).has_value() && !record.level;
    }
    return false;
}

/// Runs records through a bounded worker pool. The writer callback runs on
/// the calling thread only. With one worker rows arrive in input order; with
/// several they arrive in completion order unless sorted is requested, in
/// which case rows are buffered, ordered canonically (dimension, then
/// lexicographic s) and volatile timing is zeroed so output is reproducible.
inline void run_scan(const std::vector<s_sequence>& items, const run_config& config,
                     scan_filter filter,
                     const std::function<void(const scan_record&)>& write) {
    config.validate();

    auto emit_in_order = [&](std::vector<scan_record> rows) {
        std::vector<std::size_t> order(rows.size());
        std::iota(order.begin(), order.end(), std::size_t{0});
        std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
            if (rows[a].s.size() != rows[b].s.size())
                return rows[a].s.size() < rows[b].s.size();
            return rows[a].s < rows[b].s;
        });
        for (std::size_t i : order) {
            rows[i].runtime_ms = 0;
            write(rows[i]);
        }
    };

    if (config.workers == 1) {
        std::vector<scan_record> buffered;
        for (const auto& s : items) {
            auto record = compute_record(s, config.budget);
            if (!record_matches_filter(record, s, filter)) continue;
            if (config.sort_output)
                buffered.push_back(std::move(record));
            else
                write(record);
        }
        if (config.sort_output) emit_in_order(std::move(buffered));
        return;
    }

    struct channel {
        std::mutex mutex;
        std::condition_variable ready;
        std::vector<scan_record> pending;
        int live_workers = 0;
        std::exception_ptr failure;
    } chan;

    std::atomic<std::size_t> next{0};
    chan.live_workers = config.workers;
    std::vector<std::thread> pool;
    for (int w = 0; w < config.workers; ++w) {
        pool.emplace_back([&] {
            try {
                for (;;) {
                    const std::size_t i = next.fetch_add(1);
                    if (i >= items.size()) break;
                    auto record = compute_record(items[i], config.budget);
                    if (!record_matches_filter(record, items[i], filter)) continue;
                    std::lock_guard lock(chan.mutex);
                    chan.pending.push_back(std::move(record));
                    chan.ready.notify_one();
                }
            } catch (...) {
                std::lock_guard lock(chan.mutex);
                if (!chan.failure) chan.failure = std::current_exception();
            }
            std::lock_guard lock(chan.mutex);
            --chan.live_workers;
            chan.ready.notify_one();
        });
    }

    std::vector<scan_record> buffered;
    for (;;) {
        std::unique_lock lock(chan.mutex);
        chan.ready.wait(lock, [&] {
            return !chan.pending.empty() || chan.live_workers == 0;
        });
        std::vector<scan_record> batch = std::move(chan.pending);
        chan.pending.clear();
        const bool done = chan.live_workers == 0 && batch.empty();
        lock.unlock();
        if (done) break;
        for (auto& record : batch) {
            if (config.sort_output)
                buffered.push_back(std::move(record));
            else
                write(record);
        }
    }
    for (auto& t : pool) t.join();
    if (chan.failure) std::rethrow_exception(chan.failure);
    if (config.sort_output) emit_in_order(std::move(buffered));
}

struct conjecture51_report {
    i64 eligible = 0; ///< sequences with every adjacent gcd >= 2
    std::vector<s_sequence> standard_indexing_mismatches;
    std::vector<s_sequence> shifted_indexing_mismatches;
};

/// Tests the conjectured two-chain Gorenstein criterion against
/// palindromicity on the all-adjacent-gcd>=2 part of the grid, under both
/// readings of the gcd index. Mismatches are findings, not errors.
inline conjecture51_report scan_conjecture51(const std::vector<s_sequence>& grid,
                                             i64 budget = default_budget) {
    conjecture51_report report;
    for (const auto& s : grid) {
        if (!all_adjacent_gcds_at_least_two(s)) continue;
        ++report.eligible;
        const bool palindromic = is_palindromic(hstar_by_ascents(s, budget));
        const bool standard = solve_c_chain(s, false).has_value() &&
                              solve_c_chain(s.reversed(), false).has_value();
        if (standard != palindromic) report.standard_indexing_mismatches.push_back(s);
        const bool shifted = solve_shifted_chain(s).has_value() &&
                             solve_shifted_chain(s.reversed()).has_value();
        if (shifted != palindromic) report.shifted_indexing_mismatches.push_back(s);
    }
    return report;
}

struct conjecture52_report {
    i64 hypothesis_count = 0; ///< sequences whose plain chain closes
    std::vector<std::pair<s_sequence, inversion_sequence>> counterexamples;
};

/// Tests "chain closes implies level" on the grid. A counterexample would be
/// a chain-closing sequence that is not level; it is recorded with the
/// unliftable witness.
inline conjecture52_report scan_conjecture52(const std::vector<s_sequence>& grid,
                                             i64 budget = default_budget) {
    conjecture52_report report;
    for (const auto& s : grid) {
        if (!solve_c_chain(s, false).has_value()) continue;
        ++report.hypothesis_count;
        const auto level = is_level_by_lifting(s, budget);
        if (!level.level)
            report.counterexamples.emplace_back(s, *level.witness);
    }
    return report;
}

} // namespace lhp
