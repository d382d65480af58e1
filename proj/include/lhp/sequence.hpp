#pragma once

/**
 * @file sequence.hpp
 * @brief Positive integer sequences s and their inversion sequences.
 *
 * An s_sequence is the defining data (s_1,...,s_n), all entries >= 1. The
 * inversion sequences of s are the integer tuples e with 0 <= e_i < s_i;
 * there are exactly prod(s_i) of them and they are enumerated in
 * lexicographic order (part of the contract: golden files depend on it).
 *
 * The ascent statistic uses the boundary convention (s_0, e_0) = (1, 0),
 * implemented as a virtual prefix: position i in {0,...,n-1} is an ascent
 * when e_i/s_i < e_{i+1}/s_{i+1}, decided by exact cross-multiplication.
 * Indices are 0-based internally; reports print 1-based sequence positions.
 */

#include <algorithm>
#include <charconv>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lhp/core.hpp"

namespace lhp {

class s_sequence {
public:
    explicit s_sequence(std::vector<i64> entries) : entries_(std::move(entries)) {
        if (entries_.empty())
            throw std::invalid_argument("sequence must have dimension >= 1");
        i128 prod = 1;
        for (i64 v : entries_) {
            if (v < 1)
                throw std::invalid_argument("sequence entries must be >= 1");
            prod *= v;
            if (prod > std::numeric_limits<i64>::max())
                throw overflow_error("product of sequence entries exceeds 64-bit range");
        }
        product_ = static_cast<i64>(prod);
    }

    /// Parses "2,3,5,9". Rejects empty fields, signs, and non-digits.
    static s_sequence parse(std::string_view text) {
        std::vector<i64> entries;
        std::size_t pos = 0;
        while (pos <= text.size()) {
            const std::size_t comma = std::min(text.find(',', pos), text.size());
            const std::string_view field = text.substr(pos, comma - pos);
            i64 value = 0;
            const auto [ptr, ec] =
                std::from_chars(field.data(), field.data() + field.size(), value);
            if (ec != std::errc{} || ptr != field.data() + field.size())
                throw std::invalid_argument("cannot parse sequence entry '" +
                                            std::string(field) + "'");
            entries.push_back(value);
            pos = comma + 1;
            if (comma == text.size()) break;
        }
        return s_sequence(std::move(entries));
    }

    int dim() const { return static_cast<int>(entries_.size()); }
    i64 at(int i) const { return entries_[static_cast<std::size_t>(i)]; }
    const std::vector<i64>& entries() const { return entries_; }
    i64 product() const { return product_; }

    s_sequence reversed() const {
        return s_sequence(std::vector<i64>(entries_.rbegin(), entries_.rend()));
    }

    std::string str() const {
        std::string out;
        for (std::size_t i = 0; i < entries_.size(); ++i) {
            if (i) out += ',';
            out += std::to_string(entries_[i]);
        }
        return out;
    }

    friend bool operator==(const s_sequence&, const s_sequence&) = default;

private:
    std::vector<i64> entries_;
    i64 product_ = 1;
};

/// An element of the inversion-sequence box of some s. The checked
/// constructor enforces 0 <= e_i < s_i; trusted() skips the check for values
/// produced by the enumerator, which are valid by construction.
class inversion_sequence {
public:
    inversion_sequence(const s_sequence& s, std::vector<i64> entries)
        : entries_(std::move(entries)) {
        if (static_cast<int>(entries_.size()) != s.dim())
            throw std::invalid_argument("inversion sequence has wrong dimension");
        for (int i = 0; i < s.dim(); ++i)
            if (entries_[static_cast<std::size_t>(i)] < 0 ||
                entries_[static_cast<std::size_t>(i)] >= s.at(i))
                throw std::invalid_argument("inversion sequence entry out of box");
    }

    static inversion_sequence trusted(std::vector<i64> entries) {
        return inversion_sequence(std::move(entries), trusted_tag{});
    }

    const std::vector<i64>& entries() const { return entries_; }
    int dim() const { return static_cast<int>(entries_.size()); }
    i64 at(int i) const { return entries_[static_cast<std::size_t>(i)]; }

    std::string str() const {
        std::string out = "(";
        for (std::size_t i = 0; i < entries_.size(); ++i) {
            if (i) out += ',';
            out += std::to_string(entries_[i]);
        }
        return out + ")";
    }

    friend bool operator==(const inversion_sequence&, const inversion_sequence&) = default;
    friend auto operator<=>(const inversion_sequence& a, const inversion_sequence& b) {
        return a.entries_ <=> b.entries_;
    }

private:
    struct trusted_tag {};
    inversion_sequence(std::vector<i64> entries, trusted_tag) : entries_(std::move(entries)) {}

    std::vector<i64> entries_;
};

/// Is position pos (in 0..n-1) an ascent of e? Uses the virtual prefix.
inline bool ascent_at(const s_sequence& s, std::span<const i64> e, int pos) {
    const i64 prev_num = pos == 0 ? 0 : e[static_cast<std::size_t>(pos - 1)];
    const i64 prev_den = pos == 0 ? 1 : s.at(pos - 1);
    return ratio_less(prev_num, prev_den, e[static_cast<std::size_t>(pos)], s.at(pos));
}

inline std::vector<int> ascent_set(const s_sequence& s, std::span<const i64> e) {
    std::vector<int> asc;
    for (int i = 0; i < s.dim(); ++i)
        if (ascent_at(s, e, i)) asc.push_back(i);
    return asc;
}

inline std::vector<int> ascent_set(const s_sequence& s, const inversion_sequence& e) {
    return ascent_set(s, std::span<const i64>(e.entries()));
}

inline int ascent_count(const s_sequence& s, std::span<const i64> e) {
    int count = 0;
    for (int i = 0; i < s.dim(); ++i)
        if (ascent_at(s, e, i)) ++count;
    return count;
}

inline int ascent_count(const s_sequence& s, const inversion_sequence& e) {
    return ascent_count(s, std::span<const i64>(e.entries()));
}

inline void ensure_enumerable(const s_sequence& s, i64 budget) {
    if (s.product() > budget)
        throw budget_error("inversion-sequence count " + std::to_string(s.product()) +
                           " exceeds budget " + std::to_string(budget));
}

/// Visits every inversion sequence of s exactly once, lexicographically.
/// The span passed to fn is a reused buffer; copy it to keep it.
template <class F>
void for_each_inversion_sequence(const s_sequence& s, F&& fn,
                                 i64 budget = default_budget) {
    ensure_enumerable(s, budget);
    std::vector<i64> e(static_cast<std::size_t>(s.dim()), 0);
    for (;;) {
        fn(std::span<const i64>(e));
        int i = s.dim() - 1;
        while (i >= 0 && e[static_cast<std::size_t>(i)] + 1 == s.at(i)) {
            e[static_cast<std::size_t>(i)] = 0;
            --i;
        }
        if (i < 0) return;
        ++e[static_cast<std::size_t>(i)];
    }
}

/// Mixed-radix decode: the index-th inversion sequence in lex order.
inline std::vector<i64> inversion_sequence_at_index(const s_sequence& s, i64 index) {
    std::vector<i64> e(static_cast<std::size_t>(s.dim()), 0);
    for (int i = s.dim() - 1; i >= 0; --i) {
        e[static_cast<std::size_t>(i)] = index % s.at(i);
        index /= s.at(i);
    }
    return e;
}

/// Visits lex positions [first, last). Sub-ranges partition the full
/// enumeration, so independent consumers can split the work.
template <class F>
void for_each_inversion_sequence_range(const s_sequence& s, i64 first, i64 last, F&& fn) {
    if (first >= last) return;
    std::vector<i64> e = inversion_sequence_at_index(s, first);
    for (i64 idx = first; idx < last; ++idx) {
        fn(std::span<const i64>(e));
        int i = s.dim() - 1;
        while (i >= 0 && e[static_cast<std::size_t>(i)] + 1 == s.at(i)) {
            e[static_cast<std::size_t>(i)] = 0;
            --i;
        }
        if (i < 0) break;
        ++e[static_cast<std::size_t>(i)];
    }
}

inline std::vector<inversion_sequence> all_inversion_sequences(const s_sequence& s,
                                                               i64 budget = default_budget) {
    std::vector<inversion_sequence> out;
    out.reserve(static_cast<std::size_t>(s.product()));
    for_each_inversion_sequence(s, [&](std::span<const i64> e) {
        out.push_back(inversion_sequence::trusted(std::vector<i64>(e.begin(), e.end())));
    }, budget);
    return out;
}

/// Partition of the inversion sequences by ascent count; slot k holds the
/// elements with exactly k ascents, each in lexicographic order.
inline std::vector<std::vector<inversion_sequence>>
stratify_by_ascents(const s_sequence& s, i64 budget = default_budget) {
    std::vector<std::vector<inversion_sequence>> strata(
        static_cast<std::size_t>(s.dim()) + 1);
    for_each_inversion_sequence(s, [&](std::span<const i64> e) {
        strata[static_cast<std::size_t>(ascent_count(s, e))].push_back(
            inversion_sequence::trusted(std::vector<i64>(e.begin(), e.end())));
    }, budget);
    return strata;
}

/// Componentwise sum reduced mod s_i, representatives in {0,...,s_i-1}.
inline inversion_sequence add_mod(const s_sequence& s, const inversion_sequence& e,
                                  const inversion_sequence& f) {
    if (e.dim() != s.dim() || f.dim() != s.dim())
        throw std::invalid_argument("add_mod: operands belong to different sequences");
    std::vector<i64> sum(static_cast<std::size_t>(s.dim()));
    for (int i = 0; i < s.dim(); ++i) {
        if (e.at(i) < 0 || e.at(i) >= s.at(i) || f.at(i) < 0 || f.at(i) >= s.at(i))
            throw std::invalid_argument("add_mod: operands belong to different sequences");
        sum[static_cast<std::size_t>(i)] = (e.at(i) + f.at(i)) % s.at(i);
    }
    return inversion_sequence::trusted(std::move(sum));
}

} // namespace lhp
