#pragma once

/**
 * @file gorenstein.hpp
 * @brief Gorenstein decisions via gcd-recurrence certificates.
 *
 * The primary decision needs no enumeration: the simplex of s is Gorenstein
 * exactly when the forward chain
 *     c_1 = 1,   c_j s_{j-1} = c_{j-1} s_j + gcd(s_{j-1}, s_j)   (j = 2..n)
 * extends by an integer tail c_{n+1} s_n = 1 + c_n. Each step forces the
 * next value, so the greedy solve is the only possible solution and every
 * returned certificate re-substitutes exactly.
 *
 * Two cross-checks ride along: the two-chain test on s and its reversal
 * (valid when some adjacent pair is coprime), and the u-generated test for
 * the pairwise-coprime case. classify() compares the verdict against
 * palindromicity of h* and treats any disagreement as an internal bug.
 */

#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "lhp/eulerian.hpp"
#include "lhp/sequence.hpp"

namespace lhp {

/// Greedy forward solve of the gcd chain. Returns the unique c-vector
/// (c_1..c_n, plus c_{n+1} when with_tail), or nothing at the first
/// non-integer quotient. Entries are provably positive; violation of that
/// is reported as a bug.
inline std::optional<std::vector<i64>> solve_c_chain(const s_sequence& s,
                                                     bool with_tail) {
    std::vector<i64> c{1};
    for (int j = 1; j < s.dim(); ++j) {
        const i64 num = checked_add(checked_mul(c.back(), s.at(j)),
                                    std::gcd(s.at(j - 1), s.at(j)));
        if (num % s.at(j - 1) != 0) return std::nullopt;
        c.push_back(num / s.at(j - 1));
    }
    if (with_tail) {
        const i64 num = checked_add(1, c.back());
        if (num % s.at(s.dim() - 1) != 0) return std::nullopt;
        c.push_back(num / s.at(s.dim() - 1));
    }
    for (i64 value : c)
        if (value < 1)
            throw consistency_error("chain certificate entry is not positive");
    return c;
}

struct full_chain_result {
    bool gorenstein = false;
    std::optional<std::vector<i64>> c; ///< c_1..c_{n+1} when the verdict holds
};

/// Full characterization: chain plus integer tail. Equivalent to running the
/// plain chain on the extended sequence (s_1,...,s_n,1).
inline full_chain_result is_gorenstein_full_chain(const s_sequence& s) {
    auto c = solve_c_chain(s, /*with_tail=*/true);
    return {c.has_value(), std::move(c)};
}

struct two_chain_result {
    bool applicable = false; ///< some adjacent pair of s is coprime
    bool gorenstein = false;
    std::optional<std::vector<i64>> c; ///< forward chain, no tail
    std::optional<std::vector<i64>> d; ///< chain on the reversed sequence
};

/// Vertex-cone characterization: both the forward and the reversed chain
/// must close. Only valid when some adjacent gcd equals 1; otherwise the
/// result is marked inapplicable and the verdict field is meaningless.
inline two_chain_result is_gorenstein_two_chain(const s_sequence& s) {
    two_chain_result result;
    for (int i = 0; i + 1 < s.dim(); ++i)
        if (std::gcd(s.at(i), s.at(i + 1)) == 1) {
            result.applicable = true;
            break;
        }
    result.c = solve_c_chain(s, /*with_tail=*/false);
    result.d = solve_c_chain(s.reversed(), /*with_tail=*/false);
    result.gorenstein = result.c.has_value() && result.d.has_value();
    return result;
}

/// u with s_2 = u_1 s_1 - 1 and s_{i+1} = u_i s_i - s_{i-1}, all entries
/// positive integers. Empty u for one-term sequences (no constraints).
inline std::optional<std::vector<i64>> u_generated_witness(const s_sequence& s) {
    std::vector<i64> u;
    for (int i = 0; i + 1 < s.dim(); ++i) {
        const i64 num = checked_add(s.at(i + 1), i == 0 ? 1 : s.at(i - 1));
        if (num % s.at(i) != 0) return std::nullopt;
        const i64 q = num / s.at(i);
        if (q < 1) return std::nullopt;
        u.push_back(q);
    }
    return u;
}

struct gorenstein_certificate {
    bool gorenstein = false;
    std::optional<std::vector<i64>> c; ///< full-chain witness incl. the tail entry
    std::optional<std::vector<i64>> d; ///< reversed chain when the two-chain test ran
    std::optional<std::vector<i64>> u; ///< u-generated witness when one exists
    bool two_chain_applicable = false;
    std::string notes;
};

/// Authoritative decision (full chain) with every applicable cross-check
/// attached. Disagreement between provably equivalent routes throws
/// consistency_error: the routes are provably equivalent, so disagreement can only mean a bug.
inline gorenstein_certificate classify_gorenstein(const s_sequence& s,
                                                  i64 budget = default_budget) {
    gorenstein_certificate cert;
    auto primary = is_gorenstein_full_chain(s);
    cert.gorenstein = primary.gorenstein;
    cert.c = std::move(primary.c);
    cert.notes = "full-chain";

    auto two = is_gorenstein_two_chain(s);
    cert.two_chain_applicable = two.applicable;
    cert.d = two.d;
    if (two.applicable) {
        cert.notes += ", two-chain";
        if (two.gorenstein != cert.gorenstein)
            throw consistency_error("two-chain and full-chain verdicts disagree on " +
                                    s.str());
    }

    cert.u = u_generated_witness(s);
    if (cert.u) cert.notes += ", u-generated";
    bool pairwise_coprime = s.dim() >= 2;
    for (int i = 0; i + 1 < s.dim(); ++i)
        if (std::gcd(s.at(i), s.at(i + 1)) != 1) pairwise_coprime = false;
    if (pairwise_coprime) {
        const bool both_u = cert.u.has_value() &&
                            u_generated_witness(s.reversed()).has_value();
        if (both_u != cert.gorenstein)
            throw consistency_error("u-generated criterion disagrees with the chain on " +
                                    s.str());
    }

    const auto h = hstar_by_ascents(s, budget);
    if (is_palindromic(h) != cert.gorenstein)
        throw consistency_error("palindromicity of h* disagrees with the chain on " +
                                s.str());
    cert.notes += ", palindromicity checked";
    return cert;
}

} // namespace lhp
