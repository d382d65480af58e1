#pragma once

/**
 * @file records.hpp
 * @brief Run configuration and the per-sequence result record with its JSON
 *        and CSV forms.
 *
 * CSV columns, in order:
 *   s,n,hstar,r,palindromic,gorenstein,c,d,level,witness,runtime_ms,error
 * List-valued fields are semicolon-joined inside their cell; absent
 * optionals are empty cells. The header row is always emitted. JSON records
 * round-trip losslessly through parse_record_json.
 */

#include <chrono>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "lhp/gorenstein.hpp"
#include "lhp/level.hpp"
#include "lhp/sequence.hpp"

namespace lhp {

enum class output_format { text, json, csv };

inline output_format parse_format(const std::string& name) {
    if (name == "text") return output_format::text;
    if (name == "json") return output_format::json;
    if (name == "csv") return output_format::csv;
    throw std::invalid_argument("unknown output format '" + name + "'");
}

struct run_config {
    output_format format = output_format::text;
    i64 budget = default_budget; ///< >= 1
    int workers = 1;             ///< >= 1
    std::uint64_t seed = 0;
    bool sort_output = false; ///< canonical row order, volatile fields zeroed

    void validate() const {
        if (budget < 1) throw std::invalid_argument("budget must be >= 1");
        if (workers < 1) throw std::invalid_argument("worker count must be >= 1");
    }
};

struct scan_record {
    std::vector<i64> s;
    std::vector<i64> hstar; ///< h*_0..h*_n; empty when the row errored
    int r = 0;
    bool palindromic = false;
    bool gorenstein = false;
    std::optional<std::vector<i64>> c; ///< full-chain witness incl. tail entry
    std::optional<std::vector<i64>> d; ///< reversed chain, when it closes
    bool level = false;
    std::optional<std::vector<i64>> witness;
    int witness_stratum = -1;
    i64 runtime_ms = 0;
    std::optional<std::string> error;

    friend bool operator==(const scan_record&, const scan_record&) = default;
};

/// Computes every property of one sequence. A budget overrun is recorded in
/// the row instead of thrown, so scans keep going.
inline scan_record compute_record(const s_sequence& s, i64 budget = default_budget) {
    scan_record record;
    record.s = s.entries();
    const auto start = std::chrono::steady_clock::now();
    try {
        const auto h = hstar_by_ascents(s, budget);
        record.hstar = h.coeffs();
        record.r = h.degree();
        record.palindromic = is_palindromic(h);
        const auto chain = is_gorenstein_full_chain(s);
        record.gorenstein = chain.gorenstein;
        record.c = chain.c;
        record.d = solve_c_chain(s.reversed(), /*with_tail=*/false);
        const auto level = is_level_by_lifting(s, budget);
        record.level = level.level;
        if (level.witness) {
            record.witness = level.witness->entries();
            record.witness_stratum = level.witness_stratum;
        }
    } catch (const budget_error& e) {
        record.error = e.what();
    } catch (const overflow_error& e) {
        record.error = e.what();
    }
    record.runtime_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                            std::chrono::steady_clock::now() - start)
                            .count();
    return record;
}

inline nlohmann::json record_to_json(const scan_record& r) {
    nlohmann::json j;
    j["s"] = r.s;
    j["n"] = r.s.size();
    j["hstar"] = r.hstar;
    j["r"] = r.r;
    j["palindromic"] = r.palindromic;
    j["gorenstein"] = r.gorenstein;
    j["c"] = r.c ? nlohmann::json(*r.c) : nlohmann::json(nullptr);
    j["d"] = r.d ? nlohmann::json(*r.d) : nlohmann::json(nullptr);
    j["level"] = r.level;
    j["witness"] = r.witness ? nlohmann::json(*r.witness) : nlohmann::json(nullptr);
    j["witness_stratum"] = r.witness_stratum;
    j["runtime_ms"] = r.runtime_ms;
    j["error"] = r.error ? nlohmann::json(*r.error) : nlohmann::json(nullptr);
    return j;
}

inline scan_record parse_record_json(const nlohmann::json& j) {
    scan_record r;
    r.s = j.at("s").get<std::vector<i64>>();
    r.hstar = j.at("hstar").get<std::vector<i64>>();
    r.r = j.at("r").get<int>();
    r.palindromic = j.at("palindromic").get<bool>();
    r.gorenstein = j.at("gorenstein").get<bool>();
    if (!j.at("c").is_null()) r.c = j.at("c").get<std::vector<i64>>();
    if (!j.at("d").is_null()) r.d = j.at("d").get<std::vector<i64>>();
    r.level = j.at("level").get<bool>();
    if (!j.at("witness").is_null()) r.witness = j.at("witness").get<std::vector<i64>>();
    r.witness_stratum = j.at("witness_stratum").get<int>();
    r.runtime_ms = j.at("runtime_ms").get<i64>();
    if (!j.at("error").is_null()) r.error = j.at("error").get<std::string>();
    return r;
}

namespace detail {

inline std::string join(const std::vector<i64>& values, char sep = ';') {
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) out += sep;
        out += std::to_string(values[i]);
    }
    return out;
}

inline std::string csv_safe(std::string text) {
    for (char& ch : text)
        if (ch == ',' || ch == '\n' || ch == '\r') ch = ' ';
    return text;
}

} // namespace detail

inline std::string csv_header() {
    return "s,n,hstar,r,palindromic,gorenstein,c,d,level,witness,runtime_ms,error";
}

inline std::string record_to_csv(const scan_record& r) {
    std::string row = detail::join(r.s);
    row += ',';
    row += std::to_string(r.s.size());
    row += ',';
    row += detail::join(r.hstar);
    if (r.error) {
        // errored rows carry only s, n, the message, and the timing
        row += ",,,,,,,";
        row += std::to_string(r.runtime_ms);
        row += ',';
        row += detail::csv_safe(*r.error);
        return row;
    }
    row += ',';
    row += std::to_string(r.r);
    row += ',';
    row += r.palindromic ? "true" : "false";
    row += ',';
    row += r.gorenstein ? "true" : "false";
    row += ',';
    if (r.c) row += detail::join(*r.c);
    row += ',';
    if (r.d) row += detail::join(*r.d);
    row += ',';
    row += r.level ? "true" : "false";
    row += ',';
    if (r.witness) row += detail::join(*r.witness);
    row += ',';
    row += std::to_string(r.runtime_ms);
    row += ',';
    return row;
}

} // namespace lhp
