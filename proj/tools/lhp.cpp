// Command-line front end: h*-vectors, Gorenstein and levelness decisions,
// golden verification, grid scans, and fast-vs-oracle cross-checks.
//
// Exit codes: 0 success (negative verdicts included), 2 parse/usage error,
// 3 enumeration budget exceeded, 4 internal consistency violation.

#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "lhp/records.hpp"
#include "lhp/scan.hpp"
#include "lhp/verify.hpp"

namespace {

using namespace lhp;

const char* yes_no(bool value) { return value ? "yes" : "no"; }

std::string vec_str(const std::vector<i64>& v) {
    std::string out = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(v[i]);
    }
    return out + ")";
}

int run_hstar(const s_sequence& s, const run_config& config, output_format format,
              bool with_oracle) {
    const auto h = hstar_by_ascents(s, config.budget, config.workers);
    const auto violations = level_inequality_violations(h);
    bool oracle_agrees = true;
    if (with_oracle) oracle_agrees = hstar_by_parallelepiped(s, config.budget) == h;

    const auto internal_zero = first_internal_zero(h);

    if (format == output_format::json) {
        nlohmann::json j;
        j["s"] = s.entries();
        j["hstar"] = h.coeffs();
        j["r"] = h.degree();
        j["palindromic"] = is_palindromic(h);
        j["unimodal"] = is_unimodal(h);
        j["violations"] = violations;
        j["internal_zero"] = internal_zero ? nlohmann::json(*internal_zero)
                                           : nlohmann::json(nullptr);
        if (with_oracle) j["oracle_agrees"] = oracle_agrees;
        std::cout << j.dump(2) << '\n';
    } else if (format == output_format::csv) {
        std::cout << csv_header() << '\n'
                  << record_to_csv(compute_record(s, config.budget)) << '\n';
    } else {
        std::cout << "s = " << s.str() << '\n';
        std::cout << "h* = " << h.str() << "  coefficients "
                  << vec_str(h.coeffs()) << '\n';
        std::cout << "degree r = " << h.degree() << '\n';
        std::cout << "palindromic = " << yes_no(is_palindromic(h)) << '\n';
        std::cout << "unimodal = " << yes_no(is_unimodal(h)) << '\n';
        if (violations.empty()) {
            std::cout << "coefficient inequalities = satisfied\n";
        } else {
            std::cout << "coefficient violations =";
            for (const auto& [i, j] : violations)
                std::cout << " (" << i << "," << j << ")";
            std::cout << '\n';
        }
        if (internal_zero)
            std::cout << "finding: internal zero coefficient at index "
                      << *internal_zero << '\n';
        if (with_oracle)
            std::cout << "oracle agreement = " << yes_no(oracle_agrees) << '\n';
    }
    if (with_oracle && !oracle_agrees)
        throw consistency_error("h* routes disagree on " + s.str());
    return 0;
}

int run_gorenstein(const s_sequence& s, const run_config& config, output_format format,
                   bool with_check) {
    gorenstein_certificate cert;
    if (with_check) {
        cert = classify_gorenstein(s, config.budget); // throws on inconsistency
    } else {
        const auto chain = is_gorenstein_full_chain(s);
        cert.gorenstein = chain.gorenstein;
        cert.c = chain.c;
        const auto two = is_gorenstein_two_chain(s);
        cert.two_chain_applicable = two.applicable;
        cert.d = two.d;
        cert.u = u_generated_witness(s);
        cert.notes = "full-chain";
    }

    if (format == output_format::json) {
        nlohmann::json j;
        j["s"] = s.entries();
        j["gorenstein"] = cert.gorenstein;
        j["c"] = cert.c ? nlohmann::json(*cert.c) : nlohmann::json(nullptr);
        j["d"] = cert.d ? nlohmann::json(*cert.d) : nlohmann::json(nullptr);
        j["u"] = cert.u ? nlohmann::json(*cert.u) : nlohmann::json(nullptr);
        j["two_chain_applicable"] = cert.two_chain_applicable;
        j["checked"] = with_check;
        std::cout << j.dump(2) << '\n';
    } else if (format == output_format::csv) {
        std::cout << csv_header() << '\n'
                  << record_to_csv(compute_record(s, config.budget)) << '\n';
    } else {
        std::cout << "s = " << s.str() << '\n';
        std::cout << "gorenstein = " << yes_no(cert.gorenstein) << '\n';
        if (cert.c) {
            const std::vector<i64> head(cert.c->begin(), cert.c->end() - 1);
            std::cout << "c = " << vec_str(head) << ", c_" << s.dim() + 1 << " = "
                      << cert.c->back() << '\n';
        }
        if (cert.d) std::cout << "d = " << vec_str(*cert.d) << '\n';
        if (cert.u) std::cout << "u = " << vec_str(*cert.u) << '\n';
        std::cout << "two-chain test applicable = "
                  << yes_no(cert.two_chain_applicable) << '\n';
        if (with_check)
            std::cout << "cross-checks = consistent (" << cert.notes << ")\n";
    }
    return 0;
}

int run_level(const s_sequence& s, const run_config& config, output_format format,
              bool with_oracle) {
    const auto report = is_level_by_lifting(s, config.budget);
    levelness_report oracle;
    if (with_oracle) {
        oracle = is_level_by_socle(s, config.budget);
        if (oracle.level != report.level)
            throw consistency_error("levelness routes disagree on " + s.str());
    }

    if (format == output_format::json) {
        nlohmann::json j;
        j["s"] = s.entries();
        j["level"] = report.level;
        j["r"] = report.r;
        j["witness"] = report.witness ? nlohmann::json(report.witness->entries())
                                      : nlohmann::json(nullptr);
        j["witness_stratum"] =
            report.witness ? nlohmann::json(report.witness_stratum) : nlohmann::json(nullptr);
        if (with_oracle) j["socle_heights"] = *oracle.socle_heights;
        std::cout << j.dump(2) << '\n';
    } else if (format == output_format::csv) {
        std::cout << csv_header() << '\n'
                  << record_to_csv(compute_record(s, config.budget)) << '\n';
    } else {
        std::cout << "s = " << s.str() << '\n';
        std::cout << "level = " << yes_no(report.level) << '\n';
        std::cout << "max ascent count r = " << report.r << '\n';
        if (report.witness)
            std::cout << "witness = " << report.witness->str() << " at stratum "
                      << report.witness_stratum << " (no single-ascent lift exists)\n";
        if (with_oracle) {
            std::cout << "socle heights =";
            for (i64 h : *oracle.socle_heights) std::cout << ' ' << h;
            std::cout << '\n'
                      << "oracle agreement = yes\n";
        }
    }
    return 0;
}

int run_verify(const run_config& config, output_format format) {
    const auto checks = verify_reference_suite(config.budget);
    int failures = 0;
    if (format == output_format::json) {
        nlohmann::json j = nlohmann::json::array();
        for (const auto& check : checks) {
            j.push_back({{"name", check.name}, {"pass", check.pass},
                         {"detail", check.detail}});
            failures += check.pass ? 0 : 1;
        }
        std::cout << j.dump(2) << '\n';
    } else {
        for (const auto& check : checks) {
            std::cout << (check.pass ? "[PASS] " : "[FAIL] ") << check.name;
            if (!check.pass) std::cout << " — " << check.detail;
            std::cout << '\n';
            failures += check.pass ? 0 : 1;
        }
        std::cout << (checks.size() - static_cast<std::size_t>(failures)) << "/"
                  << checks.size() << " checks passed\n";
    }
    return failures == 0 ? 0 : 1;
}

int run_oracle(const s_sequence& s, const run_config& config) {
    int failures = 0;
    auto report = [&](const std::string& name, bool pass) {
        std::cout << (pass ? "[PASS] " : "[FAIL] ") << name << '\n';
        failures += pass ? 0 : 1;
    };

    const auto h = hstar_by_ascents(s, config.budget);
    report("h* by ascents = h* by parallelepiped",
           h == hstar_by_parallelepiped(s, config.budget));

    const auto lifting = is_level_by_lifting(s, config.budget);
    const auto socle = is_level_by_socle(s, config.budget);
    report("level by lifting = level by socle", lifting.level == socle.level);

    report("gorenstein chain = palindromic h*",
           is_gorenstein_full_chain(s).gorenstein == is_palindromic(h));

    const auto two = is_gorenstein_two_chain(s);
    if (two.applicable)
        report("two-chain = full chain",
               two.gorenstein == is_gorenstein_full_chain(s).gorenstein);

    bool round_trips = true;
    for (const auto& e : all_inversion_sequences(s, config.budget)) {
        const auto p = inversion_to_point(s, e);
        if (p.height != ascent_count(s, e) || !(point_to_inversion(s, p) == e)) {
            round_trips = false;
            break;
        }
    }
    report("correspondence round-trips", round_trips);

    const auto expanded = ehrhart_series_expand(h, s.dim(), 3);
    bool counts_match = true;
    for (i64 t = 0; t <= 3; ++t)
        if (expanded[static_cast<std::size_t>(t)] !=
            count_dilate_points(s, t, config.budget))
            counts_match = false;
    report("series expansion = dilate counts (t <= 3)", counts_match);

    if (failures > 0)
        throw consistency_error(std::to_string(failures) +
                                " oracle cross-checks failed on " + s.str());
    std::cout << "all cross-checks passed\n";
    return 0;
}

int run_the_scan(const run_config& config, output_format format, const std::string& dim_text,
                 i64 max_entry, const std::string& filter_text, i64 sample) {
    int dim_lo = 0, dim_hi = 0;
    const auto colon = dim_text.find(':');
    try {
        if (colon == std::string::npos) {
            dim_lo = dim_hi = std::stoi(dim_text);
        } else {
            dim_lo = std::stoi(dim_text.substr(0, colon));
            dim_hi = std::stoi(dim_text.substr(colon + 1));
        }
    } catch (const std::exception&) {
        throw std::invalid_argument("cannot parse --dim '" + dim_text + "'");
    }

    const auto filter = parse_filter(filter_text);
    auto items = scan_grid(dim_lo, dim_hi, max_entry);
    if (sample > 0) items = sample_grid(items, sample, config.seed);

    i64 rows = 0;
    auto write = [&](const scan_record& record) {
        ++rows;
        if (format == output_format::json) {
            std::cout << record_to_json(record).dump() << '\n';
        } else if (format == output_format::csv) {
            std::cout << record_to_csv(record) << '\n';
        } else {
            std::cout << "s=" << detail::join(record.s, ',');
            if (record.error) {
                std::cout << " error=" << *record.error << '\n';
                return;
            }
            std::cout << " hstar=" << detail::join(record.hstar)
                      << " gorenstein=" << yes_no(record.gorenstein)
                      << " level=" << yes_no(record.level);
            if (record.witness)
                std::cout << " witness=" << detail::join(*record.witness) << "@"
                          << record.witness_stratum;
            std::cout << '\n';
        }
    };

    if (format == output_format::csv) std::cout << csv_header() << '\n';
    run_scan(items, config, filter, write);
    std::cerr << "scan: " << items.size() << " sequences, " << rows
              << " rows emitted\n";

    if (filter == scan_filter::conjecture51) {
        const auto report = scan_conjecture51(items, config.budget);
        std::cerr << "conjecture51: " << report.eligible
                  << " eligible sequences; standard-indexing mismatches "
                  << report.standard_indexing_mismatches.size()
                  << "; shifted-indexing mismatches "
                  << report.shifted_indexing_mismatches.size() << '\n';
    }
    if (filter == scan_filter::conjecture52) {
        const auto report = scan_conjecture52(items, config.budget);
        std::cerr << "conjecture52: " << report.hypothesis_count
                  << " chain-closing sequences; counterexamples "
                  << report.counterexamples.size() << '\n';
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact h*-vectors, Gorenstein and levelness decisions for the "
                 "simplices of positive integer sequences"};
    app.fallthrough();
    app.require_subcommand(1);

    run_config config;
    std::string format_name = "text";
    auto* format_opt =
        app.add_option("--format", format_name, "output format: text, json, csv")
            ->check(CLI::IsMember({"text", "json", "csv"}));
    app.add_option("--budget", config.budget,
                   "enumeration budget (lattice points / sequences visited)")
        ->envname("LHP_BUDGET");
    app.add_option("--workers", config.workers, "worker threads for scans");
    app.add_option("--seed", config.seed, "seed for sampled grids");
    app.add_flag("--sort", config.sort_output,
                 "canonical row order with zeroed timings (reproducible output)");

    std::string hstar_seq, gorenstein_seq, level_seq, oracle_seq;
    bool hstar_oracle = false, level_oracle = false, gorenstein_check = false;

    auto* cmd_hstar = app.add_subcommand("hstar", "h*-vector and its coefficient tests");
    cmd_hstar->add_option("sequence", hstar_seq, "comma-separated entries, e.g. 2,3,5,9")
        ->required();
    cmd_hstar->add_flag("--oracle", hstar_oracle, "also run the parallelepiped route");

    auto* cmd_gorenstein =
        app.add_subcommand("gorenstein", "Gorenstein decision with certificates");
    cmd_gorenstein->add_option("sequence", gorenstein_seq)->required();
    cmd_gorenstein->add_flag("--check", gorenstein_check,
                             "cross-check the verdict against h* palindromicity");

    auto* cmd_level = app.add_subcommand("level", "levelness decision with witness");
    cmd_level->add_option("sequence", level_seq)->required();
    cmd_level->add_flag("--oracle", level_oracle, "also run the socle oracle");

    auto* cmd_verify = app.add_subcommand("verify", "recompute the golden suite");

    std::string scan_dim = "1", scan_filter_name;
    i64 scan_max = 1, scan_sample = 0;
    auto* cmd_scan = app.add_subcommand("scan", "scan a grid of sequences");
    cmd_scan->add_option("--dim", scan_dim, "dimension or range, e.g. 3 or 2:4")
        ->required();
    cmd_scan->add_option("--max", scan_max, "largest entry value")->required();
    cmd_scan->add_option("--filter", scan_filter_name,
                         "gorenstein | level | non-level | palindromic | "
                         "conjecture51 | conjecture52");
    cmd_scan->add_option("--sample", scan_sample,
                         "sample this many sequences from the grid (seeded)");

    auto* cmd_oracle =
        app.add_subcommand("oracle", "all fast-vs-oracle cross-checks on one sequence");
    cmd_oracle->add_option("sequence", oracle_seq)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        config.validate();
        const output_format format = parse_format(format_name);
        if (cmd_hstar->parsed())
            return run_hstar(s_sequence::parse(hstar_seq), config, format, hstar_oracle);
        if (cmd_gorenstein->parsed())
            return run_gorenstein(s_sequence::parse(gorenstein_seq), config, format,
                                  gorenstein_check);
        if (cmd_level->parsed())
            return run_level(s_sequence::parse(level_seq), config, format, level_oracle);
        if (cmd_verify->parsed()) return run_verify(config, format);
        if (cmd_scan->parsed()) {
            // scans default to machine-readable rows
            const output_format scan_format =
                format_opt->count() > 0 ? format : output_format::csv;
            return run_the_scan(config, scan_format, scan_dim, scan_max,
                                scan_filter_name, scan_sample);
        }
        if (cmd_oracle->parsed())
            return run_oracle(s_sequence::parse(oracle_seq), config);
        return 2;
    } catch (const budget_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    } catch (const consistency_error& e) {
        std::cerr << "internal consistency violation: " << e.what() << '\n';
        return 4;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const overflow_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
}
