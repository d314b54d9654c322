#pragma once

/**
 * Command-line front end.
 *
 *   permpoly <command> [--p N] [--p-max N] [--form F] [--a N --b N]
 *            [--table CSV | --coeffs CSV | --input PATH]
 *            [--format text|json] [--seed N]
 *
 * Commands: interpolate, canonicalize, transposition, moments, verify,
 * hermite-scan. Exit status: 0 on success with all checks passing, 1 on a
 * verification failure, 2 on usage or validation errors.
 */

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "permpoly/errors.hpp"
#include "permpoly/interpolation.hpp"
#include "permpoly/modular.hpp"
#include "permpoly/permutation.hpp"
#include "permpoly/poly.hpp"
#include "permpoly/serialize.hpp"

namespace permpoly::cli {

namespace detail {

inline std::vector<std::int64_t> parse_csv(const std::string& text) {
    std::vector<std::int64_t> out;
    if (text.empty()) return out;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t comma = std::min(text.find(',', pos), text.size());
        const std::string item = text.substr(pos, comma - pos);
        std::int64_t value = 0;
        const char* first = item.data();
        const char* last = item.data() + item.size();
        auto [ptr, ec] = std::from_chars(first, last, value);
        if (ec != std::errc() || ptr != last)
            throw Error("malformed integer list entry: \"" + item + "\"");
        out.push_back(value);
        pos = comma + 1;
    }
    return out;
}

inline nlohmann::json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open input file: " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw Error("malformed JSON in " + path + ": " + e.what());
    }
    return j;
}

inline void require_consistent_modulus(std::optional<u64> flag, PrimeModulus from_input) {
    if (flag && *flag != from_input.value())
        throw Error("--p " + std::to_string(*flag) +
                    " contradicts the input file's p = " +
                    std::to_string(from_input.value()));
}

inline std::vector<u64> reduce_entries(PrimeModulus p,
                                       const std::vector<std::int64_t>& raw) {
    std::vector<u64> out;
    out.reserve(raw.size());
    for (std::int64_t v : raw) out.push_back(Residue::from_int(p, v).value());
    return out;
}

inline bool long_scans_enabled() {
    const char* v = std::getenv("PERMPOLY_LONG_SCANS");
    return v != nullptr && std::string(v) == "1";
}

inline int emit_poly(const CanonicalPoly& f, const std::string& format,
                     std::ostream& out) {
    if (format == "json")
        out << polynomial_to_json(f).dump() << "\n";
    else
        out << polynomial_to_text(f) << "\n";
    return 0;
}

inline void emit_report_text(const Report& report, std::ostream& out) {
    for (const CheckResult& c : report.checks) {
        out << c.name << ": " << (c.pass ? "PASS" : "FAIL");
        if (!c.witness.empty()) out << " [" << c.witness << "]";
        out << "\n";
    }
}

}  // namespace detail

struct Config {
    std::string command;
    std::optional<u64> p;
    u64 p_max = 0;
    std::string form = "simple";
    std::optional<std::int64_t> a;
    std::optional<std::int64_t> b;
    std::string table_csv;
    bool table_given = false;
    std::string coeffs_csv;
    bool coeffs_given = false;
    std::string input_path;
    std::string format = "text";
    u64 seed = 0;  // reserved for randomized subcommands
};

namespace detail {

inline int run_interpolate(const Config& cfg, std::ostream& out) {
    if (!cfg.input_path.empty()) {
        const FunctionTable t = table_from_json(load_json(cfg.input_path));
        require_consistent_modulus(cfg.p, t.modulus());
        return emit_poly(interpolate(t), cfg.format, out);
    }
    if (!cfg.p) throw Error("--p is required without --input");
    if (!cfg.table_given) throw Error("interpolate needs --table or --input");
    const PrimeModulus p = validate_prime(*cfg.p);
    const FunctionTable t(p, reduce_entries(p, parse_csv(cfg.table_csv)));
    return emit_poly(interpolate(t), cfg.format, out);
}

inline int run_canonicalize(const Config& cfg, std::ostream& out) {
    if (!cfg.input_path.empty()) {
        const Polynomial f = polynomial_from_json(load_json(cfg.input_path));
        require_consistent_modulus(cfg.p, f.modulus());
        return emit_poly(canonical_reduce(f), cfg.format, out);
    }
    if (!cfg.p) throw Error("--p is required without --input");
    if (!cfg.coeffs_given) throw Error("canonicalize needs --coeffs or --input");
    const PrimeModulus p = validate_prime(*cfg.p);
    const Polynomial f(p, reduce_entries(p, parse_csv(cfg.coeffs_csv)));
    return emit_poly(canonical_reduce(f), cfg.format, out);
}

inline int run_transposition(const Config& cfg, std::ostream& out) {
    if (!cfg.p) throw Error("--p is required");
    const PrimeModulus p = validate_prime(*cfg.p);
    CanonicalPoly result = [&] {
        if (cfg.form == "simple") return transposition_simple(p);
        if (cfg.form == "chen-mullen") return transposition_chen_mullen(p);
        if (!cfg.a || !cfg.b)
            throw Error("--a and --b are required for form " + cfg.form);
        const TranspositionSpec spec(Residue::from_int(p, *cfg.a),
                                     Residue::from_int(p, *cfg.b));
        return cfg.form == "general" ? transposition_general(p, spec)
                                     : transposition_rational(p, spec);
    }();
    return emit_poly(result, cfg.format, out);
}

inline int run_moments(const Config& cfg, std::ostream& out) {
    FunctionTable t = [&] {
        if (!cfg.input_path.empty()) {
            FunctionTable loaded = table_from_json(load_json(cfg.input_path));
            require_consistent_modulus(cfg.p, loaded.modulus());
            return loaded;
        }
        if (!cfg.p) throw Error("--p is required without --input");
        if (!cfg.table_given) throw Error("moments needs --table or --input");
        const PrimeModulus p = validate_prime(*cfg.p);
        return FunctionTable(p, reduce_entries(p, parse_csv(cfg.table_csv)));
    }();
    const MomentProfile profile = moment_profile(t);
    const std::optional<std::size_t> degree = canonical_degree_via_moments(t);
    if (cfg.format == "json") {
        nlohmann::json j = moments_to_json(profile);
        j["canonical_degree"] =
            degree ? nlohmann::json(*degree) : nlohmann::json(nullptr);
        out << j.dump() << "\n";
    } else {
        out << "moments:";
        for (u64 m : profile.moments) out << " " << m;
        out << "\n";
        out << "canonical degree: "
            << (degree ? std::to_string(*degree) : "zero function") << "\n";
    }
    return 0;
}

inline int run_verify(const Config& cfg, std::ostream& out) {
    bool all_pass = true;
    nlohmann::json reports = nlohmann::json::array();
    for (u64 n = 3; n <= cfg.p_max; ++n) {
        if (n % 2 == 0 || !permpoly::detail::is_prime_u64(n)) continue;
        const Report report = verify_transposition_forms(PrimeModulus(n));
        if (cfg.format == "json") {
            reports.push_back(report_to_json(report));
        } else {
            out << "p=" << n << ": ";
            if (report.all_passed()) {
                out << "PASS\n";
            } else {
                const auto fail = std::find_if(
                    report.checks.begin(), report.checks.end(),
                    [](const CheckResult& c) { return !c.pass; });
                out << "FAIL " << fail->name;
                if (!fail->witness.empty()) out << " [" << fail->witness << "]";
                out << "\n";
            }
        }
        all_pass = all_pass && report.all_passed();
    }
    if (cfg.format == "json") out << reports.dump() << "\n";
    return all_pass ? 0 : 1;
}

inline int run_hermite_scan(const Config& cfg, std::ostream& out) {
    if (!cfg.p) throw Error("--p is required");
    const PrimeModulus p = validate_prime(*cfg.p);
    const u64 budget =
        long_scans_enabled() ? u64{39916800} /* 11! */ : kDefaultHermiteBudget;
    const Report report = hermite_scan(p, budget);
    if (cfg.format == "json") {
        out << report_to_json(report).dump() << "\n";
    } else {
        u64 total = 0;
        for (const auto& [degree, count] : report.degree_histogram) total += count;
        out << "p=" << p.value() << ": " << total << " permutations\n";
        out << "degree histogram:";
        for (const auto& [degree, count] : report.degree_histogram)
            out << " " << degree << ":" << count;
        out << "\n";
        emit_report_text(report, out);
    }
    return report.all_passed() ? 0 : 1;
}

}  // namespace detail

// Parses and runs one invocation. `args` holds the arguments in natural
// order, without the program name. Returns the process exit status.
inline int run(std::vector<std::string> args, std::ostream& out,
               std::ostream& err) {
    Config cfg;
    CLI::App app{"polynomial calculus of functions over the prime field Z_p",
                 "permpoly"};
    app.require_subcommand(1);

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--format", cfg.format, "output format")
            ->check(CLI::IsMember({"text", "json"}))
            ->capture_default_str();
        cmd->add_option("--seed", cfg.seed,
                        "seed for randomized operations (reserved)");
    };

    CLI::App* interp = app.add_subcommand(
        "interpolate", "canonical polynomial for a value table");
    interp->add_option("--p", cfg.p, "prime modulus");
    CLI::Option* interp_table = interp->add_option(
        "--table", cfg.table_csv, "comma-separated values f(0),...,f(p-1)");
    interp->add_option("--input", cfg.input_path, "JSON file with {p, values}");
    add_common(interp);

    CLI::App* canon = app.add_subcommand(
        "canonicalize", "reduce a polynomial mod x^p - x");
    canon->add_option("--p", cfg.p, "prime modulus");
    CLI::Option* canon_coeffs = canon->add_option(
        "--coeffs", cfg.coeffs_csv, "comma-separated coefficients, ascending powers");
    canon->add_option("--input", cfg.input_path, "JSON file with {p, coeffs}");
    add_common(canon);

    CLI::App* transposition = app.add_subcommand(
        "transposition", "polynomial representing a transposition");
    transposition->add_option("--p", cfg.p, "prime modulus");
    transposition
        ->add_option("--form", cfg.form, "construction to use")
        ->check(CLI::IsMember({"simple", "general", "chen-mullen", "rational"}))
        ->capture_default_str();
    transposition->add_option("--a", cfg.a, "first swapped point");
    transposition->add_option("--b", cfg.b, "second swapped point");
    add_common(transposition);

    CLI::App* moments = app.add_subcommand(
        "moments", "moment profile and canonical degree of a table");
    moments->add_option("--p", cfg.p, "prime modulus");
    CLI::Option* moments_table = moments->add_option(
        "--table", cfg.table_csv, "comma-separated values f(0),...,f(p-1)");
    moments->add_option("--input", cfg.input_path, "JSON file with {p, values}");
    add_common(moments);

    CLI::App* verify = app.add_subcommand(
        "verify", "check all transposition identities for odd primes up to a bound");
    verify->add_option("--p-max", cfg.p_max, "largest prime to check")
        ->required();
    add_common(verify);

    CLI::App* hermite = app.add_subcommand(
        "hermite-scan", "degree restrictions over every permutation of Z_p");
    hermite->add_option("--p", cfg.p, "prime modulus");
    add_common(hermite);

    try {
        std::reverse(args.begin(), args.end());
        app.parse(std::move(args));
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    cfg.table_given = interp_table->count() > 0 || moments_table->count() > 0;
    cfg.coeffs_given = canon_coeffs->count() > 0;

    try {
        if (interp->parsed()) return detail::run_interpolate(cfg, out);
        if (canon->parsed()) return detail::run_canonicalize(cfg, out);
        if (transposition->parsed()) return detail::run_transposition(cfg, out);
        if (moments->parsed()) return detail::run_moments(cfg, out);
        if (verify->parsed()) return detail::run_verify(cfg, out);
        if (hermite->parsed()) return detail::run_hermite_scan(cfg, out);
    } catch (const VerificationFailure& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const InexactDivision& e) {
        err << "internal error: " << e.what() << "\n";
        return 1;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;  // unreachable: require_subcommand(1) guarantees a match
}

}  // namespace permpoly::cli
