#pragma once

/**
 * Wire formats.
 *
 * JSON schemas:
 *   polynomial     {"p": N, "coeffs": [c0, c1, ...]}   zero poly -> []
 *   function table {"p": N, "values": [v0, ..., v_{p-1}]}
 *   report         {"p": N, "checks": [{"name", "pass", "witness"?}],
 *                   "degree_histogram"?: {"<degree>": count}}
 *
 * Text rendering of polynomials is descending-power human notation with
 * unit coefficients suppressed on nonconstant terms and zero terms omitted,
 * e.g. "x^3 + x^2 + 2x + 1". The zero polynomial renders as "0".
 */

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "permpoly/errors.hpp"
#include "permpoly/interpolation.hpp"
#include "permpoly/permutation.hpp"
#include "permpoly/poly.hpp"

namespace permpoly {

inline std::string polynomial_to_text(const Polynomial& f) {
    if (f.is_zero()) return "0";
    std::string out;
    const auto& c = f.coeffs();
    for (std::size_t i = c.size(); i-- > 0;) {
        if (c[i] == 0) continue;
        if (!out.empty()) out += " + ";
        if (i == 0) {
            out += std::to_string(c[i]);
        } else {
            if (c[i] != 1) out += std::to_string(c[i]);
            out += i == 1 ? "x" : "x^" + std::to_string(i);
        }
    }
    return out;
}

inline std::string polynomial_to_text(const CanonicalPoly& f) {
    return polynomial_to_text(f.poly());
}

inline nlohmann::json polynomial_to_json(const Polynomial& f) {
    return {{"p", f.modulus().value()}, {"coeffs", f.coeffs()}};
}

inline nlohmann::json polynomial_to_json(const CanonicalPoly& f) {
    return polynomial_to_json(f.poly());
}

inline nlohmann::json table_to_json(const FunctionTable& t) {
    return {{"p", t.modulus().value()}, {"values", t.values()}};
}

namespace detail {

inline u64 parsed_modulus(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("p") || !j["p"].is_number_integer())
        throw Error("malformed JSON: expected an object with integer field \"p\"");
    if (!j["p"].is_number_unsigned() && j["p"].get<std::int64_t>() < 0)
        throw Error("malformed JSON: field \"p\" must be nonnegative");
    return j["p"].get<u64>();
}

inline std::vector<u64> parsed_entries(const nlohmann::json& j,
                                       const char* field, PrimeModulus p) {
    if (!j.contains(field) || !j[field].is_array())
        throw Error(std::string("malformed JSON: expected array field \"") +
                    field + "\"");
    std::vector<u64> out;
    out.reserve(j[field].size());
    for (const auto& e : j[field]) {
        if (!e.is_number_integer())
            throw Error(std::string("malformed JSON: non-integer entry in \"") +
                        field + "\"");
        out.push_back(Residue::from_int(p, e.get<std::int64_t>()).value());
    }
    return out;
}

}  // namespace detail

inline Polynomial polynomial_from_json(const nlohmann::json& j) {
    const PrimeModulus p = validate_prime(detail::parsed_modulus(j));
    return Polynomial(p, detail::parsed_entries(j, "coeffs", p));
}

inline FunctionTable table_from_json(const nlohmann::json& j) {
    const PrimeModulus p = validate_prime(detail::parsed_modulus(j));
    return FunctionTable(p, detail::parsed_entries(j, "values", p));
}

inline nlohmann::json report_to_json(const Report& report) {
    nlohmann::json checks = nlohmann::json::array();
    for (const CheckResult& c : report.checks) {
        nlohmann::json jc = {{"name", c.name}, {"pass", c.pass}};
        if (!c.witness.empty()) jc["witness"] = c.witness;
        checks.push_back(std::move(jc));
    }
    nlohmann::json out = {{"p", report.p}, {"checks", std::move(checks)}};
    if (!report.degree_histogram.empty()) {
        nlohmann::json hist = nlohmann::json::object();
        for (const auto& [degree, count] : report.degree_histogram)
            hist[std::to_string(degree)] = count;
        out["degree_histogram"] = std::move(hist);
    }
    return out;
}

inline nlohmann::json moments_to_json(const MomentProfile& profile) {
    return {{"p", profile.modulus.value()}, {"moments", profile.moments}};
}

}  // namespace permpoly
