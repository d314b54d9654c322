#pragma once

/**
 * Transposition polynomials over Z_p, built four equivalent ways, plus the
 * moment criterion for canonical degree and the exhaustive verification
 * scans that check the constructions against each other.
 *
 * All four constructions produce the canonical representative of the
 * transposition (a b): the value table swaps a and b and fixes every other
 * point.
 */

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "permpoly/errors.hpp"
#include "permpoly/interpolation.hpp"
#include "permpoly/modular.hpp"
#include "permpoly/poly.hpp"

namespace permpoly {

// The two swapped points; a != b is enforced at construction.
class TranspositionSpec {
public:
    TranspositionSpec(Residue a, Residue b) : a_(a), b_(b) {
        require_same_modulus(a.modulus(), b.modulus());
        if (a.value() == b.value()) throw DegeneratePair(a.value());
    }

    TranspositionSpec(PrimeModulus p, u64 a, u64 b)
        : TranspositionSpec(Residue(p, a), Residue(p, b)) {}

    Residue a() const noexcept { return a_; }
    Residue b() const noexcept { return b_; }
    PrimeModulus modulus() const noexcept { return a_.modulus(); }

private:
    Residue a_;
    Residue b_;
};

// ---------------------------------------------------------------------------
// The four constructions
// ---------------------------------------------------------------------------

// Closed form for the transposition (0 1): the geometric sum
// 1 + x + x^2 + ... + x^{p-2} with one extra x. Works for every prime,
// including p = 2 where it collapses to x + 1.
inline CanonicalPoly transposition_simple(PrimeModulus pm) {
    const u64 p = pm.value();
    Polynomial geometric(pm, std::vector<u64>(static_cast<std::size_t>(p - 1), 1));
    return canonical_reduce(geometric + Polynomial::monomial(pm, 1));
}

// The transposition (a b) by the affine substitution u = (x-a)/(b-a) into
// the (0 1) form: (b-a) * f(u) + a.
inline CanonicalPoly transposition_general(PrimeModulus pm,
                                           const TranspositionSpec& spec) {
    require_same_modulus(pm, spec.modulus());
    if (!pm.is_odd()) throw EvenModulus();
    const u64 p = pm.value();
    const u64 a = spec.a().value(), b = spec.b().value();
    const u64 inv_ba = inv_mod(sub_mod(b, a, p), p);
    // u(x) = (x - a) * (b - a)^{-1}
    Polynomial u(pm, {neg_mod(mul_mod(a, inv_ba, p), p), inv_ba});
    Polynomial composed =
        poly_compose(transposition_simple(pm).poly(), u, /*interleave_reduce=*/true);
    Polynomial scaled = composed * Residue(pm, sub_mod(b, a, p));
    return canonical_reduce(scaled + Polynomial::constant(pm, a));
}

namespace detail {

// The nested construction -[((x-1)^{p-2} + 1)^{p-2} - 1]^{p-2}, built by
// composing with x^{p-2} three times.
inline Polynomial chen_mullen_nested(PrimeModulus pm, bool interleave_reduce) {
    const u64 p = pm.value();
    const Polynomial power =
        Polynomial::monomial(pm, static_cast<std::size_t>(p - 2));
    const Polynomial one = Polynomial::constant(pm, 1);
    Polynomial t = Polynomial::from_ints(pm, {-1, 1});      // x - 1
    t = poly_compose(power, t, interleave_reduce);          // (x-1)^{p-2}
    t = poly_compose(power, t + one, interleave_reduce);    // (... + 1)^{p-2}
    t = poly_compose(power, t - one, interleave_reduce);    // (... - 1)^{p-2}
    return -t;
}

}  // namespace detail

// The Chen-Mullen nested form for the transposition (0 1), reduced
// canonically after every intermediate multiplication. Equals
// transposition_simple by uniqueness of canonical representatives.
inline CanonicalPoly transposition_chen_mullen(PrimeModulus pm) {
    if (!pm.is_odd()) throw EvenModulus();
    return canonical_reduce(detail::chen_mullen_nested(pm, true));
}

// The same nested form expanded with no reduction: degree (p-2)^3. Feasible
// for small p only; used to check divisibility of the raw difference.
inline Polynomial transposition_chen_mullen_raw(PrimeModulus pm) {
    if (!pm.is_odd()) throw EvenModulus();
    return detail::chen_mullen_nested(pm, false);
}

// The rational form (b-a)^2 * (x^p - x)/((x-a)(x-b)) + x. The two synthetic
// divisions are exact because a and b are roots of x^p - x; a nonzero
// remainder is a logic fault.
inline CanonicalPoly transposition_rational(PrimeModulus pm,
                                            const TranspositionSpec& spec) {
    require_same_modulus(pm, spec.modulus());
    if (!pm.is_odd()) throw EvenModulus();
    const u64 p = pm.value();
    const Polynomial vanishing = vanishing_poly(pm, true);
    SyntheticDivision d1 = synthetic_divide(vanishing, spec.a());
    if (!d1.remainder.is_zero()) throw InexactDivision();
    SyntheticDivision d2 = synthetic_divide(d1.quotient, spec.b());
    if (!d2.remainder.is_zero()) throw InexactDivision();
    const u64 ba = sub_mod(spec.b().value(), spec.a().value(), p);
    Polynomial scaled = d2.quotient * Residue(pm, mul_mod(ba, ba, p));
    return canonical_reduce(scaled + Polynomial::monomial(pm, 1));
}

// ---------------------------------------------------------------------------
// Permutation detection and the moment criterion
// ---------------------------------------------------------------------------

inline bool is_permutation(const FunctionTable& t) {
    std::vector<bool> seen(t.size(), false);
    for (std::size_t a = 0; a < t.size(); ++a) {
        const std::size_t v = static_cast<std::size_t>(t[a]);
        if (seen[v]) return false;
        seen[v] = true;
    }
    return true;
}

// The k-th moment: sum over a of a^k * f(a) mod p, with 0^0 = 1 so the a = 0
// term contributes f(0) when k = 0.
inline Residue moment(const FunctionTable& t, u64 k) {
    const u64 p = t.modulus().value();
    if (k > p - 1) throw KOutOfRange(k, p);
    u64 acc = 0;
    for (u64 a = 0; a < p; ++a)
        acc = add_mod(acc,
                      mul_mod(pow_mod(a, k, p), t[static_cast<std::size_t>(a)], p),
                      p);
    return Residue(t.modulus(), acc);
}

// All p moments of a table; moments[k] determines the canonical degree.
struct MomentProfile {
    PrimeModulus modulus;
    std::vector<u64> moments;
};

inline MomentProfile moment_profile(const FunctionTable& t) {
    const u64 p = t.modulus().value();
    std::vector<u64> moments(static_cast<std::size_t>(p), 0);
    // powers[a] tracks a^k across iterations, starting at a^0 = 1 (0^0 = 1).
    std::vector<u64> powers(static_cast<std::size_t>(p), 1);
    for (std::size_t k = 0; k < moments.size(); ++k) {
        u64 acc = 0;
        for (std::size_t a = 0; a < powers.size(); ++a)
            acc = add_mod(acc, mul_mod(powers[a], t[a], p), p);
        moments[k] = acc;
        for (std::size_t a = 0; a < powers.size(); ++a)
            powers[a] = mul_mod(powers[a], static_cast<u64>(a), p);
    }
    return {t.modulus(), std::move(moments)};
}

// Degree of the canonical polynomial for a table, read off the moments: if k
// is the smallest index with a nonzero moment, the degree is p - 1 - k. An
// empty optional means all moments vanish, i.e. the zero function.
inline std::optional<std::size_t> canonical_degree_via_moments(
    const FunctionTable& t) {
    const u64 p = t.modulus().value();
    std::vector<u64> powers(t.size(), 1);
    for (u64 k = 0; k < p; ++k) {
        u64 acc = 0;
        for (std::size_t a = 0; a < powers.size(); ++a)
            acc = add_mod(acc, mul_mod(powers[a], t[a], p), p);
        if (acc != 0) return static_cast<std::size_t>(p - 1 - k);
        for (std::size_t a = 0; a < powers.size(); ++a)
            powers[a] = mul_mod(powers[a], static_cast<u64>(a), p);
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Verification scans
// ---------------------------------------------------------------------------

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string witness;  // empty when the check passed
};

struct Report {
    u64 p = 0;
    std::vector<CheckResult> checks;
    // Populated by hermite_scan only: canonical degree -> permutation count.
    std::map<std::size_t, u64> degree_histogram;

    bool all_passed() const noexcept {
        return std::all_of(checks.begin(), checks.end(),
                           [](const CheckResult& c) { return c.pass; });
    }
};

// Throws VerificationFailure for the first failing check in the report.
inline void require_all(const Report& report) {
    for (const CheckResult& c : report.checks)
        if (!c.pass) throw VerificationFailure(c.name, c.witness);
}

// Runs every identity this library asserts about transpositions at one
// prime: the value table of the simple form, agreement of the nested form
// with the simple form, agreement of the affine and rational forms over all
// pairs, and divisibility of the raw (unreduced) difference by x^p - x.
inline Report verify_transposition_forms(PrimeModulus pm) {
    if (!pm.is_odd()) throw EvenModulus();
    const u64 p = pm.value();
    Report report;
    report.p = p;

    const CanonicalPoly simple = transposition_simple(pm);

    {
        CheckResult c{"simple_transposition_table", true, ""};
        const FunctionTable t = table_of(simple);
        for (u64 a = 0; a < p; ++a) {
            const u64 want = a == 0 ? 1 : a == 1 ? 0 : a;
            if (t[static_cast<std::size_t>(a)] != want) {
                c.pass = false;
                c.witness = "f(" + std::to_string(a) + ") = " +
                            std::to_string(t[static_cast<std::size_t>(a)]) +
                            ", want " + std::to_string(want);
                break;
            }
        }
        report.checks.push_back(std::move(c));
    }

    {
        CheckResult c{"chen_mullen_matches_simple", true, ""};
        if (transposition_chen_mullen(pm) != simple) {
            c.pass = false;
            c.witness = "canonical coefficients differ";
        }
        report.checks.push_back(std::move(c));
    }

    {
        CheckResult c{"general_matches_rational", true, ""};
        for (u64 a = 0; a < p && c.pass; ++a) {
            for (u64 b = a + 1; b < p && c.pass; ++b) {
                const TranspositionSpec spec(pm, a, b);
                if (transposition_general(pm, spec) !=
                    transposition_rational(pm, spec)) {
                    c.pass = false;
                    c.witness =
                        "a=" + std::to_string(a) + " b=" + std::to_string(b);
                }
            }
        }
        report.checks.push_back(std::move(c));
    }

    {
        CheckResult c{"raw_difference_divisible_by_vanishing", true, ""};
        const Polynomial diff =
            transposition_chen_mullen_raw(pm) - simple.poly();
        const Polynomial vanishing = vanishing_poly(pm, true);
        if (!diff.is_zero()) {
            const PolyDivision d = poly_divmod(diff, vanishing);
            if (!d.remainder.is_zero()) {
                c.pass = false;
                c.witness = "nonzero remainder";
            } else if (d.quotient * vanishing + d.remainder != diff) {
                c.pass = false;
                c.witness = "division reconstruction failed";
            }
        }
        report.checks.push_back(std::move(c));
    }

    return report;
}

inline constexpr u64 kDefaultHermiteBudget = 5040;  // 7!

// Enumerates every permutation of Z_p in lexicographic order, computes each
// canonical degree through the moment criterion, and checks the two degree
// restrictions: degree at most p - 2 (meaningful for p >= 3) and no degree
// d > 1 dividing p - 1. The histogram of observed degrees is reported, not
// asserted. Throws TooLarge when p! exceeds the budget.
inline Report hermite_scan(PrimeModulus pm, u64 budget = kDefaultHermiteBudget) {
    const u64 p = pm.value();
    u64 factorial = 1;
    for (u64 i = 2; i <= p; ++i) {
        if (factorial > budget / i) throw TooLarge(p);
        factorial *= i;
    }
    if (factorial > budget) throw TooLarge(p);

    Report report;
    report.p = p;
    CheckResult degree_bound{"degree_at_most_p_minus_2", true, ""};
    CheckResult divisor_free{"no_degree_above_1_divides_p_minus_1", true, ""};

    auto describe = [](const std::vector<u64>& perm, std::size_t d) {
        std::string s = "degree " + std::to_string(d) + " at [";
        for (std::size_t i = 0; i < perm.size(); ++i)
            s += (i ? "," : "") + std::to_string(perm[i]);
        return s + "]";
    };

    std::vector<u64> perm(static_cast<std::size_t>(p));
    std::iota(perm.begin(), perm.end(), 0);
    do {
        const FunctionTable t(pm, perm);
        // A permutation is never the zero function, so a degree always exists.
        const std::size_t d = canonical_degree_via_moments(t).value();
        ++report.degree_histogram[d];
        if (p >= 3 && degree_bound.pass && d > p - 2) {
            degree_bound.pass = false;
            degree_bound.witness = describe(perm, d);
        }
        if (divisor_free.pass && d > 1 && (p - 1) % d == 0) {
            divisor_free.pass = false;
            divisor_free.witness = describe(perm, d);
        }
    } while (std::next_permutation(perm.begin(), perm.end()));

    if (p >= 3) report.checks.push_back(std::move(degree_bound));
    report.checks.push_back(std::move(divisor_free));
    return report;
}

}  // namespace permpoly
