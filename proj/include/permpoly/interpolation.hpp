#pragma once

/**
 * Conversion between the two views of a function Z_p -> Z_p: the value
 * table f(0), ..., f(p-1) and the unique canonical polynomial of degree at
 * most p - 1 that represents it.
 */

#include <cassert>
#include <cstdint>
#include <utility>
#include <vector>

#include "permpoly/errors.hpp"
#include "permpoly/modular.hpp"
#include "permpoly/poly.hpp"

namespace permpoly {

// The extensional view: exactly p values, values[a] = f(a), each in [0, p).
class FunctionTable {
public:
    // Accepts any integer entries and reduces them mod p; the length must be
    // exactly p.
    FunctionTable(PrimeModulus p, std::vector<u64> values)
        : p_(p), values_(std::move(values)) {
        if (values_.size() != p_.value())
            throw Error("function table must have exactly p = " +
                        std::to_string(p_.value()) + " entries, got " +
                        std::to_string(values_.size()));
        for (u64& v : values_) v %= p_.value();
    }

    static FunctionTable identity(PrimeModulus p) {
        std::vector<u64> v(static_cast<std::size_t>(p.value()));
        for (std::size_t a = 0; a < v.size(); ++a) v[a] = a;
        return FunctionTable(p, std::move(v));
    }

    PrimeModulus modulus() const noexcept { return p_; }
    std::size_t size() const noexcept { return values_.size(); }
    const std::vector<u64>& values() const noexcept { return values_; }
    u64 operator[](std::size_t a) const noexcept { return values_[a]; }

    friend bool operator==(const FunctionTable& lhs, const FunctionTable& rhs) noexcept {
        return lhs.p_ == rhs.p_ && lhs.values_ == rhs.values_;
    }
    friend bool operator!=(const FunctionTable& lhs, const FunctionTable& rhs) noexcept {
        return !(lhs == rhs);
    }

private:
    PrimeModulus p_;
    std::vector<u64> values_;
};

// Evaluate f at every point of Z_p.
inline FunctionTable table_of(const Polynomial& f) {
    const u64 p = f.modulus().value();
    std::vector<u64> values(static_cast<std::size_t>(p));
    for (u64 a = 0; a < p; ++a) values[static_cast<std::size_t>(a)] = eval_mod(f, a);
    return FunctionTable(f.modulus(), std::move(values));
}

inline FunctionTable table_of(const CanonicalPoly& f) { return table_of(f.poly()); }

// The Fermat indicator expansion: f(x) = sum_a f(a) * (1 - (x-a)^{p-1}).
// Each summand has degree p - 1, so the sum is already canonical.
inline CanonicalPoly interpolate(const FunctionTable& t) {
    const PrimeModulus pm = t.modulus();
    const u64 p = pm.value();
    Polynomial acc(pm);
    for (u64 a = 0; a < p; ++a) {
        const u64 fa = t[static_cast<std::size_t>(a)];
        if (fa == 0) continue;
        // (x - a)^{p-1} by binary powering of the linear factor.
        Polynomial power = Polynomial::constant(pm, 1);
        Polynomial base = Polynomial::from_ints(pm, {0, 1}) -
                          Polynomial::constant(pm, a);
        u64 e = p - 1;
        while (e > 0) {
            if (e & 1) power = power * base;
            e >>= 1;
            if (e) base = base * base;
        }
        const Residue weight(pm, fa);
        acc = acc + Polynomial::constant(pm, fa) - power * weight;
    }
    return canonical_reduce(acc);
}

// The expanded product of (x - a) over all of Z_p (include_zero set) or over
// the nonzero elements only. These equal x^p - x and x^{p-1} - 1
// respectively; debug builds assert the identity coefficientwise.
inline Polynomial vanishing_poly(PrimeModulus pm, bool include_zero) {
    const u64 p = pm.value();
    Polynomial acc = Polynomial::constant(pm, 1);
    for (u64 a = include_zero ? 0 : 1; a < p; ++a)
        acc = acc * (Polynomial::from_ints(pm, {0, 1}) - Polynomial::constant(pm, a));
#ifndef NDEBUG
    {
        Polynomial expected =
            include_zero
                ? Polynomial::monomial(pm, static_cast<std::size_t>(p)) -
                      Polynomial::monomial(pm, 1)
                : Polynomial::monomial(pm, static_cast<std::size_t>(p - 1)) -
                      Polynomial::constant(pm, 1);
        assert(acc == expected);
    }
#endif
    return acc;
}

// Two polynomials represent the same function iff their canonical forms
// coincide, equivalently iff their difference is a multiple of x^p - x.
// Debug builds compute both routes and assert they agree.
inline bool functions_equal(const Polynomial& f, const Polynomial& g) {
    require_same_modulus(f.modulus(), g.modulus());
    const bool canonical_route = canonical_reduce(f) == canonical_reduce(g);
#ifndef NDEBUG
    {
        const Polynomial diff = f - g;
        const bool remainder_route =
            diff.is_zero() ||
            poly_divmod(diff, vanishing_poly(f.modulus(), true)).remainder.is_zero();
        assert(canonical_route == remainder_route);
    }
#endif
    return canonical_route;
}

}  // namespace permpoly
