#pragma once

/**
 * Dense polynomial arithmetic over Z_p[x].
 *
 * Coefficients are stored ascending: coeffs[i] multiplies x^i. A polynomial
 * is normalized when it is either empty (the zero polynomial) or its last
 * coefficient is nonzero; every constructor and operation maintains this.
 * The zero polynomial has no degree, so degree() returns an empty optional
 * rather than a sentinel integer.
 */

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <utility>
#include <vector>

#include "permpoly/errors.hpp"
#include "permpoly/modular.hpp"

namespace permpoly {

class Polynomial {
public:
    // The zero polynomial over Z_p.
    explicit Polynomial(PrimeModulus p) : p_(p) {}

    // Reduces every coefficient mod p and strips trailing zeros.
    Polynomial(PrimeModulus p, std::vector<u64> coeffs)
        : p_(p), coeffs_(std::move(coeffs)) {
        for (u64& c : coeffs_) c %= p_.value();
        normalize();
    }

    static Polynomial from_ints(PrimeModulus p,
                                std::initializer_list<std::int64_t> coeffs) {
        std::vector<u64> reduced;
        reduced.reserve(coeffs.size());
        for (std::int64_t c : coeffs)
            reduced.push_back(Residue::from_int(p, c).value());
        return Polynomial(p, std::move(reduced));
    }

    // c * x^exp
    static Polynomial monomial(PrimeModulus p, std::size_t exp, u64 c = 1) {
        std::vector<u64> coeffs(exp + 1, 0);
        coeffs[exp] = c % p.value();
        return Polynomial(p, std::move(coeffs));
    }

    static Polynomial constant(PrimeModulus p, u64 c) {
        return Polynomial(p, {c});
    }

    PrimeModulus modulus() const noexcept { return p_; }
    bool is_zero() const noexcept { return coeffs_.empty(); }

    std::optional<std::size_t> degree() const noexcept {
        if (coeffs_.empty()) return std::nullopt;
        return coeffs_.size() - 1;
    }

    const std::vector<u64>& coeffs() const noexcept { return coeffs_; }

    // Coefficient of x^i; zero beyond the stored range.
    u64 coeff(std::size_t i) const noexcept {
        return i < coeffs_.size() ? coeffs_[i] : 0;
    }

    friend bool operator==(const Polynomial& lhs, const Polynomial& rhs) noexcept {
        return lhs.p_ == rhs.p_ && lhs.coeffs_ == rhs.coeffs_;
    }
    friend bool operator!=(const Polynomial& lhs, const Polynomial& rhs) noexcept {
        return !(lhs == rhs);
    }

    friend Polynomial operator+(const Polynomial& lhs, const Polynomial& rhs) {
        require_same_modulus(lhs.p_, rhs.p_);
        const u64 p = lhs.p_.value();
        std::vector<u64> out(std::max(lhs.coeffs_.size(), rhs.coeffs_.size()), 0);
        for (std::size_t i = 0; i < out.size(); ++i)
            out[i] = add_mod(lhs.coeff(i), rhs.coeff(i), p);
        return Polynomial(lhs.p_, std::move(out));
    }

    friend Polynomial operator-(const Polynomial& lhs, const Polynomial& rhs) {
        require_same_modulus(lhs.p_, rhs.p_);
        const u64 p = lhs.p_.value();
        std::vector<u64> out(std::max(lhs.coeffs_.size(), rhs.coeffs_.size()), 0);
        for (std::size_t i = 0; i < out.size(); ++i)
            out[i] = sub_mod(lhs.coeff(i), rhs.coeff(i), p);
        return Polynomial(lhs.p_, std::move(out));
    }

    friend Polynomial operator-(const Polynomial& f) {
        std::vector<u64> out(f.coeffs_.size());
        for (std::size_t i = 0; i < out.size(); ++i)
            out[i] = neg_mod(f.coeffs_[i], f.p_.value());
        return Polynomial(f.p_, std::move(out));
    }

    // Schoolbook convolution. For p below 2^32 the inner sum accumulates raw
    // 128-bit products and reduces once per output coefficient; wider moduli
    // fall back to a reduction per term.
    friend Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs) {
        require_same_modulus(lhs.p_, rhs.p_);
        if (lhs.is_zero() || rhs.is_zero()) return Polynomial(lhs.p_);
        const u64 p = lhs.p_.value();
        const std::size_t n = lhs.coeffs_.size(), m = rhs.coeffs_.size();
        std::vector<u64> out(n + m - 1, 0);
        if (p < (u64{1} << 32)) {
            for (std::size_t k = 0; k < out.size(); ++k) {
                u128 acc = 0;
                const std::size_t lo = k >= m ? k - m + 1 : 0;
                const std::size_t hi = std::min(k, n - 1);
                for (std::size_t i = lo; i <= hi; ++i)
                    acc += static_cast<u128>(lhs.coeffs_[i]) * rhs.coeffs_[k - i];
                out[k] = static_cast<u64>(acc % p);
            }
        } else {
            for (std::size_t i = 0; i < n; ++i) {
                if (lhs.coeffs_[i] == 0) continue;
                for (std::size_t j = 0; j < m; ++j)
                    out[i + j] = add_mod(
                        out[i + j], mul_mod(lhs.coeffs_[i], rhs.coeffs_[j], p), p);
            }
        }
        return Polynomial(lhs.p_, std::move(out));
    }

    friend Polynomial operator*(const Polynomial& f, Residue c) {
        require_same_modulus(f.p_, c.modulus());
        const u64 p = f.p_.value();
        std::vector<u64> out(f.coeffs_.size());
        for (std::size_t i = 0; i < out.size(); ++i)
            out[i] = mul_mod(f.coeffs_[i], c.value(), p);
        return Polynomial(f.p_, std::move(out));
    }

private:
    void normalize() noexcept {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }

    PrimeModulus p_;
    std::vector<u64> coeffs_;
};

// Horner evaluation at a canonical residue value.
inline u64 eval_mod(const Polynomial& f, u64 a) noexcept {
    const u64 p = f.modulus().value();
    u64 acc = 0;
    const auto& c = f.coeffs();
    for (std::size_t i = c.size(); i-- > 0;)
        acc = add_mod(mul_mod(acc, a, p), c[i], p);
    return acc;
}

inline Residue poly_eval(const Polynomial& f, Residue a) {
    require_same_modulus(f.modulus(), a.modulus());
    return Residue(f.modulus(), eval_mod(f, a.value()));
}

// Formal derivative: coefficient i becomes i * coeffs[i] mod p.
inline Polynomial poly_derivative(const Polynomial& f) {
    const u64 p = f.modulus().value();
    if (f.is_zero()) return Polynomial(f.modulus());
    std::vector<u64> out(f.coeffs().size() - 1);
    for (std::size_t i = 1; i < f.coeffs().size(); ++i)
        out[i - 1] = mul_mod(f.coeffs()[i], i % p, p);
    return Polynomial(f.modulus(), std::move(out));
}

// ---------------------------------------------------------------------------
// Canonical representatives mod x^p - x.
// ---------------------------------------------------------------------------

// A polynomial of degree at most p - 1: by Lagrange/Fermat it is the unique
// representative of the function it computes on Z_p.
class CanonicalPoly {
public:
    explicit CanonicalPoly(Polynomial inner) : inner_(std::move(inner)) {
        const u64 p = inner_.modulus().value();
        auto d = inner_.degree();
        if (d && *d > p - 1)
            throw Error("internal fault: polynomial is not canonical");
    }

    const Polynomial& poly() const noexcept { return inner_; }
    PrimeModulus modulus() const noexcept { return inner_.modulus(); }
    std::optional<std::size_t> degree() const noexcept { return inner_.degree(); }
    const std::vector<u64>& coeffs() const noexcept { return inner_.coeffs(); }
    bool is_zero() const noexcept { return inner_.is_zero(); }

    friend bool operator==(const CanonicalPoly& lhs, const CanonicalPoly& rhs) noexcept {
        return lhs.inner_ == rhs.inner_;
    }
    friend bool operator!=(const CanonicalPoly& lhs, const CanonicalPoly& rhs) noexcept {
        return !(lhs == rhs);
    }

private:
    Polynomial inner_;
};

// Reduce mod x^p - x by exponent folding: x^e == x^{e-(p-1)} for e >= p,
// applied until every exponent is at most p - 1. Exponent 0 is exempt (the
// congruence x^e == x^{e mod (p-1)} only holds for e >= 1). The result
// represents the same function on Z_p.
inline CanonicalPoly canonical_reduce(const Polynomial& f) {
    const u64 p = f.modulus().value();
    const std::size_t pz = static_cast<std::size_t>(p);
    if (f.coeffs().size() <= pz) return CanonicalPoly(f);
    std::vector<u64> out(pz, 0);
    for (std::size_t e = 0; e < f.coeffs().size(); ++e) {
        const u64 c = f.coeffs()[e];
        if (c == 0) continue;
        const std::size_t target = e < pz ? e : (e - 1) % (pz - 1) + 1;
        out[target] = add_mod(out[target], c, p);
    }
    return CanonicalPoly(Polynomial(f.modulus(), std::move(out)));
}

// f composed with g. With interleave_reduce set, g is reduced up front and a
// canonical reduction follows every intermediate multiplication, so no
// intermediate degree exceeds 2(p-1); use it whenever only the represented
// function matters.
inline Polynomial poly_compose(const Polynomial& f, const Polynomial& g,
                               bool interleave_reduce = false) {
    require_same_modulus(f.modulus(), g.modulus());
    const PrimeModulus p = f.modulus();
    const Polynomial inner = interleave_reduce ? canonical_reduce(g).poly() : g;
    Polynomial acc(p);
    const auto& c = f.coeffs();
    for (std::size_t i = c.size(); i-- > 0;) {
        acc = acc * inner;
        if (interleave_reduce) acc = canonical_reduce(acc).poly();
        acc = acc + Polynomial::constant(p, c[i]);
    }
    return acc;
}

// ---------------------------------------------------------------------------
// Division
// ---------------------------------------------------------------------------

struct SyntheticDivision {
    Polynomial quotient;
    Residue remainder;
};

// f = (x - c) * quotient + remainder, with remainder == f(c).
inline SyntheticDivision synthetic_divide(const Polynomial& f, Residue c) {
    require_same_modulus(f.modulus(), c.modulus());
    const u64 p = f.modulus().value();
    if (f.is_zero())
        return {Polynomial(f.modulus()), Residue(f.modulus(), 0)};
    const auto& in = f.coeffs();
    std::vector<u64> q(in.size() - 1, 0);
    u64 carry = 0;
    for (std::size_t i = in.size(); i-- > 1;) {
        carry = add_mod(mul_mod(carry, c.value(), p), in[i], p);
        q[i - 1] = carry;
    }
    const u64 rem = add_mod(mul_mod(carry, c.value(), p), in[0], p);
    return {Polynomial(f.modulus(), std::move(q)), Residue(f.modulus(), rem)};
}

struct PolyDivision {
    Polynomial quotient;
    Polynomial remainder;
};

// Long division: f = g * quotient + remainder with deg(remainder) < deg(g).
// Works for any nonzero g since the leading coefficient is invertible mod p.
inline PolyDivision poly_divmod(const Polynomial& f, const Polynomial& g) {
    require_same_modulus(f.modulus(), g.modulus());
    if (g.is_zero()) throw DivisionByZero();
    const u64 p = f.modulus().value();
    const std::size_t dg = *g.degree();
    if (f.is_zero() || *f.degree() < dg)
        return {Polynomial(f.modulus()), f};
    const u64 lead_inv = inv_mod(g.coeffs().back(), p);
    std::vector<u64> rem = f.coeffs();
    std::vector<u64> quo(rem.size() - dg, 0);
    for (std::size_t k = rem.size(); k-- > dg;) {
        const u64 factor = mul_mod(rem[k], lead_inv, p);
        if (factor == 0) continue;
        quo[k - dg] = factor;
        for (std::size_t j = 0; j <= dg; ++j)
            rem[k - dg + j] =
                sub_mod(rem[k - dg + j], mul_mod(factor, g.coeffs()[j], p), p);
    }
    return {Polynomial(f.modulus(), std::move(quo)),
            Polynomial(f.modulus(), std::move(rem))};
}

// Finite-field l'Hopital: when f(c) == 0, the value of f(x)/(x-c) at x = c
// equals f'(c). Throws NotARoot otherwise.
inline Residue lhopital_eval(const Polynomial& f, Residue c) {
    require_same_modulus(f.modulus(), c.modulus());
    if (eval_mod(f, c.value()) != 0) throw NotARoot(c.value());
    return poly_eval(poly_derivative(f), c);
}

}  // namespace permpoly
