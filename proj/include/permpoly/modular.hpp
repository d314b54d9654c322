#pragma once

/**
 * Exact residue arithmetic over Z_p.
 *
 * Values are uint64_t residues in [0, p); intermediate products go through
 * an unsigned __int128 accumulator, so any prime that fits a 64-bit word is
 * a valid modulus. Primality is established once, at PrimeModulus
 * construction, by a Miller-Rabin test with a witness set that is
 * deterministic for all 64-bit inputs.
 */

#include <cstdint>

#include "permpoly/errors.hpp"

namespace permpoly {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

// ---------------------------------------------------------------------------
// Raw helpers on canonical operands (0 <= a, b < p). These carry no modulus
// tag and do no checking; the typed layer below wraps them.
// ---------------------------------------------------------------------------

inline u64 add_mod(u64 a, u64 b, u64 p) noexcept {
    // a + b may overflow u64 when p is large; compare against p - b instead.
    return (b != 0 && a >= p - b) ? a - (p - b) : a + b;
}

inline u64 sub_mod(u64 a, u64 b, u64 p) noexcept {
    return a >= b ? a - b : a + (p - b);
}

inline u64 neg_mod(u64 a, u64 p) noexcept { return a == 0 ? 0 : p - a; }

inline u64 mul_mod(u64 a, u64 b, u64 p) noexcept {
    return static_cast<u64>(static_cast<u128>(a) * b % p);
}

// a^e mod p by square-and-multiply; pow_mod(0, 0, p) == 1 (0^0 := 1).
inline u64 pow_mod(u64 a, u64 e, u64 p) noexcept {
    u64 result = 1 % p;
    u64 base = a % p;
    while (e > 0) {
        if (e & 1) result = mul_mod(result, base, p);
        base = mul_mod(base, base, p);
        e >>= 1;
    }
    return result;
}

namespace detail {

// One Miller-Rabin round; n odd, n > 2, d odd with n - 1 = d * 2^s.
inline bool miller_rabin_witness(u64 n, u64 a, u64 d, int s) noexcept {
    u64 x = pow_mod(a % n, d, n);
    if (x == 1 || x == n - 1) return false;
    for (int i = 1; i < s; ++i) {
        x = mul_mod(x, x, n);
        if (x == n - 1) return false;
    }
    return true;  // a witnesses compositeness
}

// Deterministic for all 64-bit n with the first twelve primes as bases.
inline bool is_prime_u64(u64 n) noexcept {
    if (n < 2) return false;
    for (u64 q : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL,
                  29ULL, 31ULL, 37ULL}) {
        if (n == q) return true;
        if (n % q == 0) return false;
    }
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (u64 a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL,
                  29ULL, 31ULL, 37ULL}) {
        if (miller_rabin_witness(n, a, d, s)) return false;
    }
    return true;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// PrimeModulus: a validated prime p. Immutable; cheap to copy.
// ---------------------------------------------------------------------------

class PrimeModulus {
public:
    explicit PrimeModulus(u64 n) : p_(n) {
        if (n < 2) throw OutOfRange(n);
        if (!detail::is_prime_u64(n)) throw CompositeModulus(n);
    }

    u64 value() const noexcept { return p_; }
    bool is_odd() const noexcept { return p_ != 2; }

    friend bool operator==(PrimeModulus lhs, PrimeModulus rhs) noexcept {
        return lhs.p_ == rhs.p_;
    }
    friend bool operator!=(PrimeModulus lhs, PrimeModulus rhs) noexcept {
        return lhs.p_ != rhs.p_;
    }

private:
    u64 p_;
};

inline PrimeModulus validate_prime(u64 n) { return PrimeModulus(n); }

inline void require_same_modulus(PrimeModulus lhs, PrimeModulus rhs) {
    if (lhs != rhs) throw ModulusMismatch(lhs.value(), rhs.value());
}

// ---------------------------------------------------------------------------
// Residue: an element of Z_p tagged with its modulus.
// ---------------------------------------------------------------------------

class Residue {
public:
    // Reduces the raw value, so any machine integer is accepted.
    Residue(PrimeModulus p, u64 value) : p_(p), v_(value % p.value()) {}

    static Residue from_int(PrimeModulus p, std::int64_t value) {
        std::int64_t r = value % static_cast<std::int64_t>(p.value());
        if (r < 0) r += static_cast<std::int64_t>(p.value());
        return Residue(p, static_cast<u64>(r));
    }

    u64 value() const noexcept { return v_; }
    PrimeModulus modulus() const noexcept { return p_; }
    bool is_zero() const noexcept { return v_ == 0; }

    friend bool operator==(Residue lhs, Residue rhs) noexcept {
        return lhs.p_ == rhs.p_ && lhs.v_ == rhs.v_;
    }
    friend bool operator!=(Residue lhs, Residue rhs) noexcept {
        return !(lhs == rhs);
    }

    friend Residue operator+(Residue lhs, Residue rhs) {
        require_same_modulus(lhs.p_, rhs.p_);
        return Residue(lhs.p_, add_mod(lhs.v_, rhs.v_, lhs.p_.value()));
    }
    friend Residue operator-(Residue lhs, Residue rhs) {
        require_same_modulus(lhs.p_, rhs.p_);
        return Residue(lhs.p_, sub_mod(lhs.v_, rhs.v_, lhs.p_.value()));
    }
    friend Residue operator*(Residue lhs, Residue rhs) {
        require_same_modulus(lhs.p_, rhs.p_);
        return Residue(lhs.p_, mul_mod(lhs.v_, rhs.v_, lhs.p_.value()));
    }
    friend Residue operator-(Residue a) {
        return Residue(a.p_, neg_mod(a.v_, a.p_.value()));
    }

private:
    PrimeModulus p_;
    u64 v_;
};

// base^exp mod p. mod_pow(x, 0) == 1 for every x including 0.
inline Residue mod_pow(Residue base, u64 exp) {
    return Residue(base.modulus(),
                   pow_mod(base.value(), exp, base.modulus().value()));
}

// Multiplicative inverse via the Fermat exponent p - 2.
inline Residue mod_inv(Residue a) {
    if (a.is_zero()) throw DivisionByZero();
    return mod_pow(a, a.modulus().value() - 2);
}

inline u64 inv_mod(u64 a, u64 p) {
    if (a % p == 0) throw DivisionByZero();
    return pow_mod(a, p - 2, p);
}

}  // namespace permpoly
