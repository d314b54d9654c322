#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace permpoly {

// Base class for everything this library throws.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// validate_prime: n < 2 or outside the supported word range.
class OutOfRange : public Error {
public:
    explicit OutOfRange(std::uint64_t n)
        : Error("modulus out of range: " + std::to_string(n)), n_(n) {}
    std::uint64_t value() const noexcept { return n_; }

private:
    std::uint64_t n_;
};

// validate_prime: n is composite.
class CompositeModulus : public Error {
public:
    explicit CompositeModulus(std::uint64_t n)
        : Error("modulus is composite: " + std::to_string(n)), n_(n) {}
    std::uint64_t value() const noexcept { return n_; }

private:
    std::uint64_t n_;
};

// mod_inv of zero.
class DivisionByZero : public Error {
public:
    DivisionByZero() : Error("division by zero residue") {}
};

// Two operands built over different prime moduli.
class ModulusMismatch : public Error {
public:
    ModulusMismatch(std::uint64_t lhs, std::uint64_t rhs)
        : Error("modulus mismatch: " + std::to_string(lhs) + " vs " +
                std::to_string(rhs)) {}
};

// lhopital_eval at a point that is not a root.
class NotARoot : public Error {
public:
    explicit NotARoot(std::uint64_t c)
        : Error("not a root: f(" + std::to_string(c) + ") != 0") {}
};

// Transposition with a == b.
class DegeneratePair : public Error {
public:
    explicit DegeneratePair(std::uint64_t a)
        : Error("degenerate transposition: a = b = " + std::to_string(a)) {}
};

// Operation defined only for odd primes called with p = 2.
class EvenModulus : public Error {
public:
    EvenModulus() : Error("operation requires an odd prime modulus") {}
};

// Moment index outside 0..p-1.
class KOutOfRange : public Error {
public:
    KOutOfRange(std::uint64_t k, std::uint64_t p)
        : Error("moment index " + std::to_string(k) + " out of range for p = " +
                std::to_string(p)) {}
};

// Exhaustive scan rejected: p! exceeds the enumeration budget.
class TooLarge : public Error {
public:
    explicit TooLarge(std::uint64_t p)
        : Error("p = " + std::to_string(p) +
                " exceeds the exhaustive enumeration budget") {}
};

// A division that is exact by construction produced a nonzero remainder.
// Reaching this is a logic fault, not a user error.
class InexactDivision : public Error {
public:
    InexactDivision() : Error("internal fault: exact division left a remainder") {}
};

// A verification suite found a failing check.
class VerificationFailure : public Error {
public:
    VerificationFailure(const std::string& check, const std::string& witness)
        : Error("verification failed: " + check +
                (witness.empty() ? "" : " [" + witness + "]")),
          check_(check), witness_(witness) {}
    const std::string& check() const noexcept { return check_; }
    const std::string& witness() const noexcept { return witness_; }

private:
    std::string check_;
    std::string witness_;
};

}  // namespace permpoly
