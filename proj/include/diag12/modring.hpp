#pragma once

/**
 * @file modring.hpp
 * @brief Arithmetic in Z_n and the structural facts the rest of the library
 * leans on: prime factorization, radical, nilpotents, units and the exponent
 * of the unit group.
 *
 * Residues are always stored as least nonnegative representatives, so two
 * residues of the same ring are equal iff their values are equal. Moduli are
 * limited to 2^63 - 1; products are formed in 128-bit arithmetic.
 */

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "diag12/errors.hpp"

namespace diag12 {

struct PrimePower {
    std::uint64_t prime;
    unsigned exponent;

    friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/**
 * Z_n together with its factorization. Cheap to copy: copies share one
 * immutable block. Two RingSpecs compare equal iff their moduli do.
 */
class RingSpec {
public:
    /// Throws std::invalid_argument for n <= 0.
    static RingSpec make(std::int64_t n);

    std::uint64_t modulus() const noexcept { return data_->modulus; }
    std::span<const PrimePower> factorization() const noexcept { return data_->factorization; }
    /// Product of the distinct primes dividing n; 1 for n = 1.
    std::uint64_t radical() const noexcept { return data_->radical; }
    /// Largest exponent in the factorization; 0 for n = 1.
    unsigned max_exponent() const noexcept { return data_->max_exponent; }

    bool is_prime() const noexcept {
        return data_->factorization.size() == 1 && data_->factorization[0].exponent == 1;
    }

    friend bool operator==(const RingSpec& a, const RingSpec& b) noexcept {
        return a.modulus() == b.modulus();
    }

private:
    struct Data {
        std::uint64_t modulus;
        std::vector<PrimePower> factorization;
        std::uint64_t radical;
        unsigned max_exponent;
    };

    explicit RingSpec(std::shared_ptr<const Data> data) : data_(std::move(data)) {}

    std::shared_ptr<const Data> data_;
};

inline RingSpec make_ring(std::int64_t n) { return RingSpec::make(n); }

/// Trial-division factorization, primes increasing. Empty for n = 1.
std::vector<PrimePower> factorize(std::uint64_t n);

// Raw arithmetic on canonical representatives. Callers guarantee a, b < n.
namespace modarith {

inline std::uint64_t add(std::uint64_t a, std::uint64_t b, std::uint64_t n) noexcept {
    std::uint64_t s = a + b;
    return s >= n ? s - n : s;
}

inline std::uint64_t neg(std::uint64_t a, std::uint64_t n) noexcept { return a == 0 ? 0 : n - a; }

inline std::uint64_t sub(std::uint64_t a, std::uint64_t b, std::uint64_t n) noexcept {
    return add(a, neg(b, n), n);
}

inline std::uint64_t mul(std::uint64_t a, std::uint64_t b, std::uint64_t n) noexcept {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % n);
}

std::uint64_t pow(std::uint64_t a, std::uint64_t e, std::uint64_t n) noexcept;

/// Reduces any signed integer into [0, n).
std::uint64_t reduce(std::int64_t value, std::uint64_t n) noexcept;

/// Inverse of a mod n via the extended Euclidean algorithm, if gcd(a, n) = 1.
std::optional<std::uint64_t> inverse(std::uint64_t a, std::uint64_t n) noexcept;

} // namespace modarith

/// An element of Z_n.
class Residue {
public:
    /// Reduces value into [0, n).
    Residue(RingSpec ring, std::int64_t value)
        : ring_(std::move(ring)), value_(modarith::reduce(value, ring_.modulus())) {}

    static Residue from_canonical(RingSpec ring, std::uint64_t value);

    std::uint64_t value() const noexcept { return value_; }
    const RingSpec& ring() const noexcept { return ring_; }
    std::uint64_t modulus() const noexcept { return ring_.modulus(); }

    friend bool operator==(const Residue& a, const Residue& b) noexcept {
        return a.modulus() == b.modulus() && a.value_ == b.value_;
    }

private:
    struct Canonical {};
    Residue(RingSpec ring, std::uint64_t value, Canonical) : ring_(std::move(ring)), value_(value) {}

    RingSpec ring_;
    std::uint64_t value_;
};

// Binary operations throw RingMismatch when the moduli differ.
Residue res_add(const Residue& a, const Residue& b);
Residue res_sub(const Residue& a, const Residue& b);
Residue res_mul(const Residue& a, const Residue& b);
Residue res_neg(const Residue& a);

inline Residue operator+(const Residue& a, const Residue& b) { return res_add(a, b); }
inline Residue operator-(const Residue& a, const Residue& b) { return res_sub(a, b); }
inline Residue operator*(const Residue& a, const Residue& b) { return res_mul(a, b); }
inline Residue operator-(const Residue& a) { return res_neg(a); }

/// Nilpotent iff the radical of n divides c.
bool is_nilpotent_residue(const Residue& c);
inline bool is_nilpotent_value(std::uint64_t c, const RingSpec& ring) noexcept {
    return c % ring.radical() == 0;
}

/// Unit iff gcd(c, n) = 1. In Z_1 the lone residue 0 is a unit.
bool is_unit_residue(const Residue& c);
bool is_unit_value(std::uint64_t c, std::uint64_t n) noexcept;

std::optional<Residue> res_inverse(const Residue& c);

/// Smallest e >= 1 with u^e = 1 for every unit u (the Carmichael function).
std::uint64_t unit_group_exponent(const RingSpec& ring);

} // namespace diag12
