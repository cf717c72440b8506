#pragma once

/**
 * @file units.hpp
 * @brief Units of Z_n[x1..xm]: recognition, inversion, involution test, and the
 * two homomorphisms that witness the unit criterion.
 *
 * A polynomial is a unit exactly when its constant term is a unit mod n and
 * every other coefficient is nilpotent mod n. Inversion splits f = a0 + g,
 * where g (the non-constant part) is then nilpotent, and sums the finite series
 *
 *     f^-1 = a0^-1 * sum_{i=0..k} (-g * a0^-1)^i,   g^k != 0, g^(k+1) = 0.
 */

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

#include "diag12/modring.hpp"
#include "diag12/polyring.hpp"

namespace diag12 {

enum class UnitFailure {
    ConstantNotUnit,
    CoefficientNotNilpotent,
};

/// Which half of the unit criterion a polynomial violates, and where.
struct UnitDiagnosis {
    UnitFailure failure;
    Monomial monomial;
    std::uint64_t coefficient;

    /// e.g. "coefficient 3 of x1 is not nilpotent mod 8"
    std::string describe(std::uint64_t n) const;
};

class NotAUnit : public std::domain_error {
public:
    NotAUnit(UnitDiagnosis diagnosis, std::uint64_t n)
        : std::domain_error(diagnosis.describe(n)), diagnosis_(std::move(diagnosis)) {}

    const UnitDiagnosis& diagnosis() const noexcept { return diagnosis_; }
    UnitFailure failure() const noexcept { return diagnosis_.failure; }

private:
    UnitDiagnosis diagnosis_;
};

class NotNilpotent : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// nullopt when f is a unit. Coefficients are examined in descending term order.
std::optional<UnitDiagnosis> diagnose_unit(const Polynomial& f);

bool is_unit_poly(const Polynomial& f);

/// f minus its constant term.
Polynomial nilpotent_part(const Polynomial& f);

/// k with g^k != 0 and g^(k+1) = 0; 0 for g = 0. Throws NotNilpotent naming the
/// first coefficient not divisible by the radical of n.
std::uint64_t nilpotency_index(const Polynomial& g);

/// A pair (f, f^-1) whose product has been checked to be 1.
class UnitCertificate {
public:
    /// Throws std::logic_error unless f * inverse == 1.
    UnitCertificate(Polynomial f, Polynomial inverse, std::uint64_t nilpotency_index_used);

    const Polynomial& unit() const noexcept { return f_; }
    const Polynomial& inverse() const noexcept { return inverse_; }
    std::uint64_t nilpotency_index_used() const noexcept { return k_; }

private:
    Polynomial f_;
    Polynomial inverse_;
    std::uint64_t k_;
};

/// Throws NotAUnit naming the violated condition.
UnitCertificate invert_unit(const Polynomial& f);

/// f * f == 1
bool is_involution(const Polynomial& f);

/// Reduction modulo (x1, ..., xm).
Residue constant_term_hom(const Polynomial& f);

/// Coefficientwise reduction Z_n[x..] -> Z_p[x..]. p must be a prime divisor of n.
Polynomial reduce_mod_prime(const Polynomial& f, std::uint64_t p);

} // namespace diag12
