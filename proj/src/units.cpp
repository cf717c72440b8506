#include "diag12/units.hpp"

#include <limits>
#include <stdexcept>

namespace diag12 {

std::string UnitDiagnosis::describe(std::uint64_t n) const {
    switch (failure) {
    case UnitFailure::ConstantNotUnit:
        return "constant term " + std::to_string(coefficient) + " is not a unit mod " + std::to_string(n);
    case UnitFailure::CoefficientNotNilpotent:
        return "coefficient " + std::to_string(coefficient) + " of " + to_string(monomial) +
               " is not nilpotent mod " + std::to_string(n);
    }
    return {};
}

std::optional<UnitDiagnosis> diagnose_unit(const Polynomial& f) {
    const RingSpec& ring = f.ring();
    if (ring.modulus() == 1) return std::nullopt;
    const std::uint64_t c0 = f.constant_coefficient();
    if (!is_unit_value(c0, ring.modulus())) {
        return UnitDiagnosis{UnitFailure::ConstantNotUnit, Monomial::one(f.arity()), c0};
    }
    for (const auto& t : f.terms()) {
        if (t.monomial.is_constant()) continue;
        if (!is_nilpotent_value(t.coefficient, ring)) {
            return UnitDiagnosis{UnitFailure::CoefficientNotNilpotent, t.monomial, t.coefficient};
        }
    }
    return std::nullopt;
}

bool is_unit_poly(const Polynomial& f) { return !diagnose_unit(f).has_value(); }

Polynomial nilpotent_part(const Polynomial& f) {
    return f - Polynomial::constant(f.ring(), f.arity(), static_cast<std::int64_t>(f.constant_coefficient()));
}

std::uint64_t nilpotency_index(const Polynomial& g) {
    for (const auto& t : g.terms()) {
        if (!is_nilpotent_value(t.coefficient, g.ring())) {
            throw NotNilpotent("coefficient " + std::to_string(t.coefficient) + " of " + to_string(t.monomial) +
                               " is not nilpotent mod " + std::to_string(g.modulus()));
        }
    }
    if (g.is_zero()) return 0;
    // Coefficients of g^e are divisible by radical^e, so g^max_exponent = 0.
    const unsigned cap = g.ring().max_exponent();
    std::uint64_t k = 1;
    Polynomial power = g;
    for (;;) {
        Polynomial next = power * g;
        if (next.is_zero()) return k;
        power = std::move(next);
        if (++k >= cap) {
            throw std::logic_error("nilpotency index of " + to_string(g) + " exceeds the bound " +
                                   std::to_string(cap) + " - 1");
        }
    }
}

UnitCertificate::UnitCertificate(Polynomial f, Polynomial inverse, std::uint64_t nilpotency_index_used)
    : f_(std::move(f)), inverse_(std::move(inverse)), k_(nilpotency_index_used) {
    if (!(f_ * inverse_).is_one()) {
        throw std::logic_error("certificate rejected: (" + to_string(f_) + ") * (" + to_string(inverse_) +
                               ") != 1");
    }
}

UnitCertificate invert_unit(const Polynomial& f) {
    if (auto diagnosis = diagnose_unit(f)) throw NotAUnit(std::move(*diagnosis), f.modulus());
    const std::uint64_t n = f.modulus();
    if (n == 1) return UnitCertificate(f, f, 0);

    const std::uint64_t a0_inv = *modarith::inverse(f.constant_coefficient(), n);
    const Polynomial g = nilpotent_part(f);
    const std::uint64_t k = nilpotency_index(g);

    // ratio = -g / a0; the sum 1 + ratio + ... + ratio^k
    const Polynomial ratio = poly_scale(g, modarith::neg(a0_inv, n));
    Polynomial sum = Polynomial::constant(f.ring(), f.arity(), 1);
    Polynomial power = sum;
    for (std::uint64_t i = 1; i <= k; ++i) {
        power = power * ratio;
        sum = sum + power;
    }
    return UnitCertificate(f, poly_scale(sum, a0_inv), k);
}

bool is_involution(const Polynomial& f) { return (f * f).is_one(); }

Residue constant_term_hom(const Polynomial& f) { return Residue::from_canonical(f.ring(), f.constant_coefficient()); }

Polynomial reduce_mod_prime(const Polynomial& f, std::uint64_t p) {
    if (p < 2 || p > static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max())) {
        throw std::invalid_argument(std::to_string(p) + " is not a prime");
    }
    if (f.modulus() % p != 0) {
        throw std::invalid_argument(std::to_string(p) + " does not divide " + std::to_string(f.modulus()));
    }
    RingSpec target = RingSpec::make(static_cast<std::int64_t>(p));
    if (!target.is_prime()) throw std::invalid_argument(std::to_string(p) + " is not a prime");
    return map_coefficients(f, std::move(target));
}

} // namespace diag12
