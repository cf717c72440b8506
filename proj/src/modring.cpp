#include "diag12/modring.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace diag12 {

std::vector<PrimePower> factorize(std::uint64_t n) {
    std::vector<PrimePower> out;
    auto strip = [&](std::uint64_t p) {
        unsigned e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        if (e > 0) out.push_back({p, e});
    };
    strip(2);
    for (std::uint64_t d = 3; d <= n / d; d += 2) strip(d);
    if (n > 1) out.push_back({n, 1});
    return out;
}

RingSpec RingSpec::make(std::int64_t n) {
    if (n <= 0) {
        throw std::invalid_argument("modulus must be a positive integer, got " + std::to_string(n));
    }
    auto data = std::make_shared<Data>();
    data->modulus = static_cast<std::uint64_t>(n);
    data->factorization = factorize(data->modulus);
    data->radical = 1;
    data->max_exponent = 0;
    for (const auto& [p, e] : data->factorization) {
        data->radical *= p;
        data->max_exponent = std::max(data->max_exponent, e);
    }
    return RingSpec(std::move(data));
}

namespace modarith {

std::uint64_t pow(std::uint64_t a, std::uint64_t e, std::uint64_t n) noexcept {
    std::uint64_t result = 1 % n;
    a %= n;
    while (e > 0) {
        if (e & 1) result = mul(result, a, n);
        a = mul(a, a, n);
        e >>= 1;
    }
    return result;
}

std::uint64_t reduce(std::int64_t value, std::uint64_t n) noexcept {
    if (value >= 0) return static_cast<std::uint64_t>(value) % n;
    // -(value + 1) never overflows
    std::uint64_t magnitude = static_cast<std::uint64_t>(-(value + 1)) + 1;
    return neg(magnitude % n, n);
}

std::optional<std::uint64_t> inverse(std::uint64_t a, std::uint64_t n) noexcept {
    if (n == 1) return 0;
    // Track coefficients of a modulo n to stay within unsigned range.
    std::uint64_t old_r = a % n, r = n;
    std::uint64_t old_s = 1, s = 0;
    while (r != 0) {
        std::uint64_t q = old_r / r;
        std::uint64_t tmp_r = old_r - q * r;
        old_r = r;
        r = tmp_r;
        std::uint64_t tmp_s = sub(old_s, mul(q % n, s, n), n);
        old_s = s;
        s = tmp_s;
    }
    if (old_r != 1) return std::nullopt;
    return old_s;
}

} // namespace modarith

Residue Residue::from_canonical(RingSpec ring, std::uint64_t value) {
    if (value >= ring.modulus()) {
        throw std::invalid_argument("residue " + std::to_string(value) + " is not below modulus " +
                                    std::to_string(ring.modulus()));
    }
    return Residue(std::move(ring), value, Canonical{});
}

namespace {

void require_same_ring(const Residue& a, const Residue& b) {
    if (a.modulus() != b.modulus()) {
        throw RingMismatch("residues mod " + std::to_string(a.modulus()) + " and mod " +
                           std::to_string(b.modulus()));
    }
}

} // namespace

Residue res_add(const Residue& a, const Residue& b) {
    require_same_ring(a, b);
    return Residue::from_canonical(a.ring(), modarith::add(a.value(), b.value(), a.modulus()));
}

Residue res_sub(const Residue& a, const Residue& b) {
    require_same_ring(a, b);
    return Residue::from_canonical(a.ring(), modarith::sub(a.value(), b.value(), a.modulus()));
}

Residue res_mul(const Residue& a, const Residue& b) {
    require_same_ring(a, b);
    return Residue::from_canonical(a.ring(), modarith::mul(a.value(), b.value(), a.modulus()));
}

Residue res_neg(const Residue& a) {
    return Residue::from_canonical(a.ring(), modarith::neg(a.value(), a.modulus()));
}

bool is_nilpotent_residue(const Residue& c) { return is_nilpotent_value(c.value(), c.ring()); }

bool is_unit_value(std::uint64_t c, std::uint64_t n) noexcept { return std::gcd(c, n) == 1; }

bool is_unit_residue(const Residue& c) { return is_unit_value(c.value(), c.modulus()); }

std::optional<Residue> res_inverse(const Residue& c) {
    auto inv = modarith::inverse(c.value(), c.modulus());
    if (!inv) return std::nullopt;
    return Residue::from_canonical(c.ring(), *inv);
}

std::uint64_t unit_group_exponent(const RingSpec& ring) {
    std::uint64_t result = 1;
    for (const auto& [p, e] : ring.factorization()) {
        std::uint64_t lambda;
        if (p == 2) {
            lambda = e <= 2 ? e : std::uint64_t{1} << (e - 2);
        } else {
            lambda = p - 1;
            for (unsigned i = 1; i < e; ++i) lambda *= p;
        }
        result = std::lcm(result, lambda);
    }
    return result;
}

} // namespace diag12
