#pragma once

/**
 * @file diagonal.hpp
 * @brief Deciders for the diagonal property: ab = 1 implies a = b.
 *
 * For Z_n there are two scans (the multiplication table itself, and "every
 * unit squares to 1") plus the closed form n | 24. For Z_n[x1..xm] there is
 * the closed form n | 12 and a bounded enumeration that can refute but only
 * bound-qualify a positive answer.
 *
 * Witnesses are always the first hit in a fixed order: row-major for tables,
 * increasing residue for unit scans, enumeration index for polynomials.
 */

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "diag12/modring.hpp"
#include "diag12/polyring.hpp"

namespace diag12 {

enum class Method { TableScan, InvolutionScan, Theorem, Enumeration };

/// "TABLE_SCAN", "INVOLUTION_SCAN", "THEOREM", "ENUMERATION"
std::string_view method_name(Method method) noexcept;
std::optional<Method> parse_method_name(std::string_view name) noexcept;

struct RingDescription {
    std::uint64_t modulus;
    std::optional<std::size_t> vars;           ///< set for polynomial rings
    std::optional<std::uint64_t> degree_bound; ///< set for enumeration reports

    bool is_polynomial() const noexcept { return vars.has_value(); }
    /// e.g. "Z_24", "Z_8[x1]", "Z_12[x1,x2] up to degree 2"
    std::string to_string() const;

    friend bool operator==(const RingDescription&, const RingDescription&) = default;
};

struct InversePairWitness {
    Residue a;
    Residue b;
};
struct NonInvolutiveResidue {
    Residue unit;
};
struct NonInvolutivePolynomial {
    Polynomial unit;
};

using Witness = std::variant<InversePairWitness, NonInvolutiveResidue, NonInvolutivePolynomial>;

/// a*b = 1 with a != b, or a unit whose square is not 1.
bool verify_witness(const Witness& witness);
std::string describe(const Witness& witness);

struct DiagonalReport {
    RingDescription ring;
    bool verdict = false;
    Method method = Method::Theorem;
    std::optional<Witness> witness;
    std::optional<std::string> search_bound_note;

    /// Checks the report's own invariants: a negative verdict carries a
    /// verifying witness, the note is present iff the method is enumeration,
    /// and theorem verdicts match n | 12 (polynomial rings) or n | 24 (Z_n).
    bool is_consistent() const;
};

struct DiagonalLimits {
    std::uint64_t table_budget = 100'000; ///< largest n for table and unit scans
    std::uint64_t enumeration_budget = kDefaultEnumerationBudget;
    unsigned workers = 1;
};

DiagonalReport diagonal_zn_table(std::int64_t n, const DiagonalLimits& limits = {});
DiagonalReport diagonal_zn_involution(std::int64_t n, const DiagonalLimits& limits = {});
/// Closed form n | 24, with the smallest non-involutive unit attached when negative.
DiagonalReport diagonal_zn_theorem(std::int64_t n);
/// Closed form n | 12. Negative reports carry 1 + 2x1 (n = 8), 1 + 6x1 (n = 24),
/// or the smallest non-involutive unit of Z_n as a constant polynomial.
DiagonalReport diagonal_poly_theorem(std::int64_t n, std::size_t vars);

struct EnumerationStats {
    std::uint64_t polynomials = 0;
    std::uint64_t units = 0;
    std::uint64_t nonconstant_units = 0;
};

struct EnumerationOutcome {
    DiagonalReport report;
    std::optional<std::uint64_t> witness_index;
    /// Only for complete scans (no witness found).
    std::optional<EnumerationStats> stats;
};

/// Scans every polynomial of total degree <= degree_bound for a unit that is
/// not an involution. Throws BudgetExceeded before doing any work when the
/// search space is too large. With limits.workers > 1 the range is split into
/// contiguous chunks; the lowest witness index wins, so the result is the
/// same as a single-threaded scan.
EnumerationOutcome scan_polynomial_units(std::int64_t n, std::size_t vars, std::uint64_t degree_bound,
                                         const DiagonalLimits& limits = {});

inline DiagonalReport diagonal_poly_enumerate(std::int64_t n, std::size_t vars, std::uint64_t degree_bound,
                                              const DiagonalLimits& limits = {}) {
    return scan_polynomial_units(n, vars, degree_bound, limits).report;
}

/// 1 + 2x1 in Z_8[x1..xm] or 1 + 6x1 in Z_24[x1..xm]; std::invalid_argument otherwise.
Polynomial counterexample_unit(std::int64_t n, std::size_t vars = 1);

/// Smallest unit u of Z_n with u^2 != 1, if any.
std::optional<std::uint64_t> smallest_non_involutive_unit(std::uint64_t n);

/// radical(n) * h + r, for n in {4, 12} and r a unit of Z_n: 2h +- 1 mod 4, 6h + r mod 12.
Polynomial structured_unit(const Polynomial& h, std::uint64_t r);

/// Pseudorandom units in the normal form above, with h uniform over polynomials
/// of total degree <= degree_bound. Deterministic for a given seed.
class StructuredUnitGenerator {
public:
    StructuredUnitGenerator(std::int64_t n, std::size_t vars, std::uint64_t degree_bound, std::uint64_t seed);

    Polynomial next();
    const RingSpec& ring() const noexcept { return ring_; }

private:
    RingSpec ring_;
    std::size_t vars_;
    std::vector<Monomial> monomials_;
    std::vector<std::uint64_t> units_;
    std::mt19937_64 rng_;
};

/// If Z_n fails the table scan with (a, b), checks that the constants a, b
/// also refute the property in Z_n[x1..xm]. Vacuously true when Z_n passes.
bool subring_restriction_check(std::int64_t n, std::size_t vars = 1, const DiagonalLimits& limits = {});

} // namespace diag12
