#pragma once

/**
 * @file polyring.hpp
 * @brief Sparse multivariate polynomials over Z_n.
 *
 * A Polynomial is an element of Z_n[x1, ..., xm]. Terms are kept strictly
 * descending in graded lexicographic order with every stored coefficient
 * nonzero, so two polynomials are equal iff their term lists are.
 *
 * Text format (shared by the printer and the parser):
 *
 *     4*x1^2 + 4*x1 + 1 (mod 8)
 *     x1*x2^3 + 2 (mod 3)
 *     0 (mod 5)
 *
 * Coefficient 1 is omitted in front of a non-constant monomial. The parser
 * accepts the same grammar with free whitespace, an optional "(mod n)" suffix
 * that must match the ring, explicit "1*" and repeated monomials (summed).
 */

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/container/small_vector.hpp>

#include "diag12/modring.hpp"

namespace diag12 {

class Monomial {
public:
    using Exponents = boost::container::small_vector<std::uint32_t, 4>;

    Monomial() = default;
    explicit Monomial(Exponents exponents) : exps_(std::move(exponents)) {}
    Monomial(std::initializer_list<std::uint32_t> exponents) : exps_(exponents) {}

    static Monomial one(std::size_t arity) { return Monomial(Exponents(arity, 0)); }
    /// x_index, index counted from 0.
    static Monomial variable(std::size_t arity, std::size_t index);

    std::size_t arity() const noexcept { return exps_.size(); }
    std::span<const std::uint32_t> exponents() const noexcept { return {exps_.data(), exps_.size()}; }
    std::uint64_t total_degree() const noexcept;
    bool is_constant() const noexcept { return total_degree() == 0; }

    friend Monomial operator*(const Monomial& a, const Monomial& b);

    friend bool operator==(const Monomial& a, const Monomial& b) noexcept { return a.exps_ == b.exps_; }
    /// Graded lexicographic: total degree first, then lexicographic with x1 most significant.
    friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) noexcept;

private:
    Exponents exps_;
};

/// Text of a non-constant monomial, e.g. "x1^2*x3". The constant monomial prints as "1".
std::string to_string(const Monomial& m);

/// Total degree with a distinguished minus-infinity for the zero polynomial.
class Degree {
public:
    constexpr explicit Degree(std::uint64_t value) noexcept : value_(value), neg_inf_(false) {}
    static constexpr Degree neg_infinity() noexcept { return Degree(); }

    constexpr bool is_neg_infinity() const noexcept { return neg_inf_; }
    /// Precondition: !is_neg_infinity().
    constexpr std::uint64_t value() const noexcept { return value_; }

    friend constexpr Degree operator+(Degree a, Degree b) noexcept {
        if (a.neg_inf_ || b.neg_inf_) return neg_infinity();
        return Degree(a.value_ + b.value_);
    }
    friend constexpr bool operator==(Degree a, Degree b) noexcept {
        return a.neg_inf_ == b.neg_inf_ && (a.neg_inf_ || a.value_ == b.value_);
    }
    friend constexpr std::strong_ordering operator<=>(Degree a, Degree b) noexcept {
        if (a.neg_inf_ || b.neg_inf_) return b.neg_inf_ <=> a.neg_inf_;
        return a.value_ <=> b.value_;
    }

private:
    constexpr Degree() noexcept : value_(0), neg_inf_(true) {}

    std::uint64_t value_;
    bool neg_inf_;
};

std::string to_string(Degree d);

struct Term {
    Monomial monomial;
    std::uint64_t coefficient; ///< in [1, n)

    friend bool operator==(const Term&, const Term&) = default;
};

class Polynomial {
public:
    static Polynomial zero(RingSpec ring, std::size_t arity);
    static Polynomial constant(RingSpec ring, std::size_t arity, std::int64_t c);
    /// c * x_{index+1}
    static Polynomial variable(RingSpec ring, std::size_t arity, std::size_t index, std::int64_t c = 1);
    /// Canonicalizes arbitrary input: reduces mod n, sums repeats, drops zeros, sorts.
    static Polynomial from_terms(RingSpec ring, std::size_t arity,
                                 std::vector<std::pair<Monomial, std::int64_t>> terms);

    const RingSpec& ring() const noexcept { return ring_; }
    std::uint64_t modulus() const noexcept { return ring_.modulus(); }
    std::size_t arity() const noexcept { return arity_; }
    /// Strictly descending graded-lex order, all coefficients nonzero.
    std::span<const Term> terms() const noexcept { return terms_; }

    bool is_zero() const noexcept { return terms_.empty(); }
    bool is_one() const noexcept;
    std::uint64_t coefficient(const Monomial& m) const noexcept;
    std::uint64_t constant_coefficient() const noexcept;

    /// Same ring and arity; otherwise throws RingMismatch.
    void require_compatible(const Polynomial& other) const;

    friend bool operator==(const Polynomial& a, const Polynomial& b) noexcept {
        return a.modulus() == b.modulus() && a.arity_ == b.arity_ && a.terms_ == b.terms_;
    }

private:
    friend class PolynomialEnumerator;
    friend Polynomial poly_add(const Polynomial&, const Polynomial&);
    friend Polynomial poly_sub(const Polynomial&, const Polynomial&);
    friend Polynomial poly_neg(const Polynomial&);
    friend Polynomial poly_mul(const Polynomial&, const Polynomial&);
    friend Polynomial poly_scale(const Polynomial&, std::uint64_t);
    friend Polynomial map_coefficients(const Polynomial&, RingSpec);

    Polynomial(RingSpec ring, std::size_t arity, std::vector<Term> canonical_terms)
        : ring_(std::move(ring)), arity_(arity), terms_(std::move(canonical_terms)) {}

    RingSpec ring_;
    std::size_t arity_;
    std::vector<Term> terms_;
};

Polynomial poly_add(const Polynomial& f, const Polynomial& g);
Polynomial poly_sub(const Polynomial& f, const Polynomial& g);
Polynomial poly_neg(const Polynomial& f);
Polynomial poly_mul(const Polynomial& f, const Polynomial& g);
/// Multiplies every coefficient by c (taken mod n).
Polynomial poly_scale(const Polynomial& f, std::uint64_t c);
/// f^k by repeated squaring; f^0 is the constant one.
Polynomial poly_pow(const Polynomial& f, std::uint64_t k);
/// Reduces every coefficient into the target ring, whose modulus must divide n.
Polynomial map_coefficients(const Polynomial& f, RingSpec target);

inline Polynomial operator+(const Polynomial& f, const Polynomial& g) { return poly_add(f, g); }
inline Polynomial operator-(const Polynomial& f, const Polynomial& g) { return poly_sub(f, g); }
inline Polynomial operator-(const Polynomial& f) { return poly_neg(f); }
inline Polynomial operator*(const Polynomial& f, const Polynomial& g) { return poly_mul(f, g); }

Degree total_degree(const Polynomial& f);

/// Canonical text without the modulus suffix, e.g. "4*x1^2 + 4*x1 + 1".
std::string terms_to_string(const Polynomial& f);
/// Canonical text with the modulus suffix, e.g. "4*x1^2 + 4*x1 + 1 (mod 8)".
std::string to_string(const Polynomial& f);

/// Throws ParseError on malformed input, unknown variables or a mismatched "(mod k)".
Polynomial parse_polynomial(std::string_view text, const RingSpec& ring, std::size_t arity);

/// Monomials of total degree <= max_degree in ascending graded-lex order.
std::vector<Monomial> monomials_up_to(std::size_t arity, std::uint64_t max_degree);

/// n^C(m+d, d), saturating at UINT64_MAX.
std::uint64_t search_space_size(std::uint64_t n, std::size_t arity, std::uint64_t max_degree);

inline constexpr std::uint64_t kDefaultEnumerationBudget = 10'000'000;

/**
 * Every polynomial of total degree <= d over Z_n in m variables, exactly once.
 *
 * A polynomial is identified with its index in [0, size()): the base-n digits
 * of the index are the coefficients of the monomials in ascending graded-lex
 * order, the constant term being the least significant digit. next() walks the
 * indices in increasing order, so for Z_8[x1] the stream starts
 * 0, 1, ..., 7, x1, x1 + 1, ...
 */
class PolynomialEnumerator {
public:
    /// Throws BudgetExceeded when the stream would be longer than budget.
    PolynomialEnumerator(RingSpec ring, std::size_t arity, std::uint64_t max_degree,
                         std::uint64_t budget = kDefaultEnumerationBudget);

    std::uint64_t size() const noexcept { return size_; }
    std::span<const Monomial> monomials() const noexcept { return monomials_; }

    Polynomial at(std::uint64_t index) const;

    std::optional<Polynomial> next();
    /// Index of the polynomial the next call to next() returns.
    std::uint64_t position() const noexcept { return position_; }
    void seek(std::uint64_t index);

private:
    Polynomial from_digits(std::span<const std::uint64_t> digits) const;

    RingSpec ring_;
    std::size_t arity_;
    std::vector<Monomial> monomials_;
    std::uint64_t size_;
    std::uint64_t position_ = 0;
    std::vector<std::uint64_t> digits_;
};

inline PolynomialEnumerator enumerate_polynomials(RingSpec ring, std::size_t arity, std::uint64_t max_degree,
                                                  std::uint64_t budget = kDefaultEnumerationBudget) {
    return PolynomialEnumerator(std::move(ring), arity, max_degree, budget);
}

} // namespace diag12
