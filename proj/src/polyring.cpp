#include "diag12/polyring.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <stdexcept>

namespace diag12 {

Monomial Monomial::variable(std::size_t arity, std::size_t index) {
    if (index >= arity) {
        throw std::out_of_range("variable index " + std::to_string(index + 1) + " exceeds arity " +
                                std::to_string(arity));
    }
    Exponents e(arity, 0);
    e[index] = 1;
    return Monomial(std::move(e));
}

std::uint64_t Monomial::total_degree() const noexcept {
    std::uint64_t d = 0;
    for (auto e : exps_) d += e;
    return d;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
    if (a.arity() != b.arity()) throw RingMismatch("monomials of different arity");
    Monomial::Exponents e(a.exps_);
    for (std::size_t i = 0; i < e.size(); ++i) e[i] += b.exps_[i];
    return Monomial(std::move(e));
}

std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) noexcept {
    if (auto c = a.total_degree() <=> b.total_degree(); c != 0) return c;
    return std::lexicographical_compare_three_way(a.exps_.begin(), a.exps_.end(), b.exps_.begin(),
                                                  b.exps_.end());
}

std::string to_string(const Monomial& m) {
    std::string out;
    auto exps = m.exponents();
    for (std::size_t i = 0; i < exps.size(); ++i) {
        if (exps[i] == 0) continue;
        if (!out.empty()) out += '*';
        out += 'x';
        out += std::to_string(i + 1);
        if (exps[i] > 1) {
            out += '^';
            out += std::to_string(exps[i]);
        }
    }
    return out.empty() ? "1" : out;
}

std::string to_string(Degree d) { return d.is_neg_infinity() ? "-inf" : std::to_string(d.value()); }

// ---------------------------------------------------------------------------
// Polynomial

namespace {

void check_arity(const Monomial& m, std::size_t arity) {
    if (m.arity() != arity) {
        throw RingMismatch("monomial of arity " + std::to_string(m.arity()) + " in a ring with " +
                           std::to_string(arity) + " variables");
    }
}

// Sorts descending and merges equal monomials; drops zero sums.
std::vector<Term> canonicalize(std::vector<Term> terms, std::uint64_t n) {
    std::sort(terms.begin(), terms.end(),
              [](const Term& a, const Term& b) { return a.monomial > b.monomial; });
    std::vector<Term> out;
    out.reserve(terms.size());
    for (auto& t : terms) {
        if (!out.empty() && out.back().monomial == t.monomial) {
            out.back().coefficient = modarith::add(out.back().coefficient, t.coefficient, n);
        } else {
            if (!out.empty() && out.back().coefficient == 0) out.pop_back();
            out.push_back(std::move(t));
        }
    }
    if (!out.empty() && out.back().coefficient == 0) out.pop_back();
    return out;
}

} // namespace

Polynomial Polynomial::zero(RingSpec ring, std::size_t arity) { return Polynomial(std::move(ring), arity, {}); }

Polynomial Polynomial::constant(RingSpec ring, std::size_t arity, std::int64_t c) {
    std::uint64_t v = modarith::reduce(c, ring.modulus());
    std::vector<Term> terms;
    if (v != 0) terms.push_back({Monomial::one(arity), v});
    return Polynomial(std::move(ring), arity, std::move(terms));
}

Polynomial Polynomial::variable(RingSpec ring, std::size_t arity, std::size_t index, std::int64_t c) {
    std::uint64_t v = modarith::reduce(c, ring.modulus());
    std::vector<Term> terms;
    if (v != 0) terms.push_back({Monomial::variable(arity, index), v});
    return Polynomial(std::move(ring), arity, std::move(terms));
}

Polynomial Polynomial::from_terms(RingSpec ring, std::size_t arity,
                                  std::vector<std::pair<Monomial, std::int64_t>> terms) {
    std::vector<Term> raw;
    raw.reserve(terms.size());
    for (auto& [m, c] : terms) {
        check_arity(m, arity);
        raw.push_back({std::move(m), modarith::reduce(c, ring.modulus())});
    }
    return Polynomial(ring, arity, canonicalize(std::move(raw), ring.modulus()));
}

bool Polynomial::is_one() const noexcept {
    if (modulus() == 1) return terms_.empty();
    return terms_.size() == 1 && terms_[0].coefficient == 1 && terms_[0].monomial.is_constant();
}

std::uint64_t Polynomial::coefficient(const Monomial& m) const noexcept {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                               [](const Term& t, const Monomial& key) { return t.monomial > key; });
    return it != terms_.end() && it->monomial == m ? it->coefficient : 0;
}

std::uint64_t Polynomial::constant_coefficient() const noexcept {
    if (terms_.empty() || !terms_.back().monomial.is_constant()) return 0;
    return terms_.back().coefficient;
}

void Polynomial::require_compatible(const Polynomial& other) const {
    if (modulus() != other.modulus()) {
        throw RingMismatch("polynomials over Z_" + std::to_string(modulus()) + " and Z_" +
                           std::to_string(other.modulus()));
    }
    if (arity_ != other.arity_) {
        throw RingMismatch("polynomials in " + std::to_string(arity_) + " and " + std::to_string(other.arity_) +
                           " variables");
    }
}

Polynomial poly_add(const Polynomial& f, const Polynomial& g) {
    f.require_compatible(g);
    const std::uint64_t n = f.modulus();
    std::vector<Term> out;
    out.reserve(f.terms_.size() + g.terms_.size());
    auto a = f.terms_.begin(), b = g.terms_.begin();
    while (a != f.terms_.end() || b != g.terms_.end()) {
        if (b == g.terms_.end() || (a != f.terms_.end() && a->monomial > b->monomial)) {
            out.push_back(*a++);
        } else if (a == f.terms_.end() || b->monomial > a->monomial) {
            out.push_back(*b++);
        } else {
            std::uint64_t c = modarith::add(a->coefficient, b->coefficient, n);
            if (c != 0) out.push_back({a->monomial, c});
            ++a;
            ++b;
        }
    }
    return Polynomial(f.ring_, f.arity_, std::move(out));
}

Polynomial poly_neg(const Polynomial& f) {
    std::vector<Term> out(f.terms_);
    for (auto& t : out) t.coefficient = modarith::neg(t.coefficient, f.modulus());
    return Polynomial(f.ring_, f.arity_, std::move(out));
}

Polynomial poly_sub(const Polynomial& f, const Polynomial& g) {
    f.require_compatible(g);
    return poly_add(f, poly_neg(g));
}

Polynomial poly_mul(const Polynomial& f, const Polynomial& g) {
    f.require_compatible(g);
    const std::uint64_t n = f.modulus();
    std::vector<Term> products;
    products.reserve(f.terms_.size() * g.terms_.size());
    for (const auto& a : f.terms_) {
        for (const auto& b : g.terms_) {
            std::uint64_t c = modarith::mul(a.coefficient, b.coefficient, n);
            if (c != 0) products.push_back({a.monomial * b.monomial, c});
        }
    }
    return Polynomial(f.ring_, f.arity_, canonicalize(std::move(products), n));
}

Polynomial poly_scale(const Polynomial& f, std::uint64_t c) {
    const std::uint64_t n = f.modulus();
    c %= n;
    std::vector<Term> out;
    out.reserve(f.terms_.size());
    for (const auto& t : f.terms_) {
        std::uint64_t v = modarith::mul(t.coefficient, c, n);
        if (v != 0) out.push_back({t.monomial, v});
    }
    return Polynomial(f.ring_, f.arity_, std::move(out));
}

Polynomial poly_pow(const Polynomial& f, std::uint64_t k) {
    Polynomial result = Polynomial::constant(f.ring(), f.arity(), 1);
    Polynomial base = f;
    while (k > 0) {
        if (k & 1) result = result * base;
        k >>= 1;
        if (k > 0) base = base * base;
    }
    return result;
}

Polynomial map_coefficients(const Polynomial& f, RingSpec target) {
    const std::uint64_t p = target.modulus();
    if (f.modulus() % p != 0) {
        throw std::invalid_argument(std::to_string(p) + " does not divide " + std::to_string(f.modulus()));
    }
    std::vector<Term> out;
    for (const auto& t : f.terms_) {
        if (std::uint64_t v = t.coefficient % p; v != 0) out.push_back({t.monomial, v});
    }
    return Polynomial(std::move(target), f.arity_, std::move(out));
}

Degree total_degree(const Polynomial& f) {
    // Leading term in graded order has the largest total degree.
    if (f.is_zero()) return Degree::neg_infinity();
    return Degree(f.terms().front().monomial.total_degree());
}

std::string terms_to_string(const Polynomial& f) {
    if (f.is_zero()) return "0";
    std::string out;
    for (const auto& t : f.terms()) {
        if (!out.empty()) out += " + ";
        if (t.monomial.is_constant()) {
            out += std::to_string(t.coefficient);
        } else {
            if (t.coefficient != 1) {
                out += std::to_string(t.coefficient);
                out += '*';
            }
            out += to_string(t.monomial);
        }
    }
    return out;
}

std::string to_string(const Polynomial& f) {
    return terms_to_string(f) + " (mod " + std::to_string(f.modulus()) + ")";
}

// ---------------------------------------------------------------------------
// Parser

namespace {

class PolynomialParser {
public:
    PolynomialParser(std::string_view text, const RingSpec& ring, std::size_t arity)
        : text_(text), ring_(ring), arity_(arity) {}

    Polynomial parse() {
        std::vector<Term> terms;
        skip_ws();
        if (at_end()) fail("empty polynomial");
        terms.push_back(term());
        skip_ws();
        while (peek() == '+') {
            ++pos_;
            skip_ws();
            terms.push_back(term());
            skip_ws();
        }
        if (peek() == '(') modulus_suffix();
        skip_ws();
        if (!at_end()) fail(std::string("unexpected '") + peek() + "'");
        return Polynomial::from_terms(ring_, arity_, to_pairs(std::move(terms)));
    }

private:
    static std::vector<std::pair<Monomial, std::int64_t>> to_pairs(std::vector<Term> terms) {
        std::vector<std::pair<Monomial, std::int64_t>> out;
        out.reserve(terms.size());
        for (auto& t : terms) out.emplace_back(std::move(t.monomial), static_cast<std::int64_t>(t.coefficient));
        return out;
    }

    Term term() {
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            std::uint64_t c = integer() % ring_.modulus();
            skip_ws();
            if (peek() != '*') return {Monomial::one(arity_), c};
            ++pos_;
            skip_ws();
            return {monomial(), c};
        }
        if (peek() == 'x') return {monomial(), 1 % ring_.modulus()};
        fail(at_end() ? "expected a term" : std::string("unexpected '") + peek() + "'");
    }

    Monomial monomial() {
        Monomial::Exponents exps(arity_, 0);
        for (;;) {
            if (peek() != 'x') fail("expected a variable");
            const std::size_t var_pos = pos_;
            ++pos_;
            std::uint64_t index = integer();
            if (index == 0 || index > arity_) {
                throw ParseError("unknown variable x" + std::to_string(index) + " in a ring with " +
                                     std::to_string(arity_) + " variable" + (arity_ == 1 ? "" : "s"),
                                 var_pos);
            }
            skip_ws();
            std::uint64_t e = 1;
            if (peek() == '^') {
                ++pos_;
                skip_ws();
                e = integer();
                skip_ws();
            }
            std::uint64_t total = exps[index - 1] + e;
            if (total > std::numeric_limits<std::uint32_t>::max()) fail("exponent too large");
            exps[index - 1] = static_cast<std::uint32_t>(total);
            if (peek() != '*') break;
            ++pos_;
            skip_ws();
        }
        return Monomial(std::move(exps));
    }

    void modulus_suffix() {
        ++pos_;
        skip_ws();
        if (text_.substr(pos_, 3) != "mod") fail("expected 'mod'");
        pos_ += 3;
        skip_ws();
        const std::size_t num_pos = pos_;
        std::uint64_t k = integer();
        skip_ws();
        if (peek() != ')') fail("expected ')'");
        ++pos_;
        if (k != ring_.modulus()) {
            throw ParseError("polynomial is stated mod " + std::to_string(k) + " but the ring is Z_" +
                                 std::to_string(ring_.modulus()),
                             num_pos);
        }
    }

    std::uint64_t integer() {
        if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected a number");
        std::uint64_t v = 0;
        while (std::isdigit(static_cast<unsigned char>(peek()))) {
            auto d = static_cast<std::uint64_t>(peek() - '0');
            if (v > (std::numeric_limits<std::uint64_t>::max() - d) / 10) fail("number too large");
            v = v * 10 + d;
            ++pos_;
        }
        return v;
    }

    void skip_ws() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return at_end() ? '\0' : text_[pos_]; }

    [[noreturn]] void fail(const std::string& what) const {
        throw ParseError(what + " at position " + std::to_string(pos_), pos_);
    }

    std::string_view text_;
    const RingSpec& ring_;
    std::size_t arity_;
    std::size_t pos_ = 0;
};

} // namespace

Polynomial parse_polynomial(std::string_view text, const RingSpec& ring, std::size_t arity) {
    return PolynomialParser(text, ring, arity).parse();
}

// ---------------------------------------------------------------------------
// Enumeration

namespace {

void monomials_of_degree(std::size_t arity, std::uint64_t degree, Monomial::Exponents& prefix,
                         std::vector<Monomial>& out) {
    const std::size_t i = prefix.size();
    if (i + 1 == arity) {
        prefix.push_back(static_cast<std::uint32_t>(degree));
        out.emplace_back(prefix);
        prefix.pop_back();
        return;
    }
    for (std::uint64_t e = 0; e <= degree; ++e) {
        prefix.push_back(static_cast<std::uint32_t>(e));
        monomials_of_degree(arity, degree - e, prefix, out);
        prefix.pop_back();
    }
}

constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max();

} // namespace

std::vector<Monomial> monomials_up_to(std::size_t arity, std::uint64_t max_degree) {
    std::vector<Monomial> out;
    if (arity == 0) {
        out.push_back(Monomial::one(0));
        return out;
    }
    Monomial::Exponents prefix;
    for (std::uint64_t t = 0; t <= max_degree; ++t) monomials_of_degree(arity, t, prefix, out);
    return out;
}

std::uint64_t search_space_size(std::uint64_t n, std::size_t arity, std::uint64_t max_degree) {
    if (n <= 1) return 1;
    // C(m+d, d) built up as C(m+i, i) = C(m+i-1, i-1) * (m+i) / i.
    unsigned __int128 count = 1;
    const std::uint64_t d = arity == 0 ? 0 : max_degree;
    for (std::uint64_t i = 1; i <= d; ++i) {
        count = count * (arity + i) / i;
        if (count > 64) return kSaturated; // n >= 2 and more than 64 digits
    }
    unsigned __int128 size = 1;
    for (unsigned __int128 i = 0; i < count; ++i) {
        size *= n;
        if (size > kSaturated) return kSaturated;
    }
    return static_cast<std::uint64_t>(size);
}

PolynomialEnumerator::PolynomialEnumerator(RingSpec ring, std::size_t arity, std::uint64_t max_degree,
                                           std::uint64_t budget)
    : ring_(std::move(ring)), arity_(arity), size_(search_space_size(ring_.modulus(), arity, max_degree)) {
    if (size_ > budget) {
        std::string count = size_ == kSaturated ? "more than " + std::to_string(kSaturated) : std::to_string(size_);
        throw BudgetExceeded("enumerating Z_" + std::to_string(ring_.modulus()) + "[" + std::to_string(arity) +
                                 " vars] up to degree " + std::to_string(max_degree) + " needs " + count +
                                 " polynomials, over the budget of " + std::to_string(budget),
                             size_, budget);
    }
    monomials_ = monomials_up_to(arity, max_degree);
    digits_.assign(monomials_.size(), 0);
}

Polynomial PolynomialEnumerator::from_digits(std::span<const std::uint64_t> digits) const {
    std::vector<Term> terms;
    for (std::size_t j = digits.size(); j-- > 0;) {
        if (digits[j] != 0) terms.push_back({monomials_[j], digits[j]});
    }
    return Polynomial(ring_, arity_, std::move(terms));
}

Polynomial PolynomialEnumerator::at(std::uint64_t index) const {
    if (index >= size_) throw std::out_of_range("enumeration index " + std::to_string(index) + " out of range");
    std::vector<std::uint64_t> digits(monomials_.size(), 0);
    const std::uint64_t n = ring_.modulus();
    for (std::size_t j = 0; j < digits.size() && index > 0; ++j) {
        digits[j] = index % n;
        index /= n;
    }
    return from_digits(digits);
}

void PolynomialEnumerator::seek(std::uint64_t index) {
    if (index > size_) throw std::out_of_range("enumeration index " + std::to_string(index) + " out of range");
    position_ = index;
    const std::uint64_t n = ring_.modulus();
    for (auto& d : digits_) {
        d = index % n;
        index /= n;
    }
}

std::optional<Polynomial> PolynomialEnumerator::next() {
    if (position_ >= size_) return std::nullopt;
    Polynomial out = from_digits(digits_);
    ++position_;
    const std::uint64_t n = ring_.modulus();
    for (auto& d : digits_) {
        if (++d < n) break;
        d = 0;
    }
    return out;
}

} // namespace diag12
