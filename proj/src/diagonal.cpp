#include "diag12/diagonal.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <stdexcept>
#include <thread>

#include "diag12/units.hpp"

namespace diag12 {

std::string_view method_name(Method method) noexcept {
    switch (method) {
    case Method::TableScan: return "TABLE_SCAN";
    case Method::InvolutionScan: return "INVOLUTION_SCAN";
    case Method::Theorem: return "THEOREM";
    case Method::Enumeration: return "ENUMERATION";
    }
    return "UNKNOWN";
}

std::optional<Method> parse_method_name(std::string_view name) noexcept {
    for (Method m : {Method::TableScan, Method::InvolutionScan, Method::Theorem, Method::Enumeration}) {
        if (method_name(m) == name) return m;
    }
    return std::nullopt;
}

std::string RingDescription::to_string() const {
    std::string out = "Z_" + std::to_string(modulus);
    if (!vars) return out;
    out += '[';
    if (*vars <= 2) {
        for (std::size_t i = 1; i <= *vars; ++i) out += (i > 1 ? ",x" : "x") + std::to_string(i);
    } else {
        out += "x1,...,x" + std::to_string(*vars);
    }
    out += ']';
    if (degree_bound) out += " up to degree " + std::to_string(*degree_bound);
    return out;
}

bool verify_witness(const Witness& witness) {
    return std::visit(
        [](const auto& w) -> bool {
            using W = std::decay_t<decltype(w)>;
            if constexpr (std::is_same_v<W, InversePairWitness>) {
                if (w.a.modulus() != w.b.modulus()) return false;
                return (w.a * w.b).value() == 1 % w.a.modulus() && w.a != w.b;
            } else if constexpr (std::is_same_v<W, NonInvolutiveResidue>) {
                return is_unit_residue(w.unit) && (w.unit * w.unit).value() != 1 % w.unit.modulus();
            } else {
                return is_unit_poly(w.unit) && !is_involution(w.unit);
            }
        },
        witness);
}

std::string describe(const Witness& witness) {
    return std::visit(
        [](const auto& w) -> std::string {
            using W = std::decay_t<decltype(w)>;
            if constexpr (std::is_same_v<W, InversePairWitness>) {
                return std::to_string(w.a.value()) + " * " + std::to_string(w.b.value()) + " = 1 (mod " +
                       std::to_string(w.a.modulus()) + ") but " + std::to_string(w.a.value()) +
                       " != " + std::to_string(w.b.value());
            } else if constexpr (std::is_same_v<W, NonInvolutiveResidue>) {
                return "unit " + std::to_string(w.unit.value()) + " has square " +
                       std::to_string((w.unit * w.unit).value()) + " (mod " + std::to_string(w.unit.modulus()) +
                       ")";
            } else {
                return "unit " + to_string(w.unit) + " has square " + to_string(w.unit * w.unit);
            }
        },
        witness);
}

namespace {

bool witness_belongs_to(const Witness& witness, const RingDescription& ring) {
    return std::visit(
        [&](const auto& w) -> bool {
            using W = std::decay_t<decltype(w)>;
            if constexpr (std::is_same_v<W, InversePairWitness>) {
                return !ring.is_polynomial() && w.a.modulus() == ring.modulus;
            } else if constexpr (std::is_same_v<W, NonInvolutiveResidue>) {
                return !ring.is_polynomial() && w.unit.modulus() == ring.modulus;
            } else {
                return ring.is_polynomial() && w.unit.modulus() == ring.modulus && w.unit.arity() == *ring.vars;
            }
        },
        witness);
}

} // namespace

bool DiagonalReport::is_consistent() const {
    if (witness && !witness_belongs_to(*witness, ring)) return false;
    if (!verdict && !(witness && verify_witness(*witness))) return false;
    if (search_bound_note.has_value() != (method == Method::Enumeration)) return false;
    if (method == Method::Theorem) {
        const std::uint64_t bound = ring.is_polynomial() ? 12 : 24;
        if (verdict != (bound % ring.modulus == 0)) return false;
    }
    return true;
}

namespace {

RingSpec checked_table_ring(std::int64_t n, const DiagonalLimits& limits) {
    RingSpec ring = RingSpec::make(n);
    if (ring.modulus() > limits.table_budget) {
        throw BudgetExceeded("Z_" + std::to_string(n) + " exceeds the table budget of " +
                                 std::to_string(limits.table_budget),
                             ring.modulus(), limits.table_budget);
    }
    return ring;
}

} // namespace

DiagonalReport diagonal_zn_table(std::int64_t n, const DiagonalLimits& limits) {
    RingSpec ring = checked_table_ring(n, limits);
    const std::uint64_t mod = ring.modulus();
    const std::uint64_t one = 1 % mod;
    DiagonalReport report{{mod, std::nullopt, std::nullopt}, true, Method::TableScan, std::nullopt, std::nullopt};
    for (std::uint64_t a = 0; a < mod; ++a) {
        for (std::uint64_t b = 0; b < mod; ++b) {
            if (a != b && modarith::mul(a, b, mod) == one) {
                report.verdict = false;
                report.witness = InversePairWitness{Residue::from_canonical(ring, a), Residue::from_canonical(ring, b)};
                return report;
            }
        }
    }
    return report;
}

std::optional<std::uint64_t> smallest_non_involutive_unit(std::uint64_t n) {
    // For n > 24 the search ends at the smallest prime not dividing n.
    for (std::uint64_t u = 0; u < n; ++u) {
        if (is_unit_value(u, n) && modarith::mul(u, u, n) != 1 % n) return u;
    }
    return std::nullopt;
}

DiagonalReport diagonal_zn_involution(std::int64_t n, const DiagonalLimits& limits) {
    RingSpec ring = checked_table_ring(n, limits);
    DiagonalReport report{{ring.modulus(), std::nullopt, std::nullopt}, true, Method::InvolutionScan,
                          std::nullopt, std::nullopt};
    if (auto u = smallest_non_involutive_unit(ring.modulus())) {
        report.verdict = false;
        report.witness = NonInvolutiveResidue{Residue::from_canonical(ring, *u)};
    }
    return report;
}

DiagonalReport diagonal_zn_theorem(std::int64_t n) {
    RingSpec ring = RingSpec::make(n);
    DiagonalReport report{{ring.modulus(), std::nullopt, std::nullopt}, 24 % ring.modulus() == 0, Method::Theorem,
                          std::nullopt, std::nullopt};
    if (!report.verdict) {
        report.witness = NonInvolutiveResidue{Residue::from_canonical(ring, *smallest_non_involutive_unit(ring.modulus()))};
    }
    return report;
}

DiagonalReport diagonal_poly_theorem(std::int64_t n, std::size_t vars) {
    if (vars == 0) throw std::invalid_argument("a polynomial ring needs at least one variable");
    RingSpec ring = RingSpec::make(n);
    const std::uint64_t mod = ring.modulus();
    DiagonalReport report{{mod, vars, std::nullopt}, 12 % mod == 0, Method::Theorem, std::nullopt, std::nullopt};
    if (!report.verdict) {
        if (mod == 8 || mod == 24) {
            report.witness = NonInvolutivePolynomial{counterexample_unit(n, vars)};
        } else {
            // n does not divide 24, so Z_n itself already has a non-involutive unit.
            auto u = smallest_non_involutive_unit(mod);
            report.witness = NonInvolutivePolynomial{Polynomial::constant(ring, vars, static_cast<std::int64_t>(*u))};
        }
    }
    return report;
}

EnumerationOutcome scan_polynomial_units(std::int64_t n, std::size_t vars, std::uint64_t degree_bound,
                                         const DiagonalLimits& limits) {
    if (vars == 0) throw std::invalid_argument("a polynomial ring needs at least one variable");
    RingSpec ring = RingSpec::make(n);
    const PolynomialEnumerator base(ring, vars, degree_bound, limits.enumeration_budget);
    const std::uint64_t total = base.size();

    constexpr std::uint64_t kNone = std::numeric_limits<std::uint64_t>::max();
    std::atomic<std::uint64_t> best{kNone};
    const std::uint64_t workers = std::clamp<std::uint64_t>(limits.workers, 1, total);
    std::vector<EnumerationStats> partial(workers);

    auto scan_range = [&](std::uint64_t lo, std::uint64_t hi, EnumerationStats& stats) {
        PolynomialEnumerator stream = base;
        stream.seek(lo);
        for (std::uint64_t i = lo; i < hi; ++i) {
            if (i > best.load(std::memory_order_relaxed)) return;
            Polynomial f = *stream.next();
            ++stats.polynomials;
            if (!is_unit_poly(f)) continue;
            ++stats.units;
            if (total_degree(f) > Degree(0)) ++stats.nonconstant_units;
            if (!is_involution(f)) {
                std::uint64_t current = best.load();
                while (i < current && !best.compare_exchange_weak(current, i)) {
                }
                return;
            }
        }
    };

    if (workers == 1) {
        scan_range(0, total, partial[0]);
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        const std::uint64_t chunk = total / workers, extra = total % workers;
        std::uint64_t lo = 0;
        for (std::uint64_t w = 0; w < workers; ++w) {
            const std::uint64_t hi = lo + chunk + (w < extra ? 1 : 0);
            pool.emplace_back(scan_range, lo, hi, std::ref(partial[w]));
            lo = hi;
        }
    }

    EnumerationOutcome out{
        {{ring.modulus(), vars, degree_bound}, true, Method::Enumeration, std::nullopt, std::nullopt},
        std::nullopt,
        std::nullopt};
    if (const std::uint64_t index = best.load(); index != kNone) {
        out.report.verdict = false;
        out.report.witness = NonInvolutivePolynomial{base.at(index)};
        out.report.search_bound_note = "first counterexample at enumeration index " + std::to_string(index) +
                                       " of " + std::to_string(total);
        out.witness_index = index;
    } else {
        EnumerationStats stats;
        for (const auto& p : partial) {
            stats.polynomials += p.polynomials;
            stats.units += p.units;
            stats.nonconstant_units += p.nonconstant_units;
        }
        out.report.search_bound_note = "no counterexample among all " + std::to_string(total) +
                                       " polynomials of total degree <= " + std::to_string(degree_bound) + " (" +
                                       std::to_string(stats.units) +
                                       " units checked); higher degrees were not searched";
        out.stats = stats;
    }
    return out;
}

Polynomial counterexample_unit(std::int64_t n, std::size_t vars) {
    if (n != 8 && n != 24) {
        throw std::invalid_argument("no built-in counterexample for modulus " + std::to_string(n) +
                                    " (only 8 and 24)");
    }
    if (vars == 0) throw std::invalid_argument("a polynomial ring needs at least one variable");
    RingSpec ring = RingSpec::make(n);
    Polynomial u = Polynomial::constant(ring, vars, 1) + Polynomial::variable(ring, vars, 0, n == 8 ? 2 : 6);
    if (!is_unit_poly(u) || is_involution(u)) throw std::logic_error("counterexample " + to_string(u) + " is invalid");
    return u;
}

namespace {

void require_structured_modulus(std::uint64_t n) {
    if (n != 4 && n != 12) {
        throw std::invalid_argument("structured units are defined for moduli 4 and 12, not " + std::to_string(n));
    }
}

} // namespace

Polynomial structured_unit(const Polynomial& h, std::uint64_t r) {
    const RingSpec& ring = h.ring();
    require_structured_modulus(ring.modulus());
    if (!is_unit_value(r % ring.modulus(), ring.modulus())) {
        throw std::invalid_argument(std::to_string(r) + " is not a unit mod " + std::to_string(ring.modulus()));
    }
    return poly_scale(h, ring.radical()) + Polynomial::constant(ring, h.arity(), static_cast<std::int64_t>(r % ring.modulus()));
}

StructuredUnitGenerator::StructuredUnitGenerator(std::int64_t n, std::size_t vars, std::uint64_t degree_bound,
                                                 std::uint64_t seed)
    : ring_(RingSpec::make(n)), vars_(vars), monomials_(monomials_up_to(vars, degree_bound)), rng_(seed) {
    require_structured_modulus(ring_.modulus());
    for (std::uint64_t r = 1; r < ring_.modulus(); ++r) {
        if (is_unit_value(r, ring_.modulus())) units_.push_back(r);
    }
}

Polynomial StructuredUnitGenerator::next() {
    std::uniform_int_distribution<std::int64_t> coeff(0, static_cast<std::int64_t>(ring_.modulus()) - 1);
    std::uniform_int_distribution<std::size_t> pick(0, units_.size() - 1);
    std::vector<std::pair<Monomial, std::int64_t>> terms;
    terms.reserve(monomials_.size());
    for (const auto& m : monomials_) terms.emplace_back(m, coeff(rng_));
    Polynomial h = Polynomial::from_terms(ring_, vars_, std::move(terms));
    return structured_unit(h, units_[pick(rng_)]);
}

bool subring_restriction_check(std::int64_t n, std::size_t vars, const DiagonalLimits& limits) {
    DiagonalReport zn = diagonal_zn_table(n, limits);
    if (zn.verdict) return true;
    const auto& pair = std::get<InversePairWitness>(*zn.witness);
    const Polynomial a = Polynomial::constant(pair.a.ring(), vars, static_cast<std::int64_t>(pair.a.value()));
    const Polynomial b = Polynomial::constant(pair.b.ring(), vars, static_cast<std::int64_t>(pair.b.value()));
    return (a * b).is_one() && a != b;
}

} // namespace diag12
