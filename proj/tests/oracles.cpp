#include "oracles.hpp"

#include <algorithm>
#include <limits>
#include <map>

namespace diag12::oracle {

bool nilpotent_by_powers(std::uint64_t c, std::uint64_t n) {
    std::uint64_t p = c % n;
    for (std::uint64_t k = 1; k <= n; ++k) {
        if (p == 0) return true;
        p = static_cast<std::uint64_t>(static_cast<unsigned __int128>(p) * c % n);
    }
    return p == 0;
}

std::optional<std::uint64_t> inverse_by_scan(std::uint64_t c, std::uint64_t n) {
    for (std::uint64_t b = 0; b < n; ++b) {
        if (c * b % n == 1 % n) return b;
    }
    return std::nullopt;
}

std::vector<std::pair<std::uint64_t, unsigned>> factor_by_division(std::uint64_t n) {
    std::vector<std::pair<std::uint64_t, unsigned>> out;
    for (std::uint64_t d = 2; n > 1; ++d) {
        unsigned e = 0;
        while (n % d == 0) {
            n /= d;
            ++e;
        }
        if (e > 0) out.emplace_back(d, e);
    }
    return out;
}

std::uint64_t unit_exponent_by_search(std::uint64_t n) {
    std::vector<std::uint64_t> units;
    for (std::uint64_t u = 0; u < n; ++u) {
        if (inverse_by_scan(u, n)) units.push_back(u);
    }
    std::vector<std::uint64_t> powers = units;
    for (std::uint64_t e = 1;; ++e) {
        if (std::all_of(powers.begin(), powers.end(), [&](std::uint64_t p) { return p == 1 % n; })) return e;
        for (std::size_t i = 0; i < units.size(); ++i) powers[i] = powers[i] * units[i] % n;
    }
}

std::optional<Polynomial> inverse_by_exhaustion(const Polynomial& f, std::uint64_t degree_bound) {
    PolynomialEnumerator candidates(f.ring(), f.arity(), degree_bound, std::numeric_limits<std::uint64_t>::max());
    while (auto g = candidates.next()) {
        if ((f * *g).is_one()) return g;
    }
    return std::nullopt;
}

namespace {

using Exps = std::vector<std::uint32_t>;

Exps exps_of(const Monomial& m) { return Exps(m.exponents().begin(), m.exponents().end()); }

// a - b when b divides a.
std::optional<Exps> quotient(const Exps& a, const Exps& b) {
    Exps out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (b[i] > a[i]) return std::nullopt;
        out[i] = a[i] - b[i];
    }
    return out;
}

struct PrunedSearch {
    std::uint64_t n;
    std::map<Exps, std::uint64_t> f;
    std::vector<Exps> monomials;
    // For each j, the (i, f[mu_j - mu_i]) with mu_i | mu_j and that f-coefficient nonzero.
    std::vector<std::vector<std::pair<std::size_t, std::uint64_t>>> contributions;
    std::vector<std::uint64_t> g;

    bool product_is_one() const {
        std::map<Exps, std::uint64_t> product;
        for (const auto& [fe, fc] : f) {
            for (std::size_t j = 0; j < monomials.size(); ++j) {
                if (g[j] == 0) continue;
                Exps e(fe.size());
                for (std::size_t i = 0; i < e.size(); ++i) e[i] = fe[i] + monomials[j][i];
                auto& slot = product[e];
                slot = (slot + fc * g[j]) % n;
            }
        }
        for (const auto& [e, c] : product) {
            const bool constant = std::all_of(e.begin(), e.end(), [](auto x) { return x == 0; });
            if (c != (constant ? 1 % n : 0)) return false;
        }
        if (n > 1 && !product.contains(Exps(monomials[0].size(), 0))) return false;
        return true;
    }

    bool assign(std::size_t j) {
        if (j == monomials.size()) return product_is_one();
        const std::uint64_t target = j == 0 ? 1 % n : 0;
        for (std::uint64_t v = 0; v < n; ++v) {
            g[j] = v;
            std::uint64_t coefficient = 0;
            for (const auto& [i, fc] : contributions[j]) coefficient = (coefficient + fc * g[i]) % n;
            if (coefficient == target && assign(j + 1)) return true;
        }
        g[j] = 0;
        return false;
    }
};

} // namespace

std::optional<Polynomial> inverse_by_pruned_search(const Polynomial& f, std::uint64_t degree_bound) {
    PrunedSearch s;
    s.n = f.modulus();
    for (const auto& t : f.terms()) s.f[exps_of(t.monomial)] = t.coefficient;
    for (const auto& m : monomials_up_to(f.arity(), degree_bound)) s.monomials.push_back(exps_of(m));
    s.contributions.resize(s.monomials.size());
    for (std::size_t j = 0; j < s.monomials.size(); ++j) {
        for (std::size_t i = 0; i <= j; ++i) {
            auto q = quotient(s.monomials[j], s.monomials[i]);
            if (!q) continue;
            if (auto it = s.f.find(*q); it != s.f.end()) s.contributions[j].emplace_back(i, it->second);
        }
    }
    s.g.assign(s.monomials.size(), 0);
    if (!s.assign(0)) return std::nullopt;

    std::vector<std::pair<Monomial, std::int64_t>> terms;
    for (std::size_t j = 0; j < s.monomials.size(); ++j) {
        Monomial::Exponents e(s.monomials[j].begin(), s.monomials[j].end());
        terms.emplace_back(Monomial(std::move(e)), static_cast<std::int64_t>(s.g[j]));
    }
    return Polynomial::from_terms(f.ring(), f.arity(), std::move(terms));
}

std::uint64_t inverse_search_bound(const RingSpec& ring) {
    return 2 * std::max<std::uint64_t>(ring.max_exponent(), 1);
}

Polynomial random_polynomial(const RingSpec& ring, std::size_t vars, std::uint64_t max_degree, std::mt19937_64& rng) {
    std::uniform_int_distribution<std::int64_t> coeff(0, static_cast<std::int64_t>(ring.modulus()) - 1);
    std::bernoulli_distribution present(0.6);
    std::vector<std::pair<Monomial, std::int64_t>> terms;
    for (const auto& m : monomials_up_to(vars, max_degree)) {
        if (present(rng)) terms.emplace_back(m, coeff(rng));
    }
    return Polynomial::from_terms(ring, vars, std::move(terms));
}

Polynomial random_nilpotent(const RingSpec& ring, std::size_t vars, std::uint64_t max_degree, std::mt19937_64& rng) {
    const std::uint64_t multiples = ring.modulus() / ring.radical();
    std::uniform_int_distribution<std::uint64_t> coeff(0, multiples - 1);
    std::vector<std::pair<Monomial, std::int64_t>> terms;
    for (const auto& m : monomials_up_to(vars, max_degree)) {
        terms.emplace_back(m, static_cast<std::int64_t>(coeff(rng) * ring.radical()));
    }
    return Polynomial::from_terms(ring, vars, std::move(terms));
}

std::uint64_t random_unit_residue(const RingSpec& ring, std::mt19937_64& rng) {
    std::uniform_int_distribution<std::uint64_t> pick(0, ring.modulus() - 1);
    for (;;) {
        std::uint64_t u = pick(rng);
        if (inverse_by_scan(u, ring.modulus())) return u;
    }
}

} // namespace diag12::oracle
