// The pruned search stands in for plain exhaustion where the latter is too
// slow, so check the two agree wherever exhaustion is affordable.

#include <gtest/gtest.h>

#include "oracles.hpp"

using namespace diag12;

namespace {

void expect_same_answers(std::int64_t n, std::size_t vars, std::uint64_t f_degree, std::uint64_t bound) {
    RingSpec ring = make_ring(n);
    auto stream = enumerate_polynomials(ring, vars, f_degree);
    while (auto f = stream.next()) {
        auto slow = oracle::inverse_by_exhaustion(*f, bound);
        auto fast = oracle::inverse_by_pruned_search(*f, bound);
        ASSERT_EQ(slow.has_value(), fast.has_value()) << to_string(*f);
        if (slow) {
            EXPECT_EQ(*slow, *fast) << to_string(*f);
            EXPECT_TRUE((*f * *fast).is_one());
        }
    }
}

} // namespace

TEST(PrunedSearch, AgreesWithExhaustionOneVariable) {
    expect_same_answers(2, 1, 2, 4);
    expect_same_answers(3, 1, 2, 3);
    expect_same_answers(4, 1, 2, 4);
    expect_same_answers(6, 1, 1, 3);
    expect_same_answers(8, 1, 1, 3);
    expect_same_answers(9, 1, 1, 2);
}

TEST(PrunedSearch, AgreesWithExhaustionTwoVariables) {
    expect_same_answers(2, 2, 1, 2);
    expect_same_answers(3, 2, 1, 1);
    expect_same_answers(4, 2, 1, 1);
}

TEST(PrunedSearch, RespectsDegreeBound) {
    RingSpec r8 = make_ring(8);
    Polynomial f = parse_polynomial("2*x1 + 1", r8, 1);
    EXPECT_FALSE(oracle::inverse_by_pruned_search(f, 1).has_value());
    auto g = oracle::inverse_by_pruned_search(f, 2);
    ASSERT_TRUE(g.has_value());
    EXPECT_EQ(to_string(*g), "4*x1^2 + 6*x1 + 1 (mod 8)");
}

TEST(SearchBound, CoversKnownInverses) {
    EXPECT_EQ(oracle::inverse_search_bound(make_ring(1)), 2u);
    EXPECT_EQ(oracle::inverse_search_bound(make_ring(2)), 2u);
    EXPECT_EQ(oracle::inverse_search_bound(make_ring(8)), 6u);
    EXPECT_EQ(oracle::inverse_search_bound(make_ring(24)), 6u);
}

TEST(SmallOracles, HandComputedValues) {
    EXPECT_TRUE(oracle::nilpotent_by_powers(0, 1));
    EXPECT_TRUE(oracle::nilpotent_by_powers(6, 36));
    EXPECT_TRUE(oracle::nilpotent_by_powers(6, 8));
    EXPECT_FALSE(oracle::nilpotent_by_powers(6, 10));
    EXPECT_EQ(oracle::inverse_by_scan(3, 7), 5u);
    EXPECT_FALSE(oracle::inverse_by_scan(4, 8).has_value());
    EXPECT_EQ(oracle::unit_exponent_by_search(24), 2u);
    EXPECT_EQ(oracle::unit_exponent_by_search(16), 4u);
    auto f = oracle::factor_by_division(360);
    ASSERT_EQ(f.size(), 3u);
    EXPECT_EQ(f[0], (std::pair<std::uint64_t, unsigned>{2, 3}));
    EXPECT_EQ(f[1], (std::pair<std::uint64_t, unsigned>{3, 2}));
    EXPECT_EQ(f[2], (std::pair<std::uint64_t, unsigned>{5, 1}));
}
