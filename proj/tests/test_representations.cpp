#include <gtest/gtest.h>

#include "oracles.hpp"

using namespace convsum;

TEST(R4, SmallValues)
{
    EXPECT_EQ(r4_jacobi(0), 1);
    EXPECT_EQ(r4_jacobi(1), 8);
    EXPECT_EQ(r4_jacobi(4), 24);
    EXPECT_EQ(r4_enumerate(0), 1);
    EXPECT_EQ(r4_enumerate(2), 24);
    EXPECT_EQ(r4_enumerate(7), 64);
}

TEST(R4, JacobiMatchesBoxCount)
{
    for (std::int64_t n = 0; n <= 60; ++n) {
        ASSERT_EQ(r4_enumerate(n), oracle::r4(n)) << n;
    }
    for (std::int64_t n = 0; n <= 200; ++n) {
        ASSERT_EQ(r4_jacobi(n), r4_enumerate(n)) << n;
    }
}

TEST(R4, BoundsAndErrors)
{
    EXPECT_THROW(r4_enumerate(501), std::out_of_range);
    EXPECT_NO_THROW(r4_enumerate(600, 600));
    EXPECT_THROW(r4_enumerate(-1), std::invalid_argument);
    EXPECT_THROW(r4_jacobi(-1), std::invalid_argument);
}

TEST(RepCount, EnumerationSmallValues)
{
    EXPECT_EQ(rep_count_enumerate({1, 11, 0}), 1);
    EXPECT_EQ(rep_count_enumerate({1, 11, 11}), 104);
    EXPECT_EQ(rep_count_enumerate({1, 11, 12}), oracle::r4(12) + oracle::r4(1) * oracle::r4(1));
    EXPECT_EQ(rep_count_enumerate({1, 13, 13}), oracle::r4(13) + oracle::r4(1));
    EXPECT_THROW(rep_count_enumerate({1, 11, 501}), std::out_of_range);
}

TEST(RepCount, ClosedSmallValues)
{
    EXPECT_EQ(rep_count_closed({1, 11, 11}), 104);
    EXPECT_EQ(rep_count_closed({1, 13, 1}), 8);
    EXPECT_EQ(rep_count_closed({1, 11, 0}), 1);
    EXPECT_THROW(rep_count_closed({1, 7, 3}), std::invalid_argument);
    EXPECT_THROW(rep_count_closed({1, 11, -1}), std::invalid_argument);
}

TEST(RepCount, ClosedMatchesEnumeration)
{
    for (std::int64_t b : {11, 13}) {
        for (std::int64_t n = 0; n <= 100; ++n) {
            ASSERT_EQ(rep_count_closed({1, b, n}), rep_count_enumerate({1, b, n})) << b << " n=" << n;
        }
    }
}

TEST(RepCount, ClosedFormUsesSuppliedW)
{
    // Level-44 sums from the solved expansion instead of the oracle.
    const SpaceBasis basis = build_basis(44, 120);
    const ConvolutionFormula f44 = formula_from_solution(derive_coefficients({1, 44}, basis));
    const ConvolutionFormula f411 = formula_from_solution(derive_coefficients({4, 11}, basis));
    const auto w = [&](std::int64_t a, std::int64_t b, std::int64_t n) -> Integer {
        if (n <= 0) {
            return 0;
        }
        if (a == 1 && b == 44) {
            return w_closed(f44, n, basis);
        }
        if (a == 4 && b == 11) {
            return w_closed(f411, n, basis);
        }
        return w_oracle(a, b, n);
    };
    for (std::int64_t n = 0; n <= 120; ++n) {
        ASSERT_EQ(rep_count_closed({1, 11, n}, w), rep_count_enumerate({1, 11, n})) << n;
    }
}

TEST(RepCount, SubstitutionIdentities)
{
    for (std::int64_t b : {11, 13}) {
        for (std::int64_t n = 1; n <= 150; ++n) {
            ASSERT_TRUE(substitution_identities_hold(b, n)) << b << " n=" << n;
        }
    }
}
