#include <numeric>

#include <gtest/gtest.h>

#include "oracles.hpp"

using namespace convsum;

TEST(Divisors, AscendingAndComplete)
{
    EXPECT_EQ(divisors(1), (std::vector<std::int64_t>{1}));
    EXPECT_EQ(divisors(44), (std::vector<std::int64_t>{1, 2, 4, 11, 22, 44}));
    EXPECT_EQ(divisors(52), (std::vector<std::int64_t>{1, 2, 4, 13, 26, 52}));
    EXPECT_EQ(divisors(36), (std::vector<std::int64_t>{1, 2, 3, 4, 6, 9, 12, 18, 36}));
    for (std::int64_t n = 1; n <= 300; ++n) {
        std::vector<std::int64_t> naive;
        for (std::int64_t d = 1; d <= n; ++d) {
            if (n % d == 0) {
                naive.push_back(d);
            }
        }
        ASSERT_EQ(divisors(n), naive) << n;
    }
    EXPECT_THROW(divisors(0), std::invalid_argument);
}

TEST(Factorize, ReassemblesAndPhi)
{
    for (std::int64_t n = 1; n <= 500; ++n) {
        std::int64_t prod = 1;
        for (auto [p, e] : factorize(n)) {
            for (int i = 0; i < e; ++i) {
                prod *= p;
            }
        }
        ASSERT_EQ(prod, n);
        std::int64_t coprime = 0;
        for (std::int64_t k = 1; k <= n; ++k) {
            coprime += std::gcd(k, n) == 1;
        }
        ASSERT_EQ(euler_phi(n), coprime) << n;
    }
}

TEST(Sigma, SmallValues)
{
    EXPECT_EQ(sigma_k(1, 1), 1);
    EXPECT_EQ(sigma_k(3, 2), 9);
    EXPECT_EQ(sigma_k(1, 0), 0);
    EXPECT_EQ(sigma_k(3, -5), 0);
    EXPECT_EQ(sigma(12), 28);
    EXPECT_EQ(sigma_k(0, 12), 6);
}

TEST(Sigma, MatchesDivisorEnumeration)
{
    for (unsigned k : {0u, 1u, 2u, 3u}) {
        for (std::int64_t n = 1; n <= 400; ++n) {
            ASSERT_EQ(sigma_k(k, n), oracle::sigma(k, n)) << "k=" << k << " n=" << n;
        }
    }
}

TEST(Sigma, MultiplicativeOnCoprimeArguments)
{
    for (std::int64_t m = 1; m <= 60; ++m) {
        for (std::int64_t n = 1; n <= 60; ++n) {
            if (std::gcd(m, n) == 1) {
                ASSERT_EQ(sigma_k(3, m * n), sigma_k(3, m) * sigma_k(3, n));
                ASSERT_EQ(sigma(m * n), sigma(m) * sigma(n));
            }
        }
    }
}

TEST(Sigma, LargeArgumentsDoNotOverflow)
{
    // 999983 is prime: sigma_3 = 1 + p^3, beyond 64 bits only in the product below.
    const std::int64_t p = 999983;
    EXPECT_EQ(sigma_k(3, p), Integer(1) + Integer(p) * p * p);
    EXPECT_EQ(sigma_k(3, p) * sigma_k(3, p), (Integer(1) + Integer(p) * p * p) * (Integer(1) + Integer(p) * p * p));
}

TEST(SigmaFrac, ZeroUnlessDivisible)
{
    EXPECT_EQ(sigma_k_frac(3, 10, 4), 0);
    EXPECT_EQ(sigma_k_frac(3, 12, 4), 28);
    EXPECT_EQ(sigma_k_frac(1, 44, 44), 1);
    EXPECT_THROW(sigma_k_frac(1, 5, 0), std::invalid_argument);
}

TEST(Dimensions, Levels44And52)
{
    EXPECT_EQ(dim_spaces(44, 4), (SpaceDimensions{21, 6, 15}));
    EXPECT_EQ(dim_spaces(52, 4), (SpaceDimensions{24, 6, 18}));
}

TEST(Dimensions, KnownSmallLevels)
{
    EXPECT_EQ(dim_spaces(1, 4), (SpaceDimensions{1, 1, 0}));
    EXPECT_EQ(dim_spaces(1, 12), (SpaceDimensions{2, 1, 1}));
    EXPECT_EQ(dim_spaces(11, 4), (SpaceDimensions{4, 2, 2}));
    EXPECT_EQ(dim_spaces(2, 8), (SpaceDimensions{3, 2, 1}));
    EXPECT_EQ(dim_spaces(4, 4), (SpaceDimensions{3, 3, 0}));
    EXPECT_EQ(dim_spaces(9, 4), (SpaceDimensions{5, 4, 1}));
}

TEST(Dimensions, RejectsBadWeights)
{
    EXPECT_THROW(dim_spaces(44, 3), std::invalid_argument);
    EXPECT_THROW(dim_spaces(44, 2), std::invalid_argument);
    EXPECT_THROW(dim_spaces(0, 4), std::invalid_argument);
}

TEST(Number, RationalHelpers)
{
    EXPECT_EQ(ratio(6, -4), ratio(-3, 2));
    EXPECT_THROW(ratio(1, 0), std::domain_error);
    EXPECT_EQ(parse_rational("-577662336/40565"), ratio(-577662336, 40565));
    EXPECT_THROW(parse_rational("1/0"), std::invalid_argument);
    EXPECT_THROW(parse_rational("abc"), std::invalid_argument);
    EXPECT_TRUE(is_integral(ratio(10, 5)));
    EXPECT_EQ(integer_part(ratio(10, 5)), 2);
    EXPECT_THROW(integer_part(ratio(1, 2)), std::domain_error);
}
