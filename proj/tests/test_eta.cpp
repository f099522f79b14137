#include <gtest/gtest.h>

#include "oracles.hpp"

using namespace convsum;

namespace {

/// Literal expansion of prod eta(delta z)^r without the q-power shift:
/// F(q^delta)^r with 1/F(q^delta) = sum p(n) q^{delta n}.
std::vector<std::int64_t> literal_eta_product(const EtaQuotient& eq, std::size_t P)
{
    std::vector<std::int64_t> acc(P + 1, 0);
    acc[0] = 1;
    const auto p = oracle::partitions(P);
    for (auto [delta, r] : eq.exponents) {
        std::vector<std::int64_t> factor;
        if (r > 0) {
            factor = oracle::euler_product(delta, P);
        } else {
            factor.assign(P + 1, 0);
            for (std::size_t n = 0; n * static_cast<std::size_t>(delta) <= P; ++n) {
                factor[n * static_cast<std::size_t>(delta)] = p[n];
            }
        }
        for (int i = 0; i < std::abs(r); ++i) {
            acc = oracle::poly_mul(acc, factor);
        }
    }
    return acc;
}

bool row_is(const EtaQuotient& eq, std::initializer_list<int> row)
{
    return eq.exponent_row() == std::vector<int>(row);
}

} // namespace

TEST(EulerProduct, PentagonalMatchesLiteralProduct)
{
    const QSeries f = euler_product(1, 12);
    const std::vector<std::int64_t> expected = {1, -1, -1, 0, 0, 1, 0, 1, 0, 0, 0, 0, -1};
    for (std::size_t n = 0; n <= 12; ++n) {
        EXPECT_EQ(f[n], ratio(expected[n])) << n;
    }
    EXPECT_EQ(euler_product(2, 5), oracle::from_ints({1, 0, -1, 0, -1, 0}));
    for (std::int64_t delta : {1, 2, 3, 4, 11, 13, 26, 44, 52}) {
        const std::size_t P = 400;
        ASSERT_EQ(euler_product(delta, P), oracle::from_ints(oracle::euler_product(delta, P))) << delta;
    }
    EXPECT_EQ(euler_product(7, 3)[0], 1);
    EXPECT_THROW(euler_product(0, 3), std::invalid_argument);
}

TEST(EtaQuotient, BasicProperties)
{
    const EtaQuotient a2(44, {{1, 4}, {11, 4}});
    EXPECT_EQ(a2.weight(), 4);
    EXPECT_EQ(a2.leading_exponent(), 2);
    EXPECT_EQ(a2.exponent(2), 0);
    EXPECT_EQ(a2.exponent_row(), (std::vector<int>{4, 0, 0, 4, 0, 0}));
    EXPECT_THROW(EtaQuotient(44, {{3, 1}}), std::invalid_argument);
    EXPECT_THROW(EtaQuotient(0, {}), std::invalid_argument);
}

TEST(Expand, EtaProductOfLevel11)
{
    // eta^4(z) eta^4(11z) = q^2 - 4 q^3 + ...
    const QSeries s = expand(EtaQuotient(44, {{1, 4}, {11, 4}}), 10);
    EXPECT_EQ(s[1], 0);
    EXPECT_EQ(s[2], 1);
    EXPECT_EQ(s[3], -4);
    // eta^2(z) eta^2(11z) is the weight-2 newform of level 11.
    const QSeries f = expand(EtaQuotient(11, {{1, 2}, {11, 2}}), 13);
    const std::vector<std::int64_t> a = {0, 1, -2, -1, 2, 1, 2, -2, 0, -2, -2, 1, -2, 4};
    for (std::size_t n = 0; n <= 13; ++n) {
        EXPECT_EQ(f[n], ratio(a[n])) << n;
    }
}

TEST(Expand, TrivialAndErrorCases)
{
    EXPECT_EQ(expand(EtaQuotient(44, {}), 8), QSeries::one(8));
    EXPECT_THROW(expand(EtaQuotient(1, {{1, 1}}), 8), std::domain_error);
    EXPECT_THROW(expand(EtaQuotient(2, {{1, 24}, {2, -24}}), 8), std::domain_error);
    // Leading exponent beyond the precision leaves nothing.
    EXPECT_TRUE(expand(EtaQuotient(44, {{44, 24}}), 10).is_zero());
}

TEST(Expand, TableRowsMatchLiteralProduct)
{
    const std::size_t P = 120;
    for (std::int64_t level : {44, 52}) {
        for (const EtaQuotient& eq : table_rows(level)) {
            const QSeries got = expand(eq, P);
            const std::size_t e = integer_part(eq.leading_exponent()).get_ui();
            const auto lit = literal_eta_product(eq, P);
            for (std::size_t n = 0; n <= P; ++n) {
                const std::int64_t want = n >= e ? lit[n - e] : 0;
                ASSERT_EQ(got[n], ratio(want)) << level << " row " << ::testing::PrintToString(eq.exponent_row())
                                               << " n=" << n;
            }
            EXPECT_EQ(got[e], 1);
        }
    }
}

TEST(Tables, ShapeAndLevels)
{
    EXPECT_EQ(table_rows(44).size(), 15u);
    EXPECT_EQ(table_rows(52).size(), 18u);
    EXPECT_TRUE(row_is(table_rows(44)[0], {6, -2, 0, 6, -2, 0}));
    EXPECT_TRUE(row_is(table_rows(52)[17], {0, 7, -3, 0, -3, 7}));
    EXPECT_THROW(table_rows(11), std::invalid_argument);
    EXPECT_TRUE(is_supported_level(52));
    EXPECT_FALSE(is_supported_level(26));
}

TEST(Ligozat, LevelElevenNewform)
{
    const LigozatReport r = check_ligozat(EtaQuotient(11, {{1, 2}, {11, 2}}));
    EXPECT_TRUE(r.cuspidal());
    EXPECT_EQ(r.weight, 2);
    EXPECT_EQ(r.leading_exponent, 1);
}

TEST(Ligozat, DetectsEachFailedCondition)
{
    EXPECT_FALSE(check_ligozat(EtaQuotient(1, {{1, 1}})).cond_i);
    EXPECT_FALSE(check_ligozat(EtaQuotient(2, {{1, 8}, {2, 2}})).cond_ii);
    // 2^3 is not a square.
    EXPECT_FALSE(check_ligozat(EtaQuotient(2, {{1, 21}, {2, 3}})).cond_iii);
    EXPECT_FALSE(check_ligozat(EtaQuotient(1, {{1, 6}})).cond_iv);
    // eta(2z)^40 / eta(z)^32 has a pole at the cusp 0.
    const LigozatReport pole = check_ligozat(EtaQuotient(2, {{1, -32}, {2, 40}}));
    EXPECT_TRUE(pole.cond_i && pole.cond_ii && pole.cond_iii && pole.cond_iv);
    EXPECT_FALSE(pole.cond_v);
    // Delta = eta^24 is a cusp form of weight 12 on SL2(Z).
    const LigozatReport delta = check_ligozat(EtaQuotient(1, {{1, 24}}));
    EXPECT_TRUE(delta.cuspidal());
    EXPECT_EQ(delta.weight, 12);
}

TEST(Ligozat, CuspOrdersMatchDirectFormula)
{
    for (std::int64_t level : {44, 52}) {
        for (const EtaQuotient& eq : table_rows(level)) {
            const LigozatReport r = check_ligozat(eq);
            ASSERT_EQ(r.cusp_orders.size(), 6u);
            for (const auto& [d, order] : r.cusp_orders) {
                Rational s = 0;
                for (auto [delta, e] : eq.exponents) {
                    const std::int64_t g = std::gcd(d, delta);
                    s += ratio(g * g * e, delta);
                }
                ASSERT_EQ(order, s);
            }
        }
    }
}

TEST(Ligozat, TableRowsAreHolomorphicOfWeightFour)
{
    for (std::int64_t level : {44, 52}) {
        for (const EtaQuotient& eq : table_rows(level)) {
            const LigozatReport r = check_ligozat(eq);
            EXPECT_TRUE(r.holomorphic()) << level << ::testing::PrintToString(eq.exponent_row());
            EXPECT_EQ(r.weight, 4);
        }
    }
}

TEST(Ligozat, RowsWithAVanishingCuspOrder)
{
    // These table rows satisfy every condition except strict positivity at one cusp.
    const std::map<std::int64_t, std::vector<std::size_t>> zero_order_rows = {{44, {7, 11}}, {52, {7, 14}}};
    for (const auto& [level, rows] : zero_order_rows) {
        const auto table = table_rows(level);
        std::vector<std::size_t> found;
        for (std::size_t i = 0; i < table.size(); ++i) {
            if (!check_ligozat(table[i]).cond_v_prime) {
                found.push_back(i + 1);
            }
        }
        EXPECT_EQ(found, rows) << "level " << level;
    }
}
