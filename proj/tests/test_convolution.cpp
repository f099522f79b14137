#include <gtest/gtest.h>

#include "oracles.hpp"

using namespace convsum;

namespace {

const SpaceBasis& basis(std::int64_t level)
{
    static const SpaceBasis b44 = build_basis(44, 400);
    static const SpaceBasis b52 = build_basis(52, 400);
    return level == 44 ? b44 : b52;
}

} // namespace

TEST(WOracle, SmallValues)
{
    EXPECT_EQ(w_oracle(1, 44, 44), 0);
    EXPECT_EQ(w_oracle(1, 44, 45), 1);
    EXPECT_EQ(w_oracle(4, 11, 19), 3);
    EXPECT_EQ(w_oracle(1, 1, 5), 38);
    EXPECT_EQ(w_oracle(1, 11, 12), 1);
    EXPECT_EQ(w_oracle(1, 13, 15), 3);
    EXPECT_EQ(w_oracle(1, 44, 0), 0);
    EXPECT_THROW(w_oracle(0, 3, 5), std::invalid_argument);
}

TEST(WOracle, MatchesPairEnumeration)
{
    for (auto [a, b] : {std::pair<std::int64_t, std::int64_t>{1, 44}, {4, 11}, {1, 52}, {4, 13}, {1, 11}, {3, 7}}) {
        const auto series = w_series_oracle(a, b, 250);
        ASSERT_EQ(series.size(), 251u);
        for (std::int64_t n = 0; n <= 250; ++n) {
            ASSERT_EQ(w_oracle(a, b, n), oracle::w(a, b, n)) << a << "," << b << " n=" << n;
            ASSERT_EQ(series[static_cast<std::size_t>(n)], oracle::w(a, b, n)) << a << "," << b << " n=" << n;
        }
    }
}

TEST(WOracle, Symmetry)
{
    for (std::int64_t n = 1; n <= 100; ++n) {
        ASSERT_EQ(w_oracle(4, 11, n), w_oracle(11, 4, n));
    }
}

TEST(ClosedForm, SupportedPairs)
{
    EXPECT_TRUE(has_closed_form(1, 44));
    EXPECT_TRUE(has_closed_form(4, 13));
    EXPECT_FALSE(has_closed_form(3, 7));
    EXPECT_FALSE(has_closed_form(44, 1));
    try {
        published_formula({3, 7});
        FAIL() << "expected ClosedFormError";
    } catch (const ClosedFormError& e) {
        EXPECT_NE(std::string(e.what()).find("closed form unavailable for (3,7)"), std::string::npos);
    }
}

TEST(ClosedForm, PublishedFormulaIsTheTransformedPublishedExpansion)
{
    for (const EisensteinPair& p : covered_pairs()) {
        const ConvolutionFormula pub = published_formula(p);
        const ConvolutionFormula via = formula_from_solution(published_expansion(p));
        EXPECT_EQ(pub.sigma3_terms, via.sigma3_terms) << p.label();
        EXPECT_EQ(pub.cusp_terms, via.cusp_terms) << p.label();
        ASSERT_EQ(pub.sigma1_terms.size(), 2u);
        for (std::size_t i = 0; i < 2; ++i) {
            EXPECT_EQ(pub.sigma1_terms[i].delta, via.sigma1_terms[i].delta);
            EXPECT_EQ(pub.sigma1_terms[i].c0, via.sigma1_terms[i].c0);
            EXPECT_EQ(pub.sigma1_terms[i].c1, via.sigma1_terms[i].c1);
        }
    }
}

TEST(ClosedForm, DerivedLevel44FormulasMatchOracle)
{
    for (const EisensteinPair p : {EisensteinPair(1, 44), EisensteinPair(4, 11)}) {
        const ConvolutionFormula f = formula_from_solution(derive_coefficients(p, basis(44)));
        for (std::int64_t n = 1; n <= 400; ++n) {
            ASSERT_EQ(w_closed(f, n, basis(44)), oracle::w(p.alpha, p.beta, n)) << p.label() << " n=" << n;
        }
        EXPECT_EQ(w_closed(f, 45, basis(44)), p.alpha == 1 ? 1 : w_oracle(4, 11, 45));
    }
}

TEST(ClosedForm, PublishedFormulasAgreeOnlyAtSomeArguments)
{
    EXPECT_EQ(w_closed(EisensteinPair(1, 44), 45, basis(44)), 1);
    EXPECT_EQ(w_closed(EisensteinPair(1, 52), 52, basis(52)), 0);
    // First disagreements with the oracle.
    EXPECT_NE(evaluate(published_formula({1, 44}), 2, basis(44)), w_oracle(1, 44, 2));
    EXPECT_NE(evaluate(published_formula({4, 11}), 7, basis(44)), w_oracle(4, 11, 7));
    EXPECT_NE(evaluate(published_formula({1, 52}), 22, basis(52)), w_oracle(1, 52, 22));
    EXPECT_NE(evaluate(published_formula({4, 13}), 22, basis(52)), w_oracle(4, 13, 22));
    for (std::int64_t n = 1; n <= 21; ++n) {
        EXPECT_EQ(evaluate(published_formula({1, 52}), n, basis(52)), w_oracle(1, 52, n)) << n;
        EXPECT_EQ(evaluate(published_formula({4, 13}), n, basis(52)), w_oracle(4, 13, n)) << n;
    }
}

TEST(ClosedForm, NonIntegralValueIsAHardFailure)
{
    EXPECT_THROW(w_closed(EisensteinPair(4, 11), 15, basis(44)), ClosedFormError);
}

TEST(ClosedForm, RangeAndShapeChecks)
{
    const ConvolutionFormula f = published_formula({1, 44});
    EXPECT_THROW(evaluate(f, 0, basis(44)), std::invalid_argument);
    EXPECT_THROW(evaluate(f, 401, basis(44)), std::out_of_range);
    EXPECT_THROW(evaluate(f, 5, basis(52)), std::invalid_argument);
}
