#include <random>

#include <gtest/gtest.h>

#include "oracles.hpp"

using namespace convsum;

TEST(Serialize, RationalAsDecimalStrings)
{
    const Rational r = parse_rational("-2056953609600/6064597");
    const json j = rational_to_json(r);
    EXPECT_EQ(j.at("num"), "-2056953609600");
    EXPECT_EQ(j.at("den"), "6064597");
    EXPECT_EQ(rational_from_json(j), r);
    const Rational big = parse_rational("123456789012345678901234567890/7");
    EXPECT_EQ(rational_from_json(rational_to_json(big)), big);
    EXPECT_THROW(rational_from_json(json{{"num", "1"}, {"den", "0"}}), std::invalid_argument);
}

TEST(Serialize, QSeriesRoundTrip)
{
    std::mt19937_64 rng(1);
    for (int i = 0; i < 10; ++i) {
        const QSeries s = oracle::random_series(rng, 15 + i);
        const json j = qseries_to_json(s);
        EXPECT_EQ(qseries_from_json(j), s);
        EXPECT_EQ(qseries_to_json(qseries_from_json(json::parse(j.dump()))).dump(), j.dump());
    }
    EXPECT_THROW(qseries_from_json(json{{"precision", 0}, {"coeffs", json::array({json::array({"1", "1"}), json::array({"2", "1"})})}}),
                 std::invalid_argument);
}

TEST(Serialize, EtaTables)
{
    const json j = eta_tables_to_json();
    ASSERT_EQ(j.at("tables").size(), 2u);
    EXPECT_EQ(j["tables"][0]["level"], 44);
    EXPECT_EQ(j["tables"][0]["rows"].size(), 15u);
    EXPECT_EQ(j["tables"][1]["rows"].size(), 18u);
    EXPECT_EQ(json::parse(j.dump()).dump(), j.dump());
    const std::string csv = eta_tables_to_csv();
    EXPECT_EQ(csv.substr(0, csv.find('\n')), "level,row,delta,exponent");
    EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 1 + (15 + 18) * 6);
}

TEST(Serialize, SolutionAndFormula)
{
    const CoefficientSolution sol = derive_coefficients({4, 11}, build_basis(44, 60));
    const json js = solution_to_json(sol);
    EXPECT_EQ(rational_from_json(js.at("constant")), 49);
    EXPECT_EQ(rational_from_json(js.at("Y")[0]), ratio(110880, 61));
    EXPECT_EQ(js.at("solving_indices").size(), 21u);
    const json jf = formula_to_json(formula_from_solution(sol));
    EXPECT_EQ(jf.at("cusp_terms").size(), 15u);
    EXPECT_EQ(json::parse(jf.dump()).dump(), jf.dump());
}
