#ifndef CONVSUM_SERIALIZE_HPP
#define CONVSUM_SERIALIZE_HPP

#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "convolution.hpp"
#include "eta.hpp"
#include "qseries.hpp"
#include "spaces.hpp"

namespace convsum {

using json = nlohmann::json;

// Rationals travel as decimal strings so no consumer loses precision.
inline json rational_to_json(const Rational& r)
{
    return json{{"num", to_string(Integer(r.get_num()))}, {"den", to_string(Integer(r.get_den()))}};
}

inline Rational rational_from_json(const json& j)
{
    return rational_from_parts(j.at("num").get<std::string>(), j.at("den").get<std::string>());
}

/// {"precision": P, "coeffs": [["num","den"], ...]} with P + 1 entries.
inline json qseries_to_json(const QSeries& s)
{
    json coeffs = json::array();
    for (const Rational& c : s.coefficients()) {
        coeffs.push_back(json::array({to_string(Integer(c.get_num())), to_string(Integer(c.get_den()))}));
    }
    return json{{"precision", s.precision()}, {"coeffs", std::move(coeffs)}};
}

inline QSeries qseries_from_json(const json& j)
{
    const auto precision = j.at("precision").get<std::size_t>();
    const json& coeffs = j.at("coeffs");
    if (!coeffs.is_array() || coeffs.size() > precision + 1) {
        throw std::invalid_argument("qseries json: coefficient list longer than precision + 1");
    }
    std::vector<Rational> c;
    c.reserve(coeffs.size());
    for (const json& e : coeffs) {
        if (!e.is_array() || e.size() != 2) {
            throw std::invalid_argument("qseries json: coefficient must be [\"num\", \"den\"]");
        }
        c.push_back(rational_from_parts(e[0].get<std::string>(), e[1].get<std::string>()));
    }
    return QSeries(std::move(c), precision);
}

inline json eta_table_to_json(std::int64_t level)
{
    json rows = json::array();
    for (const EtaQuotient& eq : table_rows(level)) {
        rows.push_back(eq.exponent_row());
    }
    return json{{"level", level}, {"divisors", divisors(level)}, {"rows", std::move(rows)}};
}

inline json eta_tables_to_json()
{
    return json{{"tables", json::array({eta_table_to_json(44), eta_table_to_json(52)})}};
}

/// Long format: level,row,delta,exponent with every divisor listed.
inline std::string eta_tables_to_csv()
{
    std::ostringstream out;
    out << "level,row,delta,exponent\n";
    for (std::int64_t level : {44, 52}) {
        const auto rows = table_rows(level);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            for (std::int64_t d : divisors(level)) {
                out << level << ',' << i + 1 << ',' << d << ',' << rows[i].exponent(d) << '\n';
            }
        }
    }
    return out.str();
}

inline json solution_to_json(const CoefficientSolution& sol)
{
    json x = json::object();
    json sigma3 = json::object();
    for (const auto& [d, v] : sol.X) {
        x[std::to_string(d)] = rational_to_json(v);
        sigma3[std::to_string(d)] = rational_to_json(sol.sigma3_coefficient(d));
    }
    json y = json::array();
    for (const Rational& v : sol.Y) {
        y.push_back(rational_to_json(v));
    }
    return json{{"alpha", sol.pair.alpha},
                {"beta", sol.pair.beta},
                {"level", sol.level},
                {"precision", sol.precision},
                {"constant", rational_to_json(sol.constant_term())},
                {"X", std::move(x)},
                {"sigma3_coefficients", std::move(sigma3)},
                {"Y", std::move(y)},
                {"solving_indices", sol.solving_indices}};
}

inline json formula_to_json(const ConvolutionFormula& f)
{
    json s3 = json::object();
    for (const auto& [d, c] : f.sigma3_terms) {
        s3[std::to_string(d)] = rational_to_json(c);
    }
    json s1 = json::array();
    for (const auto& t : f.sigma1_terms) {
        s1.push_back(json{{"delta", t.delta}, {"c0", rational_to_json(t.c0)}, {"c1", rational_to_json(t.c1)}});
    }
    json cusp = json::array();
    for (const Rational& c : f.cusp_terms) {
        cusp.push_back(rational_to_json(c));
    }
    return json{{"alpha", f.pair.alpha},
                {"beta", f.pair.beta},
                {"sigma3_terms", std::move(s3)},
                {"sigma1_terms", std::move(s1)},
                {"cusp_terms", std::move(cusp)}};
}

} // namespace convsum

#endif // CONVSUM_SERIALIZE_HPP
