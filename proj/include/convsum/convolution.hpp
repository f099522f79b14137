#ifndef CONVSUM_CONVOLUTION_HPP
#define CONVSUM_CONVOLUTION_HPP

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "arith.hpp"
#include "eisenstein.hpp"
#include "qseries.hpp"
#include "reference_data.hpp"
#include "spaces.hpp"

namespace convsum {

/// W_(alpha,beta)(n) = sum over l, m >= 1 with alpha l + beta m = n of sigma(l) sigma(m).
inline Integer w_oracle(std::int64_t alpha, std::int64_t beta, std::int64_t n)
{
    if (alpha < 1 || beta < 1) {
        throw std::invalid_argument("w_oracle: alpha and beta must be positive");
    }
    Integer sum = 0;
    for (std::int64_t l = 1; alpha * l + beta <= n; ++l) {
        const std::int64_t rest = n - alpha * l;
        if (rest % beta == 0) {
            sum += sigma(l) * sigma(rest / beta);
        }
    }
    return sum;
}

/// W_(alpha,beta)(n) for n = 0..precision as the coefficients of
/// (sum sigma(l) q^{alpha l}) (sum sigma(m) q^{beta m}).
inline std::vector<Integer> w_series_oracle(std::int64_t alpha, std::int64_t beta, std::size_t precision)
{
    if (alpha < 1 || beta < 1) {
        throw std::invalid_argument("w_series_oracle: alpha and beta must be positive");
    }
    const QSeries s = QSeries::generate(precision, [](std::size_t n) -> Rational {
        return Rational(sigma(static_cast<std::int64_t>(n)));
    });
    const QSeries prod = mul(dilate(s, static_cast<std::size_t>(alpha)), dilate(s, static_cast<std::size_t>(beta)));
    std::vector<Integer> out;
    out.reserve(precision + 1);
    for (std::size_t n = 0; n <= precision; ++n) {
        out.push_back(integer_part(prod[n]));
    }
    return out;
}

struct Sigma1Term {
    std::int64_t delta;
    Rational c0; // constant part of (c0 + c1 n) sigma(n/delta)
    Rational c1;

    friend bool operator==(const Sigma1Term&, const Sigma1Term&) = default;
};

/// W_(alpha,beta)(n) = sum s3[delta] sigma_3(n/delta) + sum (c0 + c1 n) sigma(n/delta) + sum cusp[j] c_j(n).
struct ConvolutionFormula {
    EisensteinPair pair;
    std::map<std::int64_t, Rational> sigma3_terms;
    std::vector<Sigma1Term> sigma1_terms;
    std::vector<Rational> cusp_terms;

    friend bool operator==(const ConvolutionFormula&, const ConvolutionFormula&) = default;
};

class ClosedFormError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

inline bool has_closed_form(std::int64_t alpha, std::int64_t beta)
{
    for (const auto& p : covered_pairs()) {
        if (p.alpha == alpha && p.beta == beta) {
            return true;
        }
    }
    return false;
}

/// The formula as printed, for (1,44), (4,11), (1,52) or (4,13).
inline ConvolutionFormula published_formula(const EisensteinPair& pair)
{
    if (!has_closed_form(pair.alpha, pair.beta)) {
        throw ClosedFormError("closed form unavailable for " + pair.label());
    }
    const auto& rec = reference::find_record(reference::formulas, pair.alpha, pair.beta);
    ConvolutionFormula f;
    f.pair = pair;
    const auto divs = divisors(pair.level());
    for (std::size_t k = 0; k < divs.size(); ++k) {
        f.sigma3_terms[divs[k]] = parse_rational(rec.sigma3[k]);
    }
    for (const auto& s : rec.sigma1) {
        f.sigma1_terms.push_back({s.delta, parse_rational(s.c0), parse_rational(s.c1)});
    }
    for (std::size_t j = 0; j < rec.cusp_count; ++j) {
        f.cusp_terms.push_back(parse_rational(rec.cusp[j]));
    }
    return f;
}

/// Solves the basis expansion of (alpha L(q^alpha) - beta L(q^beta))^2 for W:
/// W = [sum 240 X_d sigma_3(n/d) + sum Y_j c_j(n) - 240 a^2 sigma_3(n/a) - 240 b^2 sigma_3(n/b)
///      - 48 a (b - 6n) sigma(n/a) - 48 b (a - 6n) sigma(n/b)] / (-1152 a b).
inline ConvolutionFormula formula_from_solution(const CoefficientSolution& sol)
{
    const std::int64_t a = sol.pair.alpha;
    const std::int64_t b = sol.pair.beta;
    const Rational denom = Rational(-1152 * a * b);

    ConvolutionFormula f;
    f.pair = sol.pair;
    for (const auto& [d, x] : sol.X) {
        Rational c = 240 * x;
        if (d == a) {
            c -= 240 * a * a;
        }
        if (d == b) {
            c -= 240 * b * b;
        }
        f.sigma3_terms[d] = c / denom;
    }
    f.sigma1_terms.push_back({a, Rational(-48 * a * b) / denom, Rational(288 * a) / denom});
    f.sigma1_terms.push_back({b, Rational(-48 * a * b) / denom, Rational(288 * b) / denom});
    for (const Rational& y : sol.Y) {
        f.cusp_terms.push_back(y / denom);
    }
    return f;
}

/// Exact value of the formula at n >= 1; the cusp coefficients come from `basis`.
inline Rational evaluate(const ConvolutionFormula& f, std::int64_t n, const SpaceBasis& basis)
{
    if (n < 1) {
        throw std::invalid_argument("closed forms are stated for n >= 1");
    }
    if (static_cast<std::size_t>(n) > basis.precision) {
        throw std::out_of_range("n = " + std::to_string(n) + " exceeds cusp-form precision "
                                + std::to_string(basis.precision));
    }
    if (basis.level != f.pair.level() || basis.cusp_part.size() != f.cusp_terms.size()) {
        throw std::invalid_argument("basis does not match formula " + f.pair.label());
    }
    Rational acc = 0;
    for (const auto& [d, c] : f.sigma3_terms) {
        acc += c * sigma_k_frac(3, n, d);
    }
    for (const auto& t : f.sigma1_terms) {
        acc += (t.c0 + t.c1 * n) * sigma_k_frac(1, n, t.delta);
    }
    const auto idx = static_cast<std::size_t>(n);
    for (std::size_t j = 0; j < f.cusp_terms.size(); ++j) {
        acc += f.cusp_terms[j] * basis.cusp_part[j][idx];
    }
    return acc;
}

/// Closed-form W(n). Throws ClosedFormError when the value is not a non-negative integer.
inline Integer w_closed(const ConvolutionFormula& f, std::int64_t n, const SpaceBasis& basis)
{
    const Rational v = evaluate(f, n, basis);
    if (!is_integral(v) || sgn(v) < 0) {
        throw ClosedFormError("closed form " + f.pair.label() + " at n = " + std::to_string(n)
                              + " gives " + to_string(v) + ", not a non-negative integer");
    }
    return v.get_num();
}

inline Integer w_closed(const EisensteinPair& pair, std::int64_t n, const SpaceBasis& basis)
{
    return w_closed(published_formula(pair), n, basis);
}

} // namespace convsum

#endif // CONVSUM_CONVOLUTION_HPP
