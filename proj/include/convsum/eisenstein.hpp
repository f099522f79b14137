#ifndef CONVSUM_EISENSTEIN_HPP
#define CONVSUM_EISENSTEIN_HPP

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

#include "arith.hpp"
#include "qseries.hpp"

namespace convsum {

/// Coprime (alpha, beta) with alpha < beta.
struct EisensteinPair {
    std::int64_t alpha = 1;
    std::int64_t beta = 2;

    EisensteinPair() = default;

    EisensteinPair(std::int64_t a, std::int64_t b) : alpha(a), beta(b)
    {
        if (a < 1 || b < 1) {
            throw std::invalid_argument("pair entries must be positive");
        }
        if (a >= b) {
            throw std::invalid_argument("pair requires alpha < beta, got (" + std::to_string(a) + ","
                                        + std::to_string(b) + ")");
        }
        if (std::gcd(a, b) != 1) {
            throw std::invalid_argument("pair requires gcd(alpha, beta) = 1, got (" + std::to_string(a) + ","
                                        + std::to_string(b) + ")");
        }
    }

    std::int64_t level() const { return alpha * beta; }

    std::string label() const { return "(" + std::to_string(alpha) + "," + std::to_string(beta) + ")"; }

    friend bool operator==(const EisensteinPair&, const EisensteinPair&) = default;
};

/// L(q) = E_2(q) = 1 - 24 sum sigma(n) q^n.
inline QSeries series_L(std::size_t precision)
{
    return QSeries::generate(precision, [](std::size_t n) -> Rational {
        if (n == 0) {
            return 1;
        }
        return Rational(-24 * sigma(static_cast<std::int64_t>(n)));
    });
}

/// M(q) = E_4(q) = 1 + 240 sum sigma_3(n) q^n.
inline QSeries series_M(std::size_t precision)
{
    return QSeries::generate(precision, [](std::size_t n) -> Rational {
        if (n == 0) {
            return 1;
        }
        return Rational(240 * sigma_k(3, static_cast<std::int64_t>(n)));
    });
}

/// (alpha L(q^alpha) - beta L(q^beta))^2.
inline QSeries lhs_square(const EisensteinPair& pair, std::size_t precision)
{
    const QSeries l = series_L(precision);
    const QSeries diff = sub(scale(dilate(l, static_cast<std::size_t>(pair.alpha)), pair.alpha),
                             scale(dilate(l, static_cast<std::size_t>(pair.beta)), pair.beta));
    return mul(diff, diff);
}

/// Right-hand side of the (alpha L(q^alpha) - beta L(q^beta))^2 expansion with
/// W(n) supplied by the caller; `w(n)` must return W_(alpha,beta)(n) as an Integer.
template <class WFn>
QSeries rhs_theorem24(const EisensteinPair& pair, WFn&& w, std::size_t precision)
{
    const std::int64_t a = pair.alpha;
    const std::int64_t b = pair.beta;
    return QSeries::generate(precision, [&](std::size_t idx) -> Rational {
        if (idx == 0) {
            return Rational((a - b) * (a - b));
        }
        const auto n = static_cast<std::int64_t>(idx);
        Integer c = 240 * a * a * sigma_k_frac(3, n, a);
        c += 240 * b * b * sigma_k_frac(3, n, b);
        c += Integer(48 * a * (b - 6 * n)) * sigma_k_frac(1, n, a);
        c += Integer(48 * b * (a - 6 * n)) * sigma_k_frac(1, n, b);
        c -= Integer(1152 * a * b) * Integer(w(n));
        return Rational(c);
    });
}

} // namespace convsum

#endif // CONVSUM_EISENSTEIN_HPP
