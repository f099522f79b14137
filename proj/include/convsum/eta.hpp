#ifndef CONVSUM_ETA_HPP
#define CONVSUM_ETA_HPP

#include <array>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "arith.hpp"
#include "qseries.hpp"

namespace convsum {

/// prod_{delta | N} eta(delta z)^{r_delta}. Unlisted divisors carry r = 0.
struct EtaQuotient {
    std::int64_t level = 1;
    std::map<std::int64_t, int> exponents;

    EtaQuotient() = default;

    EtaQuotient(std::int64_t level_, std::map<std::int64_t, int> exponents_)
        : level(level_), exponents(std::move(exponents_))
    {
        if (level < 1) {
            throw std::invalid_argument("eta quotient level must be positive");
        }
        for (auto [delta, r] : exponents) {
            if (delta < 1 || level % delta != 0) {
                throw std::invalid_argument("eta exponent key " + std::to_string(delta)
                                            + " does not divide level " + std::to_string(level));
            }
        }
    }

    int exponent(std::int64_t delta) const
    {
        auto it = exponents.find(delta);
        return it == exponents.end() ? 0 : it->second;
    }

    /// Exponents listed over all divisors of the level, ascending.
    std::vector<int> exponent_row() const
    {
        std::vector<int> row;
        for (std::int64_t d : divisors(level)) {
            row.push_back(exponent(d));
        }
        return row;
    }

    /// (1/24) sum delta r_delta: the order of vanishing at infinity.
    Rational leading_exponent() const
    {
        std::int64_t s = 0;
        for (auto [delta, r] : exponents) {
            s += delta * r;
        }
        return ratio(s, 24);
    }

    Rational weight() const
    {
        std::int64_t s = 0;
        for (auto [delta, r] : exponents) {
            s += r;
        }
        return ratio(s, 2);
    }

    friend bool operator==(const EtaQuotient& a, const EtaQuotient& b)
    {
        return a.level == b.level && a.exponent_row() == b.exponent_row();
    }
};

struct LigozatReport {
    bool cond_i = false;       // sum delta r_delta == 0 mod 24
    bool cond_ii = false;      // sum (N/delta) r_delta == 0 mod 24
    bool cond_iii = false;     // prod delta^{r_delta} is a rational square
    bool cond_iv = false;      // weight is an even integer
    bool cond_v = false;       // every cusp order >= 0
    bool cond_v_prime = false; // every cusp order > 0
    Rational weight;
    Rational leading_exponent;
    /// (d, sum gcd(delta, d)^2 / delta * r_delta) for every d | N.
    std::vector<std::pair<std::int64_t, Rational>> cusp_orders;

    bool holomorphic() const { return cond_i && cond_ii && cond_iii && cond_iv && cond_v; }
    bool cuspidal() const { return holomorphic() && cond_v_prime; }
};

/// F(q^delta) = prod_{n>=1} (1 - q^{delta n}) via Euler's pentagonal number theorem.
inline QSeries euler_product(std::int64_t delta, std::size_t precision)
{
    if (delta < 1) {
        throw std::invalid_argument("euler_product: delta must be positive");
    }
    std::vector<Rational> c(precision + 1);
    const auto p = static_cast<std::int64_t>(precision);
    for (std::int64_t k = 0;; ++k) {
        const std::int64_t e1 = delta * (k * (3 * k - 1) / 2);
        if (e1 > p) {
            break;
        }
        const int sign = (k % 2 == 0) ? 1 : -1;
        c[static_cast<std::size_t>(e1)] += sign;
        if (k > 0) {
            const std::int64_t e2 = delta * (k * (3 * k + 1) / 2);
            if (e2 <= p) {
                c[static_cast<std::size_t>(e2)] += sign;
            }
        }
    }
    return QSeries(std::move(c), precision);
}

/// q^e prod F(q^delta)^{r_delta}, e = leading_exponent(). Requires e to be a
/// non-negative integer.
inline QSeries expand(const EtaQuotient& eq, std::size_t precision)
{
    const Rational e = eq.leading_exponent();
    if (!is_integral(e)) {
        throw std::domain_error("eta quotient has non-integral leading exponent " + to_string(e));
    }
    if (sgn(e) < 0) {
        throw std::domain_error("eta quotient has negative leading exponent " + to_string(e));
    }
    const auto shift = static_cast<std::size_t>(e.get_num().get_ui());
    if (shift > precision) {
        return QSeries(precision);
    }
    const std::size_t inner = precision - shift;
    QSeries product = QSeries::one(inner);
    for (auto [delta, r] : eq.exponents) {
        if (r == 0) {
            continue;
        }
        const QSeries factor = euler_product(delta, inner);
        for (int i = 0; i < (r > 0 ? r : -r); ++i) {
            product = r > 0 ? mul(product, factor) : divide(product, factor);
        }
    }
    std::vector<Rational> c(precision + 1);
    for (std::size_t n = 0; n <= inner; ++n) {
        c[n + shift] = product[n];
    }
    return QSeries(std::move(c), precision);
}

/// Newman-Ligozat conditions (i)-(v').
inline LigozatReport check_ligozat(const EtaQuotient& eq)
{
    LigozatReport rep;
    const std::int64_t n = eq.level;

    std::int64_t s1 = 0, s2 = 0, sr = 0;
    std::map<std::int64_t, std::int64_t> prime_exponents;
    for (auto [delta, r] : eq.exponents) {
        s1 += delta * r;
        s2 += (n / delta) * r;
        sr += r;
        for (auto [p, e] : factorize(delta)) {
            prime_exponents[p] += static_cast<std::int64_t>(e) * r;
        }
    }
    rep.cond_i = s1 % 24 == 0;
    rep.cond_ii = s2 % 24 == 0;
    rep.cond_iii = true;
    for (auto [p, e] : prime_exponents) {
        if (e % 2 != 0) {
            rep.cond_iii = false;
        }
    }
    rep.weight = ratio(sr, 2);
    rep.weight.canonicalize();
    rep.cond_iv = sr % 2 == 0 && (sr / 2) % 2 == 0;
    rep.leading_exponent = ratio(s1, 24);
    rep.leading_exponent.canonicalize();

    rep.cond_v = true;
    rep.cond_v_prime = true;
    for (std::int64_t d : divisors(n)) {
        Rational order = 0;
        for (auto [delta, r] : eq.exponents) {
            const std::int64_t g = std::gcd(delta, d);
            order += ratio(g * g * r, delta);
        }
        order.canonicalize();
        if (sgn(order) < 0) {
            rep.cond_v = false;
        }
        if (sgn(order) <= 0) {
            rep.cond_v_prime = false;
        }
        rep.cusp_orders.emplace_back(d, order);
    }
    return rep;
}

namespace detail {

inline constexpr std::array<std::int64_t, 6> divisors_44 = {1, 2, 4, 11, 22, 44};
inline constexpr std::array<std::int64_t, 6> divisors_52 = {1, 2, 4, 13, 26, 52};

// Exponents r_delta over divisors_44, rows A_1 .. A_15.
inline constexpr std::array<std::array<int, 6>, 15> table_44 = {{
    {6, -2, 0, 6, -2, 0},
    {4, 0, 0, 4, 0, 0},
    {2, 2, 0, 2, 2, 0},
    {0, 4, 0, 0, 4, 0},
    {-2, 6, 0, -2, 6, 0},
    {0, 2, 2, 0, 2, 2},
    {0, -3, 5, 0, 5, 1},
    {0, 0, 4, 0, 0, 4},
    {3, 0, 1, -1, 0, 5},
    {0, -2, 6, 0, -2, 6},
    {1, -3, 4, -3, 5, 4},
    {2, 0, 0, 2, -4, 8},
    {0, 2, 0, 0, -2, 8},
    {-3, 9, 0, 1, 1, 0},
    {0, 0, 2, 0, -4, 10},
}};

// Exponents r_delta over divisors_52, rows B_1 .. B_18.
inline constexpr std::array<std::array<int, 6>, 18> table_52 = {{
    {1, 5, 0, 3, -1, 0},
    {3, 3, 0, 1, 1, 0},
    {1, 3, 0, 3, 1, 0},
    {3, 1, 0, 1, 3, 0},
    {1, 1, 0, 3, 3, 0},
    {3, -1, 0, 1, 5, 0},
    {1, -1, 0, 3, 5, 0},
    {0, 3, 1, 0, 1, 3},
    {2, 1, 1, -2, 3, 3},
    {0, 1, 1, 0, 3, 3},
    {2, -1, 1, -2, 5, 3},
    {0, 3, -1, 0, 1, 5},
    {2, 1, -1, -2, 3, 5},
    {0, 1, -1, 0, 3, 5},
    {-1, 5, 0, 5, -1, 0},
    {0, -1, 5, 0, 5, -1},
    {7, -3, 0, -3, 7, 0},
    {0, 7, -3, 0, -3, 7},
}};

template <std::size_t Rows>
std::vector<EtaQuotient> make_rows(std::int64_t level, const std::array<std::int64_t, 6>& divs,
                                   const std::array<std::array<int, 6>, Rows>& table)
{
    std::vector<EtaQuotient> out;
    out.reserve(Rows);
    for (const auto& row : table) {
        std::map<std::int64_t, int> ex;
        for (std::size_t i = 0; i < divs.size(); ++i) {
            if (row[i] != 0) {
                ex[divs[i]] = row[i];
            }
        }
        out.emplace_back(level, std::move(ex));
    }
    return out;
}

} // namespace detail

inline bool is_supported_level(std::int64_t level) { return level == 44 || level == 52; }

/// Cusp-form basis rows for S_4(Gamma0(44)) (A_1..A_15) or S_4(Gamma0(52)) (B_1..B_18), in table order.
inline std::vector<EtaQuotient> table_rows(std::int64_t level)
{
    if (level == 44) {
        return detail::make_rows(44, detail::divisors_44, detail::table_44);
    }
    if (level == 52) {
        return detail::make_rows(52, detail::divisors_52, detail::table_52);
    }
    throw std::invalid_argument("no eta-quotient table for level " + std::to_string(level) + " (expected 44 or 52)");
}

} // namespace convsum

#endif // CONVSUM_ETA_HPP
