#ifndef CONVSUM_ARITH_HPP
#define CONVSUM_ARITH_HPP

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "number.hpp"

namespace convsum {

/// Ascending positive divisors of n >= 1, by trial division up to sqrt(n).
inline std::vector<std::int64_t> divisors(std::int64_t n)
{
    if (n < 1) {
        throw std::invalid_argument("divisors: n must be positive, got " + std::to_string(n));
    }
    std::vector<std::int64_t> low, high;
    for (std::int64_t d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            low.push_back(d);
            if (d != n / d) {
                high.push_back(n / d);
            }
        }
    }
    low.insert(low.end(), high.rbegin(), high.rend());
    return low;
}

struct DivisorProfile {
    std::int64_t n;
    std::vector<std::int64_t> divisors;
};

inline DivisorProfile divisor_profile(std::int64_t n) { return {n, divisors(n)}; }

/// Prime factorisation as ascending (p, e) pairs.
inline std::vector<std::pair<std::int64_t, int>> factorize(std::int64_t n)
{
    if (n < 1) {
        throw std::invalid_argument("factorize: n must be positive");
    }
    std::vector<std::pair<std::int64_t, int>> out;
    for (std::int64_t p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            int e = 0;
            while (n % p == 0) {
                n /= p;
                ++e;
            }
            out.emplace_back(p, e);
        }
    }
    if (n > 1) {
        out.emplace_back(n, 1);
    }
    return out;
}

inline std::int64_t euler_phi(std::int64_t n)
{
    std::int64_t result = n;
    for (auto [p, e] : factorize(n)) {
        result = result / p * (p - 1);
    }
    return result;
}

/// Sum of k-th powers of the positive divisors of m; zero for m <= 0.
inline Integer sigma_k(unsigned k, std::int64_t m)
{
    Integer sum = 0;
    if (m <= 0) {
        return sum;
    }
    Integer term;
    for (std::int64_t d = 1; d * d <= m; ++d) {
        if (m % d != 0) {
            continue;
        }
        mpz_ui_pow_ui(term.get_mpz_t(), static_cast<unsigned long>(d), k);
        sum += term;
        const std::int64_t e = m / d;
        if (e != d) {
            mpz_ui_pow_ui(term.get_mpz_t(), static_cast<unsigned long>(e), k);
            sum += term;
        }
    }
    return sum;
}

inline Integer sigma(std::int64_t m) { return sigma_k(1, m); }

/// sigma_k(n / delta) when delta divides n, zero otherwise.
inline Integer sigma_k_frac(unsigned k, std::int64_t n, std::int64_t delta)
{
    if (delta <= 0) {
        throw std::invalid_argument("sigma_k_frac: delta must be positive");
    }
    if (n % delta != 0) {
        return 0;
    }
    return sigma_k(k, n / delta);
}

struct SpaceDimensions {
    std::int64_t modular = 0;    // dim M_k(Gamma0(N))
    std::int64_t eisenstein = 0; // dim E_k(Gamma0(N))
    std::int64_t cusp = 0;       // dim S_k(Gamma0(N))

    friend bool operator==(const SpaceDimensions&, const SpaceDimensions&) = default;
};

namespace detail {

inline std::int64_t as_integer(const Rational& v, const char* what)
{
    if (!is_integral(v)) {
        throw std::logic_error(std::string("dim_spaces: non-integral ") + what + " = " + to_string(v));
    }
    return v.get_num().get_si();
}

// Kronecker symbols (-4/p) and (-3/p) for a prime p.
inline int kronecker_minus4(std::int64_t p)
{
    if (p == 2) {
        return 0;
    }
    return p % 4 == 1 ? 1 : -1;
}

inline int kronecker_minus3(std::int64_t p)
{
    if (p == 3) {
        return 0;
    }
    return p % 3 == 1 ? 1 : -1;
}

} // namespace detail

/// Dimensions of M_k, E_k and S_k for Gamma0(N), trivial character, even k >= 4.
inline SpaceDimensions dim_spaces(std::int64_t level, int weight)
{
    if (level < 1) {
        throw std::invalid_argument("dim_spaces: level must be positive");
    }
    if (weight < 4 || weight % 2 != 0) {
        throw std::invalid_argument("dim_spaces: weight must be even and >= 4, got " + std::to_string(weight));
    }
    const auto primes = factorize(level);

    Rational index = level;
    for (auto [p, e] : primes) {
        index *= ratio(p + 1, p);
    }

    std::int64_t nu2 = 0;
    if (level % 4 != 0) {
        nu2 = 1;
        for (auto [p, e] : primes) {
            nu2 *= 1 + detail::kronecker_minus4(p);
        }
    }
    std::int64_t nu3 = 0;
    if (level % 9 != 0) {
        nu3 = 1;
        for (auto [p, e] : primes) {
            nu3 *= 1 + detail::kronecker_minus3(p);
        }
    }
    std::int64_t cusps = 0;
    for (std::int64_t d : divisors(level)) {
        cusps += euler_phi(std::gcd(d, level / d));
    }

    const Rational genus = Rational(1) + index / 12 - ratio(nu2, 4) - ratio(nu3, 3) - ratio(cusps, 2);
    const std::int64_t g = detail::as_integer(genus, "genus");

    SpaceDimensions dims;
    dims.cusp = (weight - 1) * (g - 1) + (weight / 2 - 1) * cusps + (weight / 4) * nu2 + (weight / 3) * nu3;
    dims.eisenstein = cusps;
    dims.modular = dims.eisenstein + dims.cusp;
    return dims;
}

} // namespace convsum

#endif // CONVSUM_ARITH_HPP
