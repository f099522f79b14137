#ifndef CONVSUM_REPRESENTATIONS_HPP
#define CONVSUM_REPRESENTATIONS_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

#include "arith.hpp"
#include "convolution.hpp"

namespace convsum {

inline constexpr std::int64_t default_enumeration_bound = 500;

/// Number of representations of n by a (x1^2+..+x4^2) + b (x5^2+..+x8^2).
struct RepQuery {
    std::int64_t a = 1;
    std::int64_t b = 1;
    std::int64_t n = 0;
};

inline bool has_rep_closed_form(std::int64_t a, std::int64_t b) { return a == 1 && (b == 11 || b == 13); }

/// r_4(n) = 8 sigma(n) - 32 sigma(n/4) for n >= 1, r_4(0) = 1.
inline Integer r4_jacobi(std::int64_t n)
{
    if (n < 0) {
        throw std::invalid_argument("r4_jacobi: n must be non-negative");
    }
    if (n == 0) {
        return 1;
    }
    return 8 * sigma(n) - 32 * sigma_k_frac(1, n, 4);
}

/// Direct lattice count of x in Z^4 with |x|^2 = n.
inline Integer r4_enumerate(std::int64_t n, std::int64_t bound = default_enumeration_bound)
{
    if (n < 0) {
        throw std::invalid_argument("r4_enumerate: n must be non-negative");
    }
    if (n > bound) {
        throw std::out_of_range("r4_enumerate: n = " + std::to_string(n) + " exceeds enumeration bound "
                                + std::to_string(bound) + "; use r4_jacobi");
    }
    std::int64_t s = 0;
    while ((s + 1) * (s + 1) <= n) {
        ++s;
    }
    std::int64_t count = 0;
    for (std::int64_t x1 = -s; x1 <= s; ++x1) {
        for (std::int64_t x2 = -s; x2 <= s; ++x2) {
            for (std::int64_t x3 = -s; x3 <= s; ++x3) {
                const std::int64_t rest = n - x1 * x1 - x2 * x2 - x3 * x3;
                if (rest < 0) {
                    continue;
                }
                std::int64_t r = 0;
                while ((r + 1) * (r + 1) <= rest) {
                    ++r;
                }
                if (r * r == rest) {
                    count += r == 0 ? 1 : 2;
                }
            }
        }
    }
    return count;
}

/// W_(alpha,beta)(n) through the brute-force definition; zero for n <= 0.
struct OracleW {
    Integer operator()(std::int64_t alpha, std::int64_t beta, std::int64_t n) const
    {
        return n <= 0 ? Integer(0) : w_oracle(alpha, beta, n);
    }
};

/// N_(1,b)(n) for b in {11, 13} from r_4 and convolution sums:
///   8 sigma(n) - 32 sigma(n/4) + 8 sigma(n/b) - 32 sigma(n/4b)
///   + 64 W_(1,b)(n) + 1024 W_(1,b)(n/4) - 256 (W_(4,b)(n) + W_(1,4b)(n)).
/// `w(alpha, beta, m)` supplies the convolution sums.
template <class WFn = OracleW>
Integer rep_count_closed(const RepQuery& q, WFn&& w = WFn{})
{
    if (!has_rep_closed_form(q.a, q.b)) {
        throw std::invalid_argument("closed form for N_(a,b) only for (1,11) and (1,13), got ("
                                    + std::to_string(q.a) + "," + std::to_string(q.b) + ")");
    }
    if (q.n < 0) {
        throw std::invalid_argument("rep_count_closed: n must be non-negative");
    }
    if (q.n == 0) {
        return 1;
    }
    const std::int64_t n = q.n;
    const std::int64_t b = q.b;
    Integer total = 8 * sigma(n) - 32 * sigma_k_frac(1, n, 4) + 8 * sigma_k_frac(1, n, b)
                    - 32 * sigma_k_frac(1, n, 4 * b);
    total += 64 * Integer(w(1, b, n));
    if (n % 4 == 0) {
        total += 1024 * Integer(w(1, b, n / 4));
    }
    total -= 256 * (Integer(w(4, b, n)) + Integer(w(1, 4 * b, n)));
    return total;
}

/// sum over a l + b m = n of r_4(l) r_4(m), with r_4 by lattice enumeration.
inline Integer rep_count_enumerate(const RepQuery& q, std::int64_t bound = default_enumeration_bound)
{
    if (q.a < 1 || q.b < 1 || q.n < 0) {
        throw std::invalid_argument("rep_count_enumerate: need a, b >= 1 and n >= 0");
    }
    if (q.n > bound) {
        throw std::out_of_range("rep_count_enumerate: n = " + std::to_string(q.n) + " exceeds bound "
                                + std::to_string(bound));
    }
    Integer total = 0;
    for (std::int64_t l = 0; q.a * l <= q.n; ++l) {
        const std::int64_t rest = q.n - q.a * l;
        if (rest % q.b == 0) {
            total += r4_enumerate(l, bound) * r4_enumerate(rest / q.b, bound);
        }
    }
    return total;
}

/// Rewrites used to turn sum r_4(l) r_4(m) into convolution sums, checked at one n:
///   sum sigma(l) sigma(m)     = W_(1,b)(n)
///   sum sigma(l/4) sigma(m)   = W_(4,b)(n)
///   sum sigma(l) sigma(m/4)   = W_(1,4b)(n)
///   sum sigma(l/4) sigma(m/4) = W_(1,b)(n/4)
/// with every sum over l, m >= 1, l + b m = n.
inline bool substitution_identities_hold(std::int64_t b, std::int64_t n)
{
    Integer s11 = 0, s41 = 0, s14 = 0, s44 = 0;
    for (std::int64_t m = 1; b * m < n; ++m) {
        const std::int64_t l = n - b * m;
        s11 += sigma(l) * sigma(m);
        s41 += sigma_k_frac(1, l, 4) * sigma(m);
        s14 += sigma(l) * sigma_k_frac(1, m, 4);
        s44 += sigma_k_frac(1, l, 4) * sigma_k_frac(1, m, 4);
    }
    const Integer quarter = n % 4 == 0 ? w_oracle(1, b, n / 4) : Integer(0);
    return s11 == w_oracle(1, b, n) && s41 == w_oracle(4, b, n) && s14 == w_oracle(1, 4 * b, n) && s44 == quarter;
}

} // namespace convsum

#endif // CONVSUM_REPRESENTATIONS_HPP
