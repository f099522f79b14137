#ifndef CONVSUM_NUMBER_HPP
#define CONVSUM_NUMBER_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace convsum {

// Arbitrary-precision integer and rational. mpq_class keeps every value in
// lowest terms with a positive denominator after each arithmetic operation.
using Integer = mpz_class;
using Rational = mpq_class;

/// num/den in lowest terms; den must be nonzero.
inline Rational ratio(std::int64_t num, std::int64_t den = 1)
{
    if (den == 0) {
        throw std::domain_error("ratio: zero denominator");
    }
    Rational r{Integer(static_cast<long>(num)), Integer(static_cast<long>(den))};
    r.canonicalize();
    return r;
}

// Parses "p/q" or "p" with decimal integers; throws std::invalid_argument.
inline Rational parse_rational(const std::string& text)
{
    Rational r;
    if (text.empty() || r.set_str(text, 10) != 0) {
        throw std::invalid_argument("malformed rational: '" + text + "'");
    }
    if (r.get_den() == 0) {
        throw std::invalid_argument("zero denominator: '" + text + "'");
    }
    r.canonicalize();
    return r;
}

inline Rational rational_from_parts(const std::string& num, const std::string& den)
{
    Integer n, d;
    if (n.set_str(num, 10) != 0 || d.set_str(den, 10) != 0) {
        throw std::invalid_argument("malformed rational parts: '" + num + "', '" + den + "'");
    }
    if (d == 0) {
        throw std::invalid_argument("zero denominator");
    }
    Rational r(n, d);
    r.canonicalize();
    return r;
}

inline std::string to_string(const Integer& v) { return v.get_str(10); }
inline std::string to_string(const Rational& v) { return v.get_str(10); }

inline bool is_integral(const Rational& v) { return v.get_den() == 1; }

inline Integer integer_part(const Rational& v)
{
    if (!is_integral(v)) {
        throw std::domain_error("value is not an integer: " + to_string(v));
    }
    return v.get_num();
}

} // namespace convsum

#endif // CONVSUM_NUMBER_HPP
