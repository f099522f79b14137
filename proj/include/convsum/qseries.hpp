#ifndef CONVSUM_QSERIES_HPP
#define CONVSUM_QSERIES_HPP

#include <algorithm>
#include <cstddef>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "number.hpp"

namespace convsum {

inline constexpr std::size_t default_precision = 1000;

class NotInvertibleError : public std::domain_error {
public:
    NotInvertibleError() : std::domain_error("series is not invertible: constant term is zero") {}
};

/// Truncated formal power series sum c(n) q^n, 0 <= n <= precision, with
/// exact rational coefficients. Values are immutable once built.
class QSeries {
public:
    explicit QSeries(std::size_t precision = default_precision) : coeffs_(precision + 1) {}

    /// Coefficients beyond `precision` are dropped; missing ones are zero.
    QSeries(std::vector<Rational> coeffs, std::size_t precision) : coeffs_(std::move(coeffs))
    {
        coeffs_.resize(precision + 1);
    }

    static QSeries constant(const Rational& c, std::size_t precision)
    {
        QSeries s(precision);
        s.coeffs_[0] = c;
        return s;
    }

    static QSeries one(std::size_t precision) { return constant(1, precision); }

    /// Builds the series whose n-th coefficient is gen(n).
    template <class Gen>
    static QSeries generate(std::size_t precision, Gen&& gen)
    {
        std::vector<Rational> c(precision + 1);
        for (std::size_t n = 0; n <= precision; ++n) {
            c[n] = gen(n);
        }
        return QSeries(std::move(c), precision);
    }

    std::size_t precision() const noexcept { return coeffs_.size() - 1; }

    /// Coefficient of q^n; throws std::out_of_range beyond the precision.
    const Rational& operator[](std::size_t n) const
    {
        if (n >= coeffs_.size()) {
            throw std::out_of_range("coefficient index " + std::to_string(n) + " beyond precision "
                                    + std::to_string(precision()));
        }
        return coeffs_[n];
    }

    std::span<const Rational> coefficients() const noexcept { return coeffs_; }

    bool is_zero() const
    {
        return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return sgn(c) == 0; });
    }

    /// Index of the first nonzero coefficient, or precision()+1 for the zero series.
    std::size_t order() const
    {
        std::size_t n = 0;
        while (n < coeffs_.size() && sgn(coeffs_[n]) == 0) {
            ++n;
        }
        return n;
    }

    QSeries truncated(std::size_t precision) const
    {
        if (precision > this->precision()) {
            throw std::invalid_argument("cannot raise precision of a truncated series");
        }
        return QSeries(std::vector<Rational>(coeffs_.begin(), coeffs_.begin() + precision + 1), precision);
    }

    /// Multiplies by q^k, dropping terms pushed beyond the precision.
    QSeries shifted(std::size_t k) const
    {
        QSeries r(precision());
        for (std::size_t n = 0; n + k <= precision(); ++n) {
            r.coeffs_[n + k] = coeffs_[n];
        }
        return r;
    }

    friend bool operator==(const QSeries& a, const QSeries& b) { return a.coeffs_ == b.coeffs_; }

    friend QSeries add(const QSeries& a, const QSeries& b);
    friend QSeries sub(const QSeries& a, const QSeries& b);
    friend QSeries scale(const QSeries& s, const Rational& c);
    friend QSeries mul(const QSeries& a, const QSeries& b);
    friend QSeries divide(const QSeries& a, const QSeries& b);
    friend QSeries dilate(const QSeries& s, std::size_t t);

private:
    std::vector<Rational> coeffs_;

    std::vector<std::size_t> support() const
    {
        std::vector<std::size_t> idx;
        for (std::size_t n = 0; n < coeffs_.size(); ++n) {
            if (sgn(coeffs_[n]) != 0) {
                idx.push_back(n);
            }
        }
        return idx;
    }
};

inline QSeries add(const QSeries& a, const QSeries& b)
{
    const std::size_t p = std::min(a.precision(), b.precision());
    QSeries r(p);
    for (std::size_t n = 0; n <= p; ++n) {
        r.coeffs_[n] = a.coeffs_[n] + b.coeffs_[n];
    }
    return r;
}

inline QSeries sub(const QSeries& a, const QSeries& b)
{
    const std::size_t p = std::min(a.precision(), b.precision());
    QSeries r(p);
    for (std::size_t n = 0; n <= p; ++n) {
        r.coeffs_[n] = a.coeffs_[n] - b.coeffs_[n];
    }
    return r;
}

inline QSeries scale(const QSeries& s, const Rational& c)
{
    QSeries r(s.precision());
    if (sgn(c) == 0) {
        return r;
    }
    for (std::size_t n = 0; n <= s.precision(); ++n) {
        r.coeffs_[n] = s.coeffs_[n] * c;
    }
    return r;
}

/// Cauchy product truncated at the smaller precision. Zero coefficients of
/// the sparser operand are skipped, so products with eta factors are cheap.
inline QSeries mul(const QSeries& a, const QSeries& b)
{
    const std::size_t p = std::min(a.precision(), b.precision());
    auto sa = a.support();
    auto sb = b.support();
    const bool swap = sb.size() < sa.size();
    const QSeries& sparse = swap ? b : a;
    const QSeries& dense = swap ? a : b;
    const auto& idx = swap ? sb : sa;

    QSeries r(p);
    Rational term;
    for (std::size_t i : idx) {
        if (i > p) {
            break;
        }
        const Rational& ci = sparse.coeffs_[i];
        for (std::size_t j = 0; i + j <= p; ++j) {
            if (sgn(dense.coeffs_[j]) == 0) {
                continue;
            }
            term = ci * dense.coeffs_[j];
            r.coeffs_[i + j] += term;
        }
    }
    return r;
}

/// a / b by the recurrence u(n) = (a(n) - sum_{k>=1} b(k) u(n-k)) / b(0).
/// Costs O(P * nnz(b)).
inline QSeries divide(const QSeries& a, const QSeries& b)
{
    if (sgn(b.coeffs_[0]) == 0) {
        throw NotInvertibleError();
    }
    const std::size_t p = std::min(a.precision(), b.precision());
    auto idx = b.support();
    const Rational inv0 = 1 / b.coeffs_[0];
    QSeries r(p);
    Rational acc, term;
    for (std::size_t n = 0; n <= p; ++n) {
        acc = a.coeffs_[n];
        for (std::size_t k : idx) {
            if (k == 0) {
                continue;
            }
            if (k > n) {
                break;
            }
            term = b.coeffs_[k] * r.coeffs_[n - k];
            acc -= term;
        }
        r.coeffs_[n] = acc * inv0;
    }
    return r;
}

/// Multiplicative inverse; throws NotInvertibleError on a zero constant term.
inline QSeries invert(const QSeries& s) { return divide(QSeries::one(s.precision()), s); }

/// Substitutes q -> q^t; the precision is preserved.
inline QSeries dilate(const QSeries& s, std::size_t t)
{
    if (t == 0) {
        throw std::invalid_argument("dilate: factor must be positive");
    }
    QSeries r(s.precision());
    for (std::size_t n = 0; n * t <= s.precision(); ++n) {
        r.coeffs_[n * t] = s.coeffs_[n];
    }
    return r;
}

/// Binary exponentiation; negative exponents go through invert().
inline QSeries pow(const QSeries& s, long e)
{
    QSeries base = e < 0 ? invert(s) : s;
    unsigned long k = e < 0 ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
    QSeries result = QSeries::one(s.precision());
    while (k > 0) {
        if (k & 1UL) {
            result = mul(result, base);
        }
        k >>= 1;
        if (k > 0) {
            base = mul(base, base);
        }
    }
    return result;
}

inline QSeries operator+(const QSeries& a, const QSeries& b) { return add(a, b); }
inline QSeries operator-(const QSeries& a, const QSeries& b) { return sub(a, b); }
inline QSeries operator*(const QSeries& a, const QSeries& b) { return mul(a, b); }
inline QSeries operator*(const Rational& c, const QSeries& s) { return scale(s, c); }

} // namespace convsum

#endif // CONVSUM_QSERIES_HPP
