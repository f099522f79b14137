#ifndef CONVSUM_LINALG_HPP
#define CONVSUM_LINALG_HPP

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "number.hpp"

namespace convsum {

class SingularSystemError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Dense row-major matrix over Q.
class RationalMatrix {
public:
    RationalMatrix() = default;
    RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    void append_row(const std::vector<Rational>& row)
    {
        if (rows_ == 0 && cols_ == 0) {
            cols_ = row.size();
        }
        if (row.size() != cols_) {
            throw std::invalid_argument("append_row: width mismatch");
        }
        data_.insert(data_.end(), row.begin(), row.end());
        ++rows_;
    }

    std::vector<Rational> row(std::size_t i) const
    {
        return {data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_)};
    }

    void swap_rows(std::size_t a, std::size_t b)
    {
        if (a == b) {
            return;
        }
        for (std::size_t j = 0; j < cols_; ++j) {
            std::swap((*this)(a, j), (*this)(b, j));
        }
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

namespace detail {

// In-place row echelon form; returns (rank, sign of the row permutation).
inline std::pair<std::size_t, int> echelonize(RationalMatrix& m, std::vector<Rational>* rhs = nullptr)
{
    std::size_t rank = 0;
    int sign = 1;
    Rational factor, term;
    for (std::size_t col = 0; col < m.cols() && rank < m.rows(); ++col) {
        std::size_t pivot = rank;
        while (pivot < m.rows() && sgn(m(pivot, col)) == 0) {
            ++pivot;
        }
        if (pivot == m.rows()) {
            continue;
        }
        if (pivot != rank) {
            m.swap_rows(pivot, rank);
            if (rhs) {
                std::swap((*rhs)[pivot], (*rhs)[rank]);
            }
            sign = -sign;
        }
        for (std::size_t r = rank + 1; r < m.rows(); ++r) {
            if (sgn(m(r, col)) == 0) {
                continue;
            }
            factor = m(r, col) / m(rank, col);
            for (std::size_t j = col; j < m.cols(); ++j) {
                term = factor * m(rank, j);
                m(r, j) -= term;
            }
            if (rhs) {
                term = factor * (*rhs)[rank];
                (*rhs)[r] -= term;
            }
        }
        ++rank;
    }
    return {rank, sign};
}

} // namespace detail

inline std::size_t rank(RationalMatrix m) { return detail::echelonize(m).first; }

inline Rational determinant(RationalMatrix m)
{
    if (m.rows() != m.cols()) {
        throw std::invalid_argument("determinant of a non-square matrix");
    }
    auto [r, sign] = detail::echelonize(m);
    if (r < m.rows()) {
        return 0;
    }
    Rational det = sign;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        det *= m(i, i);
    }
    return det;
}

/// Solves the square system a x = b exactly; throws SingularSystemError.
inline std::vector<Rational> solve(RationalMatrix a, std::vector<Rational> b)
{
    if (a.rows() != a.cols() || b.size() != a.rows()) {
        throw std::invalid_argument("solve: expected a square system");
    }
    auto [r, sign] = detail::echelonize(a, &b);
    if (r < a.rows()) {
        throw SingularSystemError("linear system is singular (rank " + std::to_string(r) + " of "
                                  + std::to_string(a.rows()) + ")");
    }
    const std::size_t n = a.rows();
    std::vector<Rational> x(n);
    Rational acc;
    for (std::size_t i = n; i-- > 0;) {
        acc = b[i];
        for (std::size_t j = i + 1; j < n; ++j) {
            acc -= a(i, j) * x[j];
        }
        x[i] = acc / a(i, i);
    }
    return x;
}

} // namespace convsum

#endif // CONVSUM_LINALG_HPP
