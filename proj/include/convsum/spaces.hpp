#ifndef CONVSUM_SPACES_HPP
#define CONVSUM_SPACES_HPP

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "arith.hpp"
#include "eisenstein.hpp"
#include "eta.hpp"
#include "linalg.hpp"
#include "qseries.hpp"
#include "reference_data.hpp"

namespace convsum {

/// Basis of M_4(Gamma0(N)) for N in {44, 52}: M(q^t) for t | N, then the
/// tabulated eta quotients.
struct SpaceBasis {
    std::int64_t level = 0;
    std::size_t precision = 0;
    std::vector<std::int64_t> eisenstein_divisors;
    std::vector<QSeries> eisenstein_part;
    std::vector<QSeries> cusp_part;

    std::size_t dimension() const { return eisenstein_part.size() + cusp_part.size(); }

    /// Coefficient of q^n in the k-th basis element (Eisenstein first).
    const Rational& coefficient(std::size_t k, std::size_t n) const
    {
        return k < eisenstein_part.size() ? eisenstein_part[k][n] : cusp_part[k - eisenstein_part.size()][n];
    }
};

inline SpaceBasis build_basis(std::int64_t level, std::size_t precision)
{
    if (!is_supported_level(level)) {
        throw std::invalid_argument("build_basis: unsupported level " + std::to_string(level));
    }
    const SpaceDimensions dims = dim_spaces(level, 4);
    if (precision < static_cast<std::size_t>(dims.modular)) {
        throw std::invalid_argument("build_basis: precision " + std::to_string(precision) + " below dim M_4 = "
                                    + std::to_string(dims.modular));
    }
    SpaceBasis basis;
    basis.level = level;
    basis.precision = precision;
    basis.eisenstein_divisors = divisors(level);

    const QSeries m = series_M(precision);
    for (std::int64_t t : basis.eisenstein_divisors) {
        basis.eisenstein_part.push_back(dilate(m, static_cast<std::size_t>(t)));
    }
    for (const EtaQuotient& eq : table_rows(level)) {
        basis.cusp_part.push_back(expand(eq, precision));
    }

    if (basis.eisenstein_part.size() != static_cast<std::size_t>(dims.eisenstein)
        || basis.cusp_part.size() != static_cast<std::size_t>(dims.cusp)) {
        throw std::logic_error("build_basis: basis sizes disagree with the dimension formula");
    }
    for (const QSeries& c : basis.cusp_part) {
        if (sgn(c[0]) != 0) {
            throw std::logic_error("build_basis: cusp form with nonzero constant term");
        }
    }
    return basis;
}

struct IndependenceCertificate {
    /// det [c_j(n)], 1 <= n, j <= dim S.
    Rational cusp_determinant;
    /// [sigma_3(t/u)] with rows t and columns u over the ascending divisors.
    std::vector<std::vector<Integer>> eisenstein_matrix;
    bool eisenstein_unit_lower_triangular = false;
};

/// Throws std::runtime_error when either system is singular.
inline IndependenceCertificate verify_independence(const SpaceBasis& basis)
{
    const std::size_t dim_s = basis.cusp_part.size();
    if (basis.precision < dim_s) {
        throw std::invalid_argument("verify_independence: precision below dim S");
    }
    IndependenceCertificate cert;

    RationalMatrix cusp(dim_s, dim_s);
    for (std::size_t n = 1; n <= dim_s; ++n) {
        for (std::size_t j = 0; j < dim_s; ++j) {
            cusp(n - 1, j) = basis.cusp_part[j][n];
        }
    }
    cert.cusp_determinant = determinant(cusp);
    if (sgn(cert.cusp_determinant) == 0) {
        throw std::runtime_error("cusp basis of level " + std::to_string(basis.level)
                                 + " is linearly dependent on q^1..q^" + std::to_string(dim_s));
    }

    const auto& divs = basis.eisenstein_divisors;
    bool triangular = true;
    for (std::size_t r = 0; r < divs.size(); ++r) {
        std::vector<Integer> row;
        for (std::size_t c = 0; c < divs.size(); ++c) {
            Integer v = sigma_k_frac(3, divs[r], divs[c]);
            if ((c > r && v != 0) || (c == r && v != 1)) {
                triangular = false;
            }
            row.push_back(std::move(v));
        }
        cert.eisenstein_matrix.push_back(std::move(row));
    }
    cert.eisenstein_unit_lower_triangular = triangular;
    if (!triangular) {
        throw std::runtime_error("Eisenstein system is not unit lower triangular");
    }
    return cert;
}

/// Weights expressing (alpha L(q^alpha) - beta L(q^beta))^2 in a SpaceBasis:
/// sum X_delta M(q^delta) + sum Y_j c_j.
struct CoefficientSolution {
    std::int64_t level = 0;
    EisensteinPair pair;
    std::map<std::int64_t, Rational> X;
    std::vector<Rational> Y;
    /// Coefficient indices n used to pin down the unknowns, in the order added.
    std::vector<std::size_t> solving_indices;
    std::size_t precision = 0;

    Rational constant_term() const
    {
        Rational s = 0;
        for (const auto& [d, x] : X) {
            s += x;
        }
        return s;
    }

    /// Coefficient of sigma_3(n/delta) in the expansion, i.e. 240 X_delta.
    Rational sigma3_coefficient(std::int64_t delta) const { return 240 * X.at(delta); }
};

/// Solves for the basis weights of lhs_square(pair) exactly. Rows n = 0, 1, 2, ...
/// are added greedily while they raise the rank; the solution is then checked
/// against every coefficient up to the basis precision.
inline CoefficientSolution derive_coefficients(const EisensteinPair& pair, const SpaceBasis& basis)
{
    if (pair.level() != basis.level) {
        throw std::invalid_argument("derive_coefficients: pair " + pair.label() + " does not match level "
                                    + std::to_string(basis.level));
    }
    const std::size_t dim = basis.dimension();
    const std::size_t precision = basis.precision;
    if (precision < 2 * dim) {
        throw std::invalid_argument("derive_coefficients: precision must be at least 2 dim M_4 = "
                                    + std::to_string(2 * dim));
    }
    const QSeries target = lhs_square(pair, precision);

    // Incremental rank test against the rows selected so far.
    std::vector<std::vector<Rational>> reduced;
    std::vector<std::size_t> pivots;
    RationalMatrix system;
    std::vector<Rational> rhs;
    std::vector<std::size_t> used;
    Rational factor;
    for (std::size_t n = 0; n <= precision && used.size() < dim; ++n) {
        std::vector<Rational> row(dim);
        for (std::size_t k = 0; k < dim; ++k) {
            row[k] = basis.coefficient(k, n);
        }
        std::vector<Rational> work = row;
        for (std::size_t i = 0; i < reduced.size(); ++i) {
            if (sgn(work[pivots[i]]) == 0) {
                continue;
            }
            factor = work[pivots[i]] / reduced[i][pivots[i]];
            for (std::size_t k = 0; k < dim; ++k) {
                work[k] -= factor * reduced[i][k];
            }
        }
        std::size_t p = 0;
        while (p < dim && sgn(work[p]) == 0) {
            ++p;
        }
        if (p == dim) {
            continue;
        }
        reduced.push_back(std::move(work));
        pivots.push_back(p);
        system.append_row(row);
        rhs.push_back(target[n]);
        used.push_back(n);
    }
    if (used.size() < dim) {
        std::string idx;
        for (std::size_t n : used) {
            idx += (idx.empty() ? "" : ",") + std::to_string(n);
        }
        throw SingularSystemError("derive_coefficients " + pair.label() + ": rank " + std::to_string(used.size())
                                  + " < " + std::to_string(dim) + " using indices {" + idx + "}");
    }

    const std::vector<Rational> x = solve(system, rhs);

    CoefficientSolution sol;
    sol.level = basis.level;
    sol.pair = pair;
    sol.precision = precision;
    sol.solving_indices = used;
    for (std::size_t k = 0; k < basis.eisenstein_part.size(); ++k) {
        sol.X[basis.eisenstein_divisors[k]] = x[k];
    }
    sol.Y.assign(x.begin() + static_cast<std::ptrdiff_t>(basis.eisenstein_part.size()), x.end());

    Rational acc;
    for (std::size_t n = 0; n <= precision; ++n) {
        acc = 0;
        for (std::size_t k = 0; k < dim; ++k) {
            acc += x[k] * basis.coefficient(k, n);
        }
        if (acc != target[n]) {
            throw std::logic_error("derive_coefficients " + pair.label() + ": reconstruction differs at q^"
                                   + std::to_string(n));
        }
    }
    return sol;
}

/// The published expansion for one of (1,44), (4,11), (1,52), (4,13), in the
/// same shape as CoefficientSolution.
inline CoefficientSolution published_expansion(const EisensteinPair& pair)
{
    const auto& rec = reference::find_record(reference::expansions, pair.alpha, pair.beta);
    CoefficientSolution sol;
    sol.level = pair.level();
    sol.pair = pair;
    const auto divs = divisors(pair.level());
    for (std::size_t k = 0; k < divs.size(); ++k) {
        sol.X[divs[k]] = parse_rational(rec.sigma3[k]) / 240;
    }
    for (std::size_t j = 0; j < rec.cusp_count; ++j) {
        sol.Y.push_back(parse_rational(rec.cusp[j]));
    }
    return sol;
}

inline const std::vector<EisensteinPair>& covered_pairs()
{
    static const std::vector<EisensteinPair> pairs = {{1, 44}, {4, 11}, {1, 52}, {4, 13}};
    return pairs;
}

} // namespace convsum

#endif // CONVSUM_SPACES_HPP
