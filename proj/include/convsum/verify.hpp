#ifndef CONVSUM_VERIFY_HPP
#define CONVSUM_VERIFY_HPP

// Verification suites behind `convsum verify`. Each returns a deterministic
// text report; no timings or other run-dependent data go into the lines.

#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

#include "convolution.hpp"
#include "eisenstein.hpp"
#include "eta.hpp"
#include "representations.hpp"
#include "spaces.hpp"

namespace convsum::verify {

struct SuiteReport {
    std::string name;
    bool passed = true;
    std::vector<std::string> lines;

    void check(bool ok, const std::string& line)
    {
        lines.push_back(std::string(ok ? "ok   " : "FAIL ") + line);
        passed = passed && ok;
    }
    void note(const std::string& line) { lines.push_back("     " + line); }
};

inline std::string join_row(const std::vector<int>& row)
{
    std::string s = "(";
    for (std::size_t i = 0; i < row.size(); ++i) {
        s += (i ? "," : "") + std::to_string(row[i]);
    }
    return s + ")";
}

inline SuiteReport ligozat(const std::vector<std::int64_t>& levels = {44, 52})
{
    SuiteReport rep{"ligozat", true, {}};
    for (std::int64_t level : levels) {
        const char prefix = level == 44 ? 'A' : 'B';
        const auto rows = table_rows(level);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            const LigozatReport r = check_ligozat(rows[i]);
            std::ostringstream line;
            line << level << ' ' << prefix << i + 1 << ' ' << join_row(rows[i].exponent_row()) << " i=" << r.cond_i
                 << " ii=" << r.cond_ii << " iii=" << r.cond_iii << " iv=" << r.cond_iv << " v=" << r.cond_v
                 << " v'=" << r.cond_v_prime << " weight=" << to_string(r.weight)
                 << " order_at_infinity=" << to_string(r.leading_exponent);
            if (!r.cond_v_prime) {
                line << " zero_order_at_d=";
                bool first = true;
                for (const auto& [d, o] : r.cusp_orders) {
                    if (sgn(o) <= 0) {
                        line << (first ? "" : ",") << d;
                        first = false;
                    }
                }
            }
            rep.check(r.cuspidal() && r.weight == 4, line.str());
        }
    }
    return rep;
}

inline SuiteReport dims()
{
    SuiteReport rep{"dims", true, {}};
    struct Expected {
        std::int64_t level;
        SpaceDimensions dims;
    };
    for (const Expected& e : {Expected{44, {21, 6, 15}}, Expected{52, {24, 6, 18}}, Expected{1, {1, 1, 0}}}) {
        const SpaceDimensions d = dim_spaces(e.level, 4);
        std::ostringstream line;
        line << "level " << e.level << " weight 4: dim M=" << d.modular << " dim E=" << d.eisenstein
             << " dim S=" << d.cusp;
        rep.check(d == e.dims, line.str());
    }
    return rep;
}

inline SuiteReport basis(std::size_t precision)
{
    SuiteReport rep{"basis", true, {}};
    for (std::int64_t level : {44, 52}) {
        const SpaceBasis b = build_basis(level, precision);
        std::ostringstream sizes;
        sizes << "level " << level << ": " << b.eisenstein_part.size() << " Eisenstein + " << b.cusp_part.size()
              << " cusp series";
        rep.check(true, sizes.str());
        try {
            const IndependenceCertificate cert = verify_independence(b);
            rep.check(true, "level " + std::to_string(level) + ": det of leading cusp matrix = "
                                + to_string(cert.cusp_determinant));
            rep.check(cert.eisenstein_unit_lower_triangular,
                      "level " + std::to_string(level) + ": Eisenstein matrix unit lower triangular");
        } catch (const std::exception& ex) {
            rep.check(false, "level " + std::to_string(level) + ": " + ex.what());
        }
    }
    return rep;
}

inline SuiteReport dilation(std::size_t precision)
{
    SuiteReport rep{"dilation", true, {}};
    struct Obs {
        std::int64_t level;
        std::size_t big;
        std::size_t small;
    };
    const std::vector<Obs> obs = {{44, 4, 2},  {44, 6, 3},  {44, 8, 4},   {44, 10, 5},  {52, 8, 4},
                                  {52, 10, 5}, {52, 12, 6}, {52, 14, 7}, {52, 16, 15}, {52, 18, 17}};
    std::int64_t cached = 0;
    SpaceBasis b;
    for (const Obs& o : obs) {
        if (o.level != cached) {
            b = build_basis(o.level, precision);
            cached = o.level;
        }
        const char prefix = o.level == 44 ? 'A' : 'B';
        const bool ok = b.cusp_part[o.big - 1] == dilate(b.cusp_part[o.small - 1], 2);
        rep.check(ok, std::string(1, prefix) + std::to_string(o.big) + "(q) = " + prefix + std::to_string(o.small)
                          + "(q^2) up to q^" + std::to_string(precision));
    }
    return rep;
}

inline SuiteReport identity(const std::vector<EisensteinPair>& pairs, std::size_t max_n)
{
    SuiteReport rep{"identity", true, {}};
    for (const EisensteinPair& p : pairs) {
        const auto w = w_series_oracle(p.alpha, p.beta, max_n);
        const QSeries lhs = lhs_square(p, max_n);
        const QSeries rhs = rhs_theorem24(p, [&](std::int64_t n) { return w[static_cast<std::size_t>(n)]; }, max_n);
        std::size_t bad = 0;
        for (std::size_t n = 0; n <= max_n; ++n) {
            bad += lhs[n] != rhs[n];
        }
        rep.check(bad == 0, p.label() + ": lhs = rhs for 0 <= n <= " + std::to_string(max_n) + " (" +
                                std::to_string(bad) + " mismatches)");
    }
    return rep;
}

inline SuiteReport lemma32(std::size_t precision)
{
    SuiteReport rep{"lemma32", true, {}};
    std::int64_t cached = 0;
    SpaceBasis b;
    for (const EisensteinPair& p : covered_pairs()) {
        if (p.level() != cached) {
            b = build_basis(p.level(), precision);
            cached = p.level();
        }
        const CoefficientSolution pub = published_expansion(p);
        CoefficientSolution sol;
        try {
            sol = derive_coefficients(p, b);
        } catch (const std::exception& ex) {
            rep.check(false, p.label() + ": " + ex.what());
            continue;
        }
        std::size_t matched = 0, total = 0;
        for (const auto& [d, x] : sol.X) {
            ++total;
            if (x == pub.X.at(d)) {
                ++matched;
            } else {
                rep.note(p.label() + " sigma3(n/" + std::to_string(d) + "): derived "
                         + to_string(sol.sigma3_coefficient(d)) + ", published " + to_string(pub.sigma3_coefficient(d)));
            }
        }
        const char prefix = p.level() == 44 ? 'a' : 'b';
        for (std::size_t j = 0; j < sol.Y.size(); ++j) {
            ++total;
            if (sol.Y[j] == pub.Y[j]) {
                ++matched;
            } else {
                rep.note(p.label() + " " + prefix + std::to_string(j + 1) + "(n): derived " + to_string(sol.Y[j])
                         + ", published " + to_string(pub.Y[j]));
            }
        }
        rep.check(matched == total, p.label() + ": " + std::to_string(matched) + "/" + std::to_string(total)
                                        + " coefficients match the published expansion");
    }
    return rep;
}

inline SuiteReport closed_forms(std::size_t max_n)
{
    SuiteReport rep{"closed-forms", true, {}};
    std::int64_t cached = 0;
    SpaceBasis b;
    for (const EisensteinPair& p : covered_pairs()) {
        if (p.level() != cached) {
            b = build_basis(p.level(), std::max<std::size_t>(max_n, 2 * 24));
            cached = p.level();
        }
        const ConvolutionFormula f = published_formula(p);
        const auto w = w_series_oracle(p.alpha, p.beta, max_n);
        std::size_t bad = 0, non_integral = 0;
        std::int64_t first = 0;
        for (std::size_t n = 1; n <= max_n; ++n) {
            const Rational v = evaluate(f, static_cast<std::int64_t>(n), b);
            non_integral += !is_integral(v);
            if (v != w[n]) {
                ++bad;
                if (first == 0) {
                    first = static_cast<std::int64_t>(n);
                }
            }
        }
        std::string line = p.label() + ": closed form = oracle for 1 <= n <= " + std::to_string(max_n) + " ("
                           + std::to_string(bad) + " mismatches, " + std::to_string(non_integral) + " non-integral";
        if (first) {
            line += ", first at n=" + std::to_string(first);
        }
        rep.check(bad == 0 && non_integral == 0, line + ")");
    }
    return rep;
}

inline SuiteReport reps(std::int64_t max_n)
{
    SuiteReport rep{"reps", true, {}};
    std::size_t bad = 0;
    for (std::int64_t n = 0; n <= 2 * max_n; ++n) {
        bad += r4_jacobi(n) != r4_enumerate(n);
    }
    rep.check(bad == 0, "r4 Jacobi = enumeration for 0 <= n <= " + std::to_string(2 * max_n));
    for (std::int64_t b : {11, 13}) {
        bad = 0;
        for (std::int64_t n = 0; n <= max_n; ++n) {
            bad += rep_count_closed(RepQuery{1, b, n}) != rep_count_enumerate(RepQuery{1, b, n});
        }
        rep.check(bad == 0, "N_(1," + std::to_string(b) + ") closed = enumeration for 0 <= n <= "
                                + std::to_string(max_n));
        bad = 0;
        for (std::int64_t n = 1; n <= 3 * max_n; ++n) {
            bad += !substitution_identities_hold(b, n);
        }
        rep.check(bad == 0, "b=" + std::to_string(b) + ": convolution substitutions hold for 1 <= n <= "
                                + std::to_string(3 * max_n));
    }
    return rep;
}

inline std::string render(const SuiteReport& r)
{
    std::string out = "[" + r.name + "] " + (r.passed ? "PASS" : "FAIL") + "\n";
    for (const auto& l : r.lines) {
        out += "  " + l + "\n";
    }
    return out;
}

} // namespace convsum::verify

#endif // CONVSUM_VERIFY_HPP
