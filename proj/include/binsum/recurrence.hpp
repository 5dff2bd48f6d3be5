#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "binsum/errors.hpp"
#include "binsum/number.hpp"
#include "binsum/polynomial.hpp"
#include "binsum/rational_gf.hpp"

namespace binsum {

namespace detail {

/// Solves A x = rhs exactly. Returns nullopt when inconsistent; throws
/// needs_more_terms when consistent but underdetermined.
inline std::optional<std::vector<rational>> solve_exact(std::vector<std::vector<rational>> a,
                                                        std::vector<rational> rhs,
                                                        std::size_t unknowns) {
    const std::size_t rows = a.size();
    std::vector<std::size_t> pivot_col;
    std::size_t r = 0;
    for (std::size_t c = 0; c < unknowns && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && a[p][c] == 0) ++p;
        if (p == rows) continue;
        std::swap(a[p], a[r]);
        std::swap(rhs[p], rhs[r]);
        const rational inv = rational(1) / a[r][c];
        for (std::size_t j = c; j < unknowns; ++j) a[r][j] *= inv;
        rhs[r] *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || a[i][c] == 0) continue;
            const rational f = a[i][c];
            for (std::size_t j = c; j < unknowns; ++j) a[i][j] -= f * a[r][j];
            rhs[i] -= f * rhs[r];
        }
        pivot_col.push_back(c);
        ++r;
    }
    for (std::size_t i = r; i < rows; ++i) {
        if (rhs[i] != 0) return std::nullopt;
    }
    if (r < unknowns) {
        throw needs_more_terms("linear system is rank deficient (rank " + std::to_string(r) + " of " +
                               std::to_string(unknowns) + "); supply more terms or lower the degrees");
    }
    std::vector<rational> x(unknowns);
    for (std::size_t i = 0; i < r; ++i) x[pivot_col[i]] = rhs[i];
    return x;
}

}  // namespace detail

/// Finds num/den with deg num <= num_degree, deg den <= den_degree and
/// den(0) = 1 whose expansion reproduces every supplied term.
///
/// Requires at least num_degree + den_degree + 2 terms so that one equation
/// beyond the unknowns checks the fit. Never returns an unverified candidate.
inline rational_gf reconstruct_rational(const series_prefix& s, long num_degree, long den_degree) {
    if (num_degree < 0 || den_degree < 0) throw domain_error("reconstruct_rational degrees must be >= 0");
    const long n = static_cast<long>(s.size());
    if (n < num_degree + den_degree + 2) {
        throw needs_more_terms("reconstruct_rational needs at least " +
                               std::to_string(num_degree + den_degree + 2) + " terms, got " +
                               std::to_string(n));
    }
    // Coefficients z^i for i > num_degree of den(z) S(z) vanish:
    //   sum_{l=1}^{D} d_l s_{i-l} = -s_i.
    std::vector<std::vector<rational>> rows;
    std::vector<rational> rhs;
    for (long i = num_degree + 1; i < n; ++i) {
        std::vector<rational> row(static_cast<std::size_t>(den_degree));
        for (long l = 1; l <= den_degree; ++l) {
            if (i - l >= 0) row[static_cast<std::size_t>(l - 1)] = s[static_cast<std::size_t>(i - l)];
        }
        rows.push_back(std::move(row));
        rhs.push_back(-s[static_cast<std::size_t>(i)]);
    }
    std::vector<rational> d;
    if (den_degree > 0) {
        auto solved = detail::solve_exact(rows, rhs, static_cast<std::size_t>(den_degree));
        if (!solved) {
            throw no_rational_fit("no rational function with degrees (" + std::to_string(num_degree) + ", " +
                                  std::to_string(den_degree) + ") fits the series");
        }
        d = std::move(*solved);
    } else {
        for (const auto& v : rhs) {
            if (v != 0) throw no_rational_fit("series is not a polynomial of degree " + std::to_string(num_degree));
        }
    }
    std::vector<rational> den_coeffs{rational(1)};
    den_coeffs.insert(den_coeffs.end(), d.begin(), d.end());
    polynomial den(std::move(den_coeffs));

    std::vector<rational> num_coeffs(static_cast<std::size_t>(num_degree) + 1);
    for (long i = 0; i <= num_degree; ++i) {
        rational acc = 0;
        for (long l = 0; l <= den_degree && l <= i; ++l) acc += den.coeff(l) * s[static_cast<std::size_t>(i - l)];
        num_coeffs[static_cast<std::size_t>(i)] = acc;
    }
    rational_gf fit(polynomial(std::move(num_coeffs)), den);
    if (fit.series(s.size()) != s) {
        throw no_rational_fit("candidate rational function does not reproduce the supplied terms");
    }
    return fit;
}

/// Tries degree pairs by increasing num + den (then by den) and returns the
/// first exact fit.
inline rational_gf reconstruct_rational_auto(const series_prefix& s, long max_total_degree) {
    const long n = static_cast<long>(s.size());
    for (long total = 0; total <= max_total_degree && total + 2 <= n; ++total) {
        for (long den_degree = 0; den_degree <= total; ++den_degree) {
            try {
                return reconstruct_rational(s, total - den_degree, den_degree);
            } catch (const no_rational_fit&) {
            } catch (const needs_more_terms&) {
            }
        }
    }
    throw no_rational_fit("no rational function of total degree <= " + std::to_string(max_total_degree) +
                          " fits " + std::to_string(n) + " terms");
}

/// a(n) = sum_{i=1}^{order} coefficients[i-1] a(n-i), valid for
/// n >= offset + order. initial_terms holds a(0) .. a(offset+order-1).
struct c_finite_recurrence {
    long order = 1;
    std::vector<rational> coefficients;
    std::vector<rational> initial_terms;
    long offset = 0;

    std::vector<rational> generate(std::size_t count) const {
        std::vector<rational> out(initial_terms.begin(),
                                  initial_terms.begin() + static_cast<long>(std::min(count, initial_terms.size())));
        while (out.size() < count) {
            const std::size_t n = out.size();
            rational acc = 0;
            for (long i = 1; i <= order; ++i) acc += coefficients[static_cast<std::size_t>(i - 1)] * out[n - static_cast<std::size_t>(i)];
            out.push_back(acc);
        }
        return out;
    }

    friend bool operator==(const c_finite_recurrence&, const c_finite_recurrence&) = default;
};

/// Constant-coefficient recurrence read off the denominator of f.
///
/// With den = 1 + d_1 z + ... + d_r z^r the coefficients are -d_i. The
/// relation holds once n exceeds deg num and a full window of r earlier
/// terms exists, so offset = max(0, deg num + 1 - r).
inline c_finite_recurrence recurrence_from_gf(const rational_gf& f) {
    const polynomial& den = f.denominator();
    const rational d0 = den.coeff(0);
    if (d0 == 0) throw not_power_series("recurrence_from_gf: denominator vanishes at z = 0");
    c_finite_recurrence rec;
    const long r = den.degree();
    rec.order = std::max<long>(1, r);
    rec.coefficients.assign(static_cast<std::size_t>(rec.order), rational(0));
    for (long i = 1; i <= r; ++i) rec.coefficients[static_cast<std::size_t>(i - 1)] = -den.coeff(i) / d0;
    const long num_deg = f.numerator().degree();
    rec.offset = std::max<long>(0, num_deg + 1 - rec.order);
    rec.initial_terms = f.series(static_cast<std::size_t>(rec.offset + rec.order));
    return rec;
}

}  // namespace binsum
