#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "binsum/combinatorics.hpp"
#include "binsum/errors.hpp"
#include "binsum/number.hpp"
#include "binsum/polynomial.hpp"
#include "binsum/rational_gf.hpp"
#include "binsum/sequences.hpp"

namespace binsum {

inline series_prefix gf_series(const rational_gf& f, std::size_t n) {
    if (n == 0) throw domain_error("gf_series needs at least one term");
    return f.series(n);
}

namespace detail {

inline long require_integer_q(const rational& q, std::string_view route) {
    sequence_params p{.q = q};
    p.validate();
    return p.integer_q(route);
}

// Polynomial part of the k-th step of the B recurrence:
// sum_{s=0}^{k} z^s sum_{j=0}^{s} C(k+1, s-j) q^(s-j) sum_{i=0}^{j} (-1)^i C(j,i) C(j+k-1+qi, qi-1)
inline polynomial b_step_numerator(long k, long q) {
    std::vector<integer> inner(static_cast<std::size_t>(k) + 1);
    for (long j = 0; j <= k; ++j) {
        integer acc = 0;
        for (long i = 0; i <= j; ++i) {
            integer term = binomial(j, i) * binomial(integer(j + k - 1 + q * i), q * i - 1);
            acc += (i % 2 == 0) ? term : integer(-term);
        }
        inner[static_cast<std::size_t>(j)] = acc;
    }
    std::vector<rational> coeffs(static_cast<std::size_t>(k) + 1);
    for (long s = 0; s <= k; ++s) {
        integer acc = 0;
        for (long j = 0; j <= s; ++j) {
            acc += binomial(k + 1, s - j) * pow(integer(q), static_cast<unsigned long>(s - j)) *
                   inner[static_cast<std::size_t>(j)];
        }
        coeffs[static_cast<std::size_t>(s)] = acc;
    }
    return polynomial(std::move(coeffs));
}

}  // namespace detail

/// B_{k,q}(z) = sum_j b_{k,q}(j) z^j, built from B_{0,q} = 1/(1+qz) by the
/// recurrence in k. Integer q only.
inline rational_gf B_gf(long k, const rational& q_value) {
    if (k < 0) throw domain_error("B_gf needs k >= 0");
    const long q = detail::require_integer_q(q_value, "B_gf");
    const polynomial one_plus_qz({rational(1), rational(q)});
    rational_gf acc(polynomial::constant(1), one_plus_qz);
    for (long step = 1; step <= k; ++step) {
        acc = acc + rational_gf(detail::b_step_numerator(step, q),
                                one_plus_qz.pow(static_cast<unsigned long>(step + 1)));
    }
    return acc;
}

/// A(z) = 1/(1-z) B(-z/(1-z)), the generating-function image of
/// a(m) = sum_j (-1)^j C(m,j) b(j). The map is an involution.
inline rational_gf binomial_transform_gf(const rational_gf& b) {
    rational_gf substituted = b.substitute_mobius(0, -1, 1, -1);
    return substituted * rational_gf(polynomial::constant(1), polynomial({rational(1), rational(-1)}));
}

/// Inverse of binomial_transform_gf; identical map since the signed transform is self-inverse.
inline rational_gf inverse_binomial_transform_gf(const rational_gf& a) { return binomial_transform_gf(a); }

inline rational_gf A_gf(long k, const rational& q) { return binomial_transform_gf(B_gf(k, q)); }

/// Geometric polynomial w_n(x) = sum_k {n; k} k! x^k.
inline polynomial omega_poly(long n) {
    if (n < 0) throw domain_error("omega_poly needs n >= 0");
    std::vector<rational> c(static_cast<std::size_t>(n) + 1);
    for (long k = 0; k <= n; ++k) c[static_cast<std::size_t>(k)] = rational(stirling2(n, k) * factorial(k));
    return polynomial(std::move(c));
}

/// sum_{k>=0} k^n x^k = 1/(1-x) w_n(x/(1-x)).
inline rational_gf power_sum_gf(long n) {
    rational_gf w(omega_poly(n));
    return w.substitute_mobius(0, 1, 1, -1) *
           rational_gf(polynomial::constant(1), polynomial({rational(1), rational(-1)}));
}

/// Row n of the Eulerian triangle in the shifted indexing T(n,k) = <n; k-1>
/// (T(0,0) = 1): the numerator of sum_k k^n x^k over (1-x)^(n+1).
inline std::vector<integer> eulerian_numerator_row(long n) {
    if (n < 0) throw domain_error("eulerian_numerator_row needs n >= 0");
    if (n == 0) return {integer(1)};
    std::vector<integer> row(static_cast<std::size_t>(n) + 1);
    for (long k = 1; k <= n; ++k) row[static_cast<std::size_t>(k)] = eulerian(n, k - 1);
    return row;
}

/// Same function as power_sum_gf, assembled from the Eulerian row.
inline rational_gf power_sum_gf_eulerian(long n) {
    polynomial one_minus_x({rational(1), rational(-1)});
    return {polynomial::from_integers(eulerian_numerator_row(n)),
            one_minus_x.pow(static_cast<unsigned long>(n + 1))};
}

/// C_{J,q}(z) = sum_i C(J+qi, J) z^i via the signed Stirling-1 expansion
///   (1/J!) sum_t power_sum(t) q^t (-1)^(J+t) s(J+1, t+1).
inline rational_gf C_gf_stirling(long J, long q) {
    if (J < 0 || q < 0) throw domain_error("C_gf_stirling needs J, q >= 0");
    rational_gf acc(polynomial{}, polynomial::constant(1));
    for (long t = 0; t <= J; ++t) {
        integer w = pow(integer(q), static_cast<unsigned long>(t)) * stirling1_signed(J + 1, t + 1);
        if ((J + t) % 2 != 0) w = -w;
        if (w == 0) continue;
        acc = acc + rational(w) * power_sum_gf(t);
    }
    return rational(1) / rational(factorial(J)) * acc;
}

/// sum_l C(J+1, 2l) z^l / (1-z)^(J+1), the closed form of C_{J,2}.
inline rational_gf C2_closed_form(long J) {
    if (J < 0) throw domain_error("C2_closed_form needs J >= 0");
    std::vector<rational> num;
    for (long l = 0; 2 * l <= J + 1; ++l) num.emplace_back(binomial(J + 1, 2 * l));
    polynomial one_minus_z({rational(1), rational(-1)});
    return {polynomial(std::move(num)), one_minus_z.pow(static_cast<unsigned long>(J + 1))};
}

enum class power_form {
    absolute,  // sum_l s(J,l) C(l,t) J^l     = (-1)^(J+t) J^t s(J+1,t+1)
    shifted,   // sum_l s(J,l) C(l,t) J^(l-t) = (-1)^(J+t)     s(J+1,t+1)
};

/// Both sides of the partial binomial transform of signed Stirling-1 numbers.
inline std::pair<rational, rational> stirling_binomial_transform_check(long J, long t,
                                                                       power_form form = power_form::absolute) {
    if (J < 1 || t < 0 || t > J) throw domain_error("stirling_binomial_transform_check needs 0 <= t <= J, J >= 1");
    integer lhs = 0;
    for (long l = t; l <= J; ++l) {
        const long e = (form == power_form::absolute) ? l : l - t;
        lhs += stirling1_signed(J, l) * binomial(l, t) * pow(integer(J), static_cast<unsigned long>(e));
    }
    integer rhs = stirling1_signed(J + 1, t + 1);
    if (form == power_form::absolute) rhs *= pow(integer(J), static_cast<unsigned long>(t));
    if ((J + t) % 2 != 0) rhs = -rhs;
    return {rational(lhs), rational(rhs)};
}

/// (x^n, (1/n!) sum_k s(n,k) w_k(x)).
inline std::pair<polynomial, polynomial> stirling_omega_identity_check(long n) {
    if (n < 0) throw domain_error("stirling_omega_identity_check needs n >= 0");
    polynomial rhs;
    for (long k = 0; k <= n; ++k) rhs += rational(stirling1_signed(n, k)) * omega_poly(k);
    rhs *= rational(1) / rational(factorial(n));
    return {polynomial::monomial(1, static_cast<std::size_t>(n)), rhs};
}

}  // namespace binsum
