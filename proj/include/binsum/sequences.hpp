#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "binsum/combinatorics.hpp"
#include "binsum/errors.hpp"
#include "binsum/hypergeometric.hpp"
#include "binsum/number.hpp"

namespace binsum {

// a_{k,q}(m) = sum_j sum_i (-1)^(j-i) C(m,j) C(j,i) C(j+k+qi, j+k)       main sequence
// b_{k,q}(j) = sum_i (-1)^i C(j,i) C(j+k+qi, j+k)                        intermediate
// c_{J,q}(i) = C(J+qi, J)                                                aerated binomial

/// Free parameters of the three families. `index` is m for a, j for b and
/// i for c.
struct sequence_params {
    long k = 0;
    rational q = 0;
    long J = 0;
    long index = 0;

    void validate() const {
        if (k < 0) throw domain_error("k must be nonnegative");
        if (q < 0) throw domain_error("q must be nonnegative");
        if (J < 0) throw domain_error("J must be nonnegative");
        if (index < 0) throw domain_error("sequence index must be nonnegative");
    }

    /// q as a machine integer; rejects rational q for routes that need it.
    long integer_q(std::string_view route) const {
        if (!is_integer(q)) {
            throw unsupported_parameter(std::string(route) + " requires integer q, got q = " +
                                        q.get_str());
        }
        if (!q.get_num().fits_slong_p()) throw unsupported_parameter("q out of range");
        return q.get_num().get_si();
    }
};

inline int sign_of_power(long e) { return (e % 2 == 0) ? 1 : -1; }

inline rational a_double_sum(const sequence_params& p) {
    p.validate();
    const long m = p.index;
    rational sum = 0;
    for (long j = 0; j <= m; ++j) {
        const integer c_mj = binomial(m, j);
        for (long i = 0; i <= j; ++i) {
            rational term = rational(c_mj * binomial(j, i)) * binomial(rational(j + p.k + p.q * i), j + p.k);
            if ((j - i) % 2 != 0) term = -term;
            sum += term;
        }
    }
    return sum;
}

/// Single-sum reduction sum_i (-1)^(m-i) C(m,i) C(k+(q+1)i, k+m).
inline rational a_single_sum(const sequence_params& p) {
    p.validate();
    const long m = p.index;
    rational sum = 0;
    for (long i = 0; i <= m; ++i) {
        rational term = rational(binomial(m, i)) * binomial(rational(p.k + (p.q + 1) * i), p.k + m);
        if ((m - i) % 2 != 0) term = -term;
        sum += term;
    }
    return sum;
}

inline rational b_direct(const sequence_params& p) {
    p.validate();
    const long j = p.index;
    rational sum = 0;
    for (long i = 0; i <= j; ++i) {
        rational term = rational(binomial(j, i)) * binomial(rational(j + p.k + p.q * i), j + p.k);
        if (i % 2 != 0) term = -term;
        sum += term;
    }
    return sum;
}

/// b_{k,q}(0..n-1) by the defining sum.
inline std::vector<rational> b_direct_terms(long k, const rational& q, long n) {
    std::vector<rational> out;
    out.reserve(static_cast<std::size_t>(n));
    for (long j = 0; j < n; ++j) out.push_back(b_direct({.k = k, .q = q, .index = j}));
    return out;
}

/// a as the signed binomial transform of b: sum_j (-1)^j C(m,j) b(j).
inline rational a_from_b(const sequence_params& p) {
    p.validate();
    const long m = p.index;
    rational sum = 0;
    for (long j = 0; j <= m; ++j) {
        rational term = rational(binomial(m, j)) * b_direct({.k = p.k, .q = p.q, .index = j});
        if (j % 2 != 0) term = -term;
        sum += term;
    }
    return sum;
}

/// b_{k,1}(j) = C(-k-1, j) = (-1)^j C(k+j, j).
inline rational b_k1_closed(long k, long j) {
    if (k < 0 || j < 0) throw domain_error("b_k1_closed needs k, j >= 0");
    return rational(binomial(integer(-k - 1), j));
}

inline integer c_direct(long J, long q, long i) {
    if (J < 0 || q < 0 || i < 0) throw domain_error("c_direct needs J, q, i >= 0");
    return binomial(J + q * i, J);
}

/// Parameters of C(m(q+1)+k, k+m) * _{q+2}F_{q+1}(-m, {1-(l+1-m)/(q+1)-m}; {1-(k+1+l)/(q+1)-m} | 1).
inline hyp_series a_hypergeom_series(long k, long q, long m, pole_mode mode) {
    hyp_series h;
    h.mode = mode;
    h.argument = 1;
    h.numerator.push_back(rational(-m));
    for (long l = 0; l <= q; ++l) {
        h.numerator.push_back(1 - make_rational(l + 1 - m, q + 1) - m);
        h.denominator.push_back(1 - make_rational(k + 1 + l, q + 1) - m);
    }
    return h;
}

inline rational a_hypergeom(const sequence_params& p, pole_mode mode = pole_mode::regularized) {
    p.validate();
    const long q = p.integer_q("a_hypergeom");
    const long m = p.index;
    const integer front = binomial(m * (q + 1) + p.k, p.k + m);
    return rational(front) * hyp_terminating(a_hypergeom_series(p.k, q, m, mode));
}

/// _{q+1}F_q(-j, (k+j+1)/q, ..., (k+j+q)/q; 1/q, ..., q/q | 1)
inline hyp_series b_hypergeom_series(long k, long q, long j, pole_mode mode) {
    hyp_series h;
    h.mode = mode;
    h.argument = 1;
    h.numerator.push_back(rational(-j));
    for (long l = 1; l <= q; ++l) {
        h.numerator.push_back(make_rational(k + j + l, q));
        h.denominator.push_back(make_rational(l, q));
    }
    return h;
}

inline rational b_hypergeom(const sequence_params& p, pole_mode mode = pole_mode::regularized) {
    p.validate();
    const long q = p.integer_q("b_hypergeom");
    if (q < 1) throw unsupported_parameter("b_hypergeom requires q >= 1");
    return hyp_terminating(b_hypergeom_series(p.k, q, p.index, mode));
}

/// sum_{i=0}^{j+1} (-1)^i C(j+1, i) C(j+iq, j); vanishes for every j >= 0, q >= 1.
inline rational zero_sum_identity(long j, long q) {
    if (j < 0 || q < 1) throw domain_error("zero_sum_identity needs j >= 0, q >= 1");
    integer sum = 0;
    for (long i = 0; i <= j + 1; ++i) {
        integer term = binomial(j + 1, i) * binomial(j + i * q, j);
        if (i % 2 != 0) term = -term;
        sum += term;
    }
    return rational(sum);
}

namespace detail {

// Visits every composition (j_0, ..., j_{q-1}) of `total` into q nonnegative parts.
template <class Visit>
void for_each_composition(long total, long parts, std::vector<long>& buf, long pos, long left,
                          Visit&& visit) {
    if (pos == parts - 1) {
        buf[static_cast<std::size_t>(pos)] = left;
        visit(buf);
        return;
    }
    for (long v = left; v >= 0; --v) {
        buf[static_cast<std::size_t>(pos)] = v;
        for_each_composition(total, parts, buf, pos + 1, left - v, visit);
    }
}

}  // namespace detail

/// int_0^1 t^j ((1-t^q)/(1-t))^(j+1) dt expanded with the multinomial theorem:
/// sum over j_0+...+j_{q-1} = j+1 of multinomial / (j + 1 + j_1 + 2 j_2 + ...).
inline rational beta_integral(long j, long q) {
    if (j < 0 || q < 1) throw domain_error("beta_integral needs j >= 0, q >= 1");
    rational sum = 0;
    std::vector<long> parts(static_cast<std::size_t>(q));
    detail::for_each_composition(j + 1, q, parts, 0, j + 1, [&](const std::vector<long>& c) {
        long exponent = j;
        for (long l = 1; l < q; ++l) exponent += l * c[static_cast<std::size_t>(l)];
        sum += rational(multinomial(j + 1, std::span<const long>(c))) / (exponent + 1);
    });
    return sum;
}

/// base^n rebuilt as sum_j {n; j} C(base, j) j!.
inline integer power_via_stirling(long base, long n) {
    if (base < 0 || n < 0) throw domain_error("power_via_stirling needs base, n >= 0");
    integer sum = 0;
    for (long j = 0; j <= n; ++j) sum += stirling2(n, j) * binomial(base, j) * factorial(j);
    return sum;
}

}  // namespace binsum
