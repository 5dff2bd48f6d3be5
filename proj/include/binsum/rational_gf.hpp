#pragma once

#include <cstddef>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "binsum/errors.hpp"
#include "binsum/number.hpp"
#include "binsum/polynomial.hpp"

namespace binsum {

/// Truncated power series z^0 .. z^{N-1}.
using series_prefix = std::vector<rational>;

/// Rational function num(z)/den(z) kept in one canonical representative:
/// coprime, integer coefficients with joint content 1, and the lowest
/// nonzero denominator coefficient positive. Two rational_gf compare equal
/// exactly when they denote the same function.
class rational_gf {
public:
    rational_gf() : num_(), den_(polynomial::constant(1)) {}

    rational_gf(polynomial num, polynomial den) : num_(std::move(num)), den_(std::move(den)) {
        canonicalize();
    }

    explicit rational_gf(const polynomial& p) : rational_gf(p, polynomial::constant(1)) {}

    const polynomial& numerator() const { return num_; }
    const polynomial& denominator() const { return den_; }

    friend bool operator==(const rational_gf& a, const rational_gf& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    friend rational_gf operator+(const rational_gf& a, const rational_gf& b) {
        return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
    }
    friend rational_gf operator-(const rational_gf& a, const rational_gf& b) {
        return {a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_};
    }
    friend rational_gf operator*(const rational_gf& a, const rational_gf& b) {
        return {a.num_ * b.num_, a.den_ * b.den_};
    }
    friend rational_gf operator*(const rational& s, const rational_gf& a) {
        return {a.num_ * s, a.den_};
    }

    /// f((a + b z) / (c + d z))
    rational_gf substitute_mobius(const rational& a, const rational& b, const rational& c,
                                  const rational& d) const {
        const long n = std::max(num_.degree(), den_.degree());
        const polynomial top({a, b});
        const polynomial bottom({c, d});
        auto homogenize = [&](const polynomial& p) {
            polynomial out;
            for (long i = 0; i <= p.degree(); ++i) {
                if (p.coeff(i) == 0) continue;
                out += p.coeff(i) * (top.pow(static_cast<unsigned long>(i)) *
                                     bottom.pow(static_cast<unsigned long>(n - i)));
            }
            return out;
        };
        polynomial new_den = homogenize(den_);
        if (new_den.is_zero()) throw domain_error("substitution makes the denominator vanish");
        return {homogenize(num_), new_den};
    }

    /// First n Taylor coefficients at z = 0 by exact long division.
    series_prefix series(std::size_t n) const {
        const rational d0 = den_.coeff(0);
        if (d0 == 0) throw not_power_series("denominator vanishes at z = 0");
        series_prefix s(n);
        const long dd = den_.degree();
        for (std::size_t i = 0; i < n; ++i) {
            rational acc = num_.coeff(static_cast<long>(i));
            for (long j = 1; j <= dd && j <= static_cast<long>(i); ++j) {
                acc -= den_.coeff(j) * s[i - static_cast<std::size_t>(j)];
            }
            s[i] = acc / d0;
        }
        return s;
    }

    std::string to_string(const std::string& var = "z") const;

private:
    void canonicalize();

    polynomial num_;
    polynomial den_;
};

namespace detail {

inline integer content_of(const std::vector<rational>& coeffs, integer acc) {
    for (const auto& c : coeffs) {
        integer n = c.get_num();
        mpz_gcd(acc.get_mpz_t(), acc.get_mpz_t(), n.get_mpz_t());
    }
    return acc;
}

// Writes den = g * (a + b z)^e with integer a > 0, e >= 1, when it has that shape.
struct linear_power {
    integer scale;
    polynomial base;
    unsigned long exponent;
};

inline std::optional<linear_power> as_linear_power(const polynomial& den) {
    const long e = den.degree();
    if (e < 1 || den.coeff(0) == 0) return std::nullopt;
    for (const auto& c : den.coefficients()) {
        if (!is_integer(c)) return std::nullopt;
    }
    integer g = content_of(den.coefficients(), 0);
    if (den.coeff(0) < 0) g = -g;
    polynomial prim = den * (rational(1) / rational(g));
    integer d0 = prim.coeff(0).get_num();
    integer a;
    if (mpz_root(a.get_mpz_t(), d0.get_mpz_t(), static_cast<unsigned long>(e)) == 0) return std::nullopt;
    rational b = prim.coeff(1) / (rational(e) * rational(pow(a, static_cast<unsigned long>(e - 1))));
    if (!is_integer(b)) return std::nullopt;
    polynomial base({rational(a), b});
    if (base.pow(static_cast<unsigned long>(e)) != prim) return std::nullopt;
    return linear_power{g, base, static_cast<unsigned long>(e)};
}

inline std::size_t term_count(const polynomial& p) {
    std::size_t n = 0;
    for (const auto& c : p.coefficients()) n += (c != 0);
    return n;
}

inline std::string wrap_if_sum(const polynomial& p, const std::string& var) {
    std::string s = p.to_string(var);
    return term_count(p) > 1 ? "(" + s + ")" : s;
}

}  // namespace detail

inline void rational_gf::canonicalize() {
    if (den_.is_zero()) throw domain_error("rational function with zero denominator");
    if (num_.is_zero()) {
        den_ = polynomial::constant(1);
        return;
    }
    polynomial g = gcd(num_, den_);
    if (g.degree() > 0) {
        num_ = num_.divmod(g).first;
        den_ = den_.divmod(g).first;
    }
    // Clear denominators, then divide out the joint content.
    integer l = 1;
    for (const auto* p : {&num_, &den_}) {
        for (const auto& c : p->coefficients()) {
            integer d = c.get_den();
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
        }
    }
    num_ *= rational(l);
    den_ *= rational(l);
    integer content = detail::content_of(den_.coefficients(), detail::content_of(num_.coefficients(), 0));
    rational inv = rational(1) / rational(content);
    if (den_.coeff(den_.valuation()) < 0) inv = -inv;
    num_ *= inv;
    den_ *= inv;
}

inline std::string rational_gf::to_string(const std::string& var) const {
    if (den_.degree() == 0 && den_.coeff(0) == 1) return num_.to_string(var);
    std::string out = detail::wrap_if_sum(num_, var) + "/";
    if (den_.degree() == 0) return out + den_.coeff(0).get_str();
    if (auto lp = detail::as_linear_power(den_)) {
        std::string base = "(" + lp->base.to_string(var) + ")";
        if (lp->exponent > 1) base += "^" + std::to_string(lp->exponent);
        if (lp->scale == 1) return out + base;
        return out + "(" + lp->scale.get_str() + "*" + base + ")";
    }
    return out + detail::wrap_if_sum(den_, var);
}

inline std::ostream& operator<<(std::ostream& os, const rational_gf& f) { return os << f.to_string(); }

}  // namespace binsum
