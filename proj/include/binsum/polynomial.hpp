#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "binsum/errors.hpp"
#include "binsum/number.hpp"

namespace binsum {

/// Dense univariate polynomial over the rationals, coefficient i at z^i.
/// Trailing zeros are trimmed, so the zero polynomial has no coefficients.
class polynomial {
public:
    polynomial() = default;
    polynomial(std::initializer_list<rational> coeffs) : c_(coeffs) { trim(); }
    explicit polynomial(std::vector<rational> coeffs) : c_(std::move(coeffs)) { trim(); }

    static polynomial constant(const rational& v) { return polynomial({v}); }

    /// c * z^n
    static polynomial monomial(const rational& c, std::size_t n) {
        std::vector<rational> v(n + 1);
        v[n] = c;
        return polynomial(std::move(v));
    }

    static polynomial from_integers(const std::vector<integer>& coeffs) {
        std::vector<rational> v(coeffs.begin(), coeffs.end());
        return polynomial(std::move(v));
    }

    /// -1 for the zero polynomial.
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const std::vector<rational>& coefficients() const { return c_; }

    rational coeff(long i) const {
        if (i < 0 || i >= static_cast<long>(c_.size())) return 0;
        return c_[static_cast<std::size_t>(i)];
    }

    rational leading() const { return c_.empty() ? rational(0) : c_.back(); }

    /// Lowest index with a nonzero coefficient; -1 for zero.
    long valuation() const {
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (c_[i] != 0) return static_cast<long>(i);
        }
        return -1;
    }

    rational operator()(const rational& z) const {
        rational acc = 0;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * z + *it;
        return acc;
    }

    polynomial& operator+=(const polynomial& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
        trim();
        return *this;
    }

    polynomial& operator-=(const polynomial& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
        trim();
        return *this;
    }

    polynomial& operator*=(const rational& s) {
        for (auto& x : c_) x *= s;
        trim();
        return *this;
    }

    friend polynomial operator+(polynomial a, const polynomial& b) { return a += b; }
    friend polynomial operator-(polynomial a, const polynomial& b) { return a -= b; }
    friend polynomial operator-(polynomial a) { return a *= rational(-1); }
    friend polynomial operator*(polynomial a, const rational& s) { return a *= s; }
    friend polynomial operator*(const rational& s, polynomial a) { return a *= s; }

    friend polynomial operator*(const polynomial& a, const polynomial& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<rational> v(a.c_.size() + b.c_.size() - 1);
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i] == 0) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
        }
        return polynomial(std::move(v));
    }

    polynomial& operator*=(const polynomial& o) { return *this = *this * o; }

    friend bool operator==(const polynomial& a, const polynomial& b) { return a.c_ == b.c_; }

    polynomial pow(unsigned long e) const {
        polynomial result = constant(1);
        polynomial base = *this;
        while (e > 0) {
            if (e & 1UL) result *= base;
            e >>= 1;
            if (e > 0) base *= base;
        }
        return result;
    }

    /// p(a + b z)
    polynomial compose_linear(const rational& a, const rational& b) const {
        polynomial lin({a, b});
        polynomial result;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) result = result * lin + constant(*it);
        return result;
    }

    /// z^n * p
    polynomial shift(std::size_t n) const {
        if (is_zero()) return {};
        std::vector<rational> v(n, rational(0));
        v.insert(v.end(), c_.begin(), c_.end());
        return polynomial(std::move(v));
    }

    /// Coefficients z^0..z^{n-1}.
    polynomial truncate(std::size_t n) const {
        std::vector<rational> v(c_.begin(), c_.begin() + static_cast<long>(std::min(n, c_.size())));
        return polynomial(std::move(v));
    }

    /// Euclidean division: *this = q * d + r with deg r < deg d.
    std::pair<polynomial, polynomial> divmod(const polynomial& d) const {
        if (d.is_zero()) throw domain_error("polynomial division by zero");
        if (degree() < d.degree()) return {polynomial{}, *this};
        std::vector<rational> rem = c_;
        std::vector<rational> quo(c_.size() - d.c_.size() + 1);
        const rational lead = d.leading();
        for (long i = static_cast<long>(quo.size()) - 1; i >= 0; --i) {
            const std::size_t top = static_cast<std::size_t>(i) + d.c_.size() - 1;
            rational f = rem[top] / lead;
            quo[static_cast<std::size_t>(i)] = f;
            if (f == 0) continue;
            for (std::size_t j = 0; j < d.c_.size(); ++j) rem[static_cast<std::size_t>(i) + j] -= f * d.c_[j];
        }
        return {polynomial(std::move(quo)), polynomial(std::move(rem))};
    }

    bool divides(const polynomial& p) const { return p.divmod(*this).second.is_zero(); }

    polynomial monic() const {
        if (is_zero()) return {};
        return *this * (rational(1) / leading());
    }

    /// Monic gcd; gcd(0, 0) = 0.
    friend polynomial gcd(polynomial a, polynomial b) {
        while (!b.is_zero()) {
            polynomial r = a.divmod(b).second;
            a = std::move(b);
            b = std::move(r);
        }
        return a.monic();
    }

    /// Coefficients rendered with `var` in ascending powers, e.g. "1 - 3*z + z^2".
    std::string to_string(const std::string& var = "z") const;

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }

    std::vector<rational> c_;
};

namespace detail {

inline std::string render_monomial(const rational& abs_coeff, std::size_t power, const std::string& var) {
    std::string out;
    if (power == 0) return abs_coeff.get_str();
    if (abs_coeff != 1) out = abs_coeff.get_str() + "*";
    out += var;
    if (power > 1) out += "^" + std::to_string(power);
    return out;
}

}  // namespace detail

inline std::string polynomial::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::string out;
    bool first = true;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        const bool negative = c_[i] < 0;
        rational mag = abs(c_[i]);
        if (first) {
            if (negative) out += "-";
        } else {
            out += negative ? " - " : " + ";
        }
        out += detail::render_monomial(mag, i, var);
        first = false;
    }
    return out;
}

inline std::ostream& operator<<(std::ostream& os, const polynomial& p) { return os << p.to_string(); }

}  // namespace binsum
