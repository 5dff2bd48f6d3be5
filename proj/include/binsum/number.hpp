#pragma once

#include <gmpxx.h>

#include <cctype>
#include <string>
#include <string_view>

#include "binsum/errors.hpp"

namespace binsum {

// Arbitrary-precision scalars. mpq_class keeps itself reduced with a
// positive denominator after every arithmetic operation; values built from
// a raw numerator/denominator pair must go through make_rational.
using integer = mpz_class;
using rational = mpq_class;

inline rational make_rational(const integer& num, const integer& den) {
    if (den == 0) throw domain_error("rational with zero denominator");
    rational r(num, den);
    r.canonicalize();
    return r;
}

inline bool is_integer(const rational& r) { return r.get_den() == 1; }

/// Integer value of r; throws integrality_error naming `what` otherwise.
inline integer to_integer(const rational& r, std::string_view what = "value") {
    if (!is_integer(r)) {
        throw integrality_error(std::string(what) + " is not an integer: " + r.get_str());
    }
    return r.get_num();
}

inline std::string to_string(const integer& v) { return v.get_str(); }
inline std::string to_string(const rational& v) { return v.get_str(); }

inline integer pow(const integer& base, unsigned long e) {
    integer r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

inline rational pow(const rational& base, unsigned long e) {
    integer n = pow(integer(base.get_num()), e);
    integer d = pow(integer(base.get_den()), e);
    return make_rational(n, d);
}

inline integer parse_integer(std::string_view text) {
    std::string_view digits = text;
    if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) digits.remove_prefix(1);
    if (digits.empty()) throw domain_error("empty integer literal");
    for (char c : digits) {
        if (!std::isdigit(static_cast<unsigned char>(c))) {
            throw domain_error("malformed integer literal '" + std::string(text) + "'");
        }
    }
    std::string s(text);
    if (s.front() == '+') s.erase(0, 1);
    return integer(s, 10);
}

/// Parses "p", "-p" or "p/r" with r != 0.
inline rational parse_rational(std::string_view text) {
    auto slash = text.find('/');
    if (slash == std::string_view::npos) return rational(parse_integer(text));
    integer num = parse_integer(text.substr(0, slash));
    std::string_view den_text = text.substr(slash + 1);
    if (!den_text.empty() && (den_text.front() == '-' || den_text.front() == '+')) {
        throw domain_error("malformed rational literal '" + std::string(text) + "'");
    }
    integer den = parse_integer(den_text);
    if (den == 0) throw domain_error("rational literal with zero denominator");
    return make_rational(num, den);
}

}  // namespace binsum
