#pragma once

#include <cctype>
#include <string>
#include <string_view>

#include "binsum/errors.hpp"
#include "binsum/number.hpp"
#include "binsum/polynomial.hpp"
#include "binsum/rational_gf.hpp"

namespace binsum {

namespace detail {

// Recursive-descent parser for rational functions in one variable:
//   expr  := term (('+'|'-') term)*
//   term  := unary (('*'|'/') unary)*
//   unary := ('+'|'-') unary | power
//   power := atom ('^' digits)?
//   atom  := digits | var | '(' expr ')'
class expression_parser {
public:
    expression_parser(std::string_view text, char var) : text_(text), var_(var) {}

    rational_gf parse() {
        rational_gf v = expr();
        skip_space();
        if (pos_ != text_.size()) fail("unexpected character");
        return v;
    }

private:
    static rational_gf reciprocal(const rational_gf& f) {
        if (f.numerator().is_zero()) throw domain_error("division by zero in expression");
        return {f.denominator(), f.numerator()};
    }

    [[noreturn]] void fail(const std::string& why) const {
        throw domain_error(why + " at offset " + std::to_string(pos_) + " in '" + std::string(text_) + "'");
    }

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool accept(char c) {
        skip_space();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    rational_gf expr() {
        rational_gf acc = term();
        while (true) {
            if (accept('+')) {
                acc = acc + term();
            } else if (accept('-')) {
                acc = acc - term();
            } else {
                return acc;
            }
        }
    }

    rational_gf term() {
        rational_gf acc = unary();
        while (true) {
            if (accept('*')) {
                acc = acc * unary();
            } else if (accept('/')) {
                acc = acc * reciprocal(unary());
            } else {
                return acc;
            }
        }
    }

    rational_gf unary() {
        if (accept('-')) return rational(-1) * unary();
        if (accept('+')) return unary();
        return power();
    }

    rational_gf power() {
        rational_gf base = atom();
        if (!accept('^')) return base;
        skip_space();
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (start == pos_) fail("expected exponent");
        const unsigned long e = std::stoul(std::string(text_.substr(start, pos_ - start)));
        return {base.numerator().pow(e), base.denominator().pow(e)};
    }

    rational_gf atom() {
        skip_space();
        if (pos_ >= text_.size()) fail("unexpected end of expression");
        const char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            rational_gf v = expr();
            if (!accept(')')) fail("expected ')'");
            return v;
        }
        if (c == var_) {
            ++pos_;
            return rational_gf(polynomial{0, 1});
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            return rational_gf(polynomial::constant(rational(parse_integer(text_.substr(start, pos_ - start)))));
        }
        fail("unexpected character");
    }

    std::string_view text_;
    char var_;
    std::size_t pos_ = 0;
};

}  // namespace detail

/// Parses text such as "(-1 - 8*z + 12*z^2)/(-1 + 4*z)^3" into canonical form.
inline rational_gf parse_rational_function(std::string_view text, char var = 'z') {
    return detail::expression_parser(text, var).parse();
}

}  // namespace binsum
