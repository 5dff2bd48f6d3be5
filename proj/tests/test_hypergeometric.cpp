#include <catch_amalgamated.hpp>

#include "binsum/hypergeometric.hpp"
#include "binsum/sequences.hpp"

using namespace binsum;

TEST_CASE("small terminating series", "[hypergeometric]") {
    CHECK(hyp_terminating({.numerator = {-2, 1}, .denominator = {1}}) == 0);
    // 1 - 2/3 + 1/6
    CHECK(hyp_terminating({.numerator = {-2, 1}, .denominator = {3}}) == rational(1, 2));
    CHECK(hyp_terminating({.numerator = {-3}, .denominator = {}}) == 0);
    // 1F0(-3;;z) = (1-z)^3 at z = 1/2
    CHECK(hyp_terminating({.numerator = {-3}, .denominator = {}, .argument = rational(1, 2)}) == rational(1, 8));
    // Chu-Vandermonde: 2F1(-n, b; c; 1) = (c-b)_n / (c)_n
    for (long n = 0; n <= 8; ++n) {
        const rational b(5, 3), c(7, 2);
        CHECK(hyp_terminating({.numerator = {rational(-n), b}, .denominator = {c}}) ==
              pochhammer(rational(c - b), n) / pochhammer(c, n));
    }
}

TEST_CASE("termination order is the nonpositive integer nearest zero", "[hypergeometric]") {
    CHECK(termination_order({.numerator = {-5, rational(1, 2), -2}, .denominator = {}}) == 2);
    CHECK(termination_order({.numerator = {0, 3}, .denominator = {}}) == 0);
    CHECK_FALSE(termination_order({.numerator = {rational(-1, 2), 3}, .denominator = {}}).has_value());
    CHECK_THROWS_AS(hyp_terminating({.numerator = {rational(1, 2)}, .denominator = {1}}), domain_error);
}

TEST_CASE("pole handling", "[hypergeometric]") {
    // Denominator -1 vanishes from term 2 on.
    const hyp_series strict{.numerator = {-3, 1}, .denominator = {-1}, .mode = pole_mode::strict};
    try {
        hyp_terminating(strict);
        FAIL("expected a pole");
    } catch (const pole_error& e) {
        CHECK(e.term_index == 2);
    }
    hyp_series regular = strict;
    regular.mode = pole_mode::regularized;
    // Terms 0 and 1 only: 1 + (-3)(1)/(-1) = 4.
    CHECK(hyp_terminating(regular) == 4);
}

TEST_CASE("the reversed a-series has no poles on the working grid", "[hypergeometric]") {
    // Strict evaluation would throw on any vanishing denominator product.
    for (long k = 0; k <= 5; ++k) {
        for (long q = 0; q <= 5; ++q) {
            for (long m = 0; m <= 25; ++m) {
                const sequence_params p{.k = k, .q = q, .index = m};
                REQUIRE(a_hypergeom(p, pole_mode::strict) == a_hypergeom(p, pole_mode::regularized));
            }
        }
    }
}
