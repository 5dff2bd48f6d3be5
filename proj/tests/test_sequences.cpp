#include <catch_amalgamated.hpp>

#include "binsum/sequences.hpp"
#include "oracles.hpp"

using namespace binsum;

namespace {

// The double sum with the summation order swapped: i outer over 0..m, j
// inner over i..m. Kept here, not in the library, as an independent route.
rational a_double_sum_swapped(long k, const rational& q, long m) {
    rational sum = 0;
    for (long i = 0; i <= m; ++i) {
        for (long j = i; j <= m; ++j) {
            rational t = rational(oracle::choose(m, j) * oracle::choose(j, i)) *
                         binomial(rational(j + k + q * i), j + k);
            sum += ((j - i) % 2 == 0) ? t : rational(-t);
        }
    }
    return sum;
}

}  // namespace

TEST_CASE("a by the defining double sum", "[sequences]") {
    CHECK(a_double_sum({.k = 3, .q = 4, .index = 0}) == 1);
    CHECK(a_double_sum({.k = 1, .q = 2, .index = 1}) == 6);
    CHECK(a_double_sum({.k = 0, .q = 1, .index = 5}) == 32);
    CHECK(a_double_sum({.k = 1, .q = 2, .index = 2}) == 27);
    for (long m = 0; m <= 12; ++m) CHECK(a_double_sum({.k = 0, .q = 1, .index = m}) == rational(pow(integer(2), m)));
    for (long k = 0; k <= 4; ++k) {
        for (long q = 0; q <= 4; ++q) {
            CHECK(a_double_sum({.k = k, .q = q, .index = 1}) == rational(binomial(1 + k + q, 1 + k)));
        }
    }
    CHECK_THROWS_AS(a_double_sum({.k = -1, .q = 1, .index = 2}), domain_error);
    CHECK_THROWS_AS(a_double_sum({.k = 1, .q = -1, .index = 2}), domain_error);
}

TEST_CASE("a by the single-sum reduction", "[sequences]") {
    CHECK(a_single_sum({.k = 0, .q = 1, .index = 3}) == 8);
    CHECK(a_single_sum({.k = 2, .q = 3, .index = 1}) == 20);
    for (long k = 0; k <= 5; ++k) CHECK(a_single_sum({.k = k, .q = 3, .index = 0}) == 1);
}

TEST_CASE("a as the binomial transform of b", "[sequences]") {
    CHECK(a_from_b({.k = 0, .q = 2, .index = 2}) == 9);
    CHECK(a_from_b({.k = 4, .q = 1, .index = 0}) == 1);
    CHECK(a_from_b({.k = 1, .q = 2, .index = 3}) == 108);
}

TEST_CASE("a by the terminating hypergeometric form", "[sequences]") {
    CHECK(a_hypergeom({.k = 0, .q = 1, .index = 2}) == 4);
    for (long k = 0; k <= 4; ++k) CHECK(a_hypergeom({.k = k, .q = 2, .index = 0}) == 1);
    // Coefficient of z^3 in (-1 - z + 3z^2)/(-1 + 3z)^3.
    CHECK(a_hypergeom({.k = 2, .q = 2, .index = 3}) == 297);
    CHECK(a_single_sum({.k = 2, .q = 2, .index = 3}) == 297);
    CHECK_THROWS_AS(a_hypergeom({.k = 1, .q = rational(1, 2), .index = 2}), unsupported_parameter);
}

TEST_CASE("all four routes to a agree", "[sequences]") {
    for (long k = 0; k <= 4; ++k) {
        for (long q = 0; q <= 4; ++q) {
            for (long m = 0; m <= 12; ++m) {
                const sequence_params p{.k = k, .q = q, .index = m};
                const rational ref = a_double_sum(p);
                REQUIRE(is_integer(ref));
                REQUIRE(a_single_sum(p) == ref);
                REQUIRE(a_from_b(p) == ref);
                REQUIRE(a_hypergeom(p) == ref);
                REQUIRE(a_double_sum_swapped(k, q, m) == ref);
            }
        }
    }
}

TEST_CASE("swapping the summation order is harmless for rational q", "[sequences]") {
    for (const rational& q : {rational(1, 2), rational(3, 2), rational(5, 3)}) {
        for (long m = 0; m <= 8; ++m) CHECK(a_double_sum({.k = 1, .q = q, .index = m}) == a_double_sum_swapped(1, q, m));
    }
}

TEST_CASE("b by the defining sum", "[sequences]") {
    CHECK(b_direct({.k = 0, .q = 3, .index = 2}) == 9);
    CHECK(b_direct({.k = 1, .q = 2, .index = 3}) == -44);
    CHECK(b_direct({.k = 2, .q = 3, .index = 1}) == -19);
    CHECK(b_direct({.k = 1, .q = rational(1, 2), .index = 1}) == rational(-7, 8));
    CHECK(b_direct({.k = 1, .q = rational(3, 2), .index = 3}) == rational(-513, 32));

    SECTION("k = 0 collapses to (-q)^j") {
        for (long q = 0; q <= 6; ++q) {
            for (long j = 0; j <= 30; ++j) {
                rational expected = rational(pow(integer(-q), static_cast<unsigned long>(j)));
                REQUIRE(b_direct({.k = 0, .q = q, .index = j}) == expected);
            }
        }
        for (const rational& q : {rational(1, 2), rational(3, 2)}) {
            for (long j = 0; j <= 30; ++j) REQUIRE(b_direct({.k = 0, .q = q, .index = j}) == pow(rational(-q), j));
        }
    }
}

TEST_CASE("b for q = 1 has a closed form", "[sequences]") {
    CHECK(b_k1_closed(1, 3) == -4);
    CHECK(b_k1_closed(2, 2) == 6);
    CHECK(b_k1_closed(0, 5) == -1);
    for (long k = 0; k <= 8; ++k) {
        for (long j = 0; j <= 25; ++j) {
            REQUIRE(b_direct({.k = k, .q = 1, .index = j}) == b_k1_closed(k, j));
            REQUIRE((j + 1) * b_k1_closed(k, j + 1) + (k + j + 1) * b_k1_closed(k, j) == 0);
        }
    }
}

TEST_CASE("b by the hypergeometric form", "[sequences]") {
    CHECK(b_hypergeom({.k = 0, .q = 2, .index = 2}) == 4);
    CHECK(b_hypergeom({.k = 1, .q = 3, .index = 2}) == 45);
    CHECK(b_hypergeom({.k = 3, .q = 4, .index = 0}) == 1);
    for (long q = 1; q <= 6; ++q) {
        for (long k = 0; k <= 5; ++k) {
            for (long j = 0; j <= 15; ++j) {
                const sequence_params p{.k = k, .q = q, .index = j};
                REQUIRE(b_hypergeom(p) == b_direct(p));
            }
        }
    }
    CHECK_THROWS_AS(b_hypergeom({.k = 0, .q = 0, .index = 2}), unsupported_parameter);
    CHECK_THROWS_AS(b_hypergeom({.k = 0, .q = rational(3, 2), .index = 2}), unsupported_parameter);
}

TEST_CASE("c, the aerated binomial", "[sequences]") {
    CHECK(c_direct(2, 3, 2) == 28);
    CHECK(c_direct(5, 4, 0) == 1);
    CHECK(c_direct(1, 4, 3) == 13);
    for (long q = 0; q <= 6; ++q) {
        for (long i = 0; i <= 10; ++i) CHECK(c_direct(1, q, i) == 1 + q * i);
    }
    CHECK_THROWS_AS(c_direct(-1, 2, 3), domain_error);
}

TEST_CASE("the alternating sum inside the b_{0,q} argument vanishes", "[sequences]") {
    CHECK(zero_sum_identity(0, 5) == 0);
    CHECK(zero_sum_identity(3, 2) == 0);
    CHECK(zero_sum_identity(7, 4) == 0);
    for (long j = 0; j <= 20; ++j) {
        for (long q = 1; q <= 6; ++q) REQUIRE(zero_sum_identity(j, q) == 0);
    }
    CHECK_THROWS_AS(zero_sum_identity(2, 0), domain_error);
}

TEST_CASE("multinomial beta integral", "[sequences]") {
    CHECK(beta_integral(0, 2) == rational(3, 2));
    CHECK(oracle::beta_integral_by_expansion(1, 2) == rational(17, 12));
    CHECK(beta_integral(1, 2) == rational(17, 12));
    CHECK(beta_integral(0, 1) == 1);
    for (long j = 0; j <= 8; ++j) {
        for (long q = 1; q <= 4; ++q) {
            const rational v = beta_integral(j, q);
            REQUIRE(v > 0);
            REQUIRE(v == oracle::beta_integral_by_expansion(j, q));
        }
    }
}

TEST_CASE("perfect powers through stirling numbers", "[sequences]") {
    CHECK(power_via_stirling(3, 2) == 9);
    CHECK(power_via_stirling(7, 0) == 1);
    CHECK(power_via_stirling(0, 0) == 1);
    CHECK(power_via_stirling(2, 5) == 32);
    for (long k = 0; k <= 12; ++k) {
        for (long n = 0; n <= 12; ++n) {
            integer direct = 1;
            for (long i = 0; i < n; ++i) direct *= k;
            REQUIRE(power_via_stirling(k, n) == direct);
        }
    }
}

TEST_CASE("sequence_params validation", "[sequences]") {
    sequence_params p{.k = 1, .q = rational(3, 2), .index = 1};
    CHECK_NOTHROW(p.validate());
    CHECK_THROWS_AS(p.integer_q("test route"), unsupported_parameter);
    p.q = 4;
    CHECK(p.integer_q("test route") == 4);
    p.index = -1;
    CHECK_THROWS_AS(p.validate(), domain_error);
}
