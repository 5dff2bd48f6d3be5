#include <catch_amalgamated.hpp>

#include "binsum/expression.hpp"
#include "binsum/genfunc.hpp"
#include "binsum/recurrence.hpp"
#include "binsum/sequences.hpp"
#include "binsum/tables.hpp"

using namespace binsum;

namespace {

rational_gf gf(std::string_view text) { return parse_rational_function(text); }

}  // namespace

TEST_CASE("reconstruct fractional rows", "[reconstruct]") {
    const auto half = b_direct_terms(1, rational(1, 2), 8);
    const rational_gf f = reconstruct_rational(half, 1, 2);
    CHECK(f == gf("(8+z)/(2*(z+2)^2)"));
    CHECK(f.to_string() == "(8 + z)/(2*(2 + z)^2)");
    CHECK(reconstruct_rational(b_direct_terms(1, rational(3, 2), 8), 1, 2) == gf("(8-3*z)/(2*(2+3*z)^2)"));
    CHECK(half == series_prefix{1, rational(-7, 8), rational(5, 8), rational(-13, 32), rational(1, 4),
                                rational(-19, 128), rational(11, 128), rational(-25, 512)});
}

TEST_CASE("reconstruct edge cases", "[reconstruct]") {
    for (long q = 0; q <= 5; ++q) {
        series_prefix s;
        rational p = 1;
        for (int i = 0; i < 6; ++i, p *= -q) s.push_back(p);
        CHECK(reconstruct_rational(s, 0, 1) == rational_gf(polynomial{1}, polynomial{rational(1), rational(q)}));
    }
    CHECK_THROWS_AS(reconstruct_rational(series_prefix{1, 2, 3}, 2, 2), needs_more_terms);
    // A perturbed geometric series.
    CHECK_THROWS_AS(reconstruct_rational(series_prefix{1, 2, 4, 8, 17}, 0, 1), no_rational_fit);
    CHECK_THROWS_AS(reconstruct_rational(series_prefix{1, 2, 3, 4}, 1, 0), no_rational_fit);
    CHECK(reconstruct_rational(series_prefix{1, 2, 0, 0}, 1, 0) == rational_gf(polynomial{1, 2}));
    CHECK(reconstruct_rational_auto(gf_series(gf("(1-z)/(1+2*z)^2"), 10), 6) == gf("(1-z)/(1+2*z)^2"));
    CHECK_THROWS_AS(reconstruct_rational_auto(series_prefix{1, 1, 2, 6, 24, 120, 720}, 4), no_rational_fit);
    // A zero series has too little information to fix any denominator.
    CHECK_THROWS_AS(reconstruct_rational(series_prefix{0, 0, 0, 0, 0, 0}, 1, 2), needs_more_terms);
}

TEST_CASE("reconstruct recovers every tabulated generating function", "[reconstruct]") {
    auto round_trip = [](const rational_gf& f) {
        const long dn = std::max<long>(0, f.numerator().degree());
        const long dd = f.denominator().degree();
        const auto s = gf_series(f, static_cast<std::size_t>(2 * std::max(dn, dd) + 2));
        return reconstruct_rational(s, dn, dd) == f;
    };
    for (const auto& row : tables::b_rows()) REQUIRE(round_trip(gf(row.gf)));
    for (const auto& row : tables::a_rows()) REQUIRE(round_trip(gf(row.gf)));
    for (const auto& row : tables::c_rows()) REQUIRE(round_trip(gf(row.gf)));
}

TEST_CASE("recurrence from a generating function", "[recurrence]") {
    const auto r = recurrence_from_gf(gf("1/(1-3*z)^2"));
    CHECK(r.order == 2);
    CHECK(r.coefficients == std::vector<rational>{6, -9});
    CHECK(r.initial_terms == std::vector<rational>{1, 6});
    CHECK(r.offset == 0);
    CHECK(r.generate(5) == series_prefix{1, 6, 27, 108, 405});

    for (long q = 0; q <= 5; ++q) {
        const auto b = recurrence_from_gf(B_gf(0, q));
        CHECK(b.order == 1);
        CHECK(b.coefficients == std::vector<rational>{rational(-q)});
        CHECK(b.initial_terms == std::vector<rational>{1});
    }
    for (long k = 0; k <= 8; ++k) {
        const auto b = recurrence_from_gf(B_gf(k, 1));
        CHECK(b.order == k + 1);
        const auto terms = b.generate(26);
        for (long j = 0; j < 26; ++j) CHECK(terms[static_cast<std::size_t>(j)] == b_k1_closed(k, j));
    }
    // Numerator degree above the order pushes the offset out.
    const auto p = recurrence_from_gf(gf("(1+z^3)/(1-z)"));
    CHECK(p.order == 1);
    CHECK(p.offset == 3);
    CHECK(p.generate(7) == series_prefix{1, 1, 1, 2, 2, 2, 2});
    const auto poly = recurrence_from_gf(gf("1+2*z"));
    CHECK(poly.generate(4) == series_prefix{1, 2, 0, 0});
    CHECK_THROWS_AS(recurrence_from_gf(gf("1/z")), not_power_series);
}

TEST_CASE("recurrence regenerates a through index 40", "[recurrence]") {
    for (long k = 0; k <= 5; ++k) {
        for (long q = 0; q <= 5; ++q) {
            const auto rec = recurrence_from_gf(A_gf(k, q));
            REQUIRE(static_cast<long>(rec.initial_terms.size()) >= rec.order + rec.offset);
            const auto terms = rec.generate(41);
            for (long m = 0; m <= 40; ++m) {
                REQUIRE(terms[static_cast<std::size_t>(m)] == a_double_sum({.k = k, .q = q, .index = m}));
            }
        }
    }
}
