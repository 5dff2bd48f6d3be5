#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "binsum/combinatorics.hpp"
#include "binsum/errors.hpp"
#include "binsum/expression.hpp"
#include "binsum/genfunc.hpp"
#include "binsum/number.hpp"
#include "binsum/oeis.hpp"
#include "binsum/oeis_mapping.hpp"
#include "binsum/recurrence.hpp"
#include "binsum/report.hpp"
#include "binsum/sequences.hpp"
#include "binsum/tables.hpp"

namespace binsum {

/// Bounds for the grid-driven suites. Defaults are the full acceptance grid.
///   k_max, q_max  parameter grid for a and b
///   m_max         last index checked by the formula suite
///   j_max         last j of the alternating zero-sum identity
struct suite_ranges {
    long k_max = 5;
    long q_max = 5;
    long m_max = 25;
    long j_max = 20;

    static constexpr long k_limit = 12;
    static constexpr long q_limit = 12;
    static constexpr long m_limit = 60;
    static constexpr long j_limit = 40;

    void validate() const {
        auto check = [](const char* name, long v, long limit) {
            if (v < 0 || v > limit) {
                throw usage_error(std::string(name) + " must be in 0.." + std::to_string(limit) + ", got " +
                                  std::to_string(v));
            }
        };
        check("k-max", k_max, k_limit);
        check("q-max", q_max, q_limit);
        check("m-max", m_max, m_limit);
        check("j-max", j_max, j_limit);
    }
};

inline const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {"all", "formulas", "tables", "identities", "appendix", "oeis"};
    return names;
}

namespace detail {

inline std::string kq_id(long k, const rational& q) { return "k=" + std::to_string(k) + ",q=" + q.get_str(); }

inline json kq_inputs(long k, const rational& q) { return {{"k", k}, {"q", q.get_str()}}; }

template <class F>
std::vector<rational> tabulate(long n, F f) {
    std::vector<rational> out;
    out.reserve(static_cast<std::size_t>(n));
    for (long i = 0; i < n; ++i) out.push_back(f(i));
    return out;
}

inline std::vector<rational> parse_terms(const std::vector<std::string_view>& terms) {
    std::vector<rational> out;
    for (auto t : terms) out.push_back(parse_rational(t));
    return out;
}

/// Result text of an evaluation that may throw a library error.
template <class F>
std::string attempt(F f) {
    try {
        return f();
    } catch (const error& e) {
        return std::string("error: ") + e.what();
    }
}

inline verification_report formulas_suite(const suite_ranges& r) {
    verification_report rep;
    const long n = r.m_max + 1;
    for (long k = 0; k <= r.k_max; ++k) {
        for (long q = 0; q <= r.q_max; ++q) {
            const std::string id = "formulas/a/" + kq_id(k, q) + "/";
            json in = kq_inputs(k, q);
            in["m_max"] = r.m_max;
            auto at = [&](auto eval) {
                return join_terms(tabulate(n, [&](long m) { return eval(sequence_params{.k = k, .q = q, .index = m}); }));
            };
            const std::string reference = at([](const sequence_params& p) { return a_double_sum(p); });
            rep.add(make_case(id + "a_single_sum", in, reference,
                              at([](const sequence_params& p) { return a_single_sum(p); }), provenance::cross_formula));
            rep.add(make_case(id + "a_from_b", in, reference,
                              at([](const sequence_params& p) { return a_from_b(p); }), provenance::cross_formula));
            rep.add(make_case(id + "a_hypergeom", in, reference,
                              attempt([&] { return at([](const sequence_params& p) { return a_hypergeom(p); }); }),
                              provenance::cross_formula));
            if (q >= 1) {
                auto bt = [&](auto eval) {
                    return join_terms(tabulate(n, [&](long j) { return eval(sequence_params{.k = k, .q = q, .index = j}); }));
                };
                rep.add(make_case("formulas/b/" + kq_id(k, q) + "/b_hypergeom", in,
                                  bt([](const sequence_params& p) { return b_direct(p); }),
                                  bt([](const sequence_params& p) { return b_hypergeom(p); }), provenance::cross_formula));
            }

            // Generating-function routes.
            const long gn = std::max<long>(30, n);
            json gin = kq_inputs(k, q);
            gin["terms"] = gn;
            rep.add(make_case("formulas/gf/" + kq_id(k, q) + "/B_series", gin,
                              join_terms(b_direct_terms(k, q, gn)), join_terms(gf_series(B_gf(k, q), gn)),
                              provenance::cross_formula));
            const auto a_ref = tabulate(std::max<long>(41, n), [&](long m) {
                return a_double_sum({.k = k, .q = q, .index = m});
            });
            const auto a_gf = A_gf(k, q);
            rep.add(make_case("formulas/gf/" + kq_id(k, q) + "/A_series", gin,
                              join_terms(std::vector<rational>(a_ref.begin(), a_ref.begin() + gn)),
                              join_terms(gf_series(a_gf, gn)), provenance::cross_formula));
            json rin = kq_inputs(k, q);
            rin["terms"] = a_ref.size();
            rep.add(make_case("formulas/gf/" + kq_id(k, q) + "/A_recurrence", rin, join_terms(a_ref),
                              join_terms(recurrence_from_gf(a_gf).generate(a_ref.size())), provenance::cross_formula));
            rep.add(make_case("formulas/gf/" + kq_id(k, q) + "/involution", kq_inputs(k, q),
                              B_gf(k, q).to_string(), inverse_binomial_transform_gf(a_gf).to_string(),
                              provenance::cross_formula));
        }
    }
    // Denominator structure on the fixed 0..6 grid.
    for (long k = 0; k <= 6; ++k) {
        for (long q = 0; q <= 6; ++q) {
            const polynomial bound = polynomial{rational(1), rational(q)}.pow(static_cast<unsigned long>(k + 1));
            const polynomial den = B_gf(k, q).denominator();
            rep.add(make_case("formulas/gf/" + kq_id(k, q) + "/B_denominator", kq_inputs(k, q),
                              "divides " + bound.to_string(),
                              den.divides(bound) ? "divides " + bound.to_string() : "does not divide: " + den.to_string(),
                              provenance::cross_formula));
        }
    }
    // Rational q: the single sum is not claimed to hold; report only.
    for (const rational& q : {rational(1, 2), rational(3, 2)}) {
        for (long k = 0; k <= r.k_max; ++k) {
            const long mn = std::min<long>(n, 13);
            auto terms = [&](auto eval) {
                return join_terms(tabulate(mn, [&](long m) { return eval(sequence_params{.k = k, .q = q, .index = m}); }));
            };
            json in = kq_inputs(k, q);
            in["m_max"] = mn - 1;
            case_result c = make_case("formulas/experimental/" + kq_id(k, q) + "/a_single_sum", in,
                                      terms([](const sequence_params& p) { return a_double_sum(p); }),
                                      terms([](const sequence_params& p) { return a_single_sum(p); }),
                                      provenance::cross_formula);
            c.note = c.status == case_status::pass ? "agrees with the double sum" : "differs from the double sum";
            c.status = case_status::experimental;
            rep.add(std::move(c));
        }
    }
    return rep;
}

inline verification_report tables_suite() {
    verification_report rep;
    auto round_trip = [&](const std::string& id, const rational_gf& f, json in) {
        const long dn = std::max<long>(0, f.numerator().degree());
        const long dd = f.denominator().degree();
        const auto s = gf_series(f, static_cast<std::size_t>(2 * std::max(dn, dd) + 2));
        in["num_degree"] = dn;
        in["den_degree"] = dd;
        rep.add(make_case("tables/roundtrip/" + id, in, f.to_string(),
                          attempt([&] { return reconstruct_rational(s, dn, dd).to_string(); }), provenance::reference_table));
    };

    for (const auto& row : tables::b_rows()) {
        const rational q = parse_rational(row.q);
        const std::string id = "tables/b/" + kq_id(row.k, q);
        const auto listed = parse_terms(row.terms);
        const long n = static_cast<long>(listed.size());
        rep.add(make_case(id + "/terms", kq_inputs(row.k, q), join_terms(listed),
                          join_terms(b_direct_terms(row.k, q, n)), provenance::reference_table));
        const rational_gf expected = parse_rational_function(row.gf);
        if (is_integer(q)) {
            rep.add(make_case(id + "/gf", kq_inputs(row.k, q), expected.to_string(), B_gf(row.k, q).to_string(),
                              provenance::reference_table));
        } else {
            const long dn = std::max<long>(0, expected.numerator().degree());
            const long dd = expected.denominator().degree();
            const long terms = std::max<long>({8, n, dn + dd + 2});
            json in = kq_inputs(row.k, q);
            in["terms"] = terms;
            in["num_degree"] = dn;
            in["den_degree"] = dd;
            rep.add(make_case(id + "/gf_reconstructed", in, expected.to_string(),
                              attempt([&] { return reconstruct_rational(b_direct_terms(row.k, q, terms), dn, dd).to_string(); }),
                              provenance::reference_table));
            // The single sum at rational q is an open question: report only.
            auto a_terms = [&](auto eval) {
                return join_terms(tabulate(n, [&](long m) { return eval(sequence_params{.k = row.k, .q = q, .index = m}); }));
            };
            case_result c = make_case(id + "/a_single_sum_experimental", kq_inputs(row.k, q),
                                      a_terms([](const sequence_params& p) { return a_from_b(p); }),
                                      a_terms([](const sequence_params& p) { return a_single_sum(p); }),
                                      provenance::reference_table);
            c.note = c.status == case_status::pass ? "single sum agrees with the transform of b"
                                                   : "single sum differs from the transform of b";
            c.status = case_status::experimental;
            rep.add(std::move(c));
        }
        round_trip("b/" + kq_id(row.k, q), expected, kq_inputs(row.k, q));
    }

    for (const auto& row : tables::a_rows()) {
        const rational_gf expected = parse_rational_function(row.gf);
        json in = kq_inputs(row.k, row.q);
        if (!row.oeis.empty()) in["oeis"] = std::string(row.oeis);
        rep.add(make_case("tables/A/" + kq_id(row.k, row.q), in, expected.to_string(), A_gf(row.k, row.q).to_string(),
                          provenance::reference_table));
        round_trip("A/" + kq_id(row.k, row.q), expected, kq_inputs(row.k, row.q));
    }

    for (const auto& row : tables::c_rows()) {
        const std::string id = "J=" + std::to_string(row.J) + ",q=" + std::to_string(row.q);
        const json in = {{"J", row.J}, {"q", std::to_string(row.q)}};
        const auto listed = parse_terms(row.terms);
        const auto direct = tabulate(static_cast<long>(listed.size()),
                                     [&](long i) { return rational(c_direct(row.J, row.q, i)); });
        rep.add(make_case("tables/c/" + id + "/terms", in, join_terms(listed), join_terms(direct), provenance::reference_table));
        const rational_gf expected = parse_rational_function(row.gf);
        rep.add(make_case("tables/c/" + id + "/gf", in, expected.to_string("x"),
                          C_gf_stirling(row.J, row.q).to_string("x"), provenance::reference_table));
        round_trip("c/" + id, expected, in);
    }
    return rep;
}

inline verification_report identities_suite(const suite_ranges& r) {
    verification_report rep;
    for (long q = 1; q <= 6; ++q) {
        const long n = r.j_max + 1;
        rep.add(make_case("identities/zero_sum/q=" + std::to_string(q), {{"q", q}, {"j_max", r.j_max}},
                          join_terms(std::vector<rational>(static_cast<std::size_t>(n), rational(0))),
                          join_terms(tabulate(n, [&](long j) { return zero_sum_identity(j, q); })), provenance::identity));
    }
    for (long q = 1; q <= 4; ++q) {
        for (long j = 0; j <= 8; ++j) {
            const rational v = beta_integral(j, q);
            integer l = 1;
            for (long i = 2; i <= q * (j + 1); ++i) mpz_lcm_ui(l.get_mpz_t(), l.get_mpz_t(), static_cast<unsigned long>(i));
            const std::string want = "positive, denominator divides " + l.get_str();
            const bool ok = v > 0 && mpz_divisible_p(l.get_mpz_t(), v.get_den_mpz_t()) != 0;
            rep.add(make_case("identities/beta/j=" + std::to_string(j) + ",q=" + std::to_string(q),
                              {{"j", j}, {"q", q}, {"value", v.get_str()}}, want, ok ? want : "value " + v.get_str(),
                              provenance::identity));
        }
    }
    std::vector<rational> b0_qs;
    for (long q = 0; q <= 6; ++q) b0_qs.emplace_back(q);
    b0_qs.emplace_back(1, 2);
    b0_qs.emplace_back(3, 2);
    for (const auto& q : b0_qs) {
        rep.add(make_case("identities/b0q/q=" + q.get_str(), {{"q", q.get_str()}, {"j_max", 30}},
                          join_terms(tabulate(31, [&](long j) { return pow(rational(-q), static_cast<unsigned long>(j)); })),
                          join_terms(b_direct_terms(0, q, 31)), provenance::identity));
    }
    for (long k = 0; k <= 8; ++k) {
        const auto b = b_direct_terms(k, 1, 27);
        rep.add(make_case("identities/bk1/k=" + std::to_string(k) + "/closed_form", {{"k", k}, {"j_max", 25}},
                          join_terms(tabulate(26, [&](long j) { return b_k1_closed(k, j); })),
                          join_terms(std::vector<rational>(b.begin(), b.begin() + 26)), provenance::identity));
        rep.add(make_case("identities/bk1/k=" + std::to_string(k) + "/recurrence", {{"k", k}, {"j_max", 25}},
                          join_terms(std::vector<rational>(26, rational(0))),
                          join_terms(tabulate(26, [&](long j) {
                              const auto ju = static_cast<std::size_t>(j);
                              return rational((j + 1) * b[ju + 1] + (k + j + 1) * b[ju]);
                          })),
                          provenance::identity));
    }
    for (long k = 0; k <= 12; ++k) {
        std::vector<integer> want, got;
        for (long n = 0; n <= 12; ++n) {
            want.push_back(pow(integer(k), static_cast<unsigned long>(n)));
            got.push_back(power_via_stirling(k, n));
        }
        rep.add(make_case("identities/power_via_stirling/k=" + std::to_string(k), {{"k", k}, {"n_max", 12}},
                          join_terms(want), join_terms(got), provenance::identity));
    }
    for (long J = 1; J <= 12; ++J) {
        for (auto form : {power_form::absolute, power_form::shifted}) {
            std::vector<rational> lhs, rhs;
            for (long t = 0; t <= J; ++t) {
                auto [l, r2] = stirling_binomial_transform_check(J, t, form);
                lhs.push_back(l);
                rhs.push_back(r2);
            }
            const std::string f = form == power_form::absolute ? "J^l" : "J^(l-t)";
            rep.add(make_case("identities/stirling_transform/J=" + std::to_string(J) + "/" + f,
                              {{"J", J}, {"form", f}}, join_terms(rhs), join_terms(lhs), provenance::identity));
        }
    }
    for (long n = 0; n <= 10; ++n) {
        auto [lhs, rhs] = stirling_omega_identity_check(n);
        rep.add(make_case("identities/stirling_omega/n=" + std::to_string(n), {{"n", n}}, lhs.to_string("x"),
                          rhs.to_string("x"), provenance::identity));
    }
    return rep;
}

inline verification_report appendix_suite() {
    verification_report rep;
    for (long J = 0; J <= 6; ++J) {
        for (long q = 0; q <= 5; ++q) {
            const json in = {{"J", J}, {"q", std::to_string(q)}, {"terms", 30}};
            const auto f = C_gf_stirling(J, q);
            rep.add(make_case("appendix/C_series/J=" + std::to_string(J) + ",q=" + std::to_string(q), in,
                              join_terms(tabulate(30, [&](long i) { return rational(c_direct(J, q, i)); })),
                              join_terms(gf_series(f, 30)), provenance::cross_formula));
        }
    }
    const rational_gf one_minus_z(polynomial{1, -1});
    for (long J = 0; J <= 8; ++J) {
        rep.add(make_case("appendix/C2/J=" + std::to_string(J) + "/closed_form", {{"J", J}},
                          C_gf_stirling(J, 2).to_string(), C2_closed_form(J).to_string(), provenance::identity));
        if (J >= 2) {
            rep.add(make_case("appendix/C2/J=" + std::to_string(J) + "/recurrence", {{"J", J}},
                              (rational(2) * C2_closed_form(J - 1) - C2_closed_form(J - 2)).to_string(),
                              (one_minus_z * C2_closed_form(J)).to_string(), provenance::identity));
        }
    }
    for (long n = 0; n <= 8; ++n) {
        const auto f = power_sum_gf(n);
        rep.add(make_case("appendix/power_sum/n=" + std::to_string(n) + "/eulerian_row", {{"n", n}},
                          join_terms(eulerian_numerator_row(n)),
                          join_terms(f.numerator().coefficients()), provenance::identity));
        rep.add(make_case("appendix/power_sum/n=" + std::to_string(n) + "/routes", {{"n", n}},
                          power_sum_gf_eulerian(n).to_string("x"), f.to_string("x"), provenance::cross_formula));
        rep.add(make_case("appendix/power_sum/n=" + std::to_string(n) + "/series", {{"n", n}, {"terms", 12}},
                          join_terms(tabulate(12, [&](long k) { return rational(pow(integer(k), static_cast<unsigned long>(n))); })),
                          join_terms(gf_series(f, 12)), provenance::identity));
    }
    rep.add(make_case("appendix/omega/n=3", {{"n", 3}}, "x + 6*x^2 + 6*x^3", omega_poly(3).to_string("x"),
                      provenance::reference_table));
    rep.add(make_case("appendix/omega/n=4", {{"n", 4}}, "x + 14*x^2 + 36*x^3 + 24*x^4", omega_poly(4).to_string("x"),
                      provenance::reference_table));
    return rep;
}

inline verification_report oeis_suite(bool offline, const oeis_source& src) {
    verification_report rep;
    for (const auto& m : load_mappings(src.fixture_dir)) {
        const auto fixture = fetch_bfile(m.oeis_id, 10000, offline, src);
        long last = 0;
        for (const auto& e : fixture) last = std::max(last, e.first);
        const auto computed = mapped_terms(m, static_cast<std::size_t>(std::max<long>(last + max_auto_shift + 1, 1)));
        rep.add(compare_with_oeis(m, fixture, computed));
    }
    return rep;
}

}  // namespace detail

/// Runs one suite ("all" runs every suite). Cases come back sorted by case_id.
inline verification_report run_suite(const std::string& name, const suite_ranges& ranges = {}, bool offline = true,
                                     const oeis_source& src = oeis_source::from_environment()) {
    if (std::find(suite_names().begin(), suite_names().end(), name) == suite_names().end()) {
        throw usage_error("unknown suite '" + name + "' (expected all, formulas, tables, identities, appendix or oeis)");
    }
    ranges.validate();
    verification_report rep;
    rep.suite = name;
    const bool all = name == "all";
    if (all || name == "formulas") rep.append(detail::formulas_suite(ranges));
    if (all || name == "tables") rep.append(detail::tables_suite());
    if (all || name == "identities") rep.append(detail::identities_suite(ranges));
    if (all || name == "appendix") rep.append(detail::appendix_suite());
    if (all || name == "oeis") rep.append(detail::oeis_suite(offline, src));
    rep.finalize();
    return rep;
}

}  // namespace binsum
