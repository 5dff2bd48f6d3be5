#pragma once

#include <cstddef>
#include <fstream>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "binsum/bfile.hpp"
#include "binsum/errors.hpp"
#include "binsum/genfunc.hpp"
#include "binsum/number.hpp"
#include "binsum/oeis.hpp"
#include "binsum/report.hpp"
#include "binsum/sequences.hpp"

namespace binsum {

/// Links an OEIS entry to one of our sequences. For family "gf-numerator"
/// the sequence is a triangle read by rows, chosen by `kind`:
///   C2       numerators of C_{J,2}, J = 0, 1, ...
///   omega    coefficients x^1..x^n of omega_n, n = 1, 2, ...
///   eulerian numerators of sum_k k^n x^k, n = 0, 1, ..., x^0..x^n
///
/// Computed term i is compared with the b-file entry of index i + offset_shift.
struct oeis_mapping {
    std::string oeis_id;
    std::string family;
    std::string kind;
    sequence_params params;
    std::optional<long> offset_shift;
    std::string note;
};

inline constexpr long min_matching_terms = 20;
inline constexpr long max_auto_shift = 5;

inline std::vector<oeis_mapping> parse_mappings(const std::string& text) {
    const auto doc = nlohmann::json::parse(text);
    std::vector<oeis_mapping> out;
    for (const auto& e : doc.at("mappings")) {
        oeis_mapping m;
        m.oeis_id = e.at("oeis_id").get<std::string>();
        validate_oeis_id(m.oeis_id);
        m.family = e.at("family").get<std::string>();
        m.kind = e.value("kind", "");
        if (e.contains("params")) {
            const auto& p = e["params"];
            m.params.k = p.value("k", 0L);
            m.params.q = parse_rational(p.value("q", std::string("0")));
            m.params.J = p.value("J", 0L);
        }
        if (e.contains("offset_shift") && !e["offset_shift"].is_null()) m.offset_shift = e["offset_shift"].get<long>();
        m.note = e.value("note", "");
        out.push_back(std::move(m));
    }
    return out;
}

inline std::vector<oeis_mapping> load_mappings(const fs::path& fixture_dir) {
    return parse_mappings(detail::read_file(fixture_dir / "mappings.json"));
}

/// The first `count` terms of the mapped sequence.
inline std::vector<integer> mapped_terms(const oeis_mapping& m, std::size_t count) {
    std::vector<integer> out;
    auto push_all = [&](const std::vector<rational>& v) {
        for (const auto& x : v) {
            if (out.size() == count) return;
            out.push_back(to_integer(x, m.oeis_id));
        }
    };
    if (m.family == "a") {
        push_all(gf_series(A_gf(m.params.k, m.params.q), count));
    } else if (m.family == "b") {
        push_all(gf_series(B_gf(m.params.k, m.params.q), count));
    } else if (m.family == "c") {
        const long q = m.params.integer_q("c");
        for (std::size_t i = 0; i < count; ++i) out.push_back(c_direct(m.params.J, q, static_cast<long>(i)));
    } else if (m.family == "gf-numerator") {
        for (long n = 0; out.size() < count; ++n) {
            if (m.kind == "C2") {
                push_all(C2_closed_form(n).numerator().coefficients());
            } else if (m.kind == "omega") {
                if (n == 0) continue;
                const polynomial w = omega_poly(n);
                push_all(std::vector<rational>(w.coefficients().begin() + 1, w.coefficients().end()));
            } else if (m.kind == "eulerian") {
                std::vector<rational> row(static_cast<std::size_t>(n) + 1);
                const rational_gf f = power_sum_gf(n);
                std::copy(f.numerator().coefficients().begin(), f.numerator().coefficients().end(), row.begin());
                push_all(row);
            } else {
                throw usage_error("unknown gf-numerator kind '" + m.kind + "' for " + m.oeis_id);
            }
        }
    } else {
        throw usage_error("unknown family '" + m.family + "' for " + m.oeis_id);
    }
    return out;
}

struct shift_comparison {
    long shift = 0;
    long compared = 0;
    std::optional<long> first_divergent_index;  // b-file index
    std::vector<integer> expected;
    std::vector<integer> actual;

    bool matches() const { return !first_divergent_index && compared >= min_matching_terms; }
};

inline shift_comparison compare_at_shift(const std::vector<bfile_entry>& fixture, const std::vector<integer>& computed,
                                         long shift) {
    shift_comparison r;
    r.shift = shift;
    for (const auto& [index, value] : fixture) {
        const long i = index - shift;
        if (i < 0 || i >= static_cast<long>(computed.size())) continue;
        const auto& mine = computed[static_cast<std::size_t>(i)];
        r.expected.push_back(value);
        r.actual.push_back(mine);
        ++r.compared;
        if (mine != value && !r.first_divergent_index) r.first_divergent_index = index;
    }
    return r;
}

/// Smallest |shift| in -5..5 (negative first on ties) giving an exact match
/// of at least 20 terms.
inline std::optional<long> resolve_shift(const std::vector<bfile_entry>& fixture, const std::vector<integer>& computed) {
    for (long mag = 0; mag <= max_auto_shift; ++mag) {
        for (long s : {-mag, mag}) {
            if (compare_at_shift(fixture, computed, s).matches()) return s;
            if (mag == 0) break;
        }
    }
    return std::nullopt;
}

inline case_result compare_with_oeis(const oeis_mapping& m, const std::vector<bfile_entry>& fixture,
                                     const std::vector<integer>& computed) {
    json inputs;
    inputs["oeis_id"] = m.oeis_id;
    inputs["family"] = m.family;
    if (!m.kind.empty()) inputs["kind"] = m.kind;
    inputs["params"] = {{"k", m.params.k}, {"q", m.params.q.get_str()}, {"J", m.params.J}};
    inputs["terms"] = fixture.size();

    std::optional<long> shift = m.offset_shift;
    std::string how = "pinned";
    if (!shift) {
        shift = resolve_shift(fixture, computed);
        how = "auto";
    }
    shift_comparison cmp;
    if (shift) {
        cmp = compare_at_shift(fixture, computed, *shift);
    } else {
        // Report the shift whose agreement runs longest before diverging.
        long best_run = -1;
        for (long s = -max_auto_shift; s <= max_auto_shift; ++s) {
            auto c = compare_at_shift(fixture, computed, s);
            long run = c.compared;
            if (c.first_divergent_index) run = *c.first_divergent_index - fixture.front().first;
            if (run > best_run) {
                best_run = run;
                cmp = std::move(c);
            }
        }
    }
    inputs["offset_shift"] = cmp.shift;
    case_result r{"oeis/" + m.oeis_id, inputs, join_terms(cmp.expected, " "), join_terms(cmp.actual, " "),
                  case_status::fail, provenance::oeis, {}};
    if (cmp.matches() && shift) {
        r.status = case_status::pass;
        r.note = how + " shift " + std::to_string(cmp.shift) + ", " + std::to_string(cmp.compared) + " terms match";
    } else if (cmp.first_divergent_index) {
        const long idx = *cmp.first_divergent_index;
        const long i = idx - cmp.shift;
        std::string theirs, mine;
        for (const auto& [index, value] : fixture) {
            if (index == idx) theirs = value.get_str();
        }
        mine = computed[static_cast<std::size_t>(i)].get_str();
        r.note = "mismatch at b-file index " + std::to_string(idx) + " (shift " + std::to_string(cmp.shift) +
                 "): expected " + theirs + ", computed " + mine;
    } else {
        r.note = "only " + std::to_string(cmp.compared) + " overlapping terms at shift " + std::to_string(cmp.shift) +
                 "; need " + std::to_string(min_matching_terms);
    }
    return r;
}

}  // namespace binsum
