#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "binsum/errors.hpp"
#include "binsum/number.hpp"

namespace binsum {

using json = nlohmann::ordered_json;

enum class case_status { pass, fail, experimental };
enum class provenance { reference_table, cross_formula, oeis, identity };

inline std::string to_string(case_status s) {
    switch (s) {
        case case_status::pass: return "pass";
        case case_status::fail: return "fail";
        case case_status::experimental: return "experimental";
    }
    return "fail";
}

inline std::string to_string(provenance p) {
    switch (p) {
        case provenance::reference_table: return "paper-table";
        case provenance::cross_formula: return "cross-formula";
        case provenance::oeis: return "oeis";
        case provenance::identity: return "identity";
    }
    return "identity";
}

struct case_result {
    std::string case_id;
    json inputs = json::object();
    std::string expected;
    std::string actual;
    case_status status = case_status::fail;
    provenance origin = provenance::identity;
    std::string note;
};

/// Builds a case whose status follows expected == actual.
inline case_result make_case(std::string id, json inputs, std::string expected, std::string actual, provenance origin,
                             std::string note = {}) {
    case_result c{std::move(id), std::move(inputs), std::move(expected), std::move(actual), case_status::fail, origin,
                  std::move(note)};
    c.status = (c.expected == c.actual) ? case_status::pass : case_status::fail;
    return c;
}

template <class Range>
std::string join_terms(const Range& terms, const char* sep = ",") {
    std::string out;
    bool first = true;
    for (const auto& t : terms) {
        if (!first) out += sep;
        out += t.get_str();
        first = false;
    }
    return out;
}

struct report_summary {
    std::size_t total = 0;
    std::size_t passed = 0;
    std::size_t failed = 0;
    std::size_t experimental = 0;
};

struct verification_report {
    std::string suite;
    std::vector<case_result> cases;
    std::optional<double> wall_time;

    void add(case_result c) { cases.push_back(std::move(c)); }

    void append(verification_report other) {
        for (auto& c : other.cases) cases.push_back(std::move(c));
    }

    /// Orders cases by case_id so equal inputs give equal reports.
    void finalize() {
        std::stable_sort(cases.begin(), cases.end(),
                         [](const case_result& a, const case_result& b) { return a.case_id < b.case_id; });
    }

    report_summary summary() const {
        report_summary s;
        s.total = cases.size();
        for (const auto& c : cases) {
            switch (c.status) {
                case case_status::pass: ++s.passed; break;
                case case_status::fail: ++s.failed; break;
                case case_status::experimental: ++s.experimental; break;
            }
        }
        return s;
    }

    bool passed() const { return summary().failed == 0; }

    std::vector<const case_result*> failures() const {
        std::vector<const case_result*> out;
        for (const auto& c : cases) {
            if (c.status == case_status::fail) out.push_back(&c);
        }
        return out;
    }

    json to_json() const {
        const auto s = summary();
        json j;
        j["suite"] = suite;
        j["status"] = passed() ? "pass" : "fail";
        j["summary"] = {{"total", s.total}, {"pass", s.passed}, {"fail", s.failed}, {"experimental", s.experimental}};
        if (wall_time) j["wall_time"] = *wall_time;
        json arr = json::array();
        for (const auto& c : cases) {
            json e;
            e["case_id"] = c.case_id;
            e["inputs"] = c.inputs;
            e["expected"] = c.expected;
            e["actual"] = c.actual;
            e["status"] = to_string(c.status);
            e["provenance"] = to_string(c.origin);
            if (!c.note.empty()) e["note"] = c.note;
            arr.push_back(std::move(e));
        }
        j["cases"] = std::move(arr);
        return j;
    }
};

}  // namespace binsum
