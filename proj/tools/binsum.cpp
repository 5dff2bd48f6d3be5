// binsum command-line front end: seq, gf, recur, verify, oeis.
//
// Exit codes: 0 success, 1 verification failure, 2 usage or parameter
// error, 3 b-file transport or fixture error. Output goes to stdout only
// once a command has succeeded; errors are one line on stderr.

#include <algorithm>
#include <cctype>
#include <chrono>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "binsum/binsum.hpp"

using namespace binsum;

namespace {

enum exit_code { ok = 0, verification_failed = 1, usage = 2, transport = 3 };

struct options {
    std::string family;
    std::optional<long> k;
    std::optional<long> J;
    std::string q_text;
    long n_max = 16;
    std::string format = "text";
    std::string method;
    bool reconstruct = false;
    long terms = 16;
    bool offline = false;
    std::string suite = "all";
    suite_ranges ranges;
    bool timing = false;
    std::string oeis_id;
    bool compare = false;
};

struct parsed_family {
    char letter = 'a';  // 'a', 'b' or 'c'
    long k = 0;
    long J = 0;
    rational q;
};

parsed_family resolve_family(const options& o) {
    std::string f = o.family;
    if (f.size() != 1) throw usage_error("--family must be one of a, b, c (or A, B, C), got '" + f + "'");
    const char letter = static_cast<char>(std::tolower(static_cast<unsigned char>(f[0])));
    if (letter != 'a' && letter != 'b' && letter != 'c') {
        throw usage_error("--family must be one of a, b, c (or A, B, C), got '" + f + "'");
    }
    parsed_family p;
    p.letter = letter;
    if (o.q_text.empty()) throw usage_error("--q is required");
    try {
        p.q = parse_rational(o.q_text);
    } catch (const error&) {
        throw usage_error("invalid --q literal '" + o.q_text + "': expected p or p/r");
    }
    if (p.q < 0) throw usage_error("--q must be nonnegative");
    if (letter == 'c') {
        if (!o.J) throw usage_error("family c requires --J");
        if (o.k) throw usage_error("family c takes --J, not --k");
        if (*o.J < 0) throw usage_error("--J must be nonnegative");
        if (!is_integer(p.q)) throw unsupported_parameter("family c requires integer q, got " + p.q.get_str());
        p.J = *o.J;
    } else {
        if (!o.k) throw usage_error(std::string("family ") + letter + " requires --k");
        if (o.J) throw usage_error(std::string("family ") + letter + " takes --k, not --J");
        if (*o.k < 0) throw usage_error("--k must be nonnegative");
        p.k = *o.k;
    }
    return p;
}

long small_q(const parsed_family& p) {
    return sequence_params{.q = p.q}.integer_q(std::string("family ") + p.letter);
}

json params_json(const parsed_family& p) {
    json j;
    j["k"] = p.k;
    j["q"] = p.q.get_str();
    j["J"] = p.J;
    return j;
}

json strings(const std::vector<rational>& v) {
    json a = json::array();
    for (const auto& x : v) a.push_back(x.get_str());
    return a;
}

std::string var_for(const parsed_family& p) { return p.letter == 'c' ? "x" : "z"; }

std::vector<rational> sequence_terms(const parsed_family& p, const std::string& method, long n) {
    std::string m = method;
    if (m.empty()) m = p.letter == 'a' ? "double" : "direct";
    auto by_index = [&](auto eval) {
        std::vector<rational> out;
        for (long i = 0; i < n; ++i) out.push_back(eval(sequence_params{.k = p.k, .q = p.q, .index = i}));
        return out;
    };
    switch (p.letter) {
        case 'a':
            if (m == "double") return by_index([](const sequence_params& s) { return a_double_sum(s); });
            if (m == "single") return by_index([](const sequence_params& s) { return a_single_sum(s); });
            if (m == "from-b") return by_index([](const sequence_params& s) { return a_from_b(s); });
            if (m == "hypergeom") return by_index([](const sequence_params& s) { return a_hypergeom(s); });
            if (m == "gf") return gf_series(A_gf(p.k, p.q), static_cast<std::size_t>(n));
            throw usage_error("--method for family a must be double, single, from-b, hypergeom or gf");
        case 'b':
            if (m == "direct") return b_direct_terms(p.k, p.q, n);
            if (m == "hypergeom") return by_index([](const sequence_params& s) { return b_hypergeom(s); });
            if (m == "gf") return gf_series(B_gf(p.k, p.q), static_cast<std::size_t>(n));
            throw usage_error("--method for family b must be direct, hypergeom or gf");
        default: {
            const long q = small_q(p);
            if (m == "direct") {
                std::vector<rational> out;
                for (long i = 0; i < n; ++i) out.emplace_back(c_direct(p.J, q, i));
                return out;
            }
            if (m == "gf") return gf_series(C_gf_stirling(p.J, q), static_cast<std::size_t>(n));
            throw usage_error("--method for family c must be direct or gf");
        }
    }
}

std::string render_terms(const parsed_family& p, const std::vector<rational>& terms, const std::string& format) {
    if (format == "text") return join_terms(terms, " ") + "\n";
    if (format == "csv") return join_terms(terms, ",") + "\n";
    if (format == "bfile") {
        std::vector<integer> ints;
        for (const auto& t : terms) {
            if (!is_integer(t)) throw unsupported_parameter("b-file output needs integer terms; use --format text, csv or json");
            ints.push_back(t.get_num());
        }
        return format_bfile(ints, 0);
    }
    json j;
    j["family"] = std::string(1, p.letter);
    j["params"] = params_json(p);
    j["terms"] = strings(terms);
    return j.dump(2) + "\n";
}

rational_gf family_gf(const parsed_family& p, const options& o) {
    if (o.reconstruct) {
        if (o.terms < 2) throw usage_error("--terms must be at least 2");
        const auto s = sequence_terms(p, "", o.terms);
        return reconstruct_rational_auto(s, o.terms - 2);
    }
    switch (p.letter) {
        case 'a': return A_gf(p.k, p.q);
        case 'b': return B_gf(p.k, p.q);
        default: return C_gf_stirling(p.J, small_q(p));
    }
}

std::string signed_term(const rational& c, const std::string& body, bool first) {
    std::string out;
    const bool neg = c < 0;
    const rational mag = abs(c);
    if (first) {
        out = neg ? "-" : "";
    } else {
        out = neg ? " - " : " + ";
    }
    if (mag != 1) out += mag.get_str() + "*";
    return out + body;
}

std::string describe_recurrence(char name, const c_finite_recurrence& r) {
    std::string rhs;
    bool first = true;
    for (long i = 1; i <= r.order; ++i) {
        const rational& c = r.coefficients[static_cast<std::size_t>(i - 1)];
        if (c == 0) continue;
        rhs += signed_term(c, std::string(1, name) + "(n-" + std::to_string(i) + ")", first);
        first = false;
    }
    if (first) rhs = "0";
    std::string out;
    out += "order: " + std::to_string(r.order) + "\n";
    out += "recurrence: " + std::string(1, name) + "(n) = " + rhs + ", n >= " + std::to_string(r.offset + r.order) + "\n";
    out += "coefficients: " + join_terms(r.coefficients, ", ") + "\n";
    out += "offset: " + std::to_string(r.offset) + "\n";
    out += "initial: " + join_terms(r.initial_terms, ", ") + "\n";
    return out;
}

json gf_json(const rational_gf& f) {
    return {{"num", strings(f.numerator().coefficients())}, {"den", strings(f.denominator().coefficients())}};
}

int cmd_seq(const options& o, std::string& out) {
    const auto p = resolve_family(o);
    out = render_terms(p, sequence_terms(p, o.method, o.n_max), o.format);
    return ok;
}

int cmd_gf(const options& o, std::string& out) {
    const auto p = resolve_family(o);
    const auto f = family_gf(p, o);
    if (o.format == "text") {
        out = f.to_string(var_for(p)) + "\n";
    } else if (o.format == "json") {
        json j;
        j["family"] = std::string(1, static_cast<char>(std::toupper(p.letter)));
        j["params"] = params_json(p);
        j["gf"] = gf_json(f);
        j["text"] = f.to_string(var_for(p));
        out = j.dump(2) + "\n";
    } else {
        throw usage_error("gf supports --format text or json");
    }
    return ok;
}

int cmd_recur(const options& o, std::string& out) {
    const auto p = resolve_family(o);
    const auto f = family_gf(p, o);
    const auto r = recurrence_from_gf(f);
    if (o.format == "text") {
        out = describe_recurrence(p.letter, r);
    } else if (o.format == "json") {
        json j;
        j["family"] = std::string(1, static_cast<char>(std::toupper(p.letter)));
        j["params"] = params_json(p);
        j["gf"] = gf_json(f);
        j["recurrence"] = {{"order", r.order},
                           {"coeffs", strings(r.coefficients)},
                           {"init", strings(r.initial_terms)},
                           {"offset", r.offset}};
        out = j.dump(2) + "\n";
    } else {
        throw usage_error("recur supports --format text or json");
    }
    return ok;
}

int cmd_verify(const options& o, std::string& out) {
    const auto start = std::chrono::steady_clock::now();
    auto rep = run_suite(o.suite, o.ranges, o.offline);
    if (o.timing) rep.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    out = rep.to_json().dump(2) + "\n";
    return rep.passed() ? ok : verification_failed;
}

int cmd_oeis(const options& o, std::string& out) {
    const auto src = oeis_source::from_environment();
    const auto entries = fetch_bfile(o.oeis_id, static_cast<std::size_t>(o.n_max), o.offline, src);
    if (!o.compare) {
        if (o.format == "bfile" || o.format == "text") {
            out = format_bfile(entries);
        } else if (o.format == "csv") {
            std::vector<integer> v;
            for (const auto& e : entries) v.push_back(e.second);
            out = join_terms(v, ",") + "\n";
        } else {
            json j;
            j["oeis_id"] = o.oeis_id;
            json a = json::array();
            for (const auto& [i, v] : entries) a.push_back({std::to_string(i), v.get_str()});
            j["bfile"] = std::move(a);
            out = j.dump(2) + "\n";
        }
        return ok;
    }
    const auto maps = load_mappings(src.fixture_dir);
    const auto it = std::find_if(maps.begin(), maps.end(), [&](const oeis_mapping& m) { return m.oeis_id == o.oeis_id; });
    if (it == maps.end()) throw usage_error("no mapping for " + o.oeis_id + " in " + (src.fixture_dir / "mappings.json").string());
    long last = 0;
    for (const auto& e : entries) last = std::max(last, e.first);
    const auto result = compare_with_oeis(*it, entries, mapped_terms(*it, static_cast<std::size_t>(last + max_auto_shift + 1)));
    verification_report rep;
    rep.suite = "oeis/" + o.oeis_id;
    rep.add(result);
    out = rep.to_json().dump(2) + "\n";
    return rep.passed() ? ok : verification_failed;
}

std::string one_line(std::string s) {
    std::replace(s.begin(), s.end(), '\n', ' ');
    while (!s.empty() && s.back() == ' ') s.pop_back();
    return s;
}

int fail(const std::string& message, int code) {
    std::cerr << "binsum: error: " << one_line(message) << "\n";
    return code;
}

void add_family_options(CLI::App* cmd, options& o, bool with_format) {
    cmd->add_option("--family", o.family, "a, b or c (case-insensitive)")->required();
    cmd->add_option("--k", o.k, "k for families a and b");
    cmd->add_option("--q", o.q_text, "q as p or p/r")->required();
    cmd->add_option("--J", o.J, "J for family c");
    if (with_format) cmd->add_option("--format", o.format, "text, csv, bfile or json");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"binsum: exact binomial-sum sequences, generating functions and checks"};
    app.require_subcommand(1);
    options o;

    auto* seq = app.add_subcommand("seq", "print sequence terms");
    add_family_options(seq, o, true);
    seq->add_option("--n-max", o.n_max, "number of terms (default 16)")->check(CLI::Range(1L, 100000L));
    seq->add_option("--method", o.method, "a: double|single|from-b|hypergeom|gf; b: direct|hypergeom|gf; c: direct|gf");

    auto* gf = app.add_subcommand("gf", "print the generating function");
    add_family_options(gf, o, true);
    gf->add_flag("--reconstruct", o.reconstruct, "fit the GF to computed terms (allows rational q)");
    gf->add_option("--terms", o.terms, "terms used by --reconstruct (default 16)")->check(CLI::Range(2L, 2000L));

    auto* recur = app.add_subcommand("recur", "print the linear recurrence");
    add_family_options(recur, o, true);
    recur->add_flag("--reconstruct", o.reconstruct, "fit the GF to computed terms first");
    recur->add_option("--terms", o.terms, "terms used by --reconstruct (default 16)")->check(CLI::Range(2L, 2000L));

    auto* verify = app.add_subcommand("verify", "run verification suites, print a JSON report");
    verify->add_option("--suite", o.suite, "all, formulas, tables, identities, appendix or oeis");
    verify->add_option("--k-max", o.ranges.k_max, "largest k in the formula grid (default 5)");
    verify->add_option("--q-max", o.ranges.q_max, "largest q in the formula grid (default 5)");
    verify->add_option("--m-max", o.ranges.m_max, "largest index in the formula grid (default 25)");
    verify->add_option("--j-max", o.ranges.j_max, "largest j for the zero-sum identity (default 20)");
    verify->add_flag("--offline", o.offline, "use cached or bundled b-files only");
    verify->add_flag("--timing", o.timing, "include wall_time in the report");

    auto* oeis = app.add_subcommand("oeis", "fetch a b-file, or compare it with our sequence");
    oeis->add_option("id", o.oeis_id, "A-number, e.g. A027471")->required();
    oeis->add_flag("--offline", o.offline, "use cached or bundled b-files only");
    oeis->add_flag("--compare", o.compare, "compare against the mapped sequence");
    oeis->add_option("--n-max", o.n_max, "maximum number of b-file entries")->check(CLI::Range(1L, 1000000L));
    oeis->add_option("--format", o.format, "bfile, csv or json");
    o.n_max = 16;

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        std::cout << app.help();
        return ok;
    } catch (const CLI::CallForAllHelp&) {
        std::cout << app.help("", CLI::AppFormatMode::All);
        return ok;
    } catch (const CLI::ParseError& e) {
        return fail(e.what(), usage);
    }
    if (oeis->parsed() && oeis->count("--n-max") == 0) o.n_max = 100000;
    if (!(o.format == "text" || o.format == "csv" || o.format == "bfile" || o.format == "json")) {
        return fail("--format must be text, csv, bfile or json, got '" + o.format + "'", usage);
    }

    std::string out;
    int code = ok;
    try {
        if (seq->parsed()) code = cmd_seq(o, out);
        if (gf->parsed()) code = cmd_gf(o, out);
        if (recur->parsed()) code = cmd_recur(o, out);
        if (verify->parsed()) code = cmd_verify(o, out);
        if (oeis->parsed()) code = cmd_oeis(o, out);
    } catch (const transport_error& e) {
        return fail(e.what(), transport);
    } catch (const fixture_missing& e) {
        return fail(e.what(), transport);
    } catch (const parse_error& e) {
        return fail(e.what(), transport);
    } catch (const error& e) {
        return fail(e.what(), usage);
    } catch (const std::exception& e) {
        return fail(e.what(), usage);
    }
    std::cout << out << std::flush;
    return code;
}
