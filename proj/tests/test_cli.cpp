#include <catch_amalgamated.hpp>

#include <stdlib.h>
#include <sys/wait.h>
#include <unistd.h>

#include <array>
#include <cstdio>
#include <string>

#include <json.hpp>

#include "binsum/bfile.hpp"

using namespace binsum;

namespace {

struct outcome {
    int code = -1;
    std::string out;
    std::string err;
};

// Empty cache so offline lookups see only the bundled fixtures.
const std::string& cache_dir() {
    static const std::string dir = [] {
        std::string d = "/tmp/binsum-cli-test-" + std::to_string(::getpid());
        ::setenv("BINSUM_CACHE_DIR", d.c_str(), 1);
        return d;
    }();
    return dir;
}

// Runs the CLI with stderr captured to a temp file.
outcome cli(const std::string& args) {
    cache_dir();
    std::string err_path = "/tmp/binsum-cli-stderr-XXXXXX";
    const int fd = ::mkstemp(err_path.data());
    REQUIRE(fd >= 0);
    ::close(fd);
    const std::string cmd = std::string("'") + BINSUM_CLI_PATH + "' " + args + " 2>'" + err_path + "'";
    outcome o;
    FILE* p = ::popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    std::array<char, 4096> buf{};
    std::size_t n = 0;
    while ((n = std::fread(buf.data(), 1, buf.size(), p)) > 0) o.out.append(buf.data(), n);
    const int status = ::pclose(p);
    o.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    if (FILE* e = std::fopen(err_path.c_str(), "r")) {
        while ((n = std::fread(buf.data(), 1, buf.size(), e)) > 0) o.err.append(buf.data(), n);
        std::fclose(e);
    }
    std::remove(err_path.c_str());
    return o;
}

void expect_usage_error(const std::string& args) {
    INFO(args);
    const auto o = cli(args);
    CHECK(o.code == 2);
    CHECK(o.out.empty());
    REQUIRE_FALSE(o.err.empty());
    CHECK(o.err.find('\n') == o.err.size() - 1);
}

}  // namespace

TEST_CASE("seq examples", "[cli]") {
    CHECK(cli("seq --family b --k 1 --q 2 --n-max 5 --format csv").out == "1,-5,16,-44,112\n");
    CHECK(cli("seq --family a --k 0 --q 1 --n-max 4").out == "1 2 4 8\n");
    CHECK(cli("seq --family c --J 2 --q 4 --n-max 3").out == "1 15 45\n");
    CHECK(cli("seq --family A --k 1 --q 2 --n-max 4").out == "1 6 27 108\n");
    CHECK(cli("seq --family b --k 1 --q 1/2 --n-max 3").out == "1 -7/8 5/8\n");
    for (const char* m : {"double", "single", "from-b", "hypergeom", "gf"}) {
        INFO(m);
        CHECK(cli(std::string("seq --family a --k 2 --q 3 --n-max 10 --method ") + m).out ==
              cli("seq --family a --k 2 --q 3 --n-max 10").out);
    }
    CHECK(cli("seq --family b --k 3 --q 4 --n-max 12 --method gf").out == cli("seq --family b --k 3 --q 4 --n-max 12").out);
    CHECK(cli("seq --family c --J 3 --q 2 --n-max 12 --method gf").out == cli("seq --family c --J 3 --q 2 --n-max 12").out);
}

TEST_CASE("b-file output round-trips through the parser", "[cli]") {
    const auto o = cli("seq --family a --k 5 --q 6 --n-max 30 --format bfile");
    REQUIRE(o.code == 0);
    const auto entries = parse_bfile(o.out);
    REQUIRE(entries.size() == 30);
    CHECK(entries[0] == bfile_entry{0, integer(1)});
    CHECK(format_bfile(entries) == o.out);
}

TEST_CASE("json output", "[cli]") {
    const auto o = cli("recur --family A --k 1 --q 2 --format json");
    REQUIRE(o.code == 0);
    const auto j = nlohmann::json::parse(o.out);
    CHECK(j["family"] == "A");
    CHECK(j["params"]["q"] == "2");
    CHECK(j["recurrence"]["order"] == 2);
    CHECK(j["recurrence"]["coeffs"] == nlohmann::json::array({"6", "-9"}));
    CHECK(j["recurrence"]["init"] == nlohmann::json::array({"1", "6"}));
    CHECK(j["gf"]["den"] == nlohmann::json::array({"1", "-6", "9"}));
    const auto s = nlohmann::json::parse(cli("seq --family b --k 1 --q 2 --n-max 3 --format json").out);
    CHECK(s["terms"] == nlohmann::json::array({"1", "-5", "16"}));
}

TEST_CASE("gf and recur examples", "[cli]") {
    CHECK(cli("gf --family B --k 0 --q 5").out == "1/(1 + 5*z)\n");
    CHECK(cli("gf --family C --J 2 --q 5").out == "(1 + 18*x + 6*x^2)/(1 - x)^3\n");
    CHECK(cli("gf --family B --k 2 --q 2").out == "(1 - 3*z - z^2)/(1 + 2*z)^3\n");
    CHECK(cli("gf --family B --k 1 --q 1/2 --reconstruct").out == "(8 + z)/(2*(2 + z)^2)\n");
    CHECK(cli("gf --family A --k 1 --q 2 --reconstruct").out == cli("gf --family A --k 1 --q 2").out);

    const auto a = cli("recur --family A --k 1 --q 2");
    CHECK(a.code == 0);
    CHECK_THAT(a.out, Catch::Matchers::ContainsSubstring("order: 2"));
    CHECK_THAT(a.out, Catch::Matchers::ContainsSubstring("a(n) = 6*a(n-1) - 9*a(n-2)"));
    CHECK_THAT(a.out, Catch::Matchers::ContainsSubstring("initial: 1, 6"));
    const auto b = cli("recur --family B --k 0 --q 4");
    CHECK_THAT(b.out, Catch::Matchers::ContainsSubstring("order: 1"));
    CHECK_THAT(b.out, Catch::Matchers::ContainsSubstring("coefficients: -4"));
}

TEST_CASE("usage errors exit 2 with one line on stderr", "[cli]") {
    expect_usage_error("");
    expect_usage_error("seq");
    expect_usage_error("seq --family d --k 1 --q 2");
    expect_usage_error("seq --family a --q 2");
    expect_usage_error("seq --family c --k 1 --q 2");
    expect_usage_error("seq --family a --k 1 --q x");
    expect_usage_error("seq --family a --k 1 --q 1/0");
    expect_usage_error("seq --family a --k 1 --q -2");
    expect_usage_error("seq --family a --k -1 --q 2");
    expect_usage_error("seq --family a --k 1 --q 2 --n-max 0");
    expect_usage_error("seq --family a --k 1 --q 2 --format xml");
    expect_usage_error("seq --family a --k 1 --q 2 --method magic");
    expect_usage_error("seq --family b --k 1 --q 1/2 --format bfile");
    expect_usage_error("seq --family a --k 1 --q 1/2 --method hypergeom");
    expect_usage_error("gf --family B --k 1 --q 1/2");
    expect_usage_error("gf --family C --J 1 --q 3/2");
    expect_usage_error("gf --family B --k 1 --q 2 --format csv");
    expect_usage_error("verify --suite nope");
    expect_usage_error("verify --m-max 1000");
    expect_usage_error("oeis A12");
}

TEST_CASE("verify and oeis subcommands", "[cli]") {
    const auto tables = cli("verify --suite tables");
    CHECK(tables.code == 0);
    CHECK(nlohmann::json::parse(tables.out)["status"] == "pass");
    const auto oeis = cli("verify --suite oeis --offline");
    CHECK(oeis.code == 0);
    CHECK(nlohmann::json::parse(oeis.out)["summary"]["pass"] == 7);

    CHECK(cli("verify --suite identities").out == cli("verify --suite identities").out);
    CHECK_FALSE(nlohmann::json::parse(cli("verify --suite appendix").out).contains("wall_time"));
    CHECK(nlohmann::json::parse(cli("verify --suite appendix --timing").out).contains("wall_time"));

    const auto head = cli("oeis A027471 --offline --n-max 3");
    CHECK(head.code == 0);
    CHECK(head.out == "1 0\n2 1\n3 6\n");
    CHECK(cli("oeis A361609 --offline --compare").code == 0);

    const auto absent = cli("oeis A000045 --offline");
    CHECK(absent.code == 3);
    CHECK(absent.out.empty());
}
