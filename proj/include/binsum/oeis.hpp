#pragma once

#include <curl/curl.h>
#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <optional>
#include <regex>
#include <sstream>
#include <string>
#include <vector>

#include "binsum/bfile.hpp"
#include "binsum/errors.hpp"
#include "binsum/number.hpp"

#ifndef BINSUM_DEFAULT_FIXTURE_DIR
#define BINSUM_DEFAULT_FIXTURE_DIR "data/oeis"
#endif

namespace binsum {

namespace fs = std::filesystem;

/// Where b-files come from and where they are kept.
struct oeis_source {
    fs::path cache_dir;
    fs::path fixture_dir;
    std::string base_url = "https://oeis.org";

    /// BINSUM_CACHE_DIR, else $XDG_CACHE_HOME/binsum, else ~/.cache/binsum;
    /// BINSUM_FIXTURE_DIR, else the bundled fixtures; BINSUM_OEIS_URL.
    static oeis_source from_environment() {
        oeis_source s;
        if (const char* c = std::getenv("BINSUM_CACHE_DIR"); c && *c) {
            s.cache_dir = c;
        } else if (const char* x = std::getenv("XDG_CACHE_HOME"); x && *x) {
            s.cache_dir = fs::path(x) / "binsum";
        } else if (const char* h = std::getenv("HOME"); h && *h) {
            s.cache_dir = fs::path(h) / ".cache" / "binsum";
        } else {
            s.cache_dir = fs::temp_directory_path() / "binsum-cache";
        }
        const char* f = std::getenv("BINSUM_FIXTURE_DIR");
        s.fixture_dir = (f && *f) ? fs::path(f) : fs::path(BINSUM_DEFAULT_FIXTURE_DIR);
        if (const char* u = std::getenv("BINSUM_OEIS_URL"); u && *u) s.base_url = u;
        return s;
    }
};

inline void validate_oeis_id(const std::string& id) {
    static const std::regex pattern(R"(A\d{6})");
    if (!std::regex_match(id, pattern)) throw usage_error("malformed OEIS id '" + id + "' (expected A followed by six digits)");
}

/// "A027471" -> "b027471.txt"
inline std::string bfile_name(const std::string& id) {
    validate_oeis_id(id);
    return "b" + id.substr(1) + ".txt";
}

namespace detail {

inline std::string read_file(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    if (!in) throw fixture_missing("cannot read " + p.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

/// Writes next to the target and renames, so readers never see a partial file.
inline void write_atomically(const fs::path& target, const std::string& bytes) {
    fs::create_directories(target.parent_path());
    const fs::path tmp = target.parent_path() /
                         (target.filename().string() + ".tmp." + std::to_string(static_cast<long>(::getpid())));
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw transport_error("cannot write cache file " + tmp.string());
        out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
        if (!out) throw transport_error("short write to " + tmp.string());
    }
    std::error_code ec;
    fs::rename(tmp, target, ec);
    if (ec) {
        fs::remove(tmp);
        throw transport_error("cannot move " + tmp.string() + " into place: " + ec.message());
    }
}

inline std::size_t append_body(char* data, std::size_t size, std::size_t count, void* user) {
    static_cast<std::string*>(user)->append(data, size * count);
    return size * count;
}

inline std::string http_get(const std::string& url) {
    static std::once_flag init;
    std::call_once(init, [] { curl_global_init(CURL_GLOBAL_DEFAULT); });
    CURL* h = curl_easy_init();
    if (!h) throw transport_error("curl initialization failed");
    std::string body;
    char err[CURL_ERROR_SIZE] = {0};
    curl_easy_setopt(h, CURLOPT_URL, url.c_str());
    curl_easy_setopt(h, CURLOPT_WRITEFUNCTION, append_body);
    curl_easy_setopt(h, CURLOPT_WRITEDATA, &body);
    curl_easy_setopt(h, CURLOPT_FAILONERROR, 1L);
    curl_easy_setopt(h, CURLOPT_FOLLOWLOCATION, 1L);
    curl_easy_setopt(h, CURLOPT_CONNECTTIMEOUT, 20L);
    curl_easy_setopt(h, CURLOPT_TIMEOUT, 120L);
    curl_easy_setopt(h, CURLOPT_USERAGENT, "binsum/1.0");
    curl_easy_setopt(h, CURLOPT_ERRORBUFFER, err);
    const CURLcode rc = curl_easy_perform(h);
    curl_easy_cleanup(h);
    if (rc != CURLE_OK) {
        throw transport_error("fetching " + url + " failed: " + (err[0] ? std::string(err) : curl_easy_strerror(rc)));
    }
    return body;
}

inline std::vector<bfile_entry> take(std::vector<bfile_entry> v, std::size_t max_terms) {
    if (v.size() > max_terms) v.resize(max_terms);
    return v;
}

}  // namespace detail

/// b-file pairs for `id`, at most max_terms of them.
///
/// Offline: the cache, then the bundled fixture, else fixture_missing.
/// Online: downloads, checks that the body parses, then replaces the cache
/// file atomically. Transport failures always throw.
inline std::vector<bfile_entry> fetch_bfile(const std::string& id, std::size_t max_terms, bool offline,
                                            const oeis_source& src = oeis_source::from_environment()) {
    const std::string name = bfile_name(id);
    if (offline) {
        for (const auto& dir : {src.cache_dir, src.fixture_dir}) {
            const fs::path p = dir / name;
            if (!dir.empty() && fs::is_regular_file(p)) return detail::take(parse_bfile(detail::read_file(p)), max_terms);
        }
        throw fixture_missing("no cached or bundled b-file for " + id + " (looked in " + src.cache_dir.string() +
                              " and " + src.fixture_dir.string() + ")");
    }
    const std::string body = detail::http_get(src.base_url + "/" + id + "/" + name);
    auto entries = parse_bfile(body);
    if (entries.empty()) throw transport_error("empty b-file received for " + id);
    detail::write_atomically(src.cache_dir / name, body);
    return detail::take(std::move(entries), max_terms);
}

}  // namespace binsum
