#pragma once

#include <cstddef>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "binsum/errors.hpp"
#include "binsum/number.hpp"

namespace binsum {

/// One `index value` line of a b-file.
using bfile_entry = std::pair<long, integer>;

/// Parses b-file text. Blank lines and lines starting with '#' are skipped;
/// anything else must be exactly two integers.
inline std::vector<bfile_entry> parse_bfile(std::string_view text) {
    std::vector<bfile_entry> out;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        std::string line(text.substr(pos, end - pos));
        pos = end + 1;
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        const auto first = line.find_first_not_of(" \t");
        if (first == std::string::npos || line[first] == '#') continue;

        std::istringstream fields(line);
        std::string index_text, value_text, extra;
        fields >> index_text >> value_text;
        if (value_text.empty() || (fields >> extra)) {
            throw parse_error("b-file line " + std::to_string(line_no) + ": expected 'index value', got '" + line + "'",
                              line_no);
        }
        try {
            const integer index = parse_integer(index_text);
            if (!index.fits_slong_p()) throw domain_error("index out of range");
            out.emplace_back(index.get_si(), parse_integer(value_text));
        } catch (const domain_error& e) {
            throw parse_error("b-file line " + std::to_string(line_no) + ": " + e.what(), line_no);
        }
    }
    return out;
}

inline std::string format_bfile(const std::vector<bfile_entry>& entries) {
    std::string out;
    for (const auto& [index, value] : entries) out += std::to_string(index) + " " + value.get_str() + "\n";
    return out;
}

/// Terms numbered first_index, first_index + 1, ...
inline std::string format_bfile(const std::vector<integer>& terms, long first_index = 0) {
    std::vector<bfile_entry> entries;
    entries.reserve(terms.size());
    for (std::size_t i = 0; i < terms.size(); ++i) entries.emplace_back(first_index + static_cast<long>(i), terms[i]);
    return format_bfile(entries);
}

}  // namespace binsum
