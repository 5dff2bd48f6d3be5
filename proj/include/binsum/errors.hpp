#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace binsum {

/// Base of every exception thrown by the library.
class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Argument outside the mathematical domain of an operation (negative n!, ...).
class domain_error : public error {
public:
    using error::error;
};

/// Parameter combination the requested route does not support, e.g. a
/// rational q handed to a form that needs integer q.
class unsupported_parameter : public error {
public:
    using error::error;
};

/// A value the math guarantees to be an integer was not.
class integrality_error : public error {
public:
    using error::error;
};

class pole_error : public error {
public:
    pole_error(const std::string& what, std::size_t term)
        : error(what), term_index(term) {}
    std::size_t term_index;
};

class not_power_series : public error {
public:
    using error::error;
};

class no_rational_fit : public error {
public:
    using error::error;
};

class needs_more_terms : public error {
public:
    using error::error;
};

class parse_error : public error {
public:
    parse_error(const std::string& what, std::size_t line_no)
        : error(what), line(line_no) {}
    std::size_t line;
};

class fixture_missing : public error {
public:
    using error::error;
};

class transport_error : public error {
public:
    using error::error;
};

class usage_error : public error {
public:
    using error::error;
};

}  // namespace binsum
