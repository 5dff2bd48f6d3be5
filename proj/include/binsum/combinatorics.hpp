#pragma once

#include <cstddef>
#include <initializer_list>
#include <mutex>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "binsum/errors.hpp"
#include "binsum/number.hpp"

namespace binsum {

inline integer factorial(long n) {
    if (n < 0) throw domain_error("factorial of negative argument " + std::to_string(n));
    integer r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

/// Integer binomial C(n, k) for any integer n, zero for k < 0. Negative n
/// follows the falling-factorial definition, C(-3, 2) = 6.
inline integer binomial(const integer& n, long k) {
    if (k < 0) return 0;
    integer r;
    mpz_bin_ui(r.get_mpz_t(), n.get_mpz_t(), static_cast<unsigned long>(k));
    return r;
}

inline integer binomial(long n, long k) { return binomial(integer(n), k); }

/// Generalized binomial top (top-1) ... (top-bottom+1) / bottom!.
///
/// Total on rational tops: zero for negative bottoms, and the zero factor
/// that appears for integer 0 <= top < bottom gives exactly 0.
inline rational binomial(const rational& top, long bottom) {
    if (bottom < 0) return 0;
    if (is_integer(top)) return rational(binomial(integer(top.get_num()), bottom));
    rational prod = 1;
    for (long i = 0; i < bottom; ++i) prod *= top - i;
    return prod / rational(factorial(bottom));
}

/// Rising factorial a (a+1) ... (a+n-1); the empty product is 1.
inline rational pochhammer(const rational& a, long n) {
    if (n < 0) throw domain_error("pochhammer with negative length " + std::to_string(n));
    rational prod = 1;
    for (long i = 0; i < n; ++i) {
        prod *= a + i;
        if (prod == 0) break;
    }
    return prod;
}

namespace detail {

// Lazily grown number triangle shared across threads. Rows are built by
// `Rule(previous_row, n)` and never change once published.
template <class Rule>
class triangle_cache {
public:
    integer at(long n, long k) {
        if (n < 0) throw domain_error("triangle row index must be nonnegative");
        if (k < 0 || k > n) return 0;
        std::lock_guard<std::mutex> lock(mu_);
        grow(static_cast<std::size_t>(n));
        return rows_[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
    }

    std::vector<integer> row(long n) {
        if (n < 0) throw domain_error("triangle row index must be nonnegative");
        std::lock_guard<std::mutex> lock(mu_);
        grow(static_cast<std::size_t>(n));
        return rows_[static_cast<std::size_t>(n)];
    }

private:
    void grow(std::size_t n) {
        if (rows_.empty()) rows_.push_back({integer(1)});
        while (rows_.size() <= n) {
            rows_.push_back(Rule{}(rows_.back(), static_cast<long>(rows_.size())));
        }
    }

    std::mutex mu_;
    std::vector<std::vector<integer>> rows_;
};

inline const integer& entry(const std::vector<integer>& row, long k) {
    static const integer zero = 0;
    if (k < 0 || k >= static_cast<long>(row.size())) return zero;
    return row[static_cast<std::size_t>(k)];
}

// S2(n,k) = k S2(n-1,k) + S2(n-1,k-1)
struct stirling2_rule {
    std::vector<integer> operator()(const std::vector<integer>& prev, long n) const {
        std::vector<integer> row(static_cast<std::size_t>(n) + 1);
        for (long k = 0; k <= n; ++k) {
            row[static_cast<std::size_t>(k)] = k * entry(prev, k) + entry(prev, k - 1);
        }
        return row;
    }
};

// s(n,k) = s(n-1,k-1) - (n-1) s(n-1,k)
struct stirling1_rule {
    std::vector<integer> operator()(const std::vector<integer>& prev, long n) const {
        std::vector<integer> row(static_cast<std::size_t>(n) + 1);
        for (long k = 0; k <= n; ++k) {
            row[static_cast<std::size_t>(k)] = entry(prev, k - 1) - (n - 1) * entry(prev, k);
        }
        return row;
    }
};

// <n,k> = (k+1) <n-1,k> + (n-k) <n-1,k-1>, counted by descents. Row n >= 1
// has entries k = 0..n-1 and a trailing zero at k = n.
struct eulerian_rule {
    std::vector<integer> operator()(const std::vector<integer>& prev, long n) const {
        std::vector<integer> row(static_cast<std::size_t>(n) + 1);
        for (long k = 0; k < n; ++k) {
            row[static_cast<std::size_t>(k)] = (k + 1) * entry(prev, k) + (n - k) * entry(prev, k - 1);
        }
        return row;
    }
};

inline triangle_cache<stirling2_rule>& stirling2_table() {
    static triangle_cache<stirling2_rule> t;
    return t;
}
inline triangle_cache<stirling1_rule>& stirling1_table() {
    static triangle_cache<stirling1_rule> t;
    return t;
}
inline triangle_cache<eulerian_rule>& eulerian_table() {
    static triangle_cache<eulerian_rule> t;
    return t;
}

}  // namespace detail

/// Stirling numbers of the second kind {n; k}: set partitions of n into k blocks.
inline integer stirling2(long n, long k) { return detail::stirling2_table().at(n, k); }

/// Signed Stirling numbers of the first kind, the coefficients of the
/// falling factorial z (z-1) ... (z-n+1). The sign of s(n,k) is (-1)^(n-k).
inline integer stirling1_signed(long n, long k) { return detail::stirling1_table().at(n, k); }

inline integer stirling1_unsigned(long n, long k) { return abs(stirling1_signed(n, k)); }

/// Eulerian number <n; k>: permutations of n with exactly k descents.
inline integer eulerian(long n, long k) { return detail::eulerian_table().at(n, k); }

inline integer multinomial(long n, std::span<const long> parts) {
    if (n < 0) throw domain_error("multinomial with negative total");
    long sum = 0;
    for (long p : parts) {
        if (p < 0) throw domain_error("multinomial with negative part");
        sum += p;
    }
    if (sum != n) {
        throw domain_error("multinomial parts sum to " + std::to_string(sum) + ", expected " +
                           std::to_string(n));
    }
    integer r = factorial(n);
    for (long p : parts) r /= factorial(p);
    return r;
}

inline integer multinomial(long n, std::initializer_list<long> parts) {
    return multinomial(n, std::span<const long>(parts.begin(), parts.size()));
}

}  // namespace binsum
