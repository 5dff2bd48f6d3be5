#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "binsum/errors.hpp"
#include "binsum/number.hpp"

namespace binsum {

/// How a term whose denominator Pochhammer product vanishes is treated.
/// Regularized assigns it the value 0 (1/inf); strict raises pole_error.
enum class pole_mode { strict, regularized };

/// Terminating pFq(numerator; denominator | argument).
struct hyp_series {
    std::vector<rational> numerator;
    std::vector<rational> denominator;
    rational argument = 1;
    pole_mode mode = pole_mode::regularized;
};

/// Index of the last nonzero term: |a| for the numerator parameter a that
/// is the nonpositive integer closest to zero. Empty if the series does
/// not terminate.
inline std::optional<long> termination_order(const hyp_series& h) {
    std::optional<long> order;
    for (const rational& a : h.numerator) {
        if (!is_integer(a) || a > 0) continue;
        integer neg = -a.get_num();
        if (!neg.fits_slong_p()) continue;
        long n = neg.get_si();
        if (!order || n < *order) order = n;
    }
    return order;
}

/// Sum_{i=0}^{M} prod (a)_i / prod (b)_i * z^i / i!  with M the termination order.
inline rational hyp_terminating(const hyp_series& h) {
    std::optional<long> order = termination_order(h);
    if (!order) {
        throw domain_error("hypergeometric series does not terminate: no nonpositive integer "
                           "numerator parameter");
    }
    rational sum = 0;
    rational num_prod = 1;  // prod_a (a)_i
    rational den_prod = 1;  // prod_b (b)_i * i!
    rational z_pow = 1;
    for (long i = 0; i <= *order; ++i) {
        if (i > 0) {
            for (const rational& a : h.numerator) num_prod *= a + (i - 1);
            for (const rational& b : h.denominator) den_prod *= b + (i - 1);
            den_prod *= i;
            z_pow *= h.argument;
        }
        if (den_prod == 0) {
            if (h.mode == pole_mode::strict) {
                throw pole_error("hypergeometric pole at term " + std::to_string(i),
                                 static_cast<std::size_t>(i));
            }
            continue;
        }
        sum += num_prod * z_pow / den_prod;
    }
    return sum;
}

}  // namespace binsum
