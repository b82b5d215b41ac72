#pragma once

#include "qshift/ratq.hpp"

namespace qshift {

// [m]_x = (x^m - x^{-m}) / (x - x^{-1}); defined for any integer m,
// with [-m]_x = -[m]_x and [0]_x = 0.
RatQ q_int(int m, const RatQ& x);

// q-number, q-factorial and q-binomial for m >= 0 (and m >= p >= 0).
RatQ q_number(int m, const RatQ& x);
RatQ q_factorial(int m, const RatQ& x);
RatQ q_binomial(int m, int p, const RatQ& x);

}  // namespace qshift
