#include "qshift/qnum.hpp"

#include <stdexcept>

namespace qshift {

RatQ q_int(int m, const RatQ& x) {
  if (x.is_zero()) throw std::invalid_argument("q_int: x must be nonzero");
  if (m == 0) return RatQ::zero();
  return (x.pow(m) - x.pow(-m)) / (x - x.inverse());
}

RatQ q_number(int m, const RatQ& x) {
  if (m < 0) throw std::invalid_argument("q_number: m must be nonnegative");
  return q_int(m, x);
}

RatQ q_factorial(int m, const RatQ& x) {
  if (m < 0) throw std::invalid_argument("q_factorial: m must be nonnegative");
  RatQ acc = RatQ::one();
  for (int r = 1; r <= m; ++r) acc *= q_int(r, x);
  return acc;
}

RatQ q_binomial(int m, int p, const RatQ& x) {
  if (p < 0 || p > m)
    throw std::invalid_argument("q_binomial: need m >= p >= 0");
  return q_factorial(m, x) / (q_factorial(p, x) * q_factorial(m - p, x));
}

}  // namespace qshift
