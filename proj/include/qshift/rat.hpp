#pragma once

#include <gmpxx.h>

#include <string>

namespace qshift {

// Exact rational scalar. All arithmetic in the library is exact; there is
// no floating point anywhere.
using Rat = mpq_class;
using Int = mpz_class;

inline Rat rat(long num, long den = 1) {
  Rat r(num, den);
  r.canonicalize();
  return r;
}

inline std::string rat_str(const Rat& r) { return r.get_str(); }

}  // namespace qshift
