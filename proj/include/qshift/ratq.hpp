#pragma once

#include <stdexcept>

#include "qshift/laurent.hpp"

namespace qshift {

struct DivisionByZeroError : std::domain_error {
  using std::domain_error::domain_error;
};

// Rational function in q, the scalar field of the library. Canonical form:
// fraction reduced, denominator with constant term 1 and minimal exponent 0
// (every q-power unit is carried by the numerator). Equality is structural.
class RatQ {
 public:
  RatQ() : num_(LaurentQ::zero()), den_(LaurentQ::one()) {}
  RatQ(long n) : num_(LaurentQ::constant(rat(n))), den_(LaurentQ::one()) {}
  RatQ(const Rat& c) : num_(LaurentQ::constant(c)), den_(LaurentQ::one()) {}
  RatQ(const LaurentQ& p) : num_(p), den_(LaurentQ::one()) {}
  RatQ(LaurentQ num, LaurentQ den);

  static RatQ zero() { return RatQ(); }
  static RatQ one() { return RatQ(1); }
  static RatQ q_power(int e) { return RatQ(LaurentQ::q_power(e)); }

  const LaurentQ& num() const { return num_; }
  const LaurentQ& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  bool is_polynomial() const { return den_.is_one(); }
  // True when of the shape c*q^e with c != 0.
  bool is_monomial() const {
    return den_.is_one() && num_.term_count() == 1;
  }

  RatQ operator-() const;
  RatQ operator+(const RatQ& o) const;
  RatQ operator-(const RatQ& o) const;
  RatQ operator*(const RatQ& o) const;
  RatQ operator/(const RatQ& o) const;
  RatQ& operator+=(const RatQ& o) { return *this = *this + o; }
  RatQ& operator-=(const RatQ& o) { return *this = *this - o; }
  RatQ& operator*=(const RatQ& o) { return *this = *this * o; }
  RatQ& operator/=(const RatQ& o) { return *this = *this / o; }

  RatQ inverse() const;
  RatQ pow(int e) const;

  bool operator==(const RatQ& o) const {
    return num_ == o.num_ && den_ == o.den_;
  }
  bool operator!=(const RatQ& o) const { return !(*this == o); }

 private:
  void canonicalize();

  LaurentQ num_, den_;
};

inline RatQ qpow(int e) { return RatQ::q_power(e); }

}  // namespace qshift
