#pragma once

#include <map>
#include <vector>

#include "qshift/rat.hpp"

namespace qshift {

// Laurent polynomial in q with exact rational coefficients. The zero
// polynomial is the empty map; no zero coefficients are ever stored.
class LaurentQ {
 public:
  LaurentQ() = default;

  static LaurentQ zero() { return LaurentQ(); }
  static LaurentQ one() { return monomial(0, 1); }
  static LaurentQ q_power(int e) { return monomial(e, 1); }
  static LaurentQ monomial(int e, Rat c);
  static LaurentQ constant(Rat c) { return monomial(0, std::move(c)); }

  bool is_zero() const { return coeff_.empty(); }
  bool is_one() const;

  // Exponent range; both require a nonzero polynomial.
  int min_exp() const;
  int max_exp() const;

  Rat coeff(int e) const;
  void set_coeff(int e, const Rat& c);
  void add_coeff(int e, const Rat& c);

  const std::map<int, Rat>& terms() const { return coeff_; }
  std::size_t term_count() const { return coeff_.size(); }

  LaurentQ operator-() const;
  LaurentQ operator+(const LaurentQ& o) const;
  LaurentQ operator-(const LaurentQ& o) const;
  LaurentQ operator*(const LaurentQ& o) const;
  LaurentQ& operator+=(const LaurentQ& o);
  LaurentQ& operator-=(const LaurentQ& o);
  LaurentQ& operator*=(const LaurentQ& o);

  LaurentQ scaled(const Rat& c) const;
  // Multiplication by q^k.
  LaurentQ shifted(int k) const;

  bool operator==(const LaurentQ& o) const { return coeff_ == o.coeff_; }
  bool operator!=(const LaurentQ& o) const { return coeff_ != o.coeff_; }

  // Dense coefficient vector of q^{-min_exp} * this, index 0 = constant term.
  std::vector<Rat> to_poly() const;
  static LaurentQ from_poly(const std::vector<Rat>& p, int shift = 0);

 private:
  std::map<int, Rat> coeff_;
};

}  // namespace qshift
