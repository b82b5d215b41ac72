#pragma once

#include <vector>

#include "qshift/ratq.hpp"

namespace qshift {

struct PoleError : std::domain_error {
  using std::domain_error::domain_error;
};
struct BadLeadingTermError : std::domain_error {
  using std::domain_error::domain_error;
};

// Polynomial in z with RatQ coefficients; index = power of z.
using ZPoly = std::vector<RatQ>;

ZPoly zpoly_one();
ZPoly zpoly_mul(const ZPoly& a, const ZPoly& b);
// (1 - c z)^n for n >= 0.
ZPoly zpoly_linear_power(const RatQ& c, int n);

// The two expansion directions of a rational function of z. A series knows
// its direction; arithmetic between series of different directions is
// rejected.
enum class Dir { InZ, InZInv };

// Truncated formal series: value = sum_{t=0}^{order} coeff[t] * z^{lead + s*t}
// where s = +1 for InZ and -1 for InZInv.
class ZSeries {
 public:
  ZSeries(Dir dir, int lead, std::vector<RatQ> coeff)
      : dir_(dir), lead_(lead), coeff_(std::move(coeff)) {}

  static ZSeries zero(Dir dir, int order) {
    return ZSeries(dir, 0, std::vector<RatQ>(order + 1, RatQ::zero()));
  }

  Dir dir() const { return dir_; }
  int lead() const { return lead_; }
  int order() const { return static_cast<int>(coeff_.size()) - 1; }
  const std::vector<RatQ>& coeffs() const { return coeff_; }
  const RatQ& coeff(int t) const { return coeff_.at(t); }

  bool is_zero() const;

  // Coefficient of z^e. Exponents on the truncated side of the window are an
  // error (the value is unknown, not zero); beyond the leading side they are
  // genuinely zero.
  RatQ coeff_at_exponent(int e) const;

  ZSeries operator+(const ZSeries& o) const;
  ZSeries operator-(const ZSeries& o) const;
  ZSeries operator*(const ZSeries& o) const;
  ZSeries scaled(const RatQ& c) const;
  ZSeries truncated(int order) const;

  bool operator==(const ZSeries& o) const {
    return dir_ == o.dir_ && lead_ == o.lead_ && coeff_ == o.coeff_;
  }

 private:
  Dir dir_;
  int lead_;
  std::vector<RatQ> coeff_;
};

// Expansion of num/den to the given order. InZ requires the function to be
// regular at z = 0 (after cancelling common z powers); InZInv expands around
// z = infinity with leading exponent deg(num) - deg(den).
ZSeries series_expand(const ZPoly& num, const ZPoly& den, Dir dir, int order);

// log of a series with lead 0 and constant term 1; exp of a series with
// zero constant term. Mutually inverse to the truncation order.
ZSeries series_log(const ZSeries& s);
ZSeries series_exp(const ZSeries& s);

}  // namespace qshift
