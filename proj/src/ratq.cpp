#include "qshift/ratq.hpp"

#include <utility>
#include <vector>

namespace qshift {

namespace {

using Poly = std::vector<Rat>;  // dense, index = exponent

void trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

bool is_zero(const Poly& p) { return p.empty(); }

int deg(const Poly& p) { return static_cast<int>(p.size()) - 1; }

// Monic remainder of a by b; b nonzero.
Poly rem(Poly a, const Poly& b) {
  trim(a);
  while (!is_zero(a) && deg(a) >= deg(b)) {
    Rat f = a.back() / b.back();
    const std::size_t off = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[off + i] -= f * b[i];
    trim(a);
  }
  return a;
}

void make_monic(Poly& p) {
  if (is_zero(p)) return;
  const Rat lead = p.back();
  for (auto& c : p) c /= lead;
}

// Euclidean gcd over Q[q], monic result.
Poly poly_gcd(Poly a, Poly b) {
  trim(a);
  trim(b);
  while (!is_zero(b)) {
    Poly r = rem(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  make_monic(a);
  return a;
}

// Exact division a / b (throws on inexact input, which would be a bug).
Poly poly_div_exact(Poly a, const Poly& b) {
  trim(a);
  Poly quot(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, Rat(0));
  while (!is_zero(a) && deg(a) >= deg(b)) {
    Rat f = a.back() / b.back();
    const std::size_t off = a.size() - b.size();
    quot[off] = f;
    for (std::size_t i = 0; i < b.size(); ++i) a[off + i] -= f * b[i];
    trim(a);
  }
  if (!is_zero(a)) throw std::logic_error("inexact polynomial division");
  trim(quot);
  return quot;
}

}  // namespace

RatQ::RatQ(LaurentQ num, LaurentQ den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw DivisionByZeroError("zero denominator");
  canonicalize();
}

void RatQ::canonicalize() {
  if (num_.is_zero()) {
    den_ = LaurentQ::one();
    return;
  }
  // Shift to ordinary polynomials; the classical Euclidean algorithm applies.
  const int a = num_.min_exp();
  const int b = den_.min_exp();
  Poly n = num_.shifted(-a).to_poly();
  Poly d = den_.shifted(-b).to_poly();
  Poly g = poly_gcd(n, d);
  if (deg(g) > 0) {
    n = poly_div_exact(std::move(n), g);
    d = poly_div_exact(std::move(d), g);
  }
  num_ = LaurentQ::from_poly(n, a - b);
  den_ = LaurentQ::from_poly(d, 0);
  const Rat low = den_.coeff(den_.min_exp());
  if (low != 1) {
    num_ = num_.scaled(1 / low);
    den_ = den_.scaled(1 / low);
  }
}

RatQ RatQ::operator-() const {
  RatQ r = *this;
  r.num_ = -r.num_;
  return r;
}

RatQ RatQ::operator+(const RatQ& o) const {
  return RatQ(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RatQ RatQ::operator-(const RatQ& o) const {
  return RatQ(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

RatQ RatQ::operator*(const RatQ& o) const {
  return RatQ(num_ * o.num_, den_ * o.den_);
}

RatQ RatQ::operator/(const RatQ& o) const {
  if (o.is_zero()) throw DivisionByZeroError("division by zero in RatQ");
  return RatQ(num_ * o.den_, den_ * o.num_);
}

RatQ RatQ::inverse() const {
  if (is_zero()) throw DivisionByZeroError("inverse of zero");
  return RatQ(den_, num_);
}

RatQ RatQ::pow(int e) const {
  if (e == 0) return RatQ::one();
  RatQ base = e > 0 ? *this : inverse();
  int n = e > 0 ? e : -e;
  RatQ acc = RatQ::one();
  while (n > 0) {
    if (n & 1) acc *= base;
    base *= base;
    n >>= 1;
  }
  return acc;
}

}  // namespace qshift
