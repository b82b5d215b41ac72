#include <doctest.h>

#include "qshift/qnum.hpp"
#include "qshift/textio.hpp"
#include "qshift/zseries.hpp"
#include "support/gen.hpp"

using namespace qshift;
using testsupport::Rng;

namespace {

// Independent long-division oracle: exact Laurent quotient computed by
// schoolbook division after shifting both operands to ordinary polynomials.
LaurentQ divide_exactly(const LaurentQ& a, const LaurentQ& b) {
  REQUIRE(!b.is_zero());
  if (a.is_zero()) return LaurentQ::zero();
  std::vector<Rat> n = a.shifted(-a.min_exp()).to_poly();
  std::vector<Rat> d = b.shifted(-b.min_exp()).to_poly();
  std::vector<Rat> quot(n.size(), Rat(0));
  while (n.size() >= d.size()) {
    const Rat f = n.back() / d.back();
    const std::size_t off = n.size() - d.size();
    quot[off] = f;
    for (std::size_t i = 0; i < d.size(); ++i) n[off + i] -= f * d[i];
    while (!n.empty() && n.back() == 0) n.pop_back();
    if (n.empty()) break;
  }
  REQUIRE(n.empty());
  return LaurentQ::from_poly(quot, a.min_exp() - b.min_exp());
}

RatQ q_minus_qinv() { return qpow(1) - qpow(-1); }

}  // namespace

TEST_CASE("ratq inverse and identity") {
  const RatQ u = q_minus_qinv();
  CHECK(u * u.inverse() == RatQ::one());
  const RatQ s = qpow(1) + qpow(-1);
  CHECK(s + RatQ::zero() == s);
}

TEST_CASE("ratq quotient against long-division oracle") {
  const RatQ num = qpow(2) - qpow(-2);
  const RatQ den = q_minus_qinv();
  const RatQ got = num / den;
  const LaurentQ expect =
      divide_exactly(num.num().shifted(0), den.num().shifted(0));
  CHECK(got == RatQ(expect));
  CHECK(got == qpow(1) + qpow(-1));
}

TEST_CASE("ratq division by zero") {
  CHECK_THROWS_AS(RatQ::one() / RatQ::zero(), DivisionByZeroError);
  CHECK_THROWS_AS(RatQ(LaurentQ::one(), LaurentQ::zero()),
                  DivisionByZeroError);
}

TEST_CASE("ratq canonical form is idempotent and structural") {
  Rng rng(12345);
  for (int t = 0; t < 300; ++t) {
    const RatQ f = testsupport::rand_ratq(rng);
    const RatQ again(f.num(), f.den());
    CHECK(f == again);
    if (!f.is_zero()) {
      CHECK(f.den().min_exp() == 0);
      CHECK(f.den().coeff(0) == 1);
    }
  }
}

TEST_CASE("ratq field axioms on random inputs") {
  Rng rng(99);
  for (int t = 0; t < 200; ++t) {
    const RatQ a = testsupport::rand_ratq(rng);
    const RatQ b = testsupport::rand_ratq(rng);
    const RatQ c = testsupport::rand_ratq(rng);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    if (!a.is_zero()) CHECK(a * a.inverse() == RatQ::one());
  }
}

TEST_CASE("q-numbers") {
  const RatQ q = qpow(1);
  CHECK(q_number(2, q) == q + q.inverse());
  CHECK(q_number(0, q) == RatQ::zero());
  // [2]_q! / ([1]_q! [1]_q!) expanded by hand.
  const RatQ expect = q_factorial(2, q) / (q_factorial(1, q) * q_factorial(1, q));
  CHECK(q_binomial(2, 1, q) == expect);
  CHECK(q_binomial(2, 1, q) == q + q.inverse());
  CHECK_THROWS_AS(q_binomial(1, 2, q), std::invalid_argument);
  CHECK(q_int(-3, q) == -q_int(3, q));
}

TEST_CASE("q-binomial symmetry and polynomiality") {
  Rng rng(7);
  const RatQ q = qpow(1);
  for (int t = 0; t < 60; ++t) {
    const int m = testsupport::rand_int(rng, 0, 6);
    const int p = testsupport::rand_int(rng, 0, m);
    const RatQ b = q_binomial(m, p, q);
    CHECK(b == q_binomial(m, m - p, q));
    CHECK(b.is_polynomial());  // Laurent polynomial: denominator 1
  }
}

TEST_CASE("series expansion examples") {
  const ZPoly one = zpoly_one();
  // 1 / (1 - z) to order 3
  ZSeries geo = series_expand(one, zpoly_linear_power(RatQ::one(), 1),
                              Dir::InZ, 3);
  CHECK(geo.lead() == 0);
  for (int t = 0; t <= 3; ++t) CHECK(geo.coeff(t) == RatQ::one());

  // (1 - a z) itself, a = q^2, order 2: 1 - az + 0 z^2
  ZSeries lin = series_expand(zpoly_linear_power(qpow(2), 1), one, Dir::InZ, 2);
  CHECK(lin.coeff(0) == RatQ::one());
  CHECK(lin.coeff(1) == -qpow(2));
  CHECK(lin.coeff(2) == RatQ::zero());

  // (1 - a z q^2) / ((1 - a z q^2)(1 - a z)) reduces to the geometric
  // series of (1 - a z)^{-1}; a = q^0.
  const ZPoly num = zpoly_linear_power(qpow(2), 1);
  const ZPoly den =
      zpoly_mul(zpoly_linear_power(qpow(2), 1), zpoly_linear_power(qpow(0), 1));
  ZSeries s = series_expand(num, den, Dir::InZ, 4);
  for (int t = 0; t <= 4; ++t) CHECK(s.coeff(t) == RatQ::one());
}

TEST_CASE("series expansion error paths") {
  // Pole at z = 0 in the in-z direction.
  CHECK_THROWS_AS(
      series_expand(zpoly_one(), ZPoly{RatQ::zero(), RatQ::one()}, Dir::InZ, 2),
      PoleError);
  CHECK_THROWS_AS(series_expand(zpoly_one(), ZPoly{}, Dir::InZ, 2),
                  DivisionByZeroError);
}

TEST_CASE("series expansion in z^{-1}") {
  // (1 - a z) expands around infinity with leading exponent 1.
  ZSeries s = series_expand(zpoly_linear_power(qpow(3), 1), zpoly_one(),
                            Dir::InZInv, 2);
  CHECK(s.lead() == 1);
  CHECK(s.coeff(0) == -qpow(3));
  CHECK(s.coeff(1) == RatQ::one());
  CHECK(s.coeff(2) == RatQ::zero());
  CHECK(s.coeff_at_exponent(1) == -qpow(3));
  CHECK(s.coeff_at_exponent(2) == RatQ::zero());
}

TEST_CASE("series product matches expansion of products") {
  Rng rng(31);
  for (int t = 0; t < 60; ++t) {
    // Random small rational functions regular at 0.
    auto rand_fraction = [&](ZPoly& num, ZPoly& den) {
      num = {RatQ(rat(testsupport::rand_int(rng, 1, 3))),
             testsupport::rand_ratq(rng)};
      den = zpoly_linear_power(qpow(testsupport::rand_int(rng, -2, 2)),
                               testsupport::rand_int(rng, 0, 2));
    };
    ZPoly n1, d1, n2, d2;
    rand_fraction(n1, d1);
    rand_fraction(n2, d2);
    const int order = 5;
    ZSeries lhs = series_expand(zpoly_mul(n1, n2), zpoly_mul(d1, d2),
                                Dir::InZ, order);
    ZSeries rhs = series_expand(n1, d1, Dir::InZ, order) *
                  series_expand(n2, d2, Dir::InZ, order);
    CHECK(lhs == rhs);
  }
}

TEST_CASE("series log and exp") {
  const ZPoly one = zpoly_one();
  // log(1 + z) = z - z^2/2 + z^3/3
  ZSeries lg = series_log(
      series_expand(ZPoly{RatQ::one(), RatQ::one()}, one, Dir::InZ, 3));
  CHECK(lg.coeff(0) == RatQ::zero());
  CHECK(lg.coeff(1) == RatQ::one());
  CHECK(lg.coeff(2) == RatQ(rat(-1, 2)));
  CHECK(lg.coeff(3) == RatQ(rat(1, 3)));

  // exp(log(1/(1-z))) = 1 + z + z^2 + z^3 + z^4
  ZSeries geo =
      series_expand(one, zpoly_linear_power(RatQ::one(), 1), Dir::InZ, 4);
  CHECK(series_exp(series_log(geo)) == geo);

  // log((1 - a z)^{-1}) = sum a^m z^m / m, a = q^2 (term-by-term oracle)
  ZSeries s = series_log(
      series_expand(one, zpoly_linear_power(qpow(2), 1), Dir::InZ, 6));
  for (int m = 1; m <= 6; ++m)
    CHECK(s.coeff(m) == qpow(2 * m) * RatQ(rat(1, m)));
}

TEST_CASE("series log/exp roundtrip on random series") {
  Rng rng(77);
  for (int t = 0; t < 80; ++t) {
    std::vector<RatQ> c(6);
    c[0] = RatQ::one();
    for (std::size_t i = 1; i < c.size(); ++i)
      c[i] = testsupport::rand_ratq(rng);
    const Dir dir = t % 2 ? Dir::InZ : Dir::InZInv;
    ZSeries s(dir, 0, c);
    CHECK(series_exp(series_log(s)) == s);
  }
}

TEST_CASE("series log/exp leading-term preconditions") {
  ZSeries bad(Dir::InZ, 0, {qpow(1), RatQ::one()});
  CHECK_THROWS_AS(series_log(bad), BadLeadingTermError);
  ZSeries bad2(Dir::InZ, 0, {RatQ::one(), RatQ::one()});
  CHECK_THROWS_AS(series_exp(bad2), BadLeadingTermError);
  ZSeries shifted(Dir::InZ, 1, {RatQ::one()});
  CHECK_THROWS_AS(series_log(shifted), BadLeadingTermError);
}

TEST_CASE("series direction mismatch is rejected") {
  ZSeries a(Dir::InZ, 0, {RatQ::one(), RatQ::one()});
  ZSeries b(Dir::InZInv, 0, {RatQ::one(), RatQ::one()});
  CHECK_THROWS_AS(a * b, std::invalid_argument);
  CHECK_THROWS_AS(a + b, std::invalid_argument);
}
