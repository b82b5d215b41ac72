#include "qshift/zseries.hpp"

#include <algorithm>

namespace qshift {

namespace {

void ztrim(ZPoly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

std::size_t low_index(const ZPoly& p) {
  std::size_t i = 0;
  while (i < p.size() && p[i].is_zero()) ++i;
  return i;
}

}  // namespace

ZPoly zpoly_one() { return {RatQ::one()}; }

ZPoly zpoly_mul(const ZPoly& a, const ZPoly& b) {
  if (a.empty() || b.empty()) return {};
  ZPoly r(a.size() + b.size() - 1, RatQ::zero());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  ztrim(r);
  return r;
}

ZPoly zpoly_linear_power(const RatQ& c, int n) {
  ZPoly r = zpoly_one();
  ZPoly lin = {RatQ::one(), -c};
  for (int t = 0; t < n; ++t) r = zpoly_mul(r, lin);
  return r;
}

bool ZSeries::is_zero() const {
  return std::all_of(coeff_.begin(), coeff_.end(),
                     [](const RatQ& c) { return c.is_zero(); });
}

RatQ ZSeries::coeff_at_exponent(int e) const {
  const int s = dir_ == Dir::InZ ? 1 : -1;
  const int t = s * (e - lead_);
  if (t < 0) return RatQ::zero();
  if (t > order())
    throw std::out_of_range("ZSeries: exponent beyond truncation order");
  return coeff_[static_cast<std::size_t>(t)];
}

ZSeries ZSeries::operator+(const ZSeries& o) const {
  if (dir_ != o.dir_)
    throw std::invalid_argument("ZSeries: direction mismatch");
  // Align leads; the common window ends at the shorter truncation.
  const int s = dir_ == Dir::InZ ? 1 : -1;
  const int lead = s > 0 ? std::min(lead_, o.lead_) : std::max(lead_, o.lead_);
  const int endA = lead_ + s * order();
  const int endB = o.lead_ + s * o.order();
  const int end = s > 0 ? std::min(endA, endB) : std::max(endA, endB);
  const int n = s * (end - lead);
  if (n < 0) throw std::invalid_argument("ZSeries: empty overlap in add");
  std::vector<RatQ> c(static_cast<std::size_t>(n) + 1, RatQ::zero());
  for (int t = 0; t <= n; ++t) {
    const int e = lead + s * t;
    const int ta = s * (e - lead_);
    const int tb = s * (e - o.lead_);
    RatQ v = RatQ::zero();
    if (ta >= 0) v += coeff_[static_cast<std::size_t>(ta)];
    if (tb >= 0) v += o.coeff_[static_cast<std::size_t>(tb)];
    c[static_cast<std::size_t>(t)] = v;
  }
  return ZSeries(dir_, lead, std::move(c));
}

ZSeries ZSeries::operator-(const ZSeries& o) const {
  return *this + o.scaled(RatQ(-1));
}

ZSeries ZSeries::operator*(const ZSeries& o) const {
  if (dir_ != o.dir_)
    throw std::invalid_argument("ZSeries: direction mismatch");
  const int n = std::min(order(), o.order());
  std::vector<RatQ> c(static_cast<std::size_t>(n) + 1, RatQ::zero());
  for (int i = 0; i <= n; ++i) {
    if (coeff_[static_cast<std::size_t>(i)].is_zero()) continue;
    for (int j = 0; i + j <= n; ++j)
      c[static_cast<std::size_t>(i + j)] +=
          coeff_[static_cast<std::size_t>(i)] *
          o.coeff_[static_cast<std::size_t>(j)];
  }
  return ZSeries(dir_, lead_ + o.lead_, std::move(c));
}

ZSeries ZSeries::scaled(const RatQ& c) const {
  std::vector<RatQ> r = coeff_;
  for (auto& v : r) v *= c;
  return ZSeries(dir_, lead_, std::move(r));
}

ZSeries ZSeries::truncated(int order) const {
  if (order >= this->order()) return *this;
  std::vector<RatQ> c(coeff_.begin(), coeff_.begin() + order + 1);
  return ZSeries(dir_, lead_, std::move(c));
}

ZSeries series_expand(const ZPoly& num, const ZPoly& den, Dir dir, int order) {
  ZPoly n = num, d = den;
  ztrim(n);
  ztrim(d);
  if (d.empty()) throw DivisionByZeroError("series_expand: zero denominator");
  if (order < 0) throw std::invalid_argument("series_expand: negative order");
  if (n.empty()) return ZSeries::zero(dir, order);

  const std::size_t a = low_index(n);
  const std::size_t b = low_index(d);
  std::vector<RatQ> nc, dc;
  if (dir == Dir::InZ) {
    if (a < b)
      throw PoleError("series_expand: pole at z = 0");
    nc.assign(n.begin() + static_cast<long>(a), n.end());
    dc.assign(d.begin() + static_cast<long>(b), d.end());
  } else {
    // Reverse coefficients: expand in w = 1/z.
    nc.assign(n.rbegin(), n.rend());
    dc.assign(d.rbegin(), d.rend());
  }
  const int lead = dir == Dir::InZ
                       ? static_cast<int>(a) - static_cast<int>(b)
                       : static_cast<int>(n.size()) - static_cast<int>(d.size());

  // Power series long division nc / dc, dc[0] != 0.
  std::vector<RatQ> c(static_cast<std::size_t>(order) + 1, RatQ::zero());
  for (int t = 0; t <= order; ++t) {
    RatQ v = t < static_cast<int>(nc.size()) ? nc[static_cast<std::size_t>(t)]
                                             : RatQ::zero();
    for (int s = 1; s <= t && s < static_cast<int>(dc.size()); ++s)
      v -= dc[static_cast<std::size_t>(s)] * c[static_cast<std::size_t>(t - s)];
    c[static_cast<std::size_t>(t)] = v / dc[0];
  }
  return ZSeries(dir, lead, std::move(c));
}

ZSeries series_log(const ZSeries& s) {
  if (s.lead() != 0 || !s.coeff(0).is_one())
    throw BadLeadingTermError("series_log: need constant term 1");
  const int n = s.order();
  std::vector<RatQ> l(static_cast<std::size_t>(n) + 1, RatQ::zero());
  // l_m = s_m - (1/m) sum_{k=1}^{m-1} k l_k s_{m-k}
  for (int m = 1; m <= n; ++m) {
    RatQ v = s.coeff(m);
    for (int k = 1; k < m; ++k)
      v -= l[static_cast<std::size_t>(k)] * s.coeff(m - k) * RatQ(rat(k, m));
    l[static_cast<std::size_t>(m)] = v;
  }
  return ZSeries(s.dir(), 0, std::move(l));
}

ZSeries series_exp(const ZSeries& s) {
  if (s.lead() != 0 || !s.coeff(0).is_zero())
    throw BadLeadingTermError("series_exp: need zero constant term");
  const int n = s.order();
  std::vector<RatQ> e(static_cast<std::size_t>(n) + 1, RatQ::zero());
  e[0] = RatQ::one();
  // e_m = (1/m) sum_{k=1}^{m} k s_k e_{m-k}
  for (int m = 1; m <= n; ++m) {
    RatQ v = RatQ::zero();
    for (int k = 1; k <= m; ++k)
      v += s.coeff(k) * e[static_cast<std::size_t>(m - k)] * RatQ(rat(k, m));
    e[static_cast<std::size_t>(m)] = v;
  }
  return ZSeries(s.dir(), 0, std::move(e));
}

}  // namespace qshift
