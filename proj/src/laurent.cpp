#include "qshift/laurent.hpp"

#include <stdexcept>

namespace qshift {

LaurentQ LaurentQ::monomial(int e, Rat c) {
  LaurentQ p;
  if (c != 0) p.coeff_[e] = std::move(c);
  return p;
}

bool LaurentQ::is_one() const {
  return coeff_.size() == 1 && coeff_.begin()->first == 0 &&
         coeff_.begin()->second == 1;
}

int LaurentQ::min_exp() const {
  if (coeff_.empty()) throw std::logic_error("min_exp of zero polynomial");
  return coeff_.begin()->first;
}

int LaurentQ::max_exp() const {
  if (coeff_.empty()) throw std::logic_error("max_exp of zero polynomial");
  return coeff_.rbegin()->first;
}

Rat LaurentQ::coeff(int e) const {
  auto it = coeff_.find(e);
  return it == coeff_.end() ? Rat(0) : it->second;
}

void LaurentQ::set_coeff(int e, const Rat& c) {
  if (c == 0)
    coeff_.erase(e);
  else
    coeff_[e] = c;
}

void LaurentQ::add_coeff(int e, const Rat& c) {
  if (c == 0) return;
  auto [it, inserted] = coeff_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) coeff_.erase(it);
  }
}

LaurentQ LaurentQ::operator-() const {
  LaurentQ r;
  for (const auto& [e, c] : coeff_) r.coeff_[e] = -c;
  return r;
}

LaurentQ& LaurentQ::operator+=(const LaurentQ& o) {
  for (const auto& [e, c] : o.coeff_) add_coeff(e, c);
  return *this;
}

LaurentQ& LaurentQ::operator-=(const LaurentQ& o) {
  for (const auto& [e, c] : o.coeff_) add_coeff(e, -c);
  return *this;
}

LaurentQ LaurentQ::operator+(const LaurentQ& o) const {
  LaurentQ r = *this;
  r += o;
  return r;
}

LaurentQ LaurentQ::operator-(const LaurentQ& o) const {
  LaurentQ r = *this;
  r -= o;
  return r;
}

LaurentQ LaurentQ::operator*(const LaurentQ& o) const {
  LaurentQ r;
  for (const auto& [ea, ca] : coeff_)
    for (const auto& [eb, cb] : o.coeff_) r.add_coeff(ea + eb, ca * cb);
  return r;
}

LaurentQ& LaurentQ::operator*=(const LaurentQ& o) {
  *this = *this * o;
  return *this;
}

LaurentQ LaurentQ::scaled(const Rat& c) const {
  LaurentQ r;
  if (c == 0) return r;
  for (const auto& [e, v] : coeff_) r.coeff_[e] = v * c;
  return r;
}

LaurentQ LaurentQ::shifted(int k) const {
  LaurentQ r;
  for (const auto& [e, v] : coeff_) r.coeff_[e + k] = v;
  return r;
}

std::vector<Rat> LaurentQ::to_poly() const {
  if (coeff_.empty()) return {};
  std::vector<Rat> p(static_cast<std::size_t>(max_exp() - min_exp()) + 1,
                     Rat(0));
  const int base = min_exp();
  for (const auto& [e, c] : coeff_) p[static_cast<std::size_t>(e - base)] = c;
  return p;
}

LaurentQ LaurentQ::from_poly(const std::vector<Rat>& p, int shift) {
  LaurentQ r;
  for (std::size_t i = 0; i < p.size(); ++i)
    if (p[i] != 0) r.coeff_[static_cast<int>(i) + shift] = p[i];
  return r;
}

}  // namespace qshift
