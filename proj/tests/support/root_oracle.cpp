#include "support/root_oracle.hpp"

#include <set>
#include <stdexcept>
#include <vector>

namespace qshift::testsupport {

namespace {

using RootVec = std::vector<int>;  // coefficients over the simple roots

// <alpha, alpha_i-vee> = sum_j c_j C_{ij}
int pairing(const CartanData& cd, const RootVec& a, int i) {
  int v = 0;
  for (int j = 1; j <= cd.rank; ++j)
    v += a[static_cast<std::size_t>(j - 1)] * cd.cartan(i, j);
  return v;
}

// (alpha, beta) with (alpha_i, alpha_j) = d_i C_{ij}
long bilinear(const CartanData& cd, const RootVec& a, const RootVec& b) {
  long v = 0;
  for (int i = 1; i <= cd.rank; ++i)
    for (int j = 1; j <= cd.rank; ++j)
      v += static_cast<long>(a[static_cast<std::size_t>(i - 1)]) *
           b[static_cast<std::size_t>(j - 1)] * cd.sym(i) * cd.cartan(i, j);
  return v;
}

}  // namespace

RootOracle root_oracle(const CartanData& cd) {
  const std::size_t n = static_cast<std::size_t>(cd.rank);
  std::set<RootVec> roots;
  std::vector<RootVec> frontier;
  for (std::size_t i = 0; i < n; ++i) {
    RootVec a(n, 0);
    a[i] = 1;
    roots.insert(a);
    frontier.push_back(a);
  }
  while (!frontier.empty()) {
    std::vector<RootVec> next;
    for (const RootVec& a : frontier) {
      for (int i = 1; i <= cd.rank; ++i) {
        RootVec b = a;
        b[static_cast<std::size_t>(i - 1)] -= pairing(cd, a, i);
        if (roots.insert(b).second) next.push_back(b);
      }
    }
    frontier = std::move(next);
  }

  RootOracle out;
  const RootVec* highest = nullptr;
  int best_height = -1;
  bool unique = true;
  for (const RootVec& a : roots) {
    bool positive = true;
    int height = 0;
    for (int c : a) {
      if (c < 0) positive = false;
      height += c;
    }
    if (!positive) continue;
    ++out.positive_roots;
    if (height > best_height) {
      best_height = height;
      highest = &a;
      unique = true;
    } else if (height == best_height) {
      unique = false;
    }
  }
  if (!highest || !unique)
    throw std::logic_error("root oracle: no unique highest root");

  const long theta_sq = bilinear(cd, *highest, *highest);
  long hv = 1;
  for (int i = 1; i <= cd.rank; ++i) {
    const long num =
        2L * cd.sym(i) * (*highest)[static_cast<std::size_t>(i - 1)];
    if (num % theta_sq != 0)
      throw std::logic_error("root oracle: non-integral comark");
    hv += num / theta_sq;
  }
  out.dual_coxeter = static_cast<int>(hv);

  out.lacing = 1;
  for (int i = 1; i <= cd.rank; ++i)
    for (int j = 1; j <= cd.rank; ++j)
      if (i != j) {
        const int m = cd.cartan(i, j) * cd.cartan(j, i);
        if (m > out.lacing) out.lacing = m;
      }
  return out;
}

}  // namespace qshift::testsupport
