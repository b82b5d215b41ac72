#include "qshift/lweight.hpp"

#include <algorithm>
#include <string>

namespace qshift {

LWeight lw_identity(const CartanData& cd) {
  return LWeight{torus_identity(cd), {}};
}

LWeight lw_psi(const CartanData& cd, int i, int k, int exp) {
  if (!cd.valid_node(i)) throw std::out_of_range("lw_psi: node out of range");
  LWeight w = lw_identity(cd);
  if (exp != 0) w.psi[{i, k}] = exp;
  return w;
}

LWeight lw_torus(const CartanData& cd, const TorusWeight& t) {
  (void)cd;
  return LWeight{t, {}};
}

LWeight lw_multiply(const LWeight& a, const LWeight& b, int sign) {
  LWeight r = a;
  for (std::size_t i = 0; i < r.torus.size(); ++i)
    r.torus[i] += sign * b.torus[i];
  for (const auto& [key, e] : b.psi) {
    auto [it, inserted] = r.psi.emplace(key, sign * e);
    if (!inserted) {
      it->second += sign * e;
      if (it->second == 0) r.psi.erase(it);
    } else if (it->second == 0) {
      r.psi.erase(it);
    }
  }
  return r;
}

LWeight lw_inverse(const LWeight& a) {
  LWeight r = a;
  for (auto& e : r.torus) e = -e;
  for (auto& [key, e] : r.psi) e = -e;
  return r;
}

LWeight lw_power(const LWeight& a, int e) {
  LWeight r = a;
  if (e == 0) return LWeight{TorusWeight(a.torus.size(), 0), {}};
  for (auto& t : r.torus) t *= e;
  if (e != 1) {
    std::map<SpecKey, int> psi;
    for (const auto& [key, x] : a.psi) psi[key] = x * e;
    r.psi = std::move(psi);
  }
  return r;
}

LWeight lw_from_Y(const CartanData& cd, int i, int k, int exp) {
  if (!cd.valid_node(i))
    throw std::out_of_range("lw_from_Y: node out of range");
  if (exp == 0) return lw_identity(cd);
  LWeight w = lw_identity(cd);
  const int di = cd.sym(i);
  w.torus[static_cast<std::size_t>(i - 1)] = di * exp;
  if (2 * di != 0) {
    w.psi[{i, k - di}] = exp;
    w.psi[{i, k + di}] = -exp;
  }
  return w;
}

LWeight lw_A(const CartanData& cd, int i, int k) {
  LWeight w = lw_from_Y(cd, i, k - cd.sym(i));
  w = lw_multiply(w, lw_from_Y(cd, i, k + cd.sym(i)));
  for (int j = 1; j <= cd.rank; ++j) {
    if (j == i) continue;
    switch (cd.cartan(j, i)) {
      case -1:
        w = lw_multiply(w, lw_from_Y(cd, j, k), -1);
        break;
      case -2:
        w = lw_multiply(w, lw_from_Y(cd, j, k - 1), -1);
        w = lw_multiply(w, lw_from_Y(cd, j, k + 1), -1);
        break;
      case -3:
        w = lw_multiply(w, lw_from_Y(cd, j, k - 2), -1);
        w = lw_multiply(w, lw_from_Y(cd, j, k), -1);
        w = lw_multiply(w, lw_from_Y(cd, j, k + 2), -1);
        break;
      default:
        break;
    }
  }
  return w;
}

TorusWeight varpi(const LWeight& w) { return w.torus; }

Coweight lw_degree(const CartanData& cd, const LWeight& w) {
  Coweight mu = coweight_zero(cd);
  for (const auto& [key, e] : w.psi)
    mu[static_cast<std::size_t>(key.first - 1)] += e;
  return mu;
}

LWeight lw_res_J(const LWeight& w, const NodeSet& J) {
  LWeight r = w;
  for (std::size_t i = 0; i < r.torus.size(); ++i)
    if (!J.count(static_cast<int>(i) + 1)) r.torus[i] = 0;
  for (auto it = r.psi.begin(); it != r.psi.end();) {
    if (!J.count(it->first.first))
      it = r.psi.erase(it);
    else
      ++it;
  }
  return r;
}

LWeight lw_shift(const LWeight& w, int k) {
  LWeight r = w;
  if (k != 0) {
    std::map<SpecKey, int> psi;
    for (const auto& [key, e] : w.psi) psi[{key.first, key.second + k}] = e;
    r.psi = std::move(psi);
  }
  return r;
}

bool is_J_trivial(const LWeight& w, const NodeSet& J) {
  for (int j : J)
    if (w.torus[static_cast<std::size_t>(j - 1)] != 0) return false;
  for (const auto& [key, e] : w.psi)
    if (J.count(key.first) && e != 0) return false;
  return true;
}

bool is_supported_on(const LWeight& w, const NodeSet& J) {
  for (std::size_t i = 0; i < w.torus.size(); ++i)
    if (w.torus[i] != 0 && !J.count(static_cast<int>(i) + 1)) return false;
  for (const auto& [key, e] : w.psi)
    if (e != 0 && !J.count(key.first)) return false;
  return true;
}

LWeight lw_from_Y_monomial(const CartanData& cd, const YMonomial& m) {
  LWeight w = lw_identity(cd);
  for (const auto& [key, e] : m)
    w = lw_multiply(w, lw_from_Y(cd, key.first, key.second, e));
  return w;
}

YMonomial lw_to_Y_monomial(const CartanData& cd, const LWeight& w) {
  // Node by node: the Psi exponents f of a Y-monomial with Y-exponents g
  // satisfy f(s) = g(s+d_i) - g(s-d_i), solved by the downward summation
  // g(k) = -sum_{t>=0} f(k + d_i + 2 d_i t). A finite solution exists iff
  // f sums to zero on every residue class mod 2 d_i.
  YMonomial out;
  for (int i = 1; i <= cd.rank; ++i) {
    const int di = cd.sym(i);
    std::map<int, int> f;
    for (const auto& [key, e] : w.psi)
      if (key.first == i) f[key.second] = e;
    int total = 0;
    if (!f.empty()) {
      const int lo = f.begin()->first;
      const int hi = f.rbegin()->first;
      std::map<int, int> class_sum;
      for (const auto& [s, e] : f) class_sum[((s % (2 * di)) + 2 * di) % (2 * di)] += e;
      for (const auto& [r, sum] : class_sum)
        if (sum != 0)
          throw NotYImageError("l-weight is not a Y-monomial at node " +
                               std::to_string(i));
      for (int k = lo - di; k <= hi - di; ++k) {
        int g = 0;
        for (int s = k + di; s <= hi; s += 2 * di) {
          auto it = f.find(s);
          if (it != f.end()) g -= it->second;
        }
        if (g != 0) {
          out[{i, k}] = g;
          total += g;
        }
      }
    }
    if (w.torus[static_cast<std::size_t>(i - 1)] != di * total)
      throw NotYImageError("torus part mismatch for Y-monomial at node " +
                           std::to_string(i));
  }
  return out;
}

LWeight lw_from_A_monomial(const CartanData& cd, const AMonomial& m) {
  LWeight w = lw_identity(cd);
  for (const auto& [key, e] : m) {
    if (e < 0) throw NotAMonomialError("negative A-monomial exponent");
    w = lw_multiply(w, lw_power(lw_A(cd, key.first, key.second), -e));
  }
  return w;
}

AMonomial lw_to_A_monomial(const CartanData& cd, const LWeight& w) {
  // Peel from the top spectral level: the top variable of A_{i,k}^{-1} is
  // Y_{i,k+d_i}^{-1} and nothing else in the monomial reaches that level.
  AMonomial out;
  LWeight cur = w;
  for (int guard = 0; !cur.psi.empty(); ++guard) {
    if (guard > 10000) throw NotAMonomialError("A-factorization did not terminate");
    YMonomial y = [&] {
      try {
        return lw_to_Y_monomial(cd, cur);
      } catch (const NotYImageError&) {
        throw NotAMonomialError("not in the image of the A-lattice");
      }
    }();
    if (y.empty()) break;
    const int top = y_top_level(y);
    bool progressed = false;
    for (const auto& [key, e] : y) {
      if (key.second != top) continue;
      if (e > 0)
        throw NotAMonomialError("positive power at top spectral level");
      const int i = key.first;
      const int k = top - cd.sym(i);
      out[{i, k}] += -e;
      cur = lw_multiply(cur, lw_power(lw_A(cd, i, k), -e));
      progressed = true;
    }
    if (!progressed) throw NotAMonomialError("stuck A-factorization");
  }
  for (int e : cur.torus)
    if (e != 0) throw NotAMonomialError("torus residue in A-factorization");
  return out;
}

int a_degree(const AMonomial& m) {
  int d = 0;
  for (const auto& [key, e] : m) d += e;
  return d;
}

AMonomial a_multiply(const AMonomial& a, const AMonomial& b) {
  AMonomial r = a;
  for (const auto& [key, e] : b) {
    r[key] += e;
    if (r[key] == 0) r.erase(key);
  }
  return r;
}

bool a_supported_on(const AMonomial& m, const NodeSet& J) {
  for (const auto& [key, e] : m)
    if (e != 0 && !J.count(key.first)) return false;
  return true;
}

AMonomial a_shift(const AMonomial& m, int k) {
  AMonomial r;
  for (const auto& [key, e] : m) r[{key.first, key.second + k}] = e;
  return r;
}

int y_top_level(const YMonomial& m) {
  if (m.empty()) throw std::invalid_argument("y_top_level: empty monomial");
  int top = m.begin()->first.second;
  for (const auto& [key, e] : m) top = std::max(top, key.second);
  return top;
}

bool right_negative(const YMonomial& m) {
  if (m.empty()) return true;
  const int top = y_top_level(m);
  for (const auto& [key, e] : m)
    if (key.second == top && e > 0) return false;
  return true;
}

YMonomial kr_highest_weight(const CartanData& cd, int i, int k, int length) {
  if (length < 1)
    throw std::invalid_argument("kr_highest_weight: length must be >= 1");
  YMonomial m;
  for (int t = 0; t < length; ++t) m[{i, k + 2 * cd.sym(i) * t}] += 1;
  return m;
}

LWeight build_named_weight(const CartanData& cd, NamedWeight name, int j,
                           int k) {
  if (!cd.valid_node(j))
    throw std::out_of_range("build_named_weight: node out of range");
  const int dj = cd.sym(j);
  auto psi_tilde = [&] {
    LWeight w = lw_psi(cd, j, k, -1);
    for (int i = 1; i <= cd.rank; ++i) {
      if (i == j) continue;
      switch (cd.cartan(j, i)) {
        case -1:
          w = lw_multiply(w, lw_psi(cd, i, k + dj));
          break;
        case -2:
          w = lw_multiply(w, lw_psi(cd, i, k));
          w = lw_multiply(w, lw_psi(cd, i, k + 2 * dj));
          break;
        case -3:
          w = lw_multiply(w, lw_psi(cd, i, k - dj));
          w = lw_multiply(w, lw_psi(cd, i, k + dj));
          w = lw_multiply(w, lw_psi(cd, i, k + 3 * dj));
          break;
        default:
          break;
      }
    }
    return w;
  };
  auto qqstar = [&](int sign) {
    LWeight w = lw_identity(cd);
    for (int i = 1; i <= cd.rank; ++i) {
      const int cij = cd.cartan(i, j);
      if (cij == 0) continue;
      w = lw_multiply(w, lw_psi(cd, i, k + sign * cd.sym(i) * (-cij)));
    }
    return w;
  };
  switch (name) {
    case NamedWeight::PsiStar: {
      LWeight w = lw_from_Y(cd, j, k - dj);
      for (int i = 1; i <= cd.rank; ++i) {
        if (i == j) continue;
        const int cij = cd.cartan(i, j);
        if (cij < 0)
          w = lw_multiply(w, lw_psi(cd, i, k - cd.sym(i) * cij));
      }
      return w;
    }
    case NamedWeight::PsiTilde:
      return psi_tilde();
    case NamedWeight::QQPsiP:
    case NamedWeight::NewTPsiP:
      return lw_multiply(lw_psi(cd, j, k), psi_tilde());
    case NamedWeight::QQStarPsiP1:
      return qqstar(+1);
    case NamedWeight::QQStarPsiP2:
      return qqstar(-1);
  }
  throw std::invalid_argument("unknown named weight");
}

std::pair<ZPoly, ZPoly> lw_node_function(const CartanData& cd,
                                         const LWeight& w, int i) {
  (void)cd;
  ZPoly num = {qpow(w.torus[static_cast<std::size_t>(i - 1)])};
  ZPoly den = zpoly_one();
  for (const auto& [key, e] : w.psi) {
    if (key.first != i) continue;
    if (e > 0)
      num = zpoly_mul(num, zpoly_linear_power(qpow(key.second), e));
    else
      den = zpoly_mul(den, zpoly_linear_power(qpow(key.second), -e));
  }
  return {num, den};
}

RatQ lw_node_eval(const CartanData& cd, const LWeight& w, int i,
                  const RatQ& z) {
  (void)cd;
  RatQ num = qpow(w.torus[static_cast<std::size_t>(i - 1)]);
  RatQ den = RatQ::one();
  for (const auto& [key, x] : w.psi) {
    if (key.first != i) continue;
    const RatQ factor = RatQ::one() - qpow(key.second) * z;
    if (x > 0) {
      num *= factor.pow(x);
    } else {
      if (factor.is_zero())
        throw PoleError("l-weight component pole at the evaluation point");
      den *= factor.pow(-x);
    }
  }
  return num / den;
}

}  // namespace qshift
