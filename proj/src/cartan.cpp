#include "qshift/cartan.hpp"

#include <stdexcept>

namespace qshift {

char dynkin_letter(DynkinType t) {
  switch (t) {
    case DynkinType::A: return 'A';
    case DynkinType::B: return 'B';
    case DynkinType::C: return 'C';
    case DynkinType::D: return 'D';
    case DynkinType::E: return 'E';
    case DynkinType::F: return 'F';
    case DynkinType::G: return 'G';
  }
  return '?';
}

std::string CartanData::name() const {
  return std::string(1, dynkin_letter(type)) + std::to_string(rank);
}

namespace {

// Frozen dual Coxeter numbers; regression-tested against the root-system
// oracle in the test suite.
int frozen_dual_coxeter(DynkinType t, int n) {
  switch (t) {
    case DynkinType::A: return n + 1;
    case DynkinType::B: return 2 * n - 1;
    case DynkinType::C: return n + 1;
    case DynkinType::D: return 2 * n - 2;
    case DynkinType::E: return n == 6 ? 12 : (n == 7 ? 18 : 30);
    case DynkinType::F: return 9;
    case DynkinType::G: return 4;
  }
  return 0;
}

void check_rank(DynkinType t, int n) {
  bool ok = false;
  switch (t) {
    case DynkinType::A: ok = n >= 1; break;
    case DynkinType::B: ok = n >= 2; break;
    case DynkinType::C: ok = n >= 2; break;
    case DynkinType::D: ok = n >= 4; break;
    case DynkinType::E: ok = n >= 6 && n <= 8; break;
    case DynkinType::F: ok = n == 4; break;
    case DynkinType::G: ok = n == 2; break;
  }
  if (!ok)
    throw std::invalid_argument("invalid rank for Dynkin type");
}

std::vector<std::pair<int, int>> chain_edges(int n) {
  std::vector<std::pair<int, int>> e;
  for (int i = 1; i < n; ++i) e.emplace_back(i, i + 1);
  return e;
}

}  // namespace

CartanData dynkin_data(DynkinType type, int rank) {
  check_rank(type, rank);
  const int n = rank;
  CartanData cd;
  cd.type = type;
  cd.rank = n;
  cd.C.assign(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) cd.C[i][i] = 2;
  cd.d.assign(n, 1);

  auto set_edge = [&](int i, int j, int cij = -1, int cji = -1) {
    cd.C[i - 1][j - 1] = cij;
    cd.C[j - 1][i - 1] = cji;
  };

  switch (type) {
    case DynkinType::A:
      for (auto [i, j] : chain_edges(n)) set_edge(i, j);
      break;
    case DynkinType::B:
      // Last node short: d = (2, ..., 2, 1) and C_{n,n-1} = -2.
      for (auto [i, j] : chain_edges(n)) set_edge(i, j);
      set_edge(n - 1, n, -1, -2);
      for (int i = 1; i < n; ++i) cd.d[i - 1] = 2;
      break;
    case DynkinType::C:
      // Last node long: d = (1, ..., 1, 2) and C_{n-1,n} = -2.
      for (auto [i, j] : chain_edges(n)) set_edge(i, j);
      set_edge(n - 1, n, -2, -1);
      cd.d[n - 1] = 2;
      break;
    case DynkinType::D:
      for (int i = 1; i < n - 1; ++i) set_edge(i, i + 1);
      set_edge(n - 2, n);
      break;
    case DynkinType::E:
      // Bourbaki: chain 1-3-4-5-...-n with node 2 attached to node 4.
      set_edge(1, 3);
      for (int i = 3; i < n; ++i) set_edge(i, i + 1);
      set_edge(2, 4);
      break;
    case DynkinType::F:
      for (auto [i, j] : chain_edges(n)) set_edge(i, j);
      set_edge(2, 3, -1, -2);
      cd.d[0] = cd.d[1] = 2;
      break;
    case DynkinType::G:
      set_edge(1, 2, -1, -3);
      cd.d[0] = 3;
      break;
  }

  cd.dual_coxeter = frozen_dual_coxeter(type, n);
  cd.lacing = 1;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      if (i != j && -cd.cartan(i, j) > cd.lacing) cd.lacing = -cd.cartan(i, j);
  return cd;
}

CartanData dynkin_data(const std::string& name) {
  if (name.size() < 2) throw std::invalid_argument("bad Dynkin name");
  DynkinType t;
  switch (name[0]) {
    case 'A': t = DynkinType::A; break;
    case 'B': t = DynkinType::B; break;
    case 'C': t = DynkinType::C; break;
    case 'D': t = DynkinType::D; break;
    case 'E': t = DynkinType::E; break;
    case 'F': t = DynkinType::F; break;
    case 'G': t = DynkinType::G; break;
    default: throw std::invalid_argument("unknown Dynkin type " + name);
  }
  int rank = 0;
  for (std::size_t i = 1; i < name.size(); ++i) {
    if (name[i] < '0' || name[i] > '9')
      throw std::invalid_argument("bad Dynkin rank in " + name);
    rank = rank * 10 + (name[i] - '0');
  }
  return dynkin_data(t, rank);
}

Coweight coweight_zero(const CartanData& cd) {
  return Coweight(static_cast<std::size_t>(cd.rank), 0);
}

Coweight coweight_fundamental(const CartanData& cd, int i) {
  Coweight w = coweight_zero(cd);
  w[static_cast<std::size_t>(i - 1)] = 1;
  return w;
}

Coweight simple_coroot(const CartanData& cd, int j) {
  Coweight w = coweight_zero(cd);
  for (int i = 1; i <= cd.rank; ++i)
    w[static_cast<std::size_t>(i - 1)] = cd.cartan(j, i);
  return w;
}

Coweight coweight_add(const Coweight& a, const Coweight& b, int sign) {
  Coweight r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += sign * b[i];
  return r;
}

int pair_alpha_coweight(const CartanData& cd, const Coweight& mu, int i) {
  if (!cd.valid_node(i)) throw std::out_of_range("node out of range");
  return mu[static_cast<std::size_t>(i - 1)];
}

TorusWeight torus_identity(const CartanData& cd) {
  return TorusWeight(static_cast<std::size_t>(cd.rank), 0);
}

TorusWeight torus_omega(const CartanData& cd, int i) {
  TorusWeight e = torus_identity(cd);
  e[static_cast<std::size_t>(i - 1)] = cd.sym(i);
  return e;
}

TorusWeight torus_alpha(const CartanData& cd, int j) {
  TorusWeight e = torus_identity(cd);
  for (int i = 1; i <= cd.rank; ++i)
    e[static_cast<std::size_t>(i - 1)] = cd.sym(i) * cd.cartan(i, j);
  return e;
}

TorusWeight torus_add(const TorusWeight& a, const TorusWeight& b, int sign) {
  TorusWeight r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += sign * b[i];
  return r;
}

bool solve_rational(std::vector<std::vector<Rat>> M, std::vector<Rat> rhs,
                    std::vector<Rat>& out) {
  const std::size_t n = M.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && M[piv][col] == 0) ++piv;
    if (piv == n) return false;
    std::swap(M[piv], M[col]);
    std::swap(rhs[piv], rhs[col]);
    const Rat inv = 1 / M[col][col];
    for (std::size_t j = col; j < n; ++j) M[col][j] *= inv;
    rhs[col] *= inv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || M[r][col] == 0) continue;
      const Rat f = M[r][col];
      for (std::size_t j = col; j < n; ++j) M[r][j] -= f * M[col][j];
      rhs[r] -= f * rhs[col];
    }
  }
  out = std::move(rhs);
  return true;
}

bool weight_leq(const CartanData& cd, const TorusWeight& gamma,
                const TorusWeight& lambda) {
  const std::size_t n = static_cast<std::size_t>(cd.rank);
  std::vector<std::vector<Rat>> M(n, std::vector<Rat>(n));
  std::vector<Rat> rhs(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j)
      M[i][j] = cd.d[i] * cd.C[i][j];  // column j of DC
    rhs[i] = lambda[i] - gamma[i];
  }
  std::vector<Rat> c;
  if (!solve_rational(std::move(M), std::move(rhs), c)) return false;
  for (const Rat& v : c) {
    if (v < 0) return false;
    if (v.get_den() != 1) return false;
  }
  return true;
}

}  // namespace qshift
