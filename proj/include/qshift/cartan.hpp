#pragma once

#include <set>
#include <string>
#include <vector>

#include "qshift/rat.hpp"

namespace qshift {

enum class DynkinType { A, B, C, D, E, F, G };

char dynkin_letter(DynkinType t);

// Finite-type Cartan datum. Nodes are 1-based, following the usual
// numbering (B_n has its short node last, C_n its long node last).
struct CartanData {
  DynkinType type;
  int rank = 0;
  std::vector<std::vector<int>> C;  // Cartan matrix, 0-based storage
  std::vector<int> d;               // symmetrizers, diag(d) C symmetric
  int dual_coxeter = 0;             // h-vee
  int lacing = 0;                   // r-vee

  int cartan(int i, int j) const { return C[i - 1][j - 1]; }
  int sym(int i) const { return d[i - 1]; }
  int n() const { return rank; }
  bool valid_node(int i) const { return i >= 1 && i <= rank; }
  std::string name() const;

  bool operator==(const CartanData& o) const {
    return type == o.type && rank == o.rank;
  }
};

// Construction; throws std::invalid_argument for a rank not valid for the
// type (A >= 1, B/C >= 2, D >= 4, E in 6..8, F = 4, G = 2).
CartanData dynkin_data(DynkinType type, int rank);
CartanData dynkin_data(const std::string& name);  // e.g. "A2"

// Integer vector over the fundamental coweights.
using Coweight = std::vector<int>;
// Integer exponent vector: the torus weight (q^{e_1}, ..., q^{e_n}).
using TorusWeight = std::vector<int>;
using NodeSet = std::set<int>;

Coweight coweight_zero(const CartanData& cd);
Coweight coweight_fundamental(const CartanData& cd, int i);
// alpha_j-vee expanded over the fundamental coweights (row j of C).
Coweight simple_coroot(const CartanData& cd, int j);
Coweight coweight_add(const Coweight& a, const Coweight& b, int sign = 1);

// alpha_i(mu) for mu over the fundamental coweights.
int pair_alpha_coweight(const CartanData& cd, const Coweight& mu, int i);

TorusWeight torus_identity(const CartanData& cd);
// Exponent vector of [omega_i]: d_i at node i.
TorusWeight torus_omega(const CartanData& cd, int i);
// Exponent vector of [alpha_j]: column j of DC.
TorusWeight torus_alpha(const CartanData& cd, int j);
TorusWeight torus_add(const TorusWeight& a, const TorusWeight& b,
                      int sign = 1);

// Dominance order: gamma <= lambda iff lambda - gamma is a nonnegative
// integer combination of the [alpha_j]. Decided by exact rational linear
// algebra (DC is invertible).
bool weight_leq(const CartanData& cd, const TorusWeight& gamma,
                const TorusWeight& lambda);

// Exact linear solve M x = rhs over the rationals; returns false when the
// system is singular/inconsistent.
bool solve_rational(std::vector<std::vector<Rat>> M, std::vector<Rat> rhs,
                    std::vector<Rat>& out);

}  // namespace qshift
