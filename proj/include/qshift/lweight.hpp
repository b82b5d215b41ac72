#pragma once

#include <map>
#include <utility>

#include "qshift/cartan.hpp"
#include "qshift/zseries.hpp"

namespace qshift {

struct SupportError : std::domain_error {
  using std::domain_error::domain_error;
};
struct NotYImageError : std::domain_error {
  using std::domain_error::domain_error;
};
struct NotAMonomialError : std::domain_error {
  using std::domain_error::domain_error;
};

// Key of a spectral generator: (node, k) stands for the parameter q^k.
using SpecKey = std::pair<int, int>;

// Element of the l-weight group in canonical form: an integer q-exponent
// torus part together with the exponents of the Psi generators. Y and A are
// constructors only; everything is stored in (torus, Psi) coordinates, which
// makes equality structural.
struct LWeight {
  TorusWeight torus;           // exponent vector, size = rank
  std::map<SpecKey, int> psi;  // (node, spec) -> nonzero exponent

  bool is_identity() const {
    if (!psi.empty()) return false;
    for (int e : torus)
      if (e != 0) return false;
    return true;
  }
  int psi_exp(int node, int spec) const {
    auto it = psi.find({node, spec});
    return it == psi.end() ? 0 : it->second;
  }

  auto operator<=>(const LWeight&) const = default;
};

// Monomials in the Y (resp. A^{-1}) generators. A YMonomial is reduced; an
// AMonomial stores the exponents of the A^{-1} factors as nonnegative
// integers, the empty map being the identity.
using YMonomial = std::map<SpecKey, int>;
using AMonomial = std::map<SpecKey, int>;

LWeight lw_identity(const CartanData& cd);
LWeight lw_psi(const CartanData& cd, int i, int k, int exp = 1);
LWeight lw_torus(const CartanData& cd, const TorusWeight& t);
// Exponentwise product (sign +1) or quotient (sign -1).
LWeight lw_multiply(const LWeight& a, const LWeight& b, int sign = 1);
LWeight lw_inverse(const LWeight& a);
LWeight lw_power(const LWeight& a, int e);

// Y_{i,q^k} = [omega_i] Psi_{i,k-d_i} Psi_{i,k+d_i}^{-1}, raised to exp.
LWeight lw_from_Y(const CartanData& cd, int i, int k, int exp = 1);
// A_{i,q^k} via the Y-product formula; varpi of the result is [alpha_i].
LWeight lw_A(const CartanData& cd, int i, int k);

// Evaluation at z = 0: the stored torus part.
TorusWeight varpi(const LWeight& w);
// Coweight mu with alpha_i(mu) = sum of node-i Psi exponents.
Coweight lw_degree(const CartanData& cd, const LWeight& w);
// J-part: keeps node-indexed data with i in J, zeroes the rest.
LWeight lw_res_J(const LWeight& w, const NodeSet& J);
// Spectral shift: all spectral exponents move by +k (pullback by tau_{q^k}).
LWeight lw_shift(const LWeight& w, int k);
bool is_J_trivial(const LWeight& w, const NodeSet& J);
bool is_supported_on(const LWeight& w, const NodeSet& J);

// Conversions between the canonical form and the Y/A monomial views.
LWeight lw_from_Y_monomial(const CartanData& cd, const YMonomial& m);
// Node-by-node telescoping; throws NotYImageError when w is not a product
// of Y generators.
YMonomial lw_to_Y_monomial(const CartanData& cd, const LWeight& w);
LWeight lw_from_A_monomial(const CartanData& cd, const AMonomial& m);
// Factors w as a product of A^{-1} generators (throws NotAMonomialError).
AMonomial lw_to_A_monomial(const CartanData& cd, const LWeight& w);

int a_degree(const AMonomial& m);
AMonomial a_multiply(const AMonomial& a, const AMonomial& b);
bool a_supported_on(const AMonomial& m, const NodeSet& J);
AMonomial a_shift(const AMonomial& m, int k);

// Largest spectral exponent appearing in a reduced Y-monomial (L(a,M) for
// the single spectral class q^Z); requires a nonempty monomial.
int y_top_level(const YMonomial& m);
// True when every variable at the top spectral level carries a negative
// power; the empty monomial is vacuously right-negative.
bool right_negative(const YMonomial& m);

// Y_{i,q^k} Y_{i,q^{k+2d_i}} ... (length factors).
YMonomial kr_highest_weight(const CartanData& cd, int i, int k, int length);

// Named l-weights of the QQ-type systems, at spectral base q^k.
enum class NamedWeight {
  PsiStar,      // Y_{j,k-d_j} * prod_{C_{ij}<0} Psi_{i,k-d_i C_{ij}}
  PsiTilde,     // Psi_{j,k}^{-1} * neighbor Psi factors
  QQPsiP,       // Psi_{j,k} * PsiTilde
  QQStarPsiP1,  // prod_{C_{ij}!=0} Psi_{i,k-d_i C_{ij}}
  QQStarPsiP2,  // prod_{C_{ij}!=0} Psi_{i,k+d_i C_{ij}}
  NewTPsiP,     // same as QQPsiP
};
LWeight build_named_weight(const CartanData& cd, NamedWeight name, int j,
                           int k);

// Node component of w as a rational function of z: q^{e_i} prod (1-q^k z)^n.
// Returned as a (numerator, denominator) pair of polynomials in z.
std::pair<ZPoly, ZPoly> lw_node_function(const CartanData& cd,
                                         const LWeight& w, int i);
// Exact evaluation of the node component at the given z; throws PoleError.
RatQ lw_node_eval(const CartanData& cd, const LWeight& w, int i,
                  const RatQ& z);

}  // namespace qshift
