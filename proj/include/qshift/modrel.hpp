#pragma once

#include <optional>
#include <string>

#include "qshift/qchar.hpp"

namespace qshift {

// Sentinel target for an action that leaves the allocated basis window.
inline constexpr std::size_t kEscapeTarget = static_cast<std::size_t>(-1);

// One exponential mode: the mode-r action contributes coeff * base^r times
// the target basis vector. base is an invertible monomial c q^e.
struct ExpModeTerm {
  std::size_t target = kEscapeTarget;
  RatQ coeff;
  RatQ base;
};

// Explicit module with a diagonal Cartan-Drinfeld action: every basis label
// carries its l-weight, and the x generators act by finite lists of
// exponential modes. Infinite-dimensional families are truncated, with two
// extra layers allocated beyond the checked window so that intermediate
// vectors of the relation checker stay representable.
struct ModuleRealization {
  CartanData cd;
  std::string name;
  Coweight shift;                        // mu; alpha_i(mu) = phi-degree
  std::vector<std::string> labels;
  std::vector<LWeight> lweights;         // per label
  std::vector<char> inside;              // label is in the checked window
  std::vector<int> level;                // ladder depth of the label
  // Largest A-degree D such that every basis vector of degree <= D is
  // allocated; module_qchar may not be asked beyond it.
  int complete_degree = 0;
  // [label][node-1] -> modes; empty means the generator acts by zero.
  std::vector<std::vector<std::vector<ExpModeTerm>>> xplus, xminus;

  std::size_t size() const { return labels.size(); }
  const LWeight& top() const { return lweights.at(0); }
};

struct RealizeParams {
  int node = 1;        // j (or j1 for the pair family)
  int node2 = 2;       // j2 for the pair family
  int spec = 0;        // spectral base exponent k, i.e. a = q^k
  int length = 1;      // KR length
  int basis = 6;       // checked-window bound for infinite families
  TorusWeight gamma;   // invertible highest weight
};

ModuleRealization realize_sl2_kr(const CartanData& cd, const RealizeParams& p);
ModuleRealization realize_sl2_neg_prefund(const CartanData& cd,
                                          const RealizeParams& p);
// Inflation of the rank-1 negative prefundamental to an arbitrary host:
// internal node p.node acts as for sl2, external generators act by zero.
ModuleRealization realize_psi_tilde_inflation(const CartanData& cd,
                                              const RealizeParams& p);
ModuleRealization realize_pos_prefund(const CartanData& cd,
                                      const RealizeParams& p);
ModuleRealization realize_invertible(const CartanData& cd,
                                     const RealizeParams& p);
ModuleRealization realize_sl3_pair_inflation(const CartanData& cd,
                                             const RealizeParams& p);
ModuleRealization realize(const std::string& name, const CartanData& cd,
                          const RealizeParams& p);

// Finite vector over basis labels; escaped marks a truncation escape.
struct ModeVec {
  std::map<std::size_t, RatQ> c;
  bool escaped = false;

  void add(std::size_t label, const RatQ& v);
  bool is_zero() const { return c.empty(); }
};

enum class Gen { XPlus, XMinus };

// x^{+/-}_{node, r} applied to one basis vector.
ModeVec apply_mode(const ModuleRealization& real, Gen gen, int node, int r,
                   std::size_t label);
ModeVec apply_mode(const ModuleRealization& real, Gen gen, int node, int r,
                   const ModeVec& v);

// Series expansion of the stored rational phi eigenvalue.
ZSeries phi_series_eigen(const ModuleRealization& real, std::size_t label,
                         int node, Dir dir, int order);
// h_{i,m} eigenvalue (m != 0): mode |m| coefficient of the logarithm of the
// normalized phi series, divided by +/- (q_i - q_i^{-1}).
RatQ extract_h_eigenvalue(const ModuleRealization& real, std::size_t label,
                          int node, int m);

enum class RelationId { CommPhi, PhiTX, Relhx, Relxpxmphi, XpmRelSupp, QSerre };
const std::vector<RelationId>& all_relations();
std::string relation_name(RelationId id);

struct RelationWindow {
  int basis = 6;   // N: labels checked
  int modes = 3;   // R: |r|, |s| bounds
  int hmodes = 3;  // M: |m| bound for Relhx
};

struct RelationStats {
  long attempted = 0;
  long passed = 0;
  long failed = 0;
  long skipped = 0;
};

struct RelationCounterexample {
  RelationId relation;
  std::string site;  // label, nodes and modes
  std::string diff;  // first nonzero entry of lhs - rhs
};

struct RelationReport {
  std::map<RelationId, RelationStats> stats;
  std::optional<RelationCounterexample> first_failure;

  long total(long RelationStats::* field) const;
  long total_attempted() const { return total(&RelationStats::attempted); }
  long total_failed() const { return total(&RelationStats::failed); }
  long total_skipped() const { return total(&RelationStats::skipped); }
  bool pass() const { return total_failed() == 0; }
};

// Exact check of the defining relations on the window; failures are data.
RelationReport verify_definition_relations(
    const ModuleRealization& real, const RelationWindow& window,
    const std::vector<RelationId>& relations = all_relations());

// Reads the truncated q-character off the diagonal phi action.
TruncatedQChar module_qchar(const ModuleRealization& real, int depth);

// u = 1 specialization of the Drinfeld coproduct on a pair of realizations.
// The cross terms evaluate the partner's phi rational function at z =
// 1/base; a pole there means the spectral parameters are non-generic and
// raises PoleError.
ModuleRealization drinfeld_tensor(const ModuleRealization& a,
                                  const ModuleRealization& b);

struct RMatrixWindow {
  int grid = 4;   // l, m <= grid
  int modes = 2;  // |r| bound
};

struct RMatrixReport {
  int spec = 0;        // a = q^spec
  bool generic = true; // spec even
  std::vector<std::vector<RatQ>> gamma;  // [l][m], sizes grid+2
  long attempted = 0;
  long failed = 0;
  std::optional<std::string> first_failure;
  bool pass() const { return failed == 0; }
};

// gamma_{l,m} for a = q^spec. A vanishing numerator short-circuits to zero;
// otherwise a vanishing denominator factor raises PoleError naming (l,m,s).
RatQ rmatrix_gamma(int spec, int l, int m);

// The A2 intertwiner check between L(PsiTilde_1)(a) and L(PsiTilde_2): for
// even spec it verifies psi_a against every generator on the grid; for odd
// spec it computes the gamma table (vanishing pattern) only.
RMatrixReport rmatrix_check(int spec, const RMatrixWindow& window);

}  // namespace qshift
