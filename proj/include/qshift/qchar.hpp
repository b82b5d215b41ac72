#pragma once

#include <optional>
#include <string>

#include "qshift/lweight.hpp"

namespace qshift {

// Depth-truncated normalized q-character: a highest l-weight together with
// the multiplicities of the A^{-1}-monomials of total degree <= depth.
// Multiplicities are positive; the identity monomial carries the highest
// l-weight line itself.
struct TruncatedQChar {
  LWeight top;
  int depth = 0;
  std::map<AMonomial, long> terms;

  long mult(const AMonomial& m) const {
    auto it = terms.find(m);
    return it == terms.end() ? 0 : it->second;
  }
  long term_count() const { return static_cast<long>(terms.size()); }

  bool operator==(const TruncatedQChar& o) const {
    return top == o.top && depth == o.depth && terms == o.terms;
  }
};

// Single-line character [top] (the identity monomial only).
TruncatedQChar qc_single(const LWeight& top, int depth);

// Fusion shadow: tops multiply, term maps convolve; the result is truncated
// to min(depth_a, depth_b) and carries that depth.
TruncatedQChar qc_product(const TruncatedQChar& a, const TruncatedQChar& b);

// iota_J: reinterprets a J-supported character over the big diagram with a
// new top. Terms must be supported on J.
TruncatedQChar qc_embed_J(const TruncatedQChar& c, const LWeight& top_override,
                          const NodeSet& J);
// res_J on characters whose terms are all J-supported.
TruncatedQChar qc_restrict_J(const TruncatedQChar& c, const NodeSet& J);

// Absolute view: top times each A^{-1}-monomial, multiplicities summed.
std::map<LWeight, long> qc_materialize(const CartanData& cd,
                                       const TruncatedQChar& c);

// Spectral shift by q^k of the whole character.
TruncatedQChar qc_shift(const TruncatedQChar& c, int k);

// Closed forms.
//
// Kirillov-Reshetikhin ladder at one node: top is the Y-string of the given
// length ending at q^{k - d_j} and the terms are the nested ladder
// 1 + sum_{s} A_{j,k}^{-1} ... A_{j,k-2 d_j s}^{-1}. Length 0 is the trivial
// character.
TruncatedQChar qc_kr_sl2(const CartanData& cd, int j, int k, int length,
                         int depth);
// Negative prefundamental: top Psi_{j,k}^{-1} with the infinite ladder,
// truncated to depth.
TruncatedQChar qc_neg_prefund_rank1(const CartanData& cd, int j, int k,
                                    int depth);
// Rank-2 negative prefundamental over an A2 pair (j1, j2): one term per
// pair n >= m >= 0 built from descending A-ladders at both nodes.
TruncatedQChar qc_neg_prefund_sl3_pair(const CartanData& cd, int j1, int j2,
                                       int k, int depth);
// The J-trivial top factor of the rank-2 family on a bigger host diagram.
LWeight sl3_pair_psi_p(const CartanData& cd, int j1, int j2, int k);

// Inflation at the q-character level: embed a J-supported character with a
// new top. psi_top must restrict to the old top and differ from it by a
// J-trivial product of positive Psi generators and torus factors.
TruncatedQChar qc_inflation(const CartanData& cd, const TruncatedQChar& chiW,
                            const LWeight& psi_top, const NodeSet& J);

struct InflationCheck {
  bool ok = false;
  LWeight psi_p;            // valid when ok
  std::string failure;      // first mismatch or shape violation otherwise
};
// Certifies that chiV is the character of a J-inflation of chiW and
// returns the J-trivial factor Psi_p between the tops.
InflationCheck verify_inflation(const CartanData& cd,
                                const TruncatedQChar& chiV,
                                const TruncatedQChar& chiW, const NodeSet& J);

// Candidate spectral exponents for the external node i, given the internal
// node j: the finite window (-d_i, lacing * dual_coxeter + d_i - d_j].
std::set<int> candidate_spectral_set(const CartanData& cd, int i, int j);

// Construction data of an inflation read off a caller-supplied truncated
// q-character with mixed support.
struct InflationData {
  std::map<int, std::set<int>> candidates;   // external node -> spectral exps
  std::map<SpecKey, int> multiplicities;     // (node, spec) -> n_{i,b}
  LWeight psi_p;
  Coweight mu;
};
InflationData build_inflation_data(const CartanData& cd,
                                   const TruncatedQChar& chiVprime,
                                   const NodeSet& J);

}  // namespace qshift
