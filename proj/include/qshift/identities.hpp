#pragma once

#include "qshift/qchar.hpp"

namespace qshift {

struct NegativeMultiplicityError : std::domain_error {
  using std::domain_error::domain_error;
};

// Further closed forms used by the identity checkers: characters of the
// rank-1 inflation families, assembled from the ladder characters and the
// named l-weights.
TruncatedQChar qc_psi_tilde_inflation(const CartanData& cd, int j, int k,
                                      int depth);
TruncatedQChar qc_psi_star_inflation(const CartanData& cd, int j, int k,
                                     int depth);
// Character of the inflated Kirillov-Reshetikhin class of the inflated
// T-system (length 0 gives the single line of the J-trivial factor).
TruncatedQChar qc_inflated_kr(const CartanData& cd, int j, int k, int length,
                              int depth);

enum class IdentityName {
  Wronskian,
  BaxterQT,
  TSystem,
  QQTilde,
  QQStar,
  InflatedTSystem,
};

IdentityName identity_from_string(const std::string& name);
std::string identity_name(IdentityName name);
// True for the T-systems, which take the extra length parameter.
bool identity_uses_length(IdentityName name);

struct IdentityReport {
  IdentityName name = IdentityName::Wronskian;
  std::string diagram;
  int node = 0;
  int spec = 0;
  int depth = 0;
  int length = 0;
  bool pass = false;
  std::string mismatch;  // first differing l-weight with both multiplicities
  long lhs_terms = 0;
  long rhs_terms = 0;
};

// Assembles both sides of the named Grothendieck-ring identity from the
// closed-form characters and compares the materialized l-weight
// multiplicity maps exactly, truncated at the stated depth.
IdentityReport check_identity(IdentityName name, const CartanData& cd, int j,
                              int k, int depth, int length = 1);

// Termwise difference of characters with equal tops (the radical's
// character of a length-2 composition series); throws
// NegativeMultiplicityError when the claimed top does not fit.
TruncatedQChar decompose_rad_top(const TruncatedQChar& product,
                                 const TruncatedQChar& top_simple);

// Product of a torus coefficient with a truncated character, materialized
// relative to a common top and truncated by total A-degree; the building
// block of the identity comparisons.
struct ClassTerm {
  LWeight coeff;
  TruncatedQChar chi;
};
std::map<LWeight, long> materialize_side(const CartanData& cd,
                                         const LWeight& common_top,
                                         const std::vector<ClassTerm>& side,
                                         int depth);

}  // namespace qshift
