#include "qshift/qchar.hpp"

#include <algorithm>
#include <sstream>

namespace qshift {

namespace {

std::string spec_key_str(const SpecKey& k) {
  std::ostringstream os;
  os << "(" << k.first << "," << k.second << ")";
  return os.str();
}

std::string a_monomial_str(const AMonomial& m) {
  if (m.empty()) return "1";
  std::ostringstream os;
  bool first = true;
  for (const auto& [key, e] : m) {
    if (!first) os << "*";
    first = false;
    os << "A[" << key.first << "," << key.second << "]^-" << e;
  }
  return os.str();
}

}  // namespace

TruncatedQChar qc_single(const LWeight& top, int depth) {
  TruncatedQChar c;
  c.top = top;
  c.depth = depth;
  c.terms[AMonomial{}] = 1;
  return c;
}

TruncatedQChar qc_product(const TruncatedQChar& a, const TruncatedQChar& b) {
  TruncatedQChar r;
  r.top = lw_multiply(a.top, b.top);
  r.depth = std::min(a.depth, b.depth);
  for (const auto& [ma, ca] : a.terms) {
    const int da = a_degree(ma);
    if (da > r.depth) continue;
    for (const auto& [mb, cb] : b.terms) {
      if (da + a_degree(mb) > r.depth) continue;
      r.terms[a_multiply(ma, mb)] += ca * cb;
    }
  }
  return r;
}

TruncatedQChar qc_embed_J(const TruncatedQChar& c, const LWeight& top_override,
                          const NodeSet& J) {
  for (const auto& [m, mult] : c.terms)
    if (!a_supported_on(m, J))
      throw SupportError("qc_embed_J: term " + a_monomial_str(m) +
                         " not supported on J");
  TruncatedQChar r = c;
  r.top = top_override;
  return r;
}

TruncatedQChar qc_restrict_J(const TruncatedQChar& c, const NodeSet& J) {
  for (const auto& [m, mult] : c.terms)
    if (!a_supported_on(m, J))
      throw SupportError("qc_restrict_J: term " + a_monomial_str(m) +
                         " not supported on J");
  TruncatedQChar r = c;
  r.top = lw_res_J(c.top, J);
  return r;
}

std::map<LWeight, long> qc_materialize(const CartanData& cd,
                                       const TruncatedQChar& c) {
  std::map<LWeight, long> out;
  for (const auto& [m, mult] : c.terms)
    out[lw_multiply(c.top, lw_from_A_monomial(cd, m))] += mult;
  return out;
}

TruncatedQChar qc_shift(const TruncatedQChar& c, int k) {
  TruncatedQChar r;
  r.top = lw_shift(c.top, k);
  r.depth = c.depth;
  for (const auto& [m, mult] : c.terms) r.terms[a_shift(m, k)] = mult;
  return r;
}

TruncatedQChar qc_kr_sl2(const CartanData& cd, int j, int k, int length,
                         int depth) {
  if (length < 0) throw std::invalid_argument("qc_kr_sl2: negative length");
  TruncatedQChar c;
  c.depth = depth;
  const int dj = cd.sym(j);
  c.top = length == 0
              ? lw_identity(cd)
              : lw_from_Y_monomial(
                    cd, kr_highest_weight(cd, j, k + dj * (1 - 2 * length),
                                          length));
  c.terms[AMonomial{}] = 1;
  AMonomial ladder;
  for (int s = 0; s < length && s + 1 <= depth; ++s) {
    ladder[{j, k - 2 * dj * s}] = 1;
    c.terms[ladder] = 1;
  }
  return c;
}

TruncatedQChar qc_neg_prefund_rank1(const CartanData& cd, int j, int k,
                                    int depth) {
  TruncatedQChar c;
  c.depth = depth;
  c.top = lw_psi(cd, j, k, -1);
  c.terms[AMonomial{}] = 1;
  AMonomial ladder;
  for (int s = 0; s + 1 <= depth; ++s) {
    ladder[{j, k - 2 * cd.sym(j) * s}] = 1;
    c.terms[ladder] = 1;
  }
  return c;
}

static void require_a2_pair(const CartanData& cd, int j1, int j2) {
  if (!cd.valid_node(j1) || !cd.valid_node(j2) || j1 == j2 ||
      cd.cartan(j1, j2) != -1 || cd.cartan(j2, j1) != -1)
    throw std::invalid_argument("nodes do not span an A2 subdiagram");
}

TruncatedQChar qc_neg_prefund_sl3_pair(const CartanData& cd, int j1, int j2,
                                       int k, int depth) {
  require_a2_pair(cd, j1, j2);
  const int d = cd.sym(j1);
  TruncatedQChar c;
  c.depth = depth;
  c.top = lw_psi(cd, j1, k, -1);
  for (int n = 0; n <= depth; ++n) {
    for (int m = 0; m <= n && n + m <= depth; ++m) {
      AMonomial a;
      for (int t = 0; t < n; ++t) a[{j1, k - 2 * d * t}] = 1;
      for (int t = 0; t < m; ++t) a[{j2, k + d * (1 - 2 * t)}] = 1;
      c.terms[a] = 1;
    }
  }
  return c;
}

LWeight sl3_pair_psi_p(const CartanData& cd, int j1, int j2, int k) {
  require_a2_pair(cd, j1, j2);
  const int d = cd.sym(j1);
  LWeight p = lw_identity(cd);
  for (int i = 1; i <= cd.rank; ++i) {
    if (i == j1 || i == j2) continue;
    const int c1 = cd.cartan(j1, i);
    const int c2 = cd.cartan(j2, i);
    if (c1 == 0 && c2 == 0) continue;
    if (c1 == -1 && c2 == 0) {
      p = lw_multiply(p, lw_psi(cd, i, k + d));
    } else if (c2 == -1 && c1 == 0) {
      p = lw_multiply(p, lw_psi(cd, i, k + 2 * d));
    } else if (c1 == -2 && c2 == 0) {
      p = lw_multiply(p, lw_psi(cd, i, k));
      p = lw_multiply(p, lw_psi(cd, i, k + 2 * d));
    } else if (c2 == -2 && c1 == 0) {
      p = lw_multiply(p, lw_psi(cd, i, k + d));
      p = lw_multiply(p, lw_psi(cd, i, k + 3 * d));
    } else {
      throw std::invalid_argument(
          "sl3_pair_psi_p: unsupported adjacency pattern at node " +
          std::to_string(i));
    }
  }
  return p;
}

TruncatedQChar qc_inflation(const CartanData& cd, const TruncatedQChar& chiW,
                            const LWeight& psi_top, const NodeSet& J) {
  if (lw_res_J(psi_top, J) != lw_res_J(chiW.top, J))
    throw SupportError("qc_inflation: psi_top does not restrict to the top");
  const LWeight factor = lw_multiply(psi_top, lw_inverse(chiW.top));
  if (!is_J_trivial(factor, J))
    throw SupportError("qc_inflation: top factor is not J-trivial");
  for (const auto& [key, e] : factor.psi)
    if (e < 0)
      throw SupportError("qc_inflation: top factor has inverse Psi" +
                         spec_key_str(key));
  return qc_embed_J(chiW, psi_top, J);
}

InflationCheck verify_inflation(const CartanData& cd,
                                const TruncatedQChar& chiV,
                                const TruncatedQChar& chiW, const NodeSet& J) {
  InflationCheck out;
  out.psi_p = lw_identity(cd);
  if (chiV.depth != chiW.depth) {
    out.failure = "depth mismatch";
    return out;
  }
  for (const auto& [m, mult] : chiV.terms) {
    if (!a_supported_on(m, J)) {
      out.failure = "term " + a_monomial_str(m) + " not supported on J";
      return out;
    }
  }
  if (chiV.terms != chiW.terms) {
    // Name the first differing monomial.
    for (const auto& [m, mult] : chiV.terms) {
      if (chiW.mult(m) != mult) {
        out.failure = "multiplicity mismatch at " + a_monomial_str(m) + ": " +
                      std::to_string(mult) + " vs " +
                      std::to_string(chiW.mult(m));
        return out;
      }
    }
    for (const auto& [m, mult] : chiW.terms) {
      if (chiV.mult(m) != mult) {
        out.failure = "multiplicity mismatch at " + a_monomial_str(m) + ": " +
                      std::to_string(chiV.mult(m)) + " vs " +
                      std::to_string(mult);
        return out;
      }
    }
  }
  const LWeight psi_p = lw_multiply(chiV.top, lw_inverse(chiW.top));
  if (!is_J_trivial(psi_p, J)) {
    out.failure = "top quotient is not J-trivial";
    return out;
  }
  for (const auto& [key, e] : psi_p.psi) {
    if (e < 0) {
      out.failure = "top quotient has inverse Psi" + spec_key_str(key);
      return out;
    }
  }
  out.ok = true;
  out.psi_p = psi_p;
  return out;
}

std::set<int> candidate_spectral_set(const CartanData& cd, int i, int j) {
  if (i == j)
    throw std::invalid_argument("candidate_spectral_set: need i != j");
  std::set<int> s;
  const int hi = cd.lacing * cd.dual_coxeter + cd.sym(i) - cd.sym(j);
  for (int l = -cd.sym(i) + 1; l <= hi; ++l) s.insert(l);
  return s;
}

InflationData build_inflation_data(const CartanData& cd,
                                   const TruncatedQChar& chiVprime,
                                   const NodeSet& J) {
  InflationData data;
  data.psi_p = lw_identity(cd);
  data.mu = lw_degree(cd, chiVprime.top);

  // Candidate spectral parameters: terms of the shape M * A_{i,b}^{-1} with
  // M supported on J and i external.
  std::vector<AMonomial> j_monomials;
  for (const auto& [m, mult] : chiVprime.terms) {
    SpecKey external{0, 0};
    int external_count = 0;
    for (const auto& [key, e] : m) {
      if (!J.count(key.first)) {
        external_count += e;
        external = key;
      }
    }
    if (external_count == 0) j_monomials.push_back(m);
    if (external_count == 1) data.candidates[external.first].insert(external.second);
  }

  // n_{i,b} = max_M (mult(M A_{i,b}^{-1}) + mult(M) - 2), clamped at 0.
  for (const auto& [i, specs] : data.candidates) {
    for (int b : specs) {
      long n = 0;
      for (const auto& m : j_monomials) {
        AMonomial ma = m;
        ma[{i, b}] += 1;
        n = std::max(n, chiVprime.mult(ma) + chiVprime.mult(m) - 2);
      }
      for (const auto& [m, mult] : chiVprime.terms) {
        auto it = m.find({i, b});
        if (it == m.end() || it->second != 1) continue;
        AMonomial jpart = m;
        jpart.erase({i, b});
        if (!a_supported_on(jpart, J)) continue;
        n = std::max(n, mult + chiVprime.mult(jpart) - 2);
      }
      data.multiplicities[{i, b}] = static_cast<int>(n);
    }
  }

  for (const auto& [key, n] : data.multiplicities) {
    if (n == 0) continue;
    data.psi_p = lw_multiply(data.psi_p, lw_psi(cd, key.first, key.second, n));
    // mu = nu + sum n_{i,b} omega_i-vee
    data.mu = coweight_add(data.mu, coweight_fundamental(cd, key.first), n);
  }
  return data;
}

}  // namespace qshift
