#include "qshift/identities.hpp"

#include <sstream>

#include "qshift/textio.hpp"

namespace qshift {

TruncatedQChar qc_psi_tilde_inflation(const CartanData& cd, int j, int k,
                                      int depth) {
  return qc_inflation(cd, qc_neg_prefund_rank1(cd, j, k, depth),
                      build_named_weight(cd, NamedWeight::PsiTilde, j, k),
                      NodeSet{j});
}

TruncatedQChar qc_psi_star_inflation(const CartanData& cd, int j, int k,
                                     int depth) {
  return qc_inflation(cd, qc_kr_sl2(cd, j, k, 1, depth),
                      build_named_weight(cd, NamedWeight::PsiStar, j, k),
                      NodeSet{j});
}

TruncatedQChar qc_inflated_kr(const CartanData& cd, int j, int k, int length,
                              int depth) {
  const LWeight psi_p = build_named_weight(cd, NamedWeight::NewTPsiP, j, k);
  if (length == 0) return qc_single(psi_p, depth);
  TruncatedQChar kr = qc_kr_sl2(cd, j, k, length, depth);
  return qc_inflation(cd, kr, lw_multiply(kr.top, psi_p), NodeSet{j});
}

IdentityName identity_from_string(const std::string& name) {
  if (name == "wronskian") return IdentityName::Wronskian;
  if (name == "baxter-qt") return IdentityName::BaxterQT;
  if (name == "t-system") return IdentityName::TSystem;
  if (name == "qq-tilde") return IdentityName::QQTilde;
  if (name == "qq-star") return IdentityName::QQStar;
  if (name == "inflated-t-system") return IdentityName::InflatedTSystem;
  throw std::invalid_argument("unknown identity " + name);
}

std::string identity_name(IdentityName name) {
  switch (name) {
    case IdentityName::Wronskian: return "wronskian";
    case IdentityName::BaxterQT: return "baxter-qt";
    case IdentityName::TSystem: return "t-system";
    case IdentityName::QQTilde: return "qq-tilde";
    case IdentityName::QQStar: return "qq-star";
    case IdentityName::InflatedTSystem: return "inflated-t-system";
  }
  return "?";
}

bool identity_uses_length(IdentityName name) {
  return name == IdentityName::TSystem ||
         name == IdentityName::InflatedTSystem;
}

std::map<LWeight, long> materialize_side(const CartanData& cd,
                                         const LWeight& common_top,
                                         const std::vector<ClassTerm>& side,
                                         int depth) {
  std::map<LWeight, long> out;
  const LWeight inv_top = lw_inverse(common_top);
  for (const auto& cls : side) {
    const LWeight cls_top = lw_multiply(cls.coeff, cls.chi.top);
    // Offset of this class under the common top; every summand of a valid
    // identity sits in the A^{-1}-cone over the leading class.
    const AMonomial offset =
        lw_to_A_monomial(cd, lw_multiply(cls_top, inv_top));
    const int off_deg = a_degree(offset);
    for (const auto& [m, mult] : cls.chi.terms) {
      if (off_deg + a_degree(m) > depth) continue;
      out[lw_multiply(cls_top, lw_from_A_monomial(cd, m))] += mult;
    }
  }
  return out;
}

namespace {

struct Sides {
  std::vector<ClassTerm> lhs, rhs;
};

ClassTerm plain(const TruncatedQChar& chi) {
  ClassTerm t{LWeight{TorusWeight(chi.top.torus.size(), 0), {}}, chi};
  return t;
}

ClassTerm with_coeff(const CartanData& cd, const TorusWeight& tw,
                     const TruncatedQChar& chi) {
  return ClassTerm{lw_torus(cd, tw), chi};
}

Sides build_sides(IdentityName name, const CartanData& cd, int j, int k,
                  int depth, int len) {
  const int d = cd.sym(j);
  Sides s;
  // The Wronskian, Baxter QT and T-system live in the Grothendieck ring of
  // the rank-1 subdiagram; they are checked on A1 data (the inflated
  // variants below are their full-diagram counterparts).
  if ((name == IdentityName::Wronskian || name == IdentityName::BaxterQT ||
       name == IdentityName::TSystem) &&
      cd.rank != 1)
    throw std::invalid_argument(identity_name(name) +
                                " is checked on A1 data");
  switch (name) {
    case IdentityName::Wronskian: {
      // [L(P_j)] [L(P_j^{-1})] = 1 + [-2 w_j] [L(P_{j,+2})] [L(P^{-1}_{j,-2})]
      s.lhs.push_back(plain(
          qc_product(qc_single(lw_psi(cd, j, k), depth),
                     qc_neg_prefund_rank1(cd, j, k, depth))));
      s.rhs.push_back(plain(qc_single(lw_identity(cd), depth)));
      TorusWeight m2w = torus_add(torus_identity(cd), torus_omega(cd, j), -2);
      s.rhs.push_back(with_coeff(
          cd, m2w,
          qc_product(qc_single(lw_psi(cd, j, k + 2 * d), depth),
                     qc_neg_prefund_rank1(cd, j, k - 2 * d, depth))));
      break;
    }
    case IdentityName::BaxterQT: {
      // [L(P_j)] [L(Y_{j,-1})] = [w_j] [L(P_{j,-2})] + [-w_j] [L(P_{j,+2})]
      s.lhs.push_back(plain(
          qc_product(qc_single(lw_psi(cd, j, k), depth),
                     qc_kr_sl2(cd, j, k, 1, depth))));
      s.rhs.push_back(with_coeff(
          cd, torus_omega(cd, j),
          qc_single(lw_psi(cd, j, k - 2 * d), depth)));
      TorusWeight mw = torus_add(torus_identity(cd), torus_omega(cd, j), -1);
      s.rhs.push_back(with_coeff(
          cd, mw, qc_single(lw_psi(cd, j, k + 2 * d), depth)));
      break;
    }
    case IdentityName::TSystem: {
      // [T_k][T_k'] = [T_{k+1}][T_{k-1}'] + 1, primed = shifted by q_j^{-2}
      if (len < 1) throw std::invalid_argument("t-system: length must be >= 1");
      s.lhs.push_back(plain(qc_product(qc_kr_sl2(cd, j, k, len, depth),
                                       qc_kr_sl2(cd, j, k - 2 * d, len, depth))));
      s.rhs.push_back(plain(
          qc_product(qc_kr_sl2(cd, j, k, len + 1, depth),
                     qc_kr_sl2(cd, j, k - 2 * d, len - 1, depth))));
      s.rhs.push_back(plain(qc_single(lw_identity(cd), depth)));
      break;
    }
    case IdentityName::QQTilde: {
      // [L(P)] [L(Pt)] = [L(Psi_p)] + [-a_j] [L(P_{+2})] [L(Pt_{-2})]
      s.lhs.push_back(plain(
          qc_product(qc_single(lw_psi(cd, j, k), depth),
                     qc_psi_tilde_inflation(cd, j, k, depth))));
      s.rhs.push_back(plain(qc_single(
          build_named_weight(cd, NamedWeight::QQPsiP, j, k), depth)));
      TorusWeight malpha =
          torus_add(torus_identity(cd), torus_alpha(cd, j), -1);
      s.rhs.push_back(with_coeff(
          cd, malpha,
          qc_product(qc_single(lw_psi(cd, j, k + 2 * d), depth),
                     qc_psi_tilde_inflation(cd, j, k - 2 * d, depth))));
      break;
    }
    case IdentityName::QQStar: {
      // [L(P)] [L(P*)] = [w_j] [L(Psi_p1)] + [w_j - a_j] [L(Psi_p2)]
      s.lhs.push_back(plain(
          qc_product(qc_single(lw_psi(cd, j, k), depth),
                     qc_psi_star_inflation(cd, j, k, depth))));
      s.rhs.push_back(with_coeff(
          cd, torus_omega(cd, j),
          qc_single(build_named_weight(cd, NamedWeight::QQStarPsiP1, j, k),
                    depth)));
      TorusWeight wa =
          torus_add(torus_omega(cd, j), torus_alpha(cd, j), -1);
      s.rhs.push_back(with_coeff(
          cd, wa,
          qc_single(build_named_weight(cd, NamedWeight::QQStarPsiP2, j, k),
                    depth)));
      break;
    }
    case IdentityName::InflatedTSystem: {
      // [V_k][V_k'] = [V_{k+1}][V_{k-1}'] +
      //               [k(2w_j - a_j)] [L(Psi_p(a))] [L(Psi_p(a q_j^{-2(k+1)}))]
      if (len < 1)
        throw std::invalid_argument("inflated-t-system: length must be >= 1");
      s.lhs.push_back(plain(
          qc_product(qc_inflated_kr(cd, j, k, len, depth),
                     qc_inflated_kr(cd, j, k - 2 * d, len, depth))));
      s.rhs.push_back(plain(
          qc_product(qc_inflated_kr(cd, j, k, len + 1, depth),
                     qc_inflated_kr(cd, j, k - 2 * d, len - 1, depth))));
      TorusWeight coeff = torus_identity(cd);
      coeff = torus_add(coeff, torus_omega(cd, j), 2 * len);
      coeff = torus_add(coeff, torus_alpha(cd, j), -len);
      s.rhs.push_back(with_coeff(
          cd, coeff,
          qc_product(
              qc_single(build_named_weight(cd, NamedWeight::NewTPsiP, j, k),
                        depth),
              qc_single(build_named_weight(cd, NamedWeight::NewTPsiP, j,
                                           k - 2 * d * (len + 1)),
                        depth))));
      break;
    }
  }
  return s;
}

}  // namespace

IdentityReport check_identity(IdentityName name, const CartanData& cd, int j,
                              int k, int depth, int length) {
  if (!cd.valid_node(j))
    throw std::invalid_argument("check_identity: node out of range");
  IdentityReport rep;
  rep.name = name;
  rep.diagram = cd.name();
  rep.node = j;
  rep.spec = k;
  rep.depth = depth;
  rep.length = identity_uses_length(name) ? length : 0;

  const Sides sides = build_sides(name, cd, j, k, depth, length);
  const LWeight common_top =
      lw_multiply(sides.lhs.front().coeff, sides.lhs.front().chi.top);
  const auto lhs = materialize_side(cd, common_top, sides.lhs, depth);
  const auto rhs = materialize_side(cd, common_top, sides.rhs, depth);
  rep.lhs_terms = static_cast<long>(lhs.size());
  rep.rhs_terms = static_cast<long>(rhs.size());
  rep.pass = lhs == rhs;
  if (!rep.pass) {
    for (const auto& [w, mult] : lhs) {
      auto it = rhs.find(w);
      const long other = it == rhs.end() ? 0 : it->second;
      if (other != mult) {
        std::ostringstream os;
        os << lweight_to_string(w) << ": lhs " << mult << ", rhs " << other;
        rep.mismatch = os.str();
        break;
      }
    }
    if (rep.mismatch.empty()) {
      for (const auto& [w, mult] : rhs) {
        if (!lhs.count(w)) {
          std::ostringstream os;
          os << lweight_to_string(w) << ": lhs 0, rhs " << mult;
          rep.mismatch = os.str();
          break;
        }
      }
    }
  }
  return rep;
}

TruncatedQChar decompose_rad_top(const TruncatedQChar& product,
                                 const TruncatedQChar& top_simple) {
  if (product.top != top_simple.top)
    throw NegativeMultiplicityError(
        "decompose_rad_top: tops differ, wrong top candidate");
  TruncatedQChar rad;
  rad.top = product.top;
  rad.depth = std::min(product.depth, top_simple.depth);
  rad.terms = product.terms;
  for (const auto& [m, mult] : top_simple.terms) {
    if (a_degree(m) > rad.depth) continue;
    auto it = rad.terms.find(m);
    const long have = it == rad.terms.end() ? 0 : it->second;
    if (have < mult)
      throw NegativeMultiplicityError(
          "decompose_rad_top: multiplicity would go negative");
    if (have == mult)
      rad.terms.erase(it);
    else
      it->second = have - mult;
  }
  for (auto it = rad.terms.begin(); it != rad.terms.end();) {
    if (a_degree(it->first) > rad.depth)
      it = rad.terms.erase(it);
    else
      ++it;
  }
  return rad;
}

}  // namespace qshift
