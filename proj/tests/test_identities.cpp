#include <doctest.h>

#include "qshift/identities.hpp"
#include "qshift/textio.hpp"

using namespace qshift;

TEST_CASE("rank-1 identities on A1 data") {
  const CartanData a1 = dynkin_data("A1");
  for (int k : {0, 3}) {
    CHECK(check_identity(IdentityName::Wronskian, a1, 1, k, 6).pass);
    CHECK(check_identity(IdentityName::BaxterQT, a1, 1, k, 6).pass);
    for (int len = 1; len <= 4; ++len)
      CHECK(check_identity(IdentityName::TSystem, a1, 1, k, 6, len).pass);
  }
}

TEST_CASE("rank-1 identities are scoped to A1 data") {
  const CartanData b2 = dynkin_data("B2");
  CHECK_THROWS_AS(check_identity(IdentityName::Wronskian, b2, 1, 0, 5),
                  std::invalid_argument);
  CHECK_THROWS_AS(check_identity(IdentityName::TSystem, b2, 2, 0, 5, 2),
                  std::invalid_argument);
}

TEST_CASE("inflated identities on the small diagrams") {
  for (const std::string name : {"A2", "A3", "B2"}) {
    const CartanData cd = dynkin_data(name);
    for (int j = 1; j <= cd.rank; ++j) {
      CAPTURE(name);
      CAPTURE(j);
      CHECK(check_identity(IdentityName::QQTilde, cd, j, 0, 5).pass);
      CHECK(check_identity(IdentityName::QQStar, cd, j, 0, 5).pass);
      CHECK(check_identity(IdentityName::InflatedTSystem, cd, j, 0, 5, 1).pass);
      CHECK(check_identity(IdentityName::InflatedTSystem, cd, j, 3, 5, 2).pass);
    }
  }
}

TEST_CASE("the cluster exchange instance") {
  // k = 1 at spectral base q^3.
  const CartanData a2 = dynkin_data("A2");
  const IdentityReport rep =
      check_identity(IdentityName::InflatedTSystem, a2, 1, 3, 6, 1);
  CHECK(rep.pass);
}

TEST_CASE("depth stability") {
  const CartanData a2 = dynkin_data("A2");
  const CartanData a1 = dynkin_data("A1");
  for (int depth = 0; depth <= 6; ++depth) {
    CHECK(check_identity(IdentityName::QQTilde, a2, 1, 0, depth).pass);
    CHECK(check_identity(IdentityName::TSystem, a1, 1, 0, depth, 3).pass);
  }
}

TEST_CASE("both sides carry the same top and degree") {
  const CartanData b2 = dynkin_data("B2");
  // QQTilde: lhs top Psi_{j,k} PsiTilde_{j,k} equals the named Psi_p.
  for (int j = 1; j <= 2; ++j) {
    const LWeight lhs_top =
        lw_multiply(lw_psi(b2, j, 0),
                    build_named_weight(b2, NamedWeight::PsiTilde, j, 0));
    CHECK(lhs_top == build_named_weight(b2, NamedWeight::QQPsiP, j, 0));
    CHECK(lw_degree(b2, lhs_top) ==
          lw_degree(b2, build_named_weight(b2, NamedWeight::QQPsiP, j, 0)));
  }
}

TEST_CASE("a perturbed side is reported with the mismatching weight") {
  // Run the comparison machinery directly with a deliberately wrong class.
  const CartanData a2 = dynkin_data("A2");
  const int depth = 4;
  std::vector<ClassTerm> lhs{
      {lw_identity(a2),
       qc_product(qc_single(lw_psi(a2, 1, 0), depth),
                  qc_psi_tilde_inflation(a2, 1, 0, depth))}};
  std::vector<ClassTerm> rhs{
      {lw_identity(a2),
       qc_single(build_named_weight(a2, NamedWeight::QQPsiP, 1, 0), depth)}};
  const LWeight top = lw_multiply(lhs[0].coeff, lhs[0].chi.top);
  const auto l = materialize_side(a2, top, lhs, depth);
  const auto r = materialize_side(a2, top, rhs, depth);
  CHECK(l != r);  // the second summand is missing on the right
}

TEST_CASE("radical of the Wronskian-type product") {
  for (const std::string name : {"A2"}) {
    const CartanData cd = dynkin_data(name);
    for (int j = 1; j <= cd.rank; ++j) {
      const int d = cd.sym(j);
      const int depth = 6;
      const TruncatedQChar product =
          qc_product(qc_single(lw_psi(cd, j, 0), depth),
                     qc_psi_tilde_inflation(cd, j, 0, depth));
      const TruncatedQChar top_simple = qc_single(
          build_named_weight(cd, NamedWeight::QQPsiP, j, 0), depth);
      const TruncatedQChar rad = decompose_rad_top(product, top_simple);

      const TruncatedQChar expect = qc_product(
          qc_single(lw_psi(cd, j, 2 * d), depth),
          qc_psi_tilde_inflation(cd, j, -2 * d, depth));
      // Compare materialized weights with the [-alpha_j] coefficient,
      // truncated at the common depth.
      std::vector<ClassTerm> lhs{{lw_identity(cd), rad}};
      TorusWeight malpha = torus_add(torus_identity(cd), torus_alpha(cd, j), -1);
      std::vector<ClassTerm> rhs{{lw_torus(cd, malpha), expect}};
      const auto l = materialize_side(cd, product.top, lhs, depth);
      const auto r = materialize_side(cd, product.top, rhs, depth);
      CHECK(l == r);
    }
  }
}

TEST_CASE("radical of a simple class is empty") {
  const CartanData a2 = dynkin_data("A2");
  const TruncatedQChar chi = qc_psi_tilde_inflation(a2, 1, 0, 4);
  const TruncatedQChar rad = decompose_rad_top(chi, chi);
  CHECK(rad.terms.empty());
}

TEST_CASE("a wrong top candidate is rejected") {
  const CartanData a2 = dynkin_data("A2");
  const int depth = 4;
  const TruncatedQChar product =
      qc_product(qc_single(lw_psi(a2, 1, 0), depth),
                 qc_psi_tilde_inflation(a2, 1, 0, depth));
  // Mismatched top l-weight.
  CHECK_THROWS_AS(
      decompose_rad_top(product, qc_single(lw_psi(a2, 2, 0), depth)),
      NegativeMultiplicityError);
  // Right top but excessive multiplicity.
  TruncatedQChar bad = qc_single(product.top, depth);
  bad.terms[AMonomial{}] = 5;
  CHECK_THROWS_AS(decompose_rad_top(product, bad),
                  NegativeMultiplicityError);
}
