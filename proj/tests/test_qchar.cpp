#include <doctest.h>

#include "qshift/qchar.hpp"
#include "qshift/textio.hpp"
#include "support/gen.hpp"

using namespace qshift;
using testsupport::Rng;

namespace {

AMonomial ladder(int node, int start, int step, int count) {
  AMonomial m;
  for (int t = 0; t < count; ++t) m[{node, start + step * t}] += 1;
  return m;
}

}  // namespace

TEST_CASE("single characters and products") {
  const CartanData a2 = dynkin_data("A2");
  const TruncatedQChar one = qc_single(lw_identity(a2), 5);
  const TruncatedQChar c = qc_neg_prefund_rank1(a2, 1, 0, 5);
  CHECK(qc_product(one, c) == c);

  // Depth contract: min of the operand depths.
  const TruncatedQChar c2 = qc_neg_prefund_rank1(a2, 2, 0, 2);
  CHECK(qc_product(c2, c).depth == 2);
  for (const auto& [m, mult] : qc_product(c2, c).terms)
    CHECK(a_degree(m) <= 2);
}

TEST_CASE("product is commutative and associative at matched depth") {
  const CartanData b2 = dynkin_data("B2");
  Rng rng(3);
  for (int t = 0; t < 60; ++t) {
    const TruncatedQChar a = testsupport::rand_qchar(rng, b2, 4);
    const TruncatedQChar b = testsupport::rand_qchar(rng, b2, 4);
    const TruncatedQChar c = testsupport::rand_qchar(rng, b2, 4);
    CHECK(qc_product(a, b) == qc_product(b, a));
    CHECK(qc_product(qc_product(a, b), c) == qc_product(a, qc_product(b, c)));
  }
}

TEST_CASE("KR ladder character and its l-weights") {
  const CartanData a1 = dynkin_data("A1");
  // length 1: 1 + A^{-1}
  const TruncatedQChar kr1 = qc_kr_sl2(a1, 1, 0, 1, 4);
  CHECK(kr1.term_count() == 2);
  CHECK(kr1.mult(AMonomial{}) == 1);
  CHECK(kr1.mult(ladder(1, 0, -2, 1)) == 1);
  CHECK(kr1.top == lw_from_Y(a1, 1, -1));

  // length 0 is the trivial character.
  CHECK(qc_kr_sl2(a1, 1, 0, 0, 4) == qc_single(lw_identity(a1), 4));

  // length 3 at depth 2: ladder cut at two terms beyond the identity.
  const TruncatedQChar kr3 = qc_kr_sl2(a1, 1, 0, 3, 2);
  CHECK(kr3.term_count() == 3);

  // The materialized l-weights of the length-k family have the textbook
  // phi shape q^{k-2m} (1-azq^{-2k})(1-azq^2) / ((1-azq^{2(1-m)})(1-azq^{-2m}))
  // at a = q^0.
  const int k = 3;
  const TruncatedQChar kr = qc_kr_sl2(a1, 1, 0, k, k);
  for (int m = 0; m <= k; ++m) {
    const LWeight w =
        lw_multiply(kr.top, lw_from_A_monomial(a1, ladder(1, 0, -2, m)));
    const RatQ z = qpow(7);  // generic sample point
    const RatQ expect = qpow(k - 2 * m) *
                        (RatQ::one() - qpow(-2 * k) * z) *
                        (RatQ::one() - qpow(2) * z) /
                        ((RatQ::one() - qpow(2 * (1 - m)) * z) *
                         (RatQ::one() - qpow(-2 * m) * z));
    CHECK(lw_node_eval(a1, w, 1, z) == expect);
  }
}

TEST_CASE("negative prefundamental ladder") {
  const CartanData a2 = dynkin_data("A2");
  CHECK(qc_neg_prefund_rank1(a2, 1, 0, 0).term_count() == 1);
  const TruncatedQChar c = qc_neg_prefund_rank1(a2, 1, 0, 2);
  CHECK(c.term_count() == 3);
  CHECK(c.mult(ladder(1, 0, -2, 1)) == 1);
  CHECK(c.mult(ladder(1, 0, -2, 2)) == 1);
  CHECK(c.top == lw_psi(a2, 1, 0, -1));

  // The negative prefundamental v_0 component: expansion of (1-az)^{-1};
  // check the value as a rational function at a generic point.
  const RatQ z = qpow(9);
  CHECK(lw_node_eval(a2, c.top, 1, z) ==
        (RatQ::one() - z).inverse());

  // Monotone limit: at depth D the ladder equals the KR family of length
  // D+1 term-for-term.
  for (const std::string name : {"A1", "B2"}) {
    const CartanData cd = dynkin_data(name);
    for (int j = 1; j <= cd.rank; ++j)
      for (int depth = 0; depth <= 4; ++depth)
        CHECK(qc_neg_prefund_rank1(cd, j, 0, depth).terms ==
              qc_kr_sl2(cd, j, 0, depth + 1, depth).terms);
  }
}

TEST_CASE("rank-2 negative prefundamental family") {
  const CartanData a2 = dynkin_data("A2");
  CHECK(qc_neg_prefund_sl3_pair(a2, 1, 2, 0, 0).term_count() == 1);

  const TruncatedQChar d1 = qc_neg_prefund_sl3_pair(a2, 1, 2, 0, 1);
  CHECK(d1.term_count() == 2);
  CHECK(d1.mult(ladder(1, 0, -2, 1)) == 1);  // the (1,0) term

  for (int depth = 0; depth <= 6; ++depth) {
    long expect = 0;
    for (int n = 0; n <= depth; ++n)
      for (int m = 0; m <= n; ++m)
        if (n + m <= depth) ++expect;
    CHECK(qc_neg_prefund_sl3_pair(a2, 1, 2, 0, depth).term_count() == expect);
  }
  CHECK(qc_neg_prefund_sl3_pair(a2, 1, 2, 0, 5).term_count() == 12);

  CHECK_THROWS_AS(qc_neg_prefund_sl3_pair(dynkin_data("B2"), 1, 2, 0, 2),
                  std::invalid_argument);
  // A3 pair (2,3) with external node 1.
  const CartanData a3 = dynkin_data("A3");
  CHECK(sl3_pair_psi_p(a3, 2, 3, 0) == lw_psi(a3, 1, 1));
  CHECK(sl3_pair_psi_p(a3, 1, 2, 0) == lw_psi(a3, 3, 2));
  // C3 pair (1,2) with doubly-laced external node 3.
  const CartanData c3 = dynkin_data("C3");
  CHECK(sl3_pair_psi_p(c3, 2, 1, 0) ==
        lw_multiply(lw_psi(c3, 3, 0), lw_psi(c3, 3, 2)));
  CHECK(sl3_pair_psi_p(c3, 1, 2, 0) ==
        lw_multiply(lw_psi(c3, 3, 1), lw_psi(c3, 3, 3)));
}

TEST_CASE("embedding and restriction") {
  const CartanData a2 = dynkin_data("A2");
  const NodeSet J{1};
  const TruncatedQChar lad = qc_neg_prefund_rank1(a2, 1, 0, 3);
  const LWeight pt = build_named_weight(a2, NamedWeight::PsiTilde, 1, 0);

  const TruncatedQChar emb = qc_embed_J(lad, pt, J);
  CHECK(emb.top == pt);
  CHECK(emb.terms == lad.terms);
  CHECK(qc_restrict_J(emb, J).terms == lad.terms);
  CHECK(qc_restrict_J(emb, J).top == lw_psi(a2, 1, 0, -1));

  CHECK(qc_embed_J(qc_single(lw_identity(a2), 2), pt, J).term_count() == 1);

  // Mixed support is refused.
  TruncatedQChar mixed = lad;
  mixed.terms[ladder(2, 0, -2, 1)] = 1;
  CHECK_THROWS_AS(qc_embed_J(mixed, pt, J), SupportError);
  CHECK_THROWS_AS(qc_restrict_J(mixed, J), SupportError);
}

TEST_CASE("materialization") {
  const CartanData a1 = dynkin_data("A1");
  const LWeight top = lw_psi(a1, 1, 0, -1);
  auto single = qc_materialize(a1, qc_single(top, 3));
  CHECK(single.size() == 1);
  CHECK(single.at(top) == 1);

  // KR families up to length 4 materialize without collisions.
  for (int len = 1; len <= 4; ++len) {
    const TruncatedQChar kr = qc_kr_sl2(a1, 1, 0, len, len);
    const auto mat = qc_materialize(a1, kr);
    CHECK(static_cast<long>(mat.size()) == kr.term_count());
    long total = 0;
    for (const auto& [w, mult] : mat) total += mult;
    CHECK(total == len + 1);
  }
}

TEST_CASE("inflation of characters and its certificate") {
  for (const std::string name : {"A2", "A3", "B2"}) {
    const CartanData cd = dynkin_data(name);
    for (int j = 1; j <= cd.rank; ++j) {
      const NodeSet J{j};
      const TruncatedQChar chiW = qc_neg_prefund_rank1(cd, j, 0, 4);
      const LWeight pt = build_named_weight(cd, NamedWeight::PsiTilde, j, 0);
      const TruncatedQChar chiV = qc_inflation(cd, chiW, pt, J);
      const InflationCheck chk = verify_inflation(cd, chiV, chiW, J);
      CHECK(chk.ok);
      CHECK(chk.psi_p == build_named_weight(cd, NamedWeight::QQPsiP, j, 0));
    }
  }

  // Trivial-module inflation: single-term character with J-trivial top.
  const CartanData a2 = dynkin_data("A2");
  const NodeSet J{1};
  const TruncatedQChar triv = qc_single(lw_identity(a2), 3);
  const LWeight p = lw_psi(a2, 2, 1);
  const InflationCheck chk =
      verify_inflation(a2, qc_inflation(a2, triv, p, J), triv, J);
  CHECK(chk.ok);
  CHECK(chk.psi_p == p);

  // An inverse Psi factor violates the highest-weight shape.
  CHECK_THROWS_AS(qc_inflation(a2, triv, lw_psi(a2, 2, 1, -1), J),
                  SupportError);

  // Negative control: perturbing one multiplicity is reported with the
  // offending monomial.
  const TruncatedQChar chiW = qc_neg_prefund_rank1(a2, 1, 0, 4);
  TruncatedQChar bad = qc_inflation(
      a2, chiW, build_named_weight(a2, NamedWeight::PsiTilde, 1, 0), J);
  bad.terms[ladder(1, 0, -2, 2)] += 1;
  const InflationCheck fail = verify_inflation(a2, bad, chiW, J);
  CHECK_FALSE(fail.ok);
  CHECK(fail.failure.find("A[1,-2]") != std::string::npos);
}

TEST_CASE("round trip property of inflation") {
  Rng rng(71);
  const CartanData a3 = dynkin_data("A3");
  for (int t = 0; t < 50; ++t) {
    const int j = testsupport::rand_int(rng, 1, 3);
    const NodeSet J{j};
    TruncatedQChar chiW = qc_neg_prefund_rank1(a3, j, testsupport::rand_int(rng, -2, 2), 3);
    // Random J-trivial decoration of the top.
    LWeight top = chiW.top;
    for (int f = 0; f < 3; ++f) {
      int i = testsupport::rand_int(rng, 1, 3);
      if (i == j) continue;
      top = lw_multiply(top, lw_psi(a3, i, testsupport::rand_int(rng, -2, 2),
                                    testsupport::rand_int(rng, 1, 2)));
    }
    const TruncatedQChar chiV = qc_inflation(a3, chiW, top, J);
    const InflationCheck chk = verify_inflation(a3, chiV, chiW, J);
    CHECK(chk.ok);
    CHECK(chk.psi_p == lw_multiply(top, lw_inverse(chiW.top)));
  }
}

TEST_CASE("candidate spectral sets") {
  const CartanData a2 = dynkin_data("A2");
  CHECK(candidate_spectral_set(a2, 2, 1) == std::set<int>{0, 1, 2, 3});
  // The external parameter of PsiTilde_{1,q^0} lies in the set.
  const LWeight pt = build_named_weight(a2, NamedWeight::PsiTilde, 1, 0);
  for (const auto& [key, e] : pt.psi)
    if (key.first == 2) CHECK(candidate_spectral_set(a2, 2, 1).count(key.second));

  const CartanData b2 = dynkin_data("B2");
  CHECK(candidate_spectral_set(b2, 2, 1) == std::set<int>{0, 1, 2, 3, 4, 5});
  CHECK_THROWS_AS(candidate_spectral_set(a2, 1, 1), std::invalid_argument);
}

TEST_CASE("inflation data from a supplied character") {
  const CartanData a2 = dynkin_data("A2");
  const NodeSet J{1};

  // Entirely J-supported input: nothing external.
  const TruncatedQChar plain = qc_neg_prefund_rank1(a2, 1, 0, 3);
  const InflationData d0 = build_inflation_data(a2, plain, J);
  CHECK(d0.candidates.empty());
  CHECK(d0.psi_p.is_identity());
  CHECK(d0.mu == lw_degree(a2, plain.top));

  // Synthetic: mult(1) = 1, mult(A_{2,q}^{-1}) = 2 -> n_{2,1} = 1.
  TruncatedQChar synth = qc_single(lw_psi(a2, 1, 0, -1), 3);
  synth.terms[ladder(2, 1, 0, 1)] = 2;
  const InflationData d1 = build_inflation_data(a2, synth, J);
  CHECK(d1.candidates.at(2) == std::set<int>{1});
  CHECK(d1.multiplicities.at({2, 1}) == 1);
  CHECK(d1.psi_p == lw_psi(a2, 2, 1));
  CHECK(d1.mu == coweight_add(lw_degree(a2, synth.top),
                              coweight_fundamental(a2, 2)));

  // Synthetic: mult(A_{2,q}^{-1}) = 1 -> n_{2,1} = 0, psi_p = 1.
  TruncatedQChar synth2 = qc_single(lw_psi(a2, 1, 0, -1), 3);
  synth2.terms[ladder(2, 1, 0, 1)] = 1;
  const InflationData d2 = build_inflation_data(a2, synth2, J);
  CHECK(d2.candidates.at(2) == std::set<int>{1});
  CHECK(d2.multiplicities.at({2, 1}) == 0);
  CHECK(d2.psi_p.is_identity());
}

TEST_CASE("closed-form families stay in the nonnegative A-cone") {
  const CartanData a3 = dynkin_data("A3");
  for (const TruncatedQChar& c :
       {qc_kr_sl2(a3, 2, 1, 3, 5), qc_neg_prefund_rank1(a3, 3, -1, 5),
        qc_neg_prefund_sl3_pair(a3, 1, 2, 0, 5)}) {
    for (const auto& [m, mult] : c.terms) {
      CHECK(mult > 0);
      for (const auto& [key, e] : m) CHECK(e >= 0);
    }
  }
}

TEST_CASE("spectral shift of characters") {
  const CartanData a2 = dynkin_data("A2");
  CHECK(qc_shift(qc_neg_prefund_rank1(a2, 1, 0, 4), 3) ==
        qc_neg_prefund_rank1(a2, 1, 3, 4));
}
