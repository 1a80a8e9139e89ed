#include "doctest.h"

#include "blocklab/catalog.hpp"
#include "blocklab/numutil.hpp"
#include "blocklab/qci.hpp"
#include "blocklab/verify.hpp"

using namespace blocklab;

namespace {

// raw two-generator q-data over F_3: q = [[1,-1],[-1,1]], caps 3, t = 1
QMatrixData raw_f3_instance() {
  QMatrixData q;
  q.n = 2;
  q.t = 1;
  q.m = {1, 1};
  q.nexp = {1, 1};
  q.root_order = 2;
  q.q_exp = {{0, 1}, {1, 0}};
  q.h_witness = {{0}, {0}};
  return q;
}

}  // namespace

TEST_CASE("duality tables") {
  SUBCASE("trivial L") {
    InertialGroup e(InertialPresentation{{}, {}, {}, 4});
    DualityData d = duality_iso(e, 1);
    CHECK(d.l_reps.size() == 1);
  }
  SUBCASE("quaternion: the commutator table of C_2 x C_2") {
    InertialGroup q8(InertialPresentation{{2, 2}, {1, 1}, {{0, 1}, {1, 0}}, 2});
    DualityData d = duality_iso(q8, 1);
    REQUIRE(d.l_reps.size() == 4);
    CHECK(d.root_order == 2);
    // oracle: phi([g~, h~]) = -1 exactly for independent pairs
    const FiniteGroup& g = q8.group();
    for (size_t a = 0; a < 4; ++a)
      for (size_t b = 0; b < 4; ++b) {
        long comm = g.mul(g.mul(g.inverse(d.l_reps[a]), g.inverse(d.l_reps[b])),
                          g.mul(d.l_reps[a], d.l_reps[b]));
        long expected = (comm == g.identity()) ? 0 : 1;
        CHECK(d.table[a][b] == expected);
      }
  }
  SUBCASE("Heisenberg of order 27 over p = 2 blocks") {
    InertialGroup h27(InertialPresentation{{3, 3}, {0, 0}, {{0, 1}, {2, 0}}, 3});
    DualityData d = duality_iso(h27, 1);
    CHECK(d.l_reps.size() == 9);
    CHECK(d.root_order == 3);
  }
  SUBCASE("more than one simple module is rejected") {
    InertialGroup c3(InertialPresentation{{3}, {0}, {{0}}, 1});
    CHECK_THROWS_AS(duality_iso(c3, 0), SpecError);
  }
}

TEST_CASE("q-matrices from blocks") {
  SUBCASE("flagship: [[1,-1],[-1,1]]") {
    BlockData data = compute_block(catalog_spec("q8_c3c3"));
    QMatrixData q = compute_q_matrix(data);
    CHECK(q.t == 2);
    CHECK(q.root_order == 2);
    CHECK(q.q_exp == std::vector<std::vector<long>>{{0, 1}, {1, 0}});
    CHECK(verify_q_properties(q, 3).all());
  }
  SUBCASE("trivially acted factors contribute all-one rows") {
    BlockData data = compute_block(catalog_spec("q8_c3c3c3"));
    QMatrixData q = compute_q_matrix(data);
    CHECK(q.n == 3);
    CHECK(q.t == 2);
    for (int b = 0; b < q.index_count(); ++b) {
      CHECK(q.q_exp[2][b] == 0);
      CHECK(q.q_exp[b][2] == 0);
    }
    CHECK(verify_q_properties(q, 3).all());
  }
  SUBCASE("a two-dimensional orbit: intra-block entries are trivial") {
    BlockData data = compute_block(catalog_spec("h27_c2e4"));
    QMatrixData q = compute_q_matrix(data);
    CHECK(q.t == 2);
    CHECK(q.m == std::vector<int>{2, 2});
    CHECK(q.root_order == 3);
    QPropertyReport props = verify_q_properties(q, 2);
    CHECK(props.all());
    // cross-block entries must be nontrivial cube roots
    CHECK(q.q_exp[0][2] != 0);
  }
  SUBCASE("blocks with several simple modules are refused") {
    BlockData data = compute_block(catalog_spec("c2c2_c3"));
    CHECK_THROWS_AS(compute_q_matrix(data), SpecError);
  }
}

TEST_CASE("q-property report names violations") {
  QMatrixData all_ones = raw_f3_instance();
  all_ones.q_exp = {{0, 0}, {0, 0}};
  QPropertyReport r = verify_q_properties(all_ones, 3);
  CHECK_FALSE(r.trivial_rows_match_t);
  CHECK_FALSE(r.all());

  QMatrixData bad_sym = raw_f3_instance();
  bad_sym.root_order = 3;
  bad_sym.q_exp = {{0, 1}, {1, 0}};  // q, q with q^2 != 1
  QPropertyReport r2 = verify_q_properties(bad_sym, 3);
  CHECK_FALSE(r2.antisymmetric);
}

TEST_CASE("the strict model: normal forms and truncation") {
  QciAlgebra a(3, 1, raw_f3_instance(), QciMode::strict);
  CHECK(a.basis_size() == 9);
  auto x1 = a.generator(0), x2 = a.generator(1);
  CHECK(a.mul(a.one(), x1) == x1);
  // X2 X1 = -X1 X2 in normal form
  QciAlgebra::Elem lhs = a.mul(x2, x1);
  QciAlgebra::Elem rhs = a.scale(a.ring().from_int(-1), a.mul(x1, x2));
  CHECK(lhs == rhs);
  // X^3 = 0
  CHECK(a.is_zero(a.mul(a.mul(x1, x1), x1)));
  CHECK_FALSE(a.is_zero(a.mul(x1, x1)));
}

TEST_CASE("t-ideal membership") {
  QciAlgebra a(3, 1, raw_f3_instance(), QciMode::strict);
  CHECK(a.t_ideal_member(a.generator(0)));
  CHECK_FALSE(a.t_ideal_member(a.one()));
  CHECK(a.t_ideal_member(a.mul(a.generator(1), a.generator(0))));
  CHECK_FALSE(a.t_ideal_member(a.generator(1)));  // the i > t generator alone
}

TEST_CASE("endomorphism classification") {
  QciAlgebra a(3, 1, raw_f3_instance(), QciMode::strict);
  auto x1 = a.generator(0), x2 = a.generator(1);
  SUBCASE("identity and diagonal scalings") {
    CHECK(check_endomorphism(a, {x1, x2}) == EndoClass::automorphism);
    for (long u1 = 1; u1 < 3; ++u1)
      for (long u2 = 1; u2 < 3; ++u2) {
        auto img1 = a.scale(a.ring().from_int(u1), x1);
        auto img2 = a.scale(a.ring().from_int(u2), x2);
        CHECK(check_endomorphism(a, {img1, img2}) == EndoClass::automorphism);
        CHECK(a.t_ideal_member(img1));
      }
  }
  SUBCASE("X1 -> X1 + X2 breaks the commutation relation") {
    CHECK(check_endomorphism(a, {a.add(x1, x2), x2}) == EndoClass::not_homomorphism);
  }
  SUBCASE("nilpotent images are not invertible") {
    auto img1 = a.mul(x1, x2);  // lands in the square of the radical
    CHECK(check_endomorphism(a, {img1, x2}) == EndoClass::not_invertible);
  }
  SUBCASE("a constant term is rejected") {
    CHECK_THROWS_AS(check_endomorphism(a, {a.add(x1, a.one()), x2}), SpecError);
  }
}

TEST_CASE("the swap is an automorphism when both generators sit in T") {
  BlockData data = compute_block(catalog_spec("q8_c3c3"));
  QMatrixData q = compute_q_matrix(data);
  QciAlgebra a(3, 1, q, QciMode::strict);
  auto x1 = a.generator(0), x2 = a.generator(1);
  CHECK(check_endomorphism(a, {x2, x1}) == EndoClass::automorphism);
  CHECK(a.t_ideal_member(x2));
}

TEST_CASE("associativity in both models, seeded triples") {
  SUBCASE("strict, flagship") {
    BlockData data = compute_block(catalog_spec("q8_c3c3"));
    QciAlgebra a(3, 1, compute_q_matrix(data), QciMode::strict);
    uint64_t state = 99;
    for (int i = 0; i < 1000; ++i) {
      auto x = random_qci_element(a, state), y = random_qci_element(a, state),
           z = random_qci_element(a, state);
      REQUIRE(a.mul(a.mul(x, y), z) == a.mul(x, a.mul(y, z)));
    }
  }
  SUBCASE("squared-generator model over GR(4, 2)") {
    BlockData data = compute_block(catalog_spec("h27_c2e4"));
    QciAlgebra a(2, 2, compute_q_matrix(data), QciMode::p2);
    CHECK(a.basis_size() == 16);
    auto x = a.generator(0);
    // X_{11}^2 = 2 X_{12}
    CHECK(a.mul(x, x) == a.scale(a.ring().from_int(2), a.generator(1)));
    uint64_t state = 7;
    for (int i = 0; i < 1000; ++i) {
      auto u = random_qci_element(a, state), v = random_qci_element(a, state),
           w = random_qci_element(a, state);
      REQUIRE(a.mul(a.mul(u, v), w) == a.mul(u, a.mul(v, w)));
    }
  }
}

TEST_CASE("powers of trivially acted generators close under multiplication") {
  BlockData data = compute_block(catalog_spec("q8_c3c3c3"));
  QciAlgebra a(3, 1, compute_q_matrix(data), QciMode::strict);
  int g = a.num_generators() - 1;  // the D2 generator
  REQUIRE_FALSE(a.in_t_prefix(g));
  for (long e1 = 0; e1 < a.cap(g); ++e1)
    for (long e2 = 0; e2 < a.cap(g); ++e2) {
      auto prod = a.mul(a.pow(a.generator(g), e1), a.pow(a.generator(g), e2));
      for (const auto& [m, c] : prod.terms)
        for (int i = 0; i < a.num_generators(); ++i)
          if (i != g) CHECK(m[i] == 0);
    }
}

TEST_CASE("sampled invariance scan stays clean on block-derived q-data") {
  BlockData data = compute_block(catalog_spec("q8_c3c3"));
  QciAlgebra a(3, 1, compute_q_matrix(data), QciMode::strict);
  ScanReport rep = t_invariance_scan(a, 30000, 5, 2);
  CHECK(rep.t_violations == 0);
  CHECK(rep.counterexamples.empty());
  CHECK(rep.tuples_checked >= 30000);
}

TEST_CASE("without the separation property, T really can move") {
  // t = 1 q-data cannot come from a block (its T-row has no nontrivial
  // entry inside the t-prefix, breaking the row-triviality property), and
  // X1 -> X1 + X2^2, X2 -> X2 is then an automorphism leaving T:
  // X2^2 commutes with everything and (X1 + X2^2)^3 = X1^3 + 3(...) = 0.
  QMatrixData q = raw_f3_instance();
  REQUIRE_FALSE(verify_q_properties(q, 3).trivial_rows_match_t);
  QciAlgebra a(3, 1, q, QciMode::strict);
  auto x1 = a.generator(0), x2 = a.generator(1);
  auto img1 = a.add(x1, a.mul(x2, x2));
  CHECK(check_endomorphism(a, {img1, x2}) == EndoClass::automorphism);
  CHECK_FALSE(a.t_ideal_member(img1));
  ScanReport rep = t_invariance_scan(a, 30000, 5, 2);
  CHECK(rep.t_violations > 0);
}

TEST_CASE("scan handles the no-generator edge") {
  QMatrixData empty;
  empty.root_order = 1;
  QciAlgebra a(3, 1, empty, QciMode::strict);
  ScanReport rep = t_invariance_scan(a, 100, 1, 1);
  CHECK(rep.exhaustive);
  CHECK(rep.automorphisms == 1);
}
