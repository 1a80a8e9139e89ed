#include "doctest.h"

#include <algorithm>

#include "blocklab/catalog.hpp"
#include "blocklab/char_theory.hpp"
#include "blocklab/numutil.hpp"

using namespace blocklab;

TEST_CASE("Irr(E, phi) counts") {
  SUBCASE("abelian E = Z") {
    InertialGroup e(InertialPresentation{{}, {}, {}, 4});
    CHECK(irr_e_phi(e, 1).size() == 1);
    CHECK(irr_e_phi(e, 3).size() == 1);
  }
  SUBCASE("quaternion E over the faithful character: one character, degree 2") {
    InertialGroup q8(InertialPresentation{{2, 2}, {1, 1}, {{0, 1}, {1, 0}}, 2});
    auto chars = irr_e_phi(q8, 1);
    REQUIRE(chars.size() == 1);
    CHECK(chars[0].degree_int() == 2);
  }
  SUBCASE("extra central C_3: three characters") {
    InertialGroup e(InertialPresentation{{2, 2, 3}, {1, 1, 0},
                                         {{0, 1, 0}, {1, 0, 0}, {0, 0, 0}}, 2});
    CHECK(irr_e_phi(e, 1).size() == 3);
  }
  SUBCASE("trivial Z: all of Irr(E) for C_5") {
    InertialGroup e(InertialPresentation{{5}, {0}, {{0}}, 1});
    CHECK(irr_e_phi(e, 0).size() == 5);
  }
}

TEST_CASE("Irr(B) of the flagship block, against the independent table of G") {
  BlockSpec spec = catalog_spec("q8_c3c3");
  BlockData data = compute_block(spec);
  std::vector<long> degrees;
  for (auto& bc : data.irr) degrees.push_back(bc.degree);
  CHECK(degrees == std::vector<long>{2, 2, 2, 2, 2, 4});

  // oracle: the exact character table of the 72-element group, filtered by
  // the central character of Z
  auto full = character_table(data.group->g);
  long z = data.group->encode(0, spec.inertial->z_element(1));
  std::vector<const ClassFunction*> in_block;
  for (auto& chi : full) {
    if (chi.value_at_element(z) == chi.degree().scaled(mpq_class(-1))) in_block.push_back(&chi);
  }
  REQUIRE(in_block.size() == 6);
  for (auto* chi : in_block) {
    bool found = false;
    for (auto& bc : data.irr)
      if (bc.induced == *chi) found = true;
    CHECK(found);
  }
}

TEST_CASE("degenerate blocks") {
  SUBCASE("E trivial: Irr(B) = Irr(D), all linear") {
    BlockData data = compute_block(catalog_spec("c3_nilpotent"));
    CHECK(data.irr.size() == 3);
    for (auto& bc : data.irr) CHECK(bc.degree == 1);
    // decomposition: a column of ones, Cartan = (|D|)
    CHECK(data.irr_e.size() == 1);
    for (auto& row : data.decomposition) CHECK(row[0] == 1);
    CHECK(data.cartan[0][0] == 3);
  }
  SUBCASE("D trivial: Irr(B) = Irr(E, phi)") {
    BlockData data = compute_block(catalog_spec("point_c4"));
    CHECK(data.irr.size() == 1);
    CHECK(data.decomposition == std::vector<std::vector<long>>{{1}});
  }
  SUBCASE("E = Z on a mixed group: ones column and Cartan (27)") {
    BlockData data = compute_block(catalog_spec("c9c3_e2z"));
    CHECK(data.irr.size() == 27);
    CHECK(data.irr_e.size() == 1);
    CHECK(data.cartan[0][0] == 27);
  }
}

TEST_CASE("Brauer character counts") {
  CHECK(compute_block(catalog_spec("q8_c3c3")).ibr.size() == 1);
  CHECK(compute_block(catalog_spec("c2e4_c5")).ibr.size() == 5);
  BlockData h27 = compute_block(catalog_spec("h27_c2e4"));
  CHECK(h27.ibr.size() == 1);
  CHECK(h27.irr.size() == 8);
  CHECK(h27.ibr[0].degree_int() == 3);
}

TEST_CASE("inflations restrict back to their source") {
  BlockData data = compute_block(catalog_spec("q8c5_c3c3"));
  for (long j = 0; j < (long)data.irr_e.size(); ++j) {
    long idx = data.inflated_index(j);
    CHECK(restrict_to(*data.e_view, data.irr[idx].induced) == data.irr_e[j]);
  }
}

TEST_CASE("sigma_br") {
  BlockData data = compute_block(catalog_spec("q8_c3c3"));
  long n = (long)data.irr.size();
  std::vector<long> id(n);
  for (long i = 0; i < n; ++i) id[i] = i;
  auto br = sigma_br(data, id);
  REQUIRE(br.has_value());
  CHECK(*br == std::vector<long>{0});
  // swapping a degree-2 with the degree-4 character breaks the restrictions
  std::vector<long> bad = id;
  std::swap(bad[0], bad[5]);
  CHECK_FALSE(sigma_br(data, bad).has_value());
}

TEST_CASE("single-Brauer-constituent subsets") {
  SUBCASE("one simple module: everything") {
    BlockData data = compute_block(catalog_spec("q8_c3c3"));
    CHECK(single_brauer_subset(data).size() == data.irr.size());
  }
  SUBCASE("abelian E acting: exactly the characters trivial on [D, E]") {
    BlockData data = compute_block(catalog_spec("c2c2_c3"));
    auto subset = single_brauer_subset(data);
    CHECK(subset.size() == 3);
    for (long i : subset) CHECK(data.irr[i].lambda_d1.is_trivial());
  }
  SUBCASE("trivial D: everything") {
    BlockData data = compute_block(catalog_spec("point_c4"));
    CHECK(single_brauer_subset(data).size() == 1);
  }
}

TEST_CASE("kernel flags for the lattice-side conditions") {
  BlockData data = compute_block(catalog_spec("c4c4_c3"));
  // D1 = D = C_4^2 here
  REQUIRE(data.d1_abs.order() == 16);
  KernelFlags trivial = kernel_flags(data, trivial_character(data.spec.defect));
  CHECK(trivial.trivial_on_d1);
  CHECK(trivial.trivial_on_frattini_d1);
  // order-2 character: nontrivial on D1 but trivial on its Frattini subgroup
  KernelFlags order2 = kernel_flags(data, DualCharacter{{2, 0}});
  CHECK_FALSE(order2.trivial_on_d1);
  CHECK(order2.trivial_on_frattini_d1);
  KernelFlags full = kernel_flags(data, DualCharacter{{1, 0}});
  CHECK_FALSE(full.trivial_on_d1);
  CHECK_FALSE(full.trivial_on_frattini_d1);
}

TEST_CASE("the tensor factorization along D = D1 x D2") {
  BlockData data = compute_block(catalog_spec("c3c3_halfact"));
  REQUIRE(data.d2_abs.order() == 3);
  const AbelianPGroup& D = data.spec.defect;
  BlockSpec d1_spec = sub_block_spec_d1(data);
  BlockData d1_block = compute_block(d1_spec);
  for (auto& bc : data.irr) {
    // the D1-side component via values at (d1, e)
    for (long c = 0; c < data.group->g.class_count(); ++c) {
      long rep = data.group->g.class_rep(c);
      long d_idx = data.group->d_part(rep), e_idx = data.group->e_part(rep);
      auto [fixed_idx, comm_idx] = data.d_split[d_idx];
      auto d1_coords = subgroup_coordinates(data.d1, D.element_at(comm_idx));
      long h_idx = d1_block.group->encode(d1_block.spec.defect.index_of(d1_coords), e_idx);
      auto d2_coords = subgroup_coordinates(data.d2, D.element_at(fixed_idx));
      Cyclotomic lhs = bc.induced.value(c);
      // psi(d1, e) = value at the embedded element with trivial d2 part
      long g_restricted = data.group->encode(D.index_of(D.element_at(comm_idx)), e_idx);
      Cyclotomic psi_val = bc.induced.value_at_element(g_restricted);
      Cyclotomic rhs = psi_val * dual_pairing(data.d2_abs, bc.lambda_d2, d2_coords);
      CHECK(lhs == rhs);
      (void)h_idx;
    }
  }
}

TEST_CASE("blocks partition Irr(G) over the central characters") {
  BlockSpec spec = catalog_spec("q8_c3c3");
  BlockData faithful = compute_block(spec);
  // the non-faithful quotient block: E/<z> = C_2 x C_2 with the same action
  BlockSpec quotient = spec;
  quotient.name = "q8_c3c3/z";
  quotient.inertial = std::make_shared<InertialGroup>(
      InertialPresentation{{2, 2}, {0, 0}, {{0, 0}, {0, 0}}, 1});
  quotient.phi_exponent = 0;
  quotient.validate();
  BlockData trivial_block = compute_block(quotient);
  CHECK(trivial_block.irr.size() == 9);

  auto full = character_table(faithful.group->g);
  REQUIRE(full.size() == 15);  // 6 + 9
  long matched = 0;
  for (auto& chi : full) {
    for (auto& bc : faithful.irr)
      if (bc.induced == chi) ++matched;
    // inflate the quotient-block characters through G -> G/<z>
    for (auto& bc : trivial_block.irr) {
      bool equal = true;
      for (long c = 0; c < faithful.group->g.class_count() && equal; ++c) {
        long rep = faithful.group->g.class_rep(c);
        long d_idx = faithful.group->d_part(rep);
        auto w = spec.inertial->word_at(faithful.group->e_part(rep));
        long e_quot = quotient.inertial->index_of({w.a, 0});
        long g_quot = trivial_block.group->encode(d_idx, e_quot);
        if (!(chi.value(c) == bc.induced.value_at_element(g_quot))) equal = false;
      }
      if (equal) ++matched;
    }
  }
  CHECK(matched == 15);
}
