#include "doctest.h"

#include "blocklab/catalog.hpp"
#include "blocklab/char_table.hpp"
#include "blocklab/numutil.hpp"

using namespace blocklab;

namespace {

// S_3 through its multiplication on {0..5}: i = 3a + r encodes rot^r flip^a
FiniteGroup make_s3() {
  auto mul = [](long x, long y) {
    long ax = x / 3, rx = x % 3, ay = y / 3, ry = y % 3;
    // flip rot^r flip = rot^{-r}
    long r = ax == 0 ? (rx + ry) % 3 : (rx + 3 - ry) % 3;
    long a = (ax + ay) % 2;
    return a * 3 + r;
  };
  return FiniteGroup::from_function(6, mul, 0);
}

}  // namespace

TEST_CASE("cyclic groups: all linear, exact root values") {
  FiniteGroup c6 = FiniteGroup::from_function(6, [](long a, long b) { return (a + b) % 6; });
  auto table = character_table(c6);
  REQUIRE(table.size() == 6);
  for (auto& chi : table) CHECK(chi.degree_int() == 1);
  // the values at a generator are exactly the sixth roots of unity
  long gen_class = c6.class_of(1);
  std::vector<bool> seen(6, false);
  for (auto& chi : table) {
    for (long k = 0; k < 6; ++k)
      if (chi.value(gen_class) == Cyclotomic::root_of_unity(6, k)) seen[k] = true;
  }
  for (long k = 0; k < 6; ++k) CHECK(seen[k]);
}

TEST_CASE("S_3: the classical table") {
  FiniteGroup s3 = make_s3();
  auto table = character_table(s3);
  REQUIRE(table.size() == 3);
  std::vector<long> degrees;
  for (auto& chi : table) degrees.push_back(chi.degree_int());
  CHECK(degrees == std::vector<long>{1, 1, 2});
  // the degree-2 character: 2 on 1, -1 on rotations, 0 on flips
  const ClassFunction& std_char = table[2];
  CHECK(std_char.value_at_element(1) == Cyclotomic::from_rational(mpq_class(-1)));
  CHECK(std_char.value_at_element(3).is_zero());
}

TEST_CASE("Q_8: the two-dimensional character, against the regular-character oracle") {
  InertialGroup q8(InertialPresentation{{2, 2}, {1, 1}, {{0, 1}, {1, 0}}, 2});
  auto table = character_table(q8.group());
  REQUIRE(table.size() == 5);
  std::vector<long> degrees;
  for (auto& chi : table) degrees.push_back(chi.degree_int());
  CHECK(degrees == std::vector<long>{1, 1, 1, 1, 2});
  // oracle: the nonlinear character is (chi_reg - sum of linears) / 2
  const FiniteGroup& g = q8.group();
  for (long c = 0; c < g.class_count(); ++c) {
    Cyclotomic reg = Cyclotomic::from_rational(
        mpq_class(g.class_rep(c) == g.identity() ? g.size() : 0));
    Cyclotomic linear_sum = Cyclotomic::zero();
    for (int i = 0; i < 4; ++i) linear_sum += table[i].value(c);
    CHECK((reg - linear_sum).scaled(mpq_class(1, 2)) == table[4].value(c));
  }
  // the faithful character takes -2 on the central involution
  CHECK(table[4].value_at_element(q8.z_element(1)) == Cyclotomic::from_rational(mpq_class(-2)));
}

TEST_CASE("the table of the 72-element flagship group") {
  BlockSpec spec = catalog_spec("q8_c3c3");
  BlockGroup bg = build_block_group(spec);
  auto table = character_table(bg.g);
  CHECK((long)table.size() == bg.g.class_count());
  long sum_sq = 0;
  for (auto& chi : table) sum_sq += chi.degree_int() * chi.degree_int();
  CHECK(sum_sq == 72);
}

TEST_CASE("induction and restriction agree with Frobenius reciprocity") {
  InertialGroup q8(InertialPresentation{{2, 2}, {1, 1}, {{0, 1}, {1, 0}}, 2});
  SubgroupView z = subgroup_view(q8.group(), q8.z_subgroup());
  auto sub_table = character_table(z.group);
  auto table = character_table(q8.group());
  for (auto& lam : sub_table)
    for (auto& chi : table) {
      Cyclotomic up = induce(q8.group(), z, lam).inner(chi);
      Cyclotomic down = lam.inner(restrict_to(z, chi));
      CHECK(up == down);
    }
}
