#include "doctest.h"

#include <algorithm>

#include "blocklab/catalog.hpp"
#include "blocklab/isometry.hpp"
#include "blocklab/numutil.hpp"

using namespace blocklab;

TEST_CASE("identity and global sign flip are perfect") {
  BlockData data = compute_block(catalog_spec("q8_c3c3"));
  long n = (long)data.irr.size();
  SignedBijection id = identity_isometry(n);
  CHECK(is_perfect_self(data, id).perfect);
  SignedBijection neg = id;
  for (auto& s : neg.sign) s = -1;
  CHECK(is_perfect_self(data, neg).perfect);
}

TEST_CASE("swapping a degree-2 with the degree-4 character is not perfect") {
  BlockData data = compute_block(catalog_spec("q8_c3c3"));
  SignedBijection swap = identity_isometry(6);
  std::swap(swap.perm[0], swap.perm[5]);
  PerfectCheck check = is_perfect_self(data, swap);
  CHECK_FALSE(check.perfect);
  CHECK_FALSE(check.failures.empty());
}

namespace {

// direct comparison with the class-function lattice definition, for a block
// small enough to invert the character value matrix by hand (2 x 2)
bool perfect_by_lattices(const BlockData& data, const SignedBijection& iso) {
  const FiniteGroup& g = data.group->g;
  REQUIRE(data.irr.size() == 2);
  REQUIRE(g.class_count() == 2);
  PrimeIdeal prime(data.p(), std::max<long>(data.exp_g(), 1));
  // value matrix V[i][c] and the matrix of I on coefficient vectors
  auto V = [&](long i, long c) { return data.irr[i].induced.value(c); };
  // M[i][j]: I(chi_j) expressed in the chi-basis
  Cyclotomic M[2][2] = {{Cyclotomic::zero(), Cyclotomic::zero()},
                        {Cyclotomic::zero(), Cyclotomic::zero()}};
  for (long j = 0; j < 2; ++j)
    M[iso.perm[j]][j] = Cyclotomic::from_rational(mpq_class(iso.sign[j]));
  // W = V^T M (V^T)^{-1} maps value vectors to value vectors
  Cyclotomic vt[2][2], vtm[2][2];
  for (long c = 0; c < 2; ++c)
    for (long i = 0; i < 2; ++i) vt[c][i] = V(i, c);
  Cyclotomic det = vt[0][0] * vt[1][1] - vt[0][1] * vt[1][0];
  Cyclotomic inv[2][2] = {{vt[1][1] * det.inverse(), -vt[0][1] * det.inverse()},
                          {-vt[1][0] * det.inverse(), vt[0][0] * det.inverse()}};
  for (long c = 0; c < 2; ++c)
    for (long j = 0; j < 2; ++j) {
      vtm[c][j] = Cyclotomic::zero();
      for (long i = 0; i < 2; ++i) vtm[c][j] += vt[c][i] * M[i][j];
    }
  Cyclotomic w[2][2], winv[2][2];
  for (long c = 0; c < 2; ++c)
    for (long j = 0; j < 2; ++j) {
      w[c][j] = vtm[c][0] * inv[0][j] + vtm[c][1] * inv[1][j];
    }
  Cyclotomic wdet = w[0][0] * w[1][1] - w[0][1] * w[1][0];
  winv[0][0] = w[1][1] * wdet.inverse();
  winv[0][1] = -w[0][1] * wdet.inverse();
  winv[1][0] = -w[1][0] * wdet.inverse();
  winv[1][1] = w[0][0] * wdet.inverse();
  // CF(O) preserved both ways: all entries of W and W^{-1} in O
  for (long c = 0; c < 2; ++c)
    for (long j = 0; j < 2; ++j)
      if (!prime.is_local_integer(w[c][j]) || !prime.is_local_integer(winv[c][j])) return false;
  // CF_{p'}(O) preserved: columns at p-regular classes vanish on singular ones
  for (long j = 0; j < 2; ++j) {
    bool regular = data.group->g.is_p_regular(g.class_rep(j), data.p());
    if (!regular) continue;
    for (long c = 0; c < 2; ++c) {
      bool c_regular = g.is_p_regular(g.class_rep(c), data.p());
      if (!c_regular && (!w[c][j].is_zero() || !winv[c][j].is_zero())) return false;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("O C_2: full candidate space, against the lattice definition") {
  BlockData data = compute_block(catalog_spec("c2_nilpotent"));
  IsometryGroup group = enumerate_self_isometries(data, 6, 1);
  CHECK(group.candidates_considered == 8);
  CHECK(group.members.size() == 4);  // {+-1} x {id, swap}
  // every candidate: bi-character criterion == class-function lattice route
  for (long pi = 0; pi < 2; ++pi)
    for (long smask = 0; smask < 4; ++smask) {
      SignedBijection cand;
      cand.perm = pi ? std::vector<long>{1, 0} : std::vector<long>{0, 1};
      cand.sign = {(smask & 1) ? -1 : 1, (smask & 2) ? -1 : 1};
      CHECK(is_perfect_self(data, cand).perfect == perfect_by_lattices(data, cand));
    }
}

TEST_CASE("flagship enumeration: the group, and pruning loses nothing") {
  BlockData data = compute_block(catalog_spec("q8_c3c3"));
  IsometryGroup pruned = enumerate_self_isometries(data, 6, 2, true);
  CHECK(pruned.members.size() == 16);
  IsometryGroup full = enumerate_self_isometries(data, 6, 2, false);
  REQUIRE(full.members.size() == pruned.members.size());
  for (size_t i = 0; i < full.members.size(); ++i) {
    CHECK(full.members[i].perm == pruned.members[i].perm);
    CHECK(full.members[i].sign == pruned.members[i].sign);
  }
  // composition of perfect isometries stays perfect (closure re-check on a sample)
  const auto& a = pruned.members[3];
  const auto& b = pruned.members[10 % pruned.members.size()];
  CHECK(is_perfect_self(data, compose(a, b)).perfect);
}

TEST_CASE("the enumeration bound refuses oversized blocks") {
  BlockData data = compute_block(catalog_spec("c3c3_halfact"));
  REQUIRE(data.irr.size() == 9);
  CHECK_THROWS_AS(enumerate_self_isometries(data, 8, 1), SpecError);
}

TEST_CASE("tensoring with a D2-character: theta is recovered by the twist check") {
  BlockData data = compute_block(catalog_spec("c3c3_halfact"));
  REQUIRE(data.d2_abs.order() == 3);
  BlockSpec d1_spec = sub_block_spec_d1(data);
  BlockData d1_block = compute_block(d1_spec);
  for (long t = 0; t < 3; ++t) {
    DualCharacter theta{{t}};
    SignedBijection iso = tensor_by_d2_character(data, theta);
    CHECK(is_perfect_self(data, iso).perfect);
    FixedPartTwist twist = check_d2_twist(data, d1_block, iso.perm);
    REQUIRE(twist.ok);
    CHECK(twist.theta.a == theta.a);
    CHECK(check_d1_kernel(data, iso.perm));
  }
}

TEST_CASE("a transposition into the moved part fails the D1-kernel test") {
  BlockData data = compute_block(catalog_spec("c3c3_halfact"));
  auto subset = irr_trivial_on_d1(data);
  REQUIRE(subset.size() == 6);
  // swap a D1-trivial character with a D1-nontrivial one
  long inside = subset[0];
  long outside = -1;
  for (long i = 0; i < (long)data.irr.size(); ++i)
    if (std::find(subset.begin(), subset.end(), i) == subset.end()) outside = i;
  REQUIRE(outside >= 0);
  std::vector<long> sigma(data.irr.size());
  for (long i = 0; i < (long)sigma.size(); ++i) sigma[i] = i;
  std::swap(sigma[inside], sigma[outside]);
  CHECK_FALSE(check_d1_kernel(data, sigma));
  // such a permutation cannot be Morita-like: here it already fails perfection
  SignedBijection iso;
  iso.perm = sigma;
  iso.sign.assign(sigma.size(), 1);
  bool perfect = is_perfect_self(data, iso).perfect;
  bool brauer = sigma_br(data, sigma).has_value();
  CHECK_FALSE((perfect && brauer));
}

TEST_CASE("identity twist data on a one-simple-module block") {
  BlockData data = compute_block(catalog_spec("q8_c3c3"));
  BlockSpec d1_spec = sub_block_spec_d1(data);
  BlockData d1_block = compute_block(d1_spec);
  std::vector<long> id(data.irr.size());
  for (long i = 0; i < (long)id.size(); ++i) id[i] = i;
  FixedPartTwist twist = check_d2_twist(data, d1_block, id);
  REQUIRE(twist.ok);
  CHECK(twist.theta.a.empty());  // D2 is trivial
  CHECK(check_d1_kernel(data, id));
}

TEST_CASE("induced characters stay inside [Stab : N] O") {
  BlockData data = compute_block(catalog_spec("q8_c3c3"));
  const FiniteGroup& g = data.group->g;
  PrimeIdeal prime(3, data.exp_g());
  SUBCASE("N = G: index one, trivially integral") {
    std::vector<long> all_elems;
    for (long i = 0; i < g.size(); ++i) all_elems.push_back(i);
    SubgroupView nv = subgroup_view(g, all_elems);
    auto table = character_table(nv.group);
    CHECK(induction_integrality(g, nv, table[1], prime));
  }
  SUBCASE("N = D with a stabilized nontrivial character") {
    SubgroupView nv = subgroup_view(g, data.group->d_elements());
    auto table = character_table(nv.group);
    for (auto& lam : table) CHECK(induction_integrality(g, nv, lam, prime));
  }
  SUBCASE("the trivial character induces to a permutation character") {
    SubgroupView nv = subgroup_view(g, data.group->dz_elements());
    auto table = character_table(nv.group);
    ClassFunction ind = induce(g, nv, table[0]);
    for (long c = 0; c < g.class_count(); ++c) {
      CHECK(ind.value(c).is_rational());
      CHECK(ind.value(c).rational_value().get_den() == 1);
    }
    CHECK(induction_integrality(g, nv, table[0], prime));
  }
}

TEST_CASE("p-power index: induction from the Frattini kernel subgroup") {
  BlockData data = compute_block(catalog_spec("q8_c9c9"));
  const FiniteGroup& g = data.group->g;
  // N = Phi(D) x Z: normal, with p-power contribution to [Stab : N]
  const AbelianPGroup& D = data.spec.defect;
  std::vector<long> elems;
  for (long d = 0; d < D.order(); ++d) {
    auto e = D.element_at(d);
    if (e[0] % 3 == 0 && e[1] % 3 == 0)
      for (long z : data.spec.inertial->z_subgroup())
        elems.push_back(data.group->encode(d, z));
  }
  SubgroupView nv = subgroup_view(g, elems);
  PrimeIdeal prime(3, data.exp_g());
  auto table = character_table(nv.group);
  CHECK(induction_integrality(g, nv, table[2], prime));
}
