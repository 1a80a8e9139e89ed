#include "doctest.h"

#include <set>

#include "blocklab/abelian.hpp"
#include "blocklab/numutil.hpp"

using namespace blocklab;

namespace {

// all subgroups of P as sorted element-index sets (for |P| small)
std::set<std::vector<long>> all_subgroups(const AbelianPGroup& p_group) {
  auto closure = [&](std::vector<long> seeds) {
    std::set<long> elems{p_group.index_of(p_group.identity())};
    std::vector<long> queue(elems.begin(), elems.end());
    for (long s : seeds)
      if (elems.insert(s).second) queue.push_back(s);
    for (size_t head = 0; head < queue.size(); ++head)
      for (long s : std::vector<long>(elems.begin(), elems.end())) {
        long sum = p_group.index_of(
            p_group.add(p_group.element_at(queue[head]), p_group.element_at(s)));
        if (elems.insert(sum).second) queue.push_back(sum);
      }
    return std::vector<long>(elems.begin(), elems.end());
  };
  std::set<std::vector<long>> subs{closure({})};
  bool grew = true;
  while (grew) {
    grew = false;
    for (const auto& s : std::vector<std::vector<long>>(subs.begin(), subs.end()))
      for (long x = 0; x < p_group.order(); ++x) {
        auto bigger = closure([&] {
          auto seeds = s;
          seeds.push_back(x);
          return seeds;
        }());
        if (subs.insert(bigger).second) grew = true;
      }
  }
  return subs;
}

}  // namespace

TEST_CASE("Frattini subgroups") {
  AbelianPGroup elab(2, {1, 1, 1});
  CHECK(frattini(elab).phi_group.order() == 1);
  AbelianPGroup c4(2, {2});
  FrattiniData f4 = frattini(c4);
  CHECK(f4.phi_group.order() == 2);
  CHECK(f4.phi_embed == std::vector<AbelianPGroup::Elem>{{2}});
  AbelianPGroup c9c3(3, {2, 1});
  FrattiniData f93 = frattini(c9c3);
  CHECK(f93.phi_group.order() == 3);
  CHECK(f93.quotient.order() == 9);
  CHECK(f93.quotient.exponents() == std::vector<int>{1, 1});
}

TEST_CASE("Frattini = intersection of maximal subgroups (brute force, |P| <= 16)") {
  for (auto P : {AbelianPGroup(2, {2, 1}), AbelianPGroup(2, {1, 1, 1}), AbelianPGroup(2, {3}),
                 AbelianPGroup(3, {2}), AbelianPGroup(2, {2, 2})}) {
    auto subs = all_subgroups(P);
    std::set<long> inter;
    for (long i = 0; i < P.order(); ++i) inter.insert(i);
    for (const auto& s : subs) {
      if ((long)s.size() * P.p() != P.order()) continue;  // maximal = index p
      std::set<long> cut;
      for (long x : s)
        if (inter.count(x)) cut.insert(x);
      inter = cut;
    }
    FrattiniData f = frattini(P);
    Subgroup phi = subgroup_from_generators(P, f.phi_embed);
    CHECK((long)inter.size() == phi.size);
    for (long x : inter) CHECK(phi.contains(P.element_at(x)));
  }
}

TEST_CASE("dual pairing basics") {
  AbelianPGroup c3(3, {1});
  CHECK(dual_pairing(c3, trivial_character(c3), {2}) == Cyclotomic::one());
  CHECK(dual_pairing(c3, DualCharacter{{1}}, {1}) == Cyclotomic::root_of_unity(3, 1));
  AbelianPGroup c4(2, {2});
  CHECK(dual_pairing(c4, DualCharacter{{2}}, {2}) == Cyclotomic::one());
  CHECK(dual_pairing(c4, DualCharacter{{1}}, {1}) == Cyclotomic::root_of_unity(4, 1));
}

TEST_CASE("character columns are orthogonal (pairing matrix invertible)") {
  for (auto P : {AbelianPGroup(3, {1, 1, 1, 1}), AbelianPGroup(3, {4}), AbelianPGroup(2, {2, 2}),
                 AbelianPGroup(5, {1, 1}), AbelianPGroup(3, {2, 2})}) {
    REQUIRE(P.order() <= 81);
    for (long li = 1; li < P.order(); ++li) {
      DualCharacter lam = dual_at(P, li);
      Cyclotomic sum = Cyclotomic::zero();
      for (long x = 0; x < P.order(); ++x) sum += dual_pairing(P, lam, P.element_at(x));
      CHECK(sum.is_zero());
    }
  }
}

TEST_CASE("homocyclic predicate") {
  CHECK(AbelianPGroup(2, {1, 1}).is_homocyclic());
  CHECK_FALSE(AbelianPGroup(2, {2, 1}).is_homocyclic());
  CHECK(AbelianPGroup(3, {2, 2}).is_homocyclic());
  CHECK(AbelianPGroup(3, {}).is_homocyclic());
}

TEST_CASE("subgroup bases and coordinates") {
  AbelianPGroup P(2, {3, 2, 1});
  Subgroup s = subgroup_from_generators(P, {{2, 1, 0}, {0, 2, 1}});
  // the basis is independent with descending p-power orders
  long prod = 1;
  for (size_t j = 0; j < s.basis.size(); ++j) {
    CHECK(P.element_order(s.basis[j]) == ipow(2, s.basis_exps[j]));
    prod *= ipow(2, s.basis_exps[j]);
  }
  CHECK(prod == s.size);
  // membership and coordinates round-trip over the whole subgroup
  AbelianPGroup abs = s.abstract_group();
  long members = 0;
  for (long x = 0; x < P.order(); ++x) {
    if (!s.contains(P.element_at(x))) continue;
    ++members;
    auto c = subgroup_coordinates(s, P.element_at(x));
    AbelianPGroup::Elem rebuilt = P.identity();
    for (size_t j = 0; j < c.size(); ++j)
      rebuilt = P.add(rebuilt, P.scale(c[j], s.basis[j]));
    CHECK(rebuilt == P.element_at(x));
  }
  CHECK(members == s.size);
  CHECK(full_subgroup(P).size == P.order());
  CHECK(trivial_subgroup(P).size == 1);
}

TEST_CASE("character restriction to a subgroup") {
  AbelianPGroup P(3, {2, 1});
  Subgroup s = subgroup_from_generators(P, {{3, 0}, {0, 1}});
  DualCharacter lam{{1, 2}};
  DualCharacter res = restrict_character(P, lam, s);
  for (size_t j = 0; j < s.basis.size(); ++j) {
    Cyclotomic direct = dual_pairing(P, lam, s.basis[j]);
    Cyclotomic through = dual_pairing(s.abstract_group(), res, s.abstract_group().generator((int)j));
    CHECK(direct == through);
  }
  CHECK(character_trivial_on(P, trivial_character(P), s));
}
