#include "doctest.h"

#include "blocklab/action.hpp"
#include "blocklab/catalog.hpp"
#include "blocklab/group_algebra.hpp"
#include "blocklab/numutil.hpp"

using namespace blocklab;

TEST_CASE("fixed points and commutators") {
  SUBCASE("trivial group") {
    PAction act(AbelianPGroup(3, {1, 1}), {});
    auto s = fixed_and_commutator(act);
    CHECK(s.fixed.size == 9);
    CHECK(s.commutator.size == 1);
  }
  SUBCASE("order-3 matrix on C_2^2, exhausting the four elements") {
    AbelianPGroup P(2, {1, 1});
    PAction act(P, {{{0, 1}, {1, 1}}});
    auto s = fixed_and_commutator(act);
    // oracle: count fixed elements directly
    long fixed = 0;
    for (long x = 0; x < P.order(); ++x)
      if (action_apply(P, act.generators()[0], P.element_at(x)) == P.element_at(x)) ++fixed;
    CHECK(fixed == 1);
    CHECK(s.fixed.size == 1);
    CHECK(s.commutator.size == 4);
  }
  SUBCASE("diag(-1,1) on C_3^2: split into the two axes") {
    AbelianPGroup P(3, {1, 1});
    PAction act(P, {{{2, 0}, {0, 1}}});
    auto s = fixed_and_commutator(act);
    CHECK(s.fixed.size == 3);
    CHECK(s.commutator.size == 3);
    CHECK(s.fixed.contains({0, 1}));
    CHECK(s.commutator.contains({1, 0}));
  }
}

TEST_CASE("decompose: catalog examples") {
  SUBCASE("trivial action splits into cyclic factors past t") {
    PAction act(AbelianPGroup(3, {1, 1}), {});
    auto dec = decompose(act);
    CHECK(dec.factors.size() == 2);
    CHECK(dec.t == 0);
  }
  SUBCASE("the full diagonal pair on C_3^2 gives two acted lines") {
    PAction act(AbelianPGroup(3, {1, 1}), {{{2, 0}, {0, 1}}, {{1, 0}, {0, 2}}});
    auto dec = decompose(act);
    CHECK(dec.factors.size() == 2);
    CHECK(dec.t == 2);
    for (auto& f : dec.factors) CHECK(f.sub.size == 3);
  }
  SUBCASE("order 3 on C_2^2 is indecomposable with m = 2") {
    PAction act(AbelianPGroup(2, {1, 1}), {{{0, 1}, {1, 1}}});
    auto dec = decompose(act);
    CHECK(dec.factors.size() == 1);
    CHECK(dec.t == 1);
    CHECK(dec.factors[0].abstract_group.rank() == 2);
  }
  SUBCASE("inversion on C_9 x C_3 splits the exponents inside one isotypic piece") {
    PAction act(AbelianPGroup(3, {2, 1}), {{{8, 0}, {0, 2}}});
    auto dec = decompose(act);
    CHECK(dec.factors.size() == 2);
    CHECK(dec.t == 2);
    CHECK(dec.factors[0].sub.size == 9);
    CHECK(dec.factors[1].sub.size == 3);
  }
  SUBCASE("scalar action with multiplicity: C_5^2 under <2I>") {
    PAction act(AbelianPGroup(5, {1, 1}), {{{2, 0}, {0, 2}}});
    auto dec = decompose(act);
    CHECK(dec.factors.size() == 2);
    CHECK(dec.t == 2);
  }
}

TEST_CASE("decompose agrees with brute force for |P| <= 16") {
  for (auto& [name, act] : action_catalog()) {
    if (act.group().order() > 16) continue;
    auto dec = decompose(act);
    auto brute = brute_force_decompose(act);
    REQUIRE(brute.has_value());
    REQUIRE(brute->factors.size() == dec.factors.size());
    CHECK(brute->t == dec.t);
    for (size_t i = 0; i < dec.factors.size(); ++i) {
      CHECK(dec.factors[i].sub.size == brute->factors[i].sub.size);
      CHECK(dec.factors[i].nontrivial_action == brute->factors[i].nontrivial_action);
    }
  }
}

TEST_CASE("frattini_action") {
  SUBCASE("elementary abelian: nothing changes") {
    PAction act(AbelianPGroup(2, {1, 1}), {{{0, 1}, {1, 1}}});
    PAction q = frattini_action(act, true);
    CHECK(q.generators() == act.generators());
  }
  SUBCASE("the order-3 lift on C_4^2 reduces to the order-3 action on C_2^2") {
    PAction act(AbelianPGroup(2, {2, 2}), {{{0, 1}, {3, 3}}});
    PAction q = frattini_action(act, true);
    CHECK(q.group().order() == 4);
    auto dec = decompose(q);
    CHECK(dec.factors.size() == 1);
  }
  SUBCASE("trivial action stays trivial") {
    PAction act(AbelianPGroup(3, {2}), {});
    PAction q = frattini_action(act);
    CHECK(q.is_trivial_action());
  }
}

TEST_CASE("eigen orbits") {
  SUBCASE("C_3 on C_2^2: the irreducible quadratic") {
    PAction act(AbelianPGroup(2, {1, 1}), {{{0, 1}, {1, 1}}});
    EigenOrbitData orbit = eigen_orbit(act);
    CHECK(orbit.m == 2);
    CHECK(orbit.h_order == 3);
    CHECK(orbit.char_poly == FpPoly{1, 1, 1});  // x^2 + x + 1
  }
  SUBCASE("scalar inversion on C_3") {
    PAction act(AbelianPGroup(3, {1}), {{{2}}});
    EigenOrbitData orbit = eigen_orbit(act);
    CHECK(orbit.m == 1);
    CHECK(orbit.char_poly == FpPoly{1, 1});  // x + 1, eigenvalue -1
  }
  SUBCASE("x^2 + 1 splits mod 5: the rotation action on C_5^2 must be rejected") {
    PAction act(AbelianPGroup(5, {1, 1}), {{{0, 4}, {1, 0}}});
    CHECK_THROWS_AS(eigen_orbit(act), SpecError);
  }
}

TEST_CASE("fixed characters exist iff fixed points exist") {
  SUBCASE("trivial action") {
    CHECK(fixed_char_exists(PAction(AbelianPGroup(2, {1}), {})));
  }
  SUBCASE("C_3 on C_2^2, exhausting the four dual characters") {
    PAction act(AbelianPGroup(2, {1, 1}), {{{0, 1}, {1, 1}}});
    CHECK_FALSE(fixed_char_exists(act));
  }
  SUBCASE("diag(-1, 1) on C_3^2") {
    PAction act(AbelianPGroup(3, {1, 1}), {{{2, 0}, {0, 1}}});
    CHECK(fixed_char_exists(act));
  }
}

TEST_CASE("catalog battery: factor structure and the free-action facts") {
  for (auto& [name, act] : action_catalog()) {
    CAPTURE(name);
    auto dec = decompose(act);
    long prod = 1;
    for (auto& f : dec.factors) prod *= f.sub.size;
    CHECK(prod == act.group().order());
    for (auto& f : dec.factors) {
      if (!f.nontrivial_action) continue;
      CHECK(f.abstract_group.is_homocyclic());
      EigenOrbitData orbit = eigen_orbit(f.induced);
      CHECK((ipow(act.group().p(), orbit.m) - 1) % orbit.h_order == 0);
      CHECK(fp::is_irreducible(orbit.char_poly, act.group().p()));
      frattini_action(f.induced, true);
    }
    fixed_char_exists(act);
  }
}

TEST_CASE("the map x -> 1 - x intertwines the group and radical actions") {
  for (auto& [name, act] : action_catalog()) {
    if (act.group().order() > 81) continue;
    CAPTURE(name);
    const AbelianPGroup& P = act.group();
    for (const auto& h : act.generators()) {
      for (long xi = 0; xi < P.order(); ++xi) {
        AbelianPGroup::Elem x = P.element_at(xi);
        GroupAlgebraElem gx(P);
        gx.add_term(P.identity(), 1);
        gx.add_term(x, -1);
        auto lhs = radical_square_coords([&] {
          GroupAlgebraElem g(P);
          g.add_term(P.identity(), 1);
          g.add_term(action_apply(P, h, x), -1);
          return g;
        }());
        auto rhs_in = radical_square_coords(gx);
        // apply h mod p to the coordinate vector
        std::vector<long> rhs(P.rank(), 0);
        for (int i = 0; i < P.rank(); ++i) {
          long s = 0;
          for (int j = 0; j < P.rank(); ++j) s += h[i][j] % P.p() * rhs_in[j];
          rhs[i] = ((s % P.p()) + P.p()) % P.p();
        }
        CHECK(lhs == rhs);
      }
    }
  }
}
