#include "blocklab/catalog.hpp"

#include "blocklab/numutil.hpp"

namespace blocklab {

namespace {

std::shared_ptr<InertialGroup> trivial_e() {
  return std::make_shared<InertialGroup>(InertialPresentation{{}, {}, {}, 1});
}

std::shared_ptr<InertialGroup> cyclic_z(long z_order) {
  return std::make_shared<InertialGroup>(InertialPresentation{{}, {}, {}, z_order});
}

std::shared_ptr<InertialGroup> quaternion8() {
  return std::make_shared<InertialGroup>(
      InertialPresentation{{2, 2}, {1, 1}, {{0, 1}, {1, 0}}, 2});
}

std::shared_ptr<InertialGroup> quaternion8_times_c5() {
  // z has order 10; e_i^2 = z^5 and [e_1, e_2] = z^5 rebuild Q_8 x C_5
  return std::make_shared<InertialGroup>(
      InertialPresentation{{2, 2}, {5, 5}, {{0, 5}, {5, 0}}, 10});
}

std::shared_ptr<InertialGroup> heisenberg27() {
  return std::make_shared<InertialGroup>(
      InertialPresentation{{3, 3}, {0, 0}, {{0, 1}, {2, 0}}, 3});
}

std::shared_ptr<InertialGroup> cyclic_e(long order) {
  return std::make_shared<InertialGroup>(InertialPresentation{{order}, {0}, {{0}}, 1});
}

BlockSpec make(const std::string& name, long p, std::vector<int> d_exps,
               std::shared_ptr<InertialGroup> e, std::vector<ActionMatrix> act, long phi) {
  BlockSpec s;
  s.name = name;
  s.p = p;
  s.defect = AbelianPGroup(p, std::move(d_exps));
  s.inertial = std::move(e);
  s.action = std::move(act);
  s.phi_exponent = phi;
  s.validate();
  return s;
}

// companion matrix of a monic polynomial x^d + c_{d-1} x^{d-1} + ... + c_0
ActionMatrix companion(const std::vector<long>& low_coeffs, long mod) {
  int d = (int)low_coeffs.size();
  ActionMatrix m(d, std::vector<long>(d, 0));
  for (int i = 0; i + 1 < d; ++i) m[i + 1][i] = 1;
  for (int i = 0; i < d; ++i) m[i][d - 1] = ((-low_coeffs[i]) % mod + mod) % mod;
  return m;
}

// a matrix over Z/9 of multiplicative order 8 lifting the order-8
// companion matrix over F_3 (searched among congruent companions)
ActionMatrix order8_on_c9c9() {
  AbelianPGroup g(3, {2, 2});
  for (long a = 1; a < 9; a += 3)
    for (long b = 2; b < 9; b += 3) {
      ActionMatrix m = companion({b, a}, 9);
      if (!action_invertible(g, m)) continue;
      ActionMatrix x = m;
      int order = 1;
      while (x != action_identity(g) && order <= 8) {
        x = action_mul(g, x, m);
        ++order;
      }
      if (order == 8 && x == action_identity(g)) return m;
    }
  throw SpecError("no order-8 lift found (unreachable)");
}

// companion matrix over F_3 of order 13 (degree-3 factor of the 13th
// cyclotomic polynomial)
ActionMatrix order13_on_c3e3() {
  AbelianPGroup g(3, {1, 1, 1});
  for (long c0 = 1; c0 < 3; ++c0)
    for (long c1 = 0; c1 < 3; ++c1)
      for (long c2 = 0; c2 < 3; ++c2) {
        ActionMatrix m = companion({c0, c1, c2}, 3);
        if (!action_invertible(g, m)) continue;
        ActionMatrix x = m;
        int order = 1;
        while (x != action_identity(g) && order <= 13) {
          x = action_mul(g, x, m);
          ++order;
        }
        if (order == 13 && x == action_identity(g)) return m;
      }
  throw SpecError("no order-13 companion found (unreachable)");
}

}  // namespace

std::vector<BlockSpec> builtin_catalog() {
  std::vector<BlockSpec> out;

  out.push_back(make("c3_nilpotent", 3, {1}, trivial_e(), {}, 0));
  out.push_back(make("c4_nilpotent", 2, {2}, trivial_e(), {}, 0));
  out.push_back(make("c2_nilpotent", 2, {1}, trivial_e(), {}, 0));
  out.push_back(make("point_c4", 3, {}, cyclic_z(4), {}, 1));

  out.push_back(make("q8_c3c3", 3, {1, 1}, quaternion8(),
                     {{{2, 0}, {0, 1}}, {{1, 0}, {0, 2}}}, 1));
  out.push_back(make("q8c5_c3c3", 3, {1, 1}, quaternion8_times_c5(),
                     {{{2, 0}, {0, 1}}, {{1, 0}, {0, 2}}}, 1));
  out.push_back(make("q8_c9c9", 3, {2, 2}, quaternion8(),
                     {{{8, 0}, {0, 1}}, {{1, 0}, {0, 8}}}, 1));
  out.push_back(make("q8_c3c3c3", 3, {1, 1, 1}, quaternion8(),
                     {{{2, 0, 0}, {0, 1, 0}, {0, 0, 1}}, {{1, 0, 0}, {0, 2, 0}, {0, 0, 1}}}, 1));

  {
    ActionMatrix m1{{0, 1, 0, 0}, {1, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}};
    ActionMatrix m2{{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 0, 1}, {0, 0, 1, 1}};
    out.push_back(make("h27_c2e4", 2, {1, 1, 1, 1}, heisenberg27(), {m1, m2}, 1));
  }

  out.push_back(make("c2c2_c3", 2, {1, 1}, cyclic_e(3), {{{0, 1}, {1, 1}}}, 0));
  out.push_back(make("c4c4_c3", 2, {2, 2}, cyclic_e(3), {{{0, 1}, {3, 3}}}, 0));
  out.push_back(make("c2e4_c5", 2, {1, 1, 1, 1}, cyclic_e(5),
                     {companion({1, 1, 1, 1}, 2)}, 0));
  out.push_back(make("c5c5_c3", 5, {1, 1}, cyclic_e(3), {companion({1, 1}, 5)}, 0));

  {
    // E = C_4 with Z = C_2: e^2 = z, inversion on C_5
    auto e = std::make_shared<InertialGroup>(InertialPresentation{{2}, {1}, {{0}}, 2});
    out.push_back(make("c5_c4z2", 5, {1}, e, {{{4}}}, 1));
  }

  out.push_back(make("c9c3_e2z", 3, {2, 1}, cyclic_z(2), {}, 1));
  out.push_back(make("c9c3_inv", 3, {2, 1}, cyclic_e(2), {{{8, 0}, {0, 2}}}, 0));
  out.push_back(make("c3c3_halfact", 3, {1, 1}, cyclic_e(2), {{{2, 0}, {0, 1}}}, 0));

  return out;
}

BlockSpec catalog_spec(const std::string& name) {
  for (auto& s : builtin_catalog())
    if (s.name == name) return s;
  throw SpecError("no catalog spec named '" + name + "'");
}

std::vector<std::pair<std::string, PAction>> action_catalog() {
  std::vector<std::pair<std::string, PAction>> out;
  auto add = [&](const std::string& name, long p, std::vector<int> exps,
                 std::vector<ActionMatrix> gens) {
    out.emplace_back(name, PAction(AbelianPGroup(p, std::move(exps)), std::move(gens)));
  };

  add("c3c3_diag_pair", 3, {1, 1}, {{{2, 0}, {0, 1}}, {{1, 0}, {0, 2}}});
  add("c3c3_half", 3, {1, 1}, {{{2, 0}, {0, 1}}});
  add("c3c3_minus", 3, {1, 1}, {{{2, 0}, {0, 2}}});
  add("c3c3_singer8", 3, {1, 1}, {companion({2, 1}, 3)});
  add("c3c3_singer4", 3, {1, 1}, {{{0, 2}, {1, 0}}});  // order 4: x^2 + 1 factorless mod 3
  add("c9c9_minus", 3, {2, 2}, {{{8, 0}, {0, 8}}});
  add("c9c9_singer8", 3, {2, 2}, {order8_on_c9c9()});
  add("c9c3_minus", 3, {2, 1}, {{{8, 0}, {0, 2}}});
  add("c9c3_partial", 3, {2, 1}, {{{8, 0}, {0, 1}}});
  add("c27_minus", 3, {3}, {{{26}}});
  add("c3e3_singer13", 3, {1, 1, 1}, {order13_on_c3e3()});
  add("c2c2_c3", 2, {1, 1}, {{{0, 1}, {1, 1}}});
  add("c4c4_c3", 2, {2, 2}, {{{0, 1}, {3, 3}}});
  add("c2e4_c5", 2, {1, 1, 1, 1}, {companion({1, 1, 1, 1}, 2)});
  add("c2e4_c15", 2, {1, 1, 1, 1}, {companion({1, 1, 0, 0}, 2)});  // x^4+x+1 primitive
  add("c2e4_c3c3", 2, {1, 1, 1, 1},
      {{{0, 1, 0, 0}, {1, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}},
       {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 0, 1}, {0, 0, 1, 1}}});
  add("c8_trivial", 2, {3}, {});
  add("c4c2_trivial", 2, {2, 1}, {});
  add("c5c5_c3", 5, {1, 1}, {companion({1, 1}, 5)});
  add("c5c5_diag_c4", 5, {1, 1}, {{{2, 0}, {0, 3}}});
  add("c5c5_scalar", 5, {1, 1}, {{{2, 0}, {0, 2}}});
  add("c5c5_c4c4", 5, {1, 1}, {{{2, 0}, {0, 1}}, {{1, 0}, {0, 2}}});
  add("c5_inv", 5, {1}, {{{4}}});
  add("c7c7_diag_c3", 7, {1, 1}, {{{2, 0}, {0, 4}}});
  add("c7_full", 7, {1}, {{{3}}});
  return out;
}

std::vector<AbelianPGroup> group_catalog() {
  return {
      AbelianPGroup(2, {1}),       AbelianPGroup(2, {1, 1}),    AbelianPGroup(2, {2}),
      AbelianPGroup(2, {1, 1, 1}), AbelianPGroup(2, {2, 1}),    AbelianPGroup(2, {3}),
      AbelianPGroup(2, {2, 2}),    AbelianPGroup(2, {1, 1, 1, 1}),
      AbelianPGroup(2, {4}),       AbelianPGroup(2, {3, 2, 1}),
      AbelianPGroup(3, {1}),       AbelianPGroup(3, {1, 1}),    AbelianPGroup(3, {2}),
      AbelianPGroup(3, {2, 1}),    AbelianPGroup(3, {1, 1, 1}), AbelianPGroup(3, {3}),
      AbelianPGroup(3, {2, 2}),    AbelianPGroup(3, {4}),
      AbelianPGroup(5, {1}),       AbelianPGroup(5, {2}),       AbelianPGroup(5, {1, 1}),
      AbelianPGroup(7, {1}),       AbelianPGroup(7, {2}),
  };
}

}  // namespace blocklab
