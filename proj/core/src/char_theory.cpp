#include "blocklab/char_theory.hpp"

#include <algorithm>
#include <map>

#include "blocklab/numutil.hpp"

namespace blocklab {

std::vector<ClassFunction> irr_e_phi(const InertialGroup& e, long phi_exponent) {
  const FiniteGroup& g = e.group();
  std::vector<ClassFunction> table = character_table(g);
  std::vector<ClassFunction> out;
  long zo = e.z_order();
  for (const auto& chi : table) {
    bool lies_over = true;
    Cyclotomic deg = chi.degree();
    for (long k = 0; k < zo && lies_over; ++k) {
      Cyclotomic expect = deg * Cyclotomic::root_of_unity(zo, phi_exponent * k);
      if (chi.value_at_element(e.z_element(k)) != expect) lies_over = false;
    }
    if (lies_over) out.push_back(chi);
  }
  long zE = (long)e.center().size();
  if ((long)out.size() * e.z_order() != zE)
    throw VerificationError("Irr(E, phi) count " + std::to_string(out.size()) +
                            " does not equal [Z(E):Z] = " + std::to_string(zE / e.z_order()));
  return out;
}

namespace {

// subgroup view of D x| S for a subset S of E-indices (S a subgroup)
SubgroupView d_semidirect_view(const BlockGroup& bg, const std::vector<long>& e_subset) {
  std::vector<long> elems;
  for (long d = 0; d < bg.d_size; ++d)
    for (long e : e_subset) elems.push_back(bg.encode(d, e));
  return subgroup_view(bg.g, std::move(elems));
}

}  // namespace

long BlockData::inflated_index(long j) const {
  for (size_t i = 0; i < irr.size(); ++i) {
    if (!irr[i].lambda.is_trivial()) continue;
    // trivial-lambda characters have stabilizer E and chi in Irr(E, phi)
    if (irr[i].chi_index == j) return (long)i;
  }
  throw SpecError("inflated character not found (unreachable)");
}

BlockData compute_block(const BlockSpec& spec) {
  BlockData data;
  data.spec = spec;
  data.group = std::make_shared<BlockGroup>(build_block_group(spec));
  const AbelianPGroup& D = spec.defect;
  const InertialGroup& E = *spec.inertial;
  const FiniteGroup& G = data.group->g;

  data.e_view = std::make_shared<SubgroupView>(subgroup_view(G, data.group->e_elements()));

  PAction l_act = spec.l_action();
  FixedCommutatorSplit split = fixed_and_commutator(l_act);
  data.d1 = split.commutator;
  data.d2 = split.fixed;
  data.d1_abs = data.d1.abstract_group();
  data.d2_abs = data.d2.abstract_group();
  data.d_split = split.split;

  data.irr_e = irr_e_phi(E, spec.phi_exponent);

  // orbits of E on Irr(D); the action is through L
  long dn = D.order();
  std::vector<ActionMatrix> gen_mats = spec.action;
  std::vector<long> orbit_of(dn, -1);
  std::vector<long> orbit_reps;
  for (long idx = 0; idx < dn; ++idx) {
    if (orbit_of[idx] != -1) continue;
    long orb = (long)orbit_reps.size();
    std::vector<long> queue{idx};
    orbit_of[idx] = orb;
    long best = idx;
    for (size_t head = 0; head < queue.size(); ++head) {
      DualCharacter lam = dual_at(D, queue[head]);
      for (const auto& m : gen_mats) {
        // e acts by lambda -> lambda o M(e)^{-1}; both directions generate
        // the same orbits, apply lambda o M directly
        long next = dual_index(D, dual_action(D, m, lam));
        if (orbit_of[next] == -1) {
          orbit_of[next] = orb;
          queue.push_back(next);
          best = std::min(best, next);
        }
      }
    }
    orbit_reps.push_back(best);
  }

  std::vector<BlockCharacter> chars;
  for (size_t orb = 0; orb < orbit_reps.size(); ++orb) {
    DualCharacter lam = dual_at(D, orbit_reps[orb]);
    // stabilizer of lam in E
    std::vector<long> stab;
    for (long e = 0; e < E.size(); ++e) {
      if (dual_action(D, data.group->e_action_matrices[e], lam).a == lam.a) stab.push_back(e);
    }
    std::sort(stab.begin(), stab.end());
    auto stab_view = std::make_shared<SubgroupView>(subgroup_view(E.group(), stab));
    // Irr(E_lambda, phi): central character condition on z inside the stabilizer
    std::vector<ClassFunction> stab_table = character_table(stab_view->group);
    std::vector<ClassFunction> stab_phi;
    long zo = E.z_order();
    for (const auto& chi : stab_table) {
      bool lies_over = true;
      for (long k = 0; k < zo && lies_over; ++k) {
        long zsub = stab_view->from_parent[E.z_element(k)];
        if (zsub < 0) throw SpecError("stabilizer does not contain Z (unreachable)");
        Cyclotomic expect = chi.degree() * Cyclotomic::root_of_unity(zo, spec.phi_exponent * k);
        if (chi.value(stab_view->group.class_of(zsub)) != expect) lies_over = false;
      }
      if (lies_over) stab_phi.push_back(chi);
    }
    // H = D x| E_lambda inside G and the characters (lambda, chi)
    SubgroupView h_view = d_semidirect_view(*data.group, stab);
    for (size_t ci = 0; ci < stab_phi.size(); ++ci) {
      std::vector<Cyclotomic> hvals;
      for (long c = 0; c < h_view.group.class_count(); ++c) {
        long parent = h_view.to_parent[h_view.group.class_rep(c)];
        long d_idx = data.group->d_part(parent);
        long e_idx = data.group->e_part(parent);
        long e_sub = stab_view->from_parent[e_idx];
        Cyclotomic lv = dual_pairing(D, lam, D.element_at(d_idx));
        hvals.push_back(lv * stab_phi[ci].value_at_element(e_sub));
      }
      ClassFunction lam_chi(h_view.group, std::move(hvals));
      BlockCharacter bc;
      bc.lambda = lam;
      bc.stabilizer = stab;
      bc.stab_view = stab_view;
      bc.chi_index = (long)ci;
      bc.chi = stab_phi[ci];
      bc.induced = induce(G, h_view, lam_chi);
      bc.degree = bc.induced.degree_int();
      long expected_degree = (E.size() / (long)stab.size()) * stab_phi[ci].degree_int();
      if (bc.degree != expected_degree)
        throw VerificationError("induced character degree mismatch");
      bc.lambda_d1 = restrict_character(D, lam, data.d1);
      bc.lambda_d2 = restrict_character(D, lam, data.d2);
      bc.orbit_index = (long)orb;
      chars.push_back(std::move(bc));
    }
  }

  // restriction to Z must be a multiple of phi
  for (const auto& bc : chars) {
    for (long k = 0; k < E.z_order(); ++k) {
      long zg = data.group->encode(D.index_of(D.identity()), E.z_element(k));
      Cyclotomic expect = bc.induced.degree() * spec.phi_value(k);
      if (bc.induced.value_at_element(zg) != expect)
        throw VerificationError("character does not restrict to a multiple of phi on Z");
    }
  }

  // sum of squared degrees = |D| |E| / |Z|
  long sum_sq = 0;
  for (const auto& bc : chars) sum_sq += bc.degree * bc.degree;
  if (sum_sq * E.z_order() != D.order() * E.size())
    throw VerificationError("sum of squared block character degrees is wrong: " +
                            std::to_string(sum_sq));

  std::sort(chars.begin(), chars.end(), [](const BlockCharacter& a, const BlockCharacter& b) {
    if (a.degree != b.degree) return a.degree < b.degree;
    if (a.lambda.a != b.lambda.a) return a.lambda.a < b.lambda.a;
    return a.chi_index < b.chi_index;
  });
  data.irr = std::move(chars);

  // Brauer characters: inflations of Irr(E, phi) through G -> E
  for (const auto& chi : data.irr_e) {
    std::vector<Cyclotomic> vals;
    for (long c = 0; c < G.class_count(); ++c) {
      long rep = G.class_rep(c);
      vals.push_back(chi.value_at_element(data.group->e_part(rep)));
    }
    data.ibr.emplace_back(G, std::move(vals));
  }

  // decomposition matrix by restriction to E
  long nb = (long)data.irr.size(), ne = (long)data.irr_e.size();
  data.decomposition.assign(nb, std::vector<long>(ne, 0));
  for (long i = 0; i < nb; ++i) {
    ClassFunction res = restrict_to(*data.e_view, data.irr[i].induced);
    ClassFunction check = res.scaled(0);
    for (long j = 0; j < ne; ++j) {
      Cyclotomic ip = res.inner(data.irr_e[j]);
      if (!ip.is_rational() || ip.rational_value().get_den() != 1 || ip.rational_value() < 0)
        throw VerificationError("decomposition multiplicity is not a nonnegative integer");
      long m = ip.rational_value().get_num().get_si();
      data.decomposition[i][j] = m;
      if (m != 0) check = check + data.irr_e[j].scaled(mpq_class(m));
    }
    if (!(check == res))
      throw VerificationError("restriction to E is not supported on Irr(E, phi)");
  }
  data.cartan.assign(ne, std::vector<long>(ne, 0));
  for (long a = 0; a < ne; ++a)
    for (long b = 0; b < ne; ++b)
      for (long i = 0; i < nb; ++i)
        data.cartan[a][b] += data.decomposition[i][a] * data.decomposition[i][b];
  for (long j = 0; j < ne; ++j) {
    ClassFunction proj = data.irr[0].induced.scaled(0);
    for (long i = 0; i < nb; ++i)
      if (data.decomposition[i][j] != 0)
        proj = proj + data.irr[i].induced.scaled(mpq_class(data.decomposition[i][j]));
    data.projectives.push_back(std::move(proj));
  }
  return data;
}

std::optional<std::vector<long>> sigma_br(const BlockData& data,
                                          const std::vector<long>& sigma) {
  long ne = (long)data.irr_e.size();
  std::vector<long> br(ne, -1);
  for (long j = 0; j < ne; ++j) {
    long src = data.inflated_index(j);
    long dst = sigma[src];
    ClassFunction res = restrict_to(*data.e_view, data.irr[dst].induced);
    // the image restriction must itself be irreducible in Irr(E, phi)
    long found = -1;
    for (long t = 0; t < ne; ++t)
      if (res == data.irr_e[t]) found = t;
    if (found < 0) return std::nullopt;
    br[j] = found;
  }
  // must be a bijection
  std::vector<long> seen(ne, 0);
  for (long j = 0; j < ne; ++j) {
    if (br[j] < 0 || seen[br[j]]) return std::nullopt;
    seen[br[j]] = 1;
  }
  // global consistency: sigma(chi)|_E = sigma_br(chi|_E) for every chi
  for (size_t i = 0; i < data.irr.size(); ++i) {
    ClassFunction lhs = restrict_to(*data.e_view, data.irr[sigma[i]].induced);
    ClassFunction rhs = lhs.scaled(0);
    for (long j = 0; j < ne; ++j)
      if (data.decomposition[i][j] != 0)
        rhs = rhs + data.irr_e[br[j]].scaled(mpq_class(data.decomposition[i][j]));
    if (!(lhs == rhs)) return std::nullopt;
  }
  return br;
}

std::vector<long> single_brauer_subset(const BlockData& data) {
  // route 1: kernel condition against [D, Z(E)]
  const AbelianPGroup& D = data.spec.defect;
  const InertialGroup& E = *data.spec.inertial;
  std::vector<AbelianPGroup::Elem> gens;
  for (long z : E.center()) {
    const ActionMatrix& m = data.group->e_action_matrices[z];
    for (int j = 0; j < D.rank(); ++j) {
      auto img = action_apply(D, m, D.generator(j));
      gens.push_back(D.add(img, D.neg(D.generator(j))));
    }
  }
  Subgroup d_ze = subgroup_from_generators(D, gens);
  std::vector<long> route1;
  for (size_t i = 0; i < data.irr.size(); ++i)
    if (character_trivial_on(D, data.irr[i].lambda, d_ze)) route1.push_back((long)i);

  // route 2: decomposition row has a single nonzero entry
  std::vector<long> route2;
  for (size_t i = 0; i < data.irr.size(); ++i) {
    int nonzero = 0;
    for (long j = 0; j < (long)data.irr_e.size(); ++j)
      if (data.decomposition[i][j] != 0) ++nonzero;
    if (nonzero == 1) route2.push_back((long)i);
  }
  if (route1 != route2)
    throw VerificationError(
        "single-Brauer-constituent subset disagrees with the [D, Z(E)]-kernel subset");
  return route1;
}

KernelFlags kernel_flags(const BlockData& data, const DualCharacter& lambda) {
  const AbelianPGroup& D = data.spec.defect;
  KernelFlags f;
  f.trivial_on_d1 = character_trivial_on(D, lambda, data.d1);
  // Frattini subgroup of D1 inside D: generated by p * basis
  std::vector<AbelianPGroup::Elem> fgens;
  for (const auto& b : data.d1.basis) fgens.push_back(D.scale(D.p(), b));
  Subgroup frat = subgroup_from_generators(D, fgens);
  f.trivial_on_frattini_d1 = character_trivial_on(D, lambda, frat);
  return f;
}

std::vector<long> irr_trivial_on_d1(const BlockData& data) {
  std::vector<long> out;
  for (size_t i = 0; i < data.irr.size(); ++i)
    if (data.irr[i].lambda_d1.is_trivial()) out.push_back((long)i);
  return out;
}

BlockSpec sub_block_spec_d1(const BlockData& data) {
  BlockSpec sub;
  sub.name = data.spec.name + "#d1";
  sub.p = data.spec.p;
  sub.defect = data.d1_abs;
  sub.inertial = data.spec.inertial;
  sub.phi_exponent = data.spec.phi_exponent;
  sub.limits = data.spec.limits;
  const AbelianPGroup& D = data.spec.defect;
  for (const auto& m : data.spec.action) {
    int k = (int)data.d1.basis.size();
    ActionMatrix mm(k, std::vector<long>(k, 0));
    for (int j = 0; j < k; ++j) {
      auto img = action_apply(D, m, data.d1.basis[j]);
      auto c = subgroup_coordinates(data.d1, img);
      for (int i = 0; i < k; ++i) mm[i][j] = c[i];
    }
    sub.action.push_back(std::move(mm));
  }
  return sub;
}

}  // namespace blocklab
