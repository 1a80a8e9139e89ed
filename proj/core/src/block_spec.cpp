#include "blocklab/block_spec.hpp"

#include <algorithm>

#include "blocklab/numutil.hpp"

namespace blocklab {

void BlockSpec::validate() const {
  if (!is_prime(p)) throw SpecError("spec '" + name + "': p is not prime");
  if (!inertial) throw SpecError("spec '" + name + "': missing inertial group");
  const InertialGroup& E = *inertial;
  if (E.size() % p == 0)
    throw SpecError("spec '" + name + "': |E| is divisible by p");
  if (gcd_long(phi_exponent, E.z_order()) != 1)
    throw SpecError("spec '" + name + "': phi not faithful (gcd(exponent, z_order) != 1)");
  if ((int)action.size() != E.num_generators())
    throw SpecError("spec '" + name + "': need one action matrix per E-generator");
  for (int i = 0; i < E.num_generators(); ++i) {
    if (!action_well_defined(defect, action[i]))
      throw SpecError("spec '" + name + "': action matrix " + std::to_string(i) +
                      " violates divisibility constraints");
    if (!action_invertible(defect, action[i]))
      throw SpecError("spec '" + name + "': action matrix " + std::to_string(i) +
                      " is not invertible");
    // the action must factor through L: e_i^{o_i} lies in <z>, so M_i^{o_i} = 1
    ActionMatrix m = action_identity(defect);
    for (long k = 0; k < E.presentation().gen_orders[i]; ++k)
      m = action_mul(defect, m, action[i]);
    if (m != action_identity(defect))
      throw SpecError("spec '" + name + "': action does not factor through E/<z>");
  }
  for (size_t i = 0; i < action.size(); ++i)
    for (size_t j = i + 1; j < action.size(); ++j)
      if (action_mul(defect, action[i], action[j]) != action_mul(defect, action[j], action[i]))
        throw SpecError("spec '" + name + "': action matrices do not commute");
  // faithfulness of L on D: the matrix group has order |L| = |E| / z_order
  PAction act = l_action();
  if (act.order() != E.l_order())
    throw SpecError("spec '" + name + "': action of L on D is not faithful (C_E(D) != <z>)");
}

PAction BlockSpec::l_action() const {
  return PAction(defect, action);
}

Cyclotomic BlockSpec::phi_value(long z_power) const {
  long zo = inertial->z_order();
  return Cyclotomic::root_of_unity(zo, phi_exponent * (((z_power % zo) + zo) % zo));
}

const ActionMatrix& BlockGroup::action_of(long e_idx) const {
  return e_action_matrices[e_idx];
}

std::vector<long> BlockGroup::d_elements() const {
  std::vector<long> out;
  long e_id = spec.inertial->group().identity();
  for (long d = 0; d < d_size; ++d) out.push_back(encode(d, e_id));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<long> BlockGroup::e_elements() const {
  std::vector<long> out;
  long d_id = spec.defect.index_of(spec.defect.identity());
  for (long e = 0; e < e_size; ++e) out.push_back(encode(d_id, e));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<long> BlockGroup::z_elements() const {
  std::vector<long> out;
  long d_id = spec.defect.index_of(spec.defect.identity());
  for (long e : spec.inertial->z_subgroup()) out.push_back(encode(d_id, e));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<long> BlockGroup::dz_elements() const {
  std::vector<long> out;
  for (long d = 0; d < d_size; ++d)
    for (long e : spec.inertial->z_subgroup()) out.push_back(encode(d, e));
  std::sort(out.begin(), out.end());
  return out;
}

BlockGroup build_block_group(const BlockSpec& spec) {
  spec.validate();
  const InertialGroup& E = *spec.inertial;
  const AbelianPGroup& D = spec.defect;
  BlockGroup bg;
  bg.spec = spec;
  bg.d_size = D.order();
  bg.e_size = E.size();

  // matrix of each E element: product of generator matrices by its a-tuple
  bg.e_action_matrices.resize(E.size());
  for (long e = 0; e < E.size(); ++e) {
    auto w = E.word_at(e);
    ActionMatrix m = action_identity(D);
    for (size_t i = 0; i < w.a.size(); ++i)
      for (long k = 0; k < w.a[i]; ++k) m = action_mul(D, m, spec.action[i]);
    bg.e_action_matrices[e] = std::move(m);
  }

  long n = bg.d_size * bg.e_size;
  bg.g = FiniteGroup::from_function(n, [&](long x, long y) {
    long dx = bg.d_part(x), ex = bg.e_part(x);
    long dy = bg.d_part(y), ey = bg.e_part(y);
    // (d1, e1)(d2, e2) = (d1 + e1.d2, e1 e2)
    AbelianPGroup::Elem d2 = D.element_at(dy);
    AbelianPGroup::Elem moved = action_apply(D, bg.e_action_matrices[ex], d2);
    long d = D.index_of(D.add(D.element_at(dx), moved));
    long e = E.group().mul(ex, ey);
    return bg.encode(d, e);
  });

  // cross-check p-regularity: order-based vs membership of the d-part in
  // the image of (1 - action of the e-part)
  for (long ex = 0; ex < bg.e_size; ++ex) {
    const ActionMatrix& m = bg.e_action_matrices[ex];
    std::vector<AbelianPGroup::Elem> gens;
    for (int j = 0; j < D.rank(); ++j) {
      auto img = action_apply(D, m, D.generator(j));
      gens.push_back(D.add(D.generator(j), D.neg(img)));
    }
    Subgroup image = subgroup_from_generators(D, gens);
    for (long dx = 0; dx < bg.d_size; ++dx) {
      long x = bg.encode(dx, ex);
      bool by_order = bg.g.element_order(x) % spec.p != 0;
      bool by_image = image.contains(D.element_at(dx));
      if (by_order != by_image)
        throw VerificationError("p-regularity criteria disagree at element " + std::to_string(x));
    }
  }
  return bg;
}

}  // namespace blocklab
