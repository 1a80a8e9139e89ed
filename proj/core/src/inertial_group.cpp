#include "blocklab/inertial_group.hpp"

#include <algorithm>

#include "blocklab/numutil.hpp"

namespace blocklab {

InertialGroup::InertialGroup(InertialPresentation pres) : pres_(std::move(pres)) {
  size_t r = pres_.gen_orders.size();
  if (pres_.z_order < 1) throw SpecError("inertial group: z order must be >= 1");
  if (pres_.power_z.size() != r || pres_.commutator.size() != r)
    throw SpecError("inertial group: presentation arrays have mismatched sizes");
  long z = pres_.z_order;
  for (size_t i = 0; i < r; ++i) {
    if (pres_.gen_orders[i] < 1) throw SpecError("inertial group: generator order must be >= 1");
    if (pres_.commutator[i].size() != r)
      throw SpecError("inertial group: commutator matrix is not square");
    pres_.power_z[i] = ((pres_.power_z[i] % z) + z) % z;
  }
  for (size_t i = 0; i < r; ++i)
    for (size_t j = 0; j < r; ++j) {
      long& cij = pres_.commutator[i][j];
      cij = ((cij % z) + z) % z;
      if (i == j && cij != 0) throw SpecError("inertial group: [e_i, e_i] must vanish");
      if ((cij + pres_.commutator[j][i]) % z != 0)
        throw SpecError("inertial group: commutator exponents are not antisymmetric");
      // o_i * c_ij == 0 mod z: needed for a consistent central extension
      if ((pres_.gen_orders[i] % z) * cij % z != 0)
        throw SpecError("inertial group: o_i * c_ij != 0 mod z_order (inconsistent presentation)");
    }
  long n = z;
  for (size_t i = 0; i < r; ++i) {
    n *= pres_.gen_orders[i];
    if (n > 4096) throw SpecError("inertial group: order too large");
  }
  g_ = FiniteGroup::from_function(
      n, [&](long a, long b) { return index_of(multiply(word_at(a), word_at(b))); },
      index_of(Word{std::vector<long>(r, 0), 0}));

  // associativity proof: checking a(bc) = (ab)c for a in a generating set and
  // all b, c suffices (induction on word length of a)
  std::vector<long> gens;
  for (size_t i = 0; i < r; ++i) gens.push_back(generator((int)i));
  gens.push_back(z_element(1));
  for (long a : gens)
    for (long b = 0; b < n; ++b)
      for (long c = 0; c < n; ++c)
        if (g_.mul(g_.mul(a, b), c) != g_.mul(a, g_.mul(b, c)))
          throw SpecError("inertial group: presentation is inconsistent (associativity fails)");
  // Cayley closure from the generators reaches the whole normal-form set
  if ((long)g_.generated_subgroup(gens).size() != n)
    throw SpecError("inertial group: generators do not span the presented order");

  center_ = g_.center();
  one_simple_ = true;
  for (long cidx : center_) {
    Word w = word_at(cidx);
    bool in_z = true;
    for (long ai : w.a)
      if (ai != 0) in_z = false;
    if (!in_z) one_simple_ = false;
  }
}

InertialGroup::Word InertialGroup::multiply(const Word& x, const Word& y) const {
  size_t r = pres_.gen_orders.size();
  long z = pres_.z_order;
  Word out;
  out.a.resize(r);
  long zc = (x.zc + y.zc) % z;
  // moving e_j^{y_j} left past e_i^{x_i} for i > j picks up z^{c_ij x_i y_j}
  for (size_t j = 0; j < r; ++j)
    for (size_t i = j + 1; i < r; ++i)
      zc = (zc + pres_.commutator[i][j] % z * ((x.a[i] * y.a[j]) % z)) % z;
  for (size_t i = 0; i < r; ++i) {
    long s = x.a[i] + y.a[i];
    out.a[i] = s % pres_.gen_orders[i];
    long carry = s / pres_.gen_orders[i];
    zc = (zc + carry * pres_.power_z[i]) % z;
  }
  out.zc = zc;
  return out;
}

long InertialGroup::index_of(const Word& w) const {
  long idx = 0;
  for (size_t i = 0; i < pres_.gen_orders.size(); ++i) idx = idx * pres_.gen_orders[i] + w.a[i];
  return idx * pres_.z_order + w.zc;
}

InertialGroup::Word InertialGroup::word_at(long idx) const {
  Word w;
  w.zc = idx % pres_.z_order;
  idx /= pres_.z_order;
  size_t r = pres_.gen_orders.size();
  w.a.resize(r);
  for (int i = (int)r - 1; i >= 0; --i) {
    w.a[i] = idx % pres_.gen_orders[i];
    idx /= pres_.gen_orders[i];
  }
  return w;
}

long InertialGroup::generator(int i) const {
  Word w{std::vector<long>(pres_.gen_orders.size(), 0), 0};
  if (pres_.gen_orders[i] == 1) return index_of(w);  // trivial generator collapses
  w.a[i] = 1;
  return index_of(w);
}

long InertialGroup::z_element(long k) const {
  Word w{std::vector<long>(pres_.gen_orders.size(), 0),
         ((k % pres_.z_order) + pres_.z_order) % pres_.z_order};
  return index_of(w);
}

std::vector<long> InertialGroup::z_subgroup() const {
  std::vector<long> out;
  for (long k = 0; k < pres_.z_order; ++k) out.push_back(z_element(k));
  std::sort(out.begin(), out.end());
  return out;
}

long InertialGroup::l_order() const {
  long n = 1;
  for (long o : pres_.gen_orders) n *= o;
  return n;
}

}  // namespace blocklab
