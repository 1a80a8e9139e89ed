#include "blocklab/abelian.hpp"

#include <algorithm>

#include "blocklab/numutil.hpp"

namespace blocklab {

AbelianPGroup::AbelianPGroup(long p, std::vector<int> exponents)
    : p_(p), exps_(std::move(exponents)) {
  if (!is_prime(p)) throw SpecError("AbelianPGroup: p must be prime");
  for (size_t i = 0; i + 1 < exps_.size(); ++i)
    if (exps_[i] < exps_[i + 1]) throw SpecError("AbelianPGroup: exponents must be descending");
  for (int e : exps_)
    if (e < 1) throw SpecError("AbelianPGroup: exponents must be >= 1");
  order_ = 1;
  for (int e : exps_) {
    mods_.push_back(ipow(p, e));
    if (order_ > (1L << 40)) throw SpecError("AbelianPGroup: order too large for this tool");
    order_ *= mods_.back();
  }
}

bool AbelianPGroup::is_homocyclic() const {
  for (size_t i = 1; i < exps_.size(); ++i)
    if (exps_[i] != exps_[0]) return false;
  return true;
}

AbelianPGroup::Elem AbelianPGroup::reduce(Elem x) const {
  for (size_t i = 0; i < x.size(); ++i) x[i] = ((x[i] % mods_[i]) + mods_[i]) % mods_[i];
  return x;
}

AbelianPGroup::Elem AbelianPGroup::add(const Elem& a, const Elem& b) const {
  Elem r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = (a[i] + b[i]) % mods_[i];
  return r;
}

AbelianPGroup::Elem AbelianPGroup::neg(const Elem& a) const {
  Elem r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = (mods_[i] - a[i]) % mods_[i];
  return r;
}

AbelianPGroup::Elem AbelianPGroup::scale(long k, const Elem& a) const {
  Elem r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = (((a[i] * (k % mods_[i])) % mods_[i]) + mods_[i]) % mods_[i];
  return r;
}

AbelianPGroup::Elem AbelianPGroup::generator(int i) const {
  Elem r = identity();
  r[i] = 1;
  return r;
}

long AbelianPGroup::element_order(const Elem& a) const {
  long o = 1;
  for (size_t i = 0; i < a.size(); ++i) {
    long m = mods_[i] / gcd_long(a[i], mods_[i]);
    o = lcm_long(o, m);
  }
  return o;
}

bool AbelianPGroup::is_identity(const Elem& a) const {
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] % mods_[i] != 0) return false;
  return true;
}

long AbelianPGroup::index_of(const Elem& a) const {
  long idx = 0;
  for (size_t i = 0; i < a.size(); ++i) idx = idx * mods_[i] + a[i];
  return idx;
}

AbelianPGroup::Elem AbelianPGroup::element_at(long idx) const {
  Elem a(exps_.size());
  for (int i = (int)exps_.size() - 1; i >= 0; --i) {
    a[i] = idx % mods_[i];
    idx /= mods_[i];
  }
  return a;
}

bool DualCharacter::is_trivial() const {
  for (long x : a)
    if (x != 0) return false;
  return true;
}

DualCharacter trivial_character(const AbelianPGroup& P) {
  return DualCharacter{std::vector<long>(P.rank(), 0)};
}

Cyclotomic dual_pairing(const AbelianPGroup& P, const DualCharacter& lam,
                        const AbelianPGroup::Elem& x) {
  long n = P.exponent();
  long s = 0;
  for (int i = 0; i < P.rank(); ++i) {
    long w = n / P.modulus(i);
    s = (s + lam.a[i] % P.modulus(i) * (x[i] % P.modulus(i)) % n * w) % n;
  }
  return Cyclotomic::root_of_unity(n, s);
}

DualCharacter dual_mul(const AbelianPGroup& P, const DualCharacter& a, const DualCharacter& b) {
  DualCharacter r{std::vector<long>(P.rank())};
  for (int i = 0; i < P.rank(); ++i) r.a[i] = (a.a[i] + b.a[i]) % P.modulus(i);
  return r;
}

DualCharacter dual_inverse(const AbelianPGroup& P, const DualCharacter& a) {
  DualCharacter r{std::vector<long>(P.rank())};
  for (int i = 0; i < P.rank(); ++i) r.a[i] = (P.modulus(i) - a.a[i]) % P.modulus(i);
  return r;
}

long dual_index(const AbelianPGroup& P, const DualCharacter& lam) {
  return P.index_of(lam.a);
}

DualCharacter dual_at(const AbelianPGroup& P, long idx) {
  return DualCharacter{P.element_at(idx)};
}

bool Subgroup::contains(const AbelianPGroup::Elem& x) const {
  ZVec v(x.size());
  for (size_t i = 0; i < x.size(); ++i) v[i] = x[i];
  return hnf_contains(lattice_hnf, std::move(v));
}

AbelianPGroup Subgroup::abstract_group() const {
  return AbelianPGroup(parent.p(), basis_exps);
}

Subgroup subgroup_from_generators(const AbelianPGroup& P,
                                  const std::vector<AbelianPGroup::Elem>& gens) {
  int r = P.rank();
  Subgroup S;
  S.parent = P;
  if (r == 0) {
    S.size = 1;
    return S;
  }
  ZMat rows;
  for (const auto& g : gens) {
    ZVec v(r);
    for (int i = 0; i < r; ++i) v[i] = g[i];
    rows.push_back(std::move(v));
  }
  for (int i = 0; i < r; ++i) {
    ZVec v(r, 0);
    v[i] = P.modulus(i);
    rows.push_back(std::move(v));
  }
  ZMat b = hermite_normal_form(std::move(rows));
  if ((int)b.size() != r) throw SpecError("subgroup lattice not full rank (unreachable)");
  S.lattice_hnf = b;

  // express the modulus lattice in the basis b: Q * b = diag(mods)
  ZMat bt(r, ZVec(r));
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) bt[i][j] = b[j][i];
  ZMat q(r, ZVec(r));
  for (int i = 0; i < r; ++i) {
    ZVec d0(r, 0);
    d0[i] = P.modulus(i);
    auto sol = solve_integer(bt, d0);
    if (!sol) throw SpecError("modulus lattice not inside subgroup lattice (unreachable)");
    q[i] = *sol;
  }
  SmithResult snf = smith_normal_form(q);
  // basis rows b' = V^{-1} b; order of image of b'_i is snf.d[i][i]
  ZMat vinv(r, ZVec(r));
  for (int j = 0; j < r; ++j) {
    ZVec e(r, 0);
    e[j] = 1;
    auto sol = solve_integer(snf.v, e);
    if (!sol) throw SpecError("SNF transform not invertible (unreachable)");
    for (int i = 0; i < r; ++i) vinv[i][j] = (*sol)[i];
  }
  ZMat bprime = zmat_mul(vinv, b);
  struct Item {
    long ord;
    AbelianPGroup::Elem el;
  };
  std::vector<Item> items;
  S.size = 1;
  for (int i = 0; i < r; ++i) {
    mpz_class s = snf.d[i][i];
    if (s < 0) s = -s;
    if (s == 1) continue;
    long ord = s.get_si();
    AbelianPGroup::Elem el(r);
    for (int j = 0; j < r; ++j) {
      mpz_class red = bprime[i][j] % P.modulus(j);
      if (red < 0) red += P.modulus(j);
      el[j] = red.get_si();
    }
    items.push_back({ord, el});
    S.size *= ord;
  }
  std::sort(items.begin(), items.end(), [](const Item& a, const Item& b) { return a.ord > b.ord; });
  for (auto& it : items) {
    // verify the order is a p-power and matches the element order
    long o = P.element_order(it.el);
    if (o != it.ord) throw SpecError("subgroup basis order mismatch (unreachable)");
    S.basis.push_back(it.el);
    S.basis_exps.push_back(int_valuation(it.ord, P.p()));
    if (ipow(P.p(), S.basis_exps.back()) != it.ord)
      throw SpecError("subgroup order not a p-power (unreachable)");
  }
  return S;
}

Subgroup trivial_subgroup(const AbelianPGroup& P) {
  return subgroup_from_generators(P, {});
}

Subgroup full_subgroup(const AbelianPGroup& P) {
  std::vector<AbelianPGroup::Elem> gens;
  for (int i = 0; i < P.rank(); ++i) gens.push_back(P.generator(i));
  return subgroup_from_generators(P, gens);
}

std::vector<long> subgroup_coordinates(const Subgroup& S, const AbelianPGroup::Elem& x) {
  const AbelianPGroup& P = S.parent;
  int r = P.rank();
  int k = (int)S.basis.size();
  // solve sum_j c_j basis_j + sum_i y_i mods_i e_i = x over Z
  ZMat a(r, ZVec(k + r, 0));
  for (int j = 0; j < k; ++j)
    for (int i = 0; i < r; ++i) a[i][j] = S.basis[j][i];
  for (int i = 0; i < r; ++i) a[i][k + i] = P.modulus(i);
  ZVec b(r);
  for (int i = 0; i < r; ++i) b[i] = x[i];
  auto sol = solve_integer(a, b);
  if (!sol) throw SpecError("subgroup_coordinates: element not in subgroup");
  std::vector<long> c(k);
  for (int j = 0; j < k; ++j) {
    long ord = ipow(P.p(), S.basis_exps[j]);
    mpz_class red = (*sol)[j] % ord;
    if (red < 0) red += ord;
    c[j] = red.get_si();
  }
  return c;
}

FrattiniData frattini(const AbelianPGroup& P) {
  std::vector<int> phi_exps;
  std::vector<AbelianPGroup::Elem> embed;
  for (int i = 0; i < P.rank(); ++i) {
    if (P.exponents()[i] >= 2) {
      phi_exps.push_back(P.exponents()[i] - 1);
      embed.push_back(P.scale(P.p(), P.generator(i)));
    }
  }
  return FrattiniData{AbelianPGroup(P.p(), phi_exps), std::move(embed),
                      AbelianPGroup(P.p(), std::vector<int>(P.rank(), 1))};
}

std::vector<long> frattini_quotient_coords(const AbelianPGroup& P,
                                           const AbelianPGroup::Elem& x) {
  std::vector<long> v(P.rank());
  for (int i = 0; i < P.rank(); ++i) v[i] = x[i] % P.p();
  return v;
}

DualCharacter restrict_character(const AbelianPGroup& P, const DualCharacter& lam,
                                 const Subgroup& S) {
  long n = P.exponent();
  DualCharacter out{std::vector<long>(S.basis.size())};
  for (size_t j = 0; j < S.basis.size(); ++j) {
    long s = 0;
    for (int i = 0; i < P.rank(); ++i) {
      long w = n / P.modulus(i);
      s = (s + lam.a[i] * (S.basis[j][i] % P.modulus(i)) % n * w) % n;
    }
    long sub_mod = ipow(P.p(), S.basis_exps[j]);
    long step = n / sub_mod;
    if (s % step != 0)
      throw SpecError("restrict_character: value order exceeds generator order (unreachable)");
    out.a[j] = (s / step) % sub_mod;
  }
  return out;
}

bool character_trivial_on(const AbelianPGroup& P, const DualCharacter& lam, const Subgroup& S) {
  for (const auto& g : S.basis)
    if (!dual_pairing(P, lam, g).is_rational() ||
        dual_pairing(P, lam, g).rational_value() != 1)
      return false;
  return true;
}

}  // namespace blocklab
