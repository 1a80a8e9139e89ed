// Finite abelian p-groups as products of cyclic factors C_{p^{n_i}},
// with duals, Frattini subgroups, and subgroup bases.
//
// Elements are exponent vectors; entry i lives mod p^{n_i}. Exponent lists
// are kept descending.
#pragma once

#include <vector>

#include "blocklab/cyclotomic.hpp"
#include "blocklab/intmat.hpp"

namespace blocklab {

class AbelianPGroup {
 public:
  using Elem = std::vector<long>;

  AbelianPGroup(long p, std::vector<int> exponents);

  long p() const { return p_; }
  int rank() const { return (int)exps_.size(); }
  const std::vector<int>& exponents() const { return exps_; }
  long modulus(int i) const { return mods_[i]; }
  long order() const { return order_; }
  long exponent() const { return exps_.empty() ? 1 : mods_[0]; }
  bool is_trivial() const { return order_ == 1; }
  bool is_homocyclic() const;

  Elem identity() const { return Elem(exps_.size(), 0); }
  Elem reduce(Elem x) const;
  Elem add(const Elem& a, const Elem& b) const;
  Elem neg(const Elem& a) const;
  Elem scale(long k, const Elem& a) const;
  Elem generator(int i) const;
  long element_order(const Elem& a) const;
  bool is_identity(const Elem& a) const;

  long index_of(const Elem& a) const;  // mixed-radix encoding
  Elem element_at(long idx) const;

 private:
  long p_;
  std::vector<int> exps_;
  std::vector<long> mods_;
  long order_;
};

// A character of an abelian p-group: lambda(x_i) = zeta_{p^{n_i}}^{a_i}.
struct DualCharacter {
  std::vector<long> a;  // entry i mod p^{n_i}

  bool is_trivial() const;
};

DualCharacter trivial_character(const AbelianPGroup& P);
Cyclotomic dual_pairing(const AbelianPGroup& P, const DualCharacter& lam,
                        const AbelianPGroup::Elem& x);
DualCharacter dual_mul(const AbelianPGroup& P, const DualCharacter& a, const DualCharacter& b);
DualCharacter dual_inverse(const AbelianPGroup& P, const DualCharacter& a);
long dual_index(const AbelianPGroup& P, const DualCharacter& lam);
DualCharacter dual_at(const AbelianPGroup& P, long idx);

// A subgroup carried as a Hermite basis of its preimage lattice in Z^r,
// plus an adapted generating basis with cyclic orders. Owns a copy of the
// parent group descriptor so it never outlives its coordinate system.
struct Subgroup {
  AbelianPGroup parent{2, {}};
  ZMat lattice_hnf;                         // rows span preimage lattice
  std::vector<AbelianPGroup::Elem> basis;   // independent generators
  std::vector<int> basis_exps;              // orders p^{e_j}, descending
  long size = 1;

  bool contains(const AbelianPGroup::Elem& x) const;
  AbelianPGroup abstract_group() const;
  bool is_trivial() const { return size == 1; }
};

Subgroup subgroup_from_generators(const AbelianPGroup& P,
                                  const std::vector<AbelianPGroup::Elem>& gens);
Subgroup trivial_subgroup(const AbelianPGroup& P);
Subgroup full_subgroup(const AbelianPGroup& P);

// coordinates of x in the subgroup basis (x must lie in the subgroup)
std::vector<long> subgroup_coordinates(const Subgroup& S, const AbelianPGroup::Elem& x);

// Frattini subgroup Phi(P) = P^p with the quotient map data.
struct FrattiniData {
  AbelianPGroup phi_group;                       // abstract Phi(P)
  std::vector<AbelianPGroup::Elem> phi_embed;    // its generators inside P
  AbelianPGroup quotient;                        // (C_p)^rank
};
FrattiniData frattini(const AbelianPGroup& P);

// reduction P -> P/Phi(P) = (C_p)^rank of an element
std::vector<long> frattini_quotient_coords(const AbelianPGroup& P, const AbelianPGroup::Elem& x);

// restriction of a character of P to a subgroup, as a character of the
// abstract subgroup (values on the subgroup basis)
DualCharacter restrict_character(const AbelianPGroup& P, const DualCharacter& lam,
                                 const Subgroup& S);
bool character_trivial_on(const AbelianPGroup& P, const DualCharacter& lam, const Subgroup& S);

}  // namespace blocklab
