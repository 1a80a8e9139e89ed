// Ordinary and Brauer character theory of B = O(D x| E)e_phi: the orbit
// parameterization of Irr(B), restriction-based decomposition data, and the
// kernel predicates used by the isometry checks.
#pragma once

#include <optional>

#include "blocklab/block_spec.hpp"
#include "blocklab/char_table.hpp"
#include "blocklab/prime_ideal.hpp"

namespace blocklab {

// Irr(E, phi) on the group of an InertialGroup: the characters lying over
// the faithful central character phi. Count is checked against [Z(E):Z].
std::vector<ClassFunction> irr_e_phi(const InertialGroup& e, long phi_exponent);

struct BlockCharacter {
  DualCharacter lambda;              // orbit representative on D
  std::vector<long> stabilizer;      // E_lambda as sorted E-indices
  std::shared_ptr<SubgroupView> stab_view;  // E_lambda inside E
  long chi_index = 0;                // position in Irr(E_lambda, phi)
  ClassFunction chi;                 // on stab_view->group
  ClassFunction induced;             // on G
  long degree = 0;
  DualCharacter lambda_d1, lambda_d2;  // components along D = D1 x D2
  long orbit_index = 0;
};

// The class functions below point into `group` and `e_view`; both live on
// the heap and are shared, so BlockData can be copied and moved freely.
struct BlockData {
  BlockSpec spec;
  std::shared_ptr<BlockGroup> group;
  std::shared_ptr<SubgroupView> e_view;  // E <= G
  Subgroup d1, d2;                   // [D,E] and C_D(E) inside D
  AbelianPGroup d1_abs{2, {}}, d2_abs{2, {}};
  // per D-element index: (index of the C_D(E) part, index of the [D,E] part)
  std::vector<std::pair<long, long>> d_split;
  std::vector<ClassFunction> irr_e;  // Irr(E, phi) on E's own group
  std::vector<BlockCharacter> irr;   // Irr(B), canonically ordered
  std::vector<ClassFunction> ibr;    // inflations to G of Irr(E, phi)
  std::vector<std::vector<long>> decomposition;  // |Irr(B)| x |IBr(B)|
  std::vector<std::vector<long>> cartan;
  std::vector<ClassFunction> projectives;        // on G

  long p() const { return spec.p; }
  long exp_g() const { return group->g.exponent(); }
  // index of the inflation of irr_e[j] inside irr
  long inflated_index(long j) const;
};

BlockData compute_block(const BlockSpec& spec);

// The unique permutation of Irr(E, phi) compatible with sigma on
// restrictions; empty if sigma is not Brauer-compatible.
std::optional<std::vector<long>> sigma_br(const BlockData& data,
                                          const std::vector<long>& sigma);

// Characters whose reduction mod p is a multiple of a single irreducible
// Brauer character. Computed two ways (kernel condition on [D, Z(E)] and
// single-column decomposition rows); disagreement throws.
std::vector<long> single_brauer_subset(const BlockData& data);

struct KernelFlags {
  bool trivial_on_d1 = false;
  bool trivial_on_frattini_d1 = false;
};
KernelFlags kernel_flags(const BlockData& data, const DualCharacter& lambda);

// indices of Irr(B) whose lambda-part is trivial on D1
std::vector<long> irr_trivial_on_d1(const BlockData& data);

// The block of D1 x| E with the same E and phi (the "moved part" block).
BlockSpec sub_block_spec_d1(const BlockData& data);

}  // namespace blocklab
