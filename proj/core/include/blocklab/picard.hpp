// Structural summary assembly: the linear-source factor
// Hom(D2, O^x) x| Aut(D2) with machine-checked order, and the Picard-group
// shape report that ties together the isometry-level verifications.
#pragma once

#include <string>

#include "blocklab/char_theory.hpp"
#include "blocklab/isometry.hpp"

namespace blocklab {

// |Aut(P)| for an abelian p-group by the closed-form order formula
long abelian_aut_order(const AbelianPGroup& p_group);
// brute-force count of invertible endomorphism matrices; empty if the
// matrix space exceeds the bound
std::optional<long> abelian_aut_order_brute(const AbelianPGroup& p_group,
                                            long max_space = (1L << 26));

struct LinearSourceFactor {
  long hom_order = 1;   // |Hom(D2, O^x)| = |D2|
  long aut_order = 1;   // |Aut(D2)|
  long order = 1;       // product
  std::string description;
};
LinearSourceFactor linear_source_factor(const AbelianPGroup& d2);

struct PicardReport {
  std::string block_name;
  long p = 2;
  std::vector<int> d2_exponents;
  LinearSourceFactor linear_factor;
  bool trivial_source_specialization = false;  // D2 = 1: claim becomes Pic = T
  std::string decomposition_claim;             // symbolic T-factor times linear factor
  // cross references from the isometry level
  long perfect_self_isometries = -1;           // -1: enumeration skipped
  long positive_sigma_br_members = -1;
  long d2_twist_passes = -1;
  long d1_kernel_passes = -1;
  std::vector<long> irr_trivial_on_d1;
};

// Assembles the report; when `isometries` is present the structural checks
// are run over every member admitting a Brauer permutation.
PicardReport picard_report(const BlockData& data, const BlockData& d1_block,
                           const IsometryGroup* isometries);

}  // namespace blocklab
