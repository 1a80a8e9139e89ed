// The data defining a block O(D x| E)e_phi: the prime, the defect group D,
// the inertial group E with its action on D through L = E/<z>, and the
// faithful central character phi, plus the assembled semidirect product.
#pragma once

#include <memory>
#include <optional>
#include <string>

#include "blocklab/abelian.hpp"
#include "blocklab/action.hpp"
#include "blocklab/inertial_group.hpp"

namespace blocklab {

struct SpecLimits {
  uint64_t seed = 1;
  int max_irr = 8;           // bound for self-isometry enumeration
  long scan_budget = 200000; // tuple budget for automorphism scans
  int jobs = 1;
};

struct BlockSpec {
  std::string name;
  long p = 2;
  AbelianPGroup defect{2, {}};
  std::shared_ptr<InertialGroup> inertial;   // shared: groups are heavyweight
  std::vector<ActionMatrix> action;          // one matrix per E-generator
  long phi_exponent = 0;                     // phi(z) = zeta_{z_ord}^{phi_exponent}
  SpecLimits limits;

  // checks all structural invariants, throws SpecError naming the failure
  void validate() const;
  // the action of L on D as a matrix group
  PAction l_action() const;
  Cyclotomic phi_value(long z_power) const;  // phi(z^k)
};

// G = D x| E with explicit multiplication, conjugacy classes and p-regular
// structure. Element index = d_index * |E| + e_index. Owns a copy of the
// spec (specs are cheap: the heavyweight inertial group is shared).
struct BlockGroup {
  BlockSpec spec;
  FiniteGroup g;
  long d_size = 1, e_size = 1;

  long encode(long d_idx, long e_idx) const { return d_idx * e_size + e_idx; }
  long d_part(long g_idx) const { return g_idx / e_size; }
  long e_part(long g_idx) const { return g_idx % e_size; }

  std::vector<long> d_elements() const;        // indices of (d, 1)
  std::vector<long> e_elements() const;        // indices of (0, e)
  std::vector<long> z_elements() const;        // indices of (0, z^k)
  std::vector<long> dz_elements() const;       // D x Z
  // matrix of the action of the e-part of an element
  const ActionMatrix& action_of(long e_idx) const;

  std::vector<ActionMatrix> e_action_matrices;  // per E element index
};

BlockGroup build_block_group(const BlockSpec& spec);

}  // namespace blocklab
