// The inertial group E: a class-<=2 extension of a cyclic central <z> by an
// abelian group, given by power and commutator relations
//   e_i^{o_i} = z^{d_i},  [e_i, e_j] = z^{c_ij},  z central of order z_ord.
// Elements are collected normal forms (a_1, ..., a_r; zc).
#pragma once

#include <vector>

#include "blocklab/finite_group.hpp"

namespace blocklab {

struct InertialPresentation {
  std::vector<long> gen_orders;              // o_i
  std::vector<long> power_z;                 // d_i
  std::vector<std::vector<long>> commutator; // c_ij, antisymmetric mod z_order
  long z_order = 1;
};

class InertialGroup {
 public:
  explicit InertialGroup(InertialPresentation pres);

  const InertialPresentation& presentation() const { return pres_; }
  const FiniteGroup& group() const { return g_; }
  long size() const { return g_.size(); }
  int num_generators() const { return (int)pres_.gen_orders.size(); }
  long z_order() const { return pres_.z_order; }

  // element encodings
  struct Word {
    std::vector<long> a;  // a_i mod o_i
    long zc = 0;          // mod z_order
  };
  long index_of(const Word& w) const;
  Word word_at(long idx) const;
  long generator(int i) const;        // e_i as group index
  long z_element(long k = 1) const;   // z^k
  std::vector<long> z_subgroup() const;
  std::vector<long> center() const { return center_; }
  bool one_simple_module() const { return one_simple_; }
  // the image of an element in L = E/<z> as its a-tuple
  std::vector<long> l_part(long idx) const { return word_at(idx).a; }
  long l_order() const;  // |L| = prod o_i

 private:
  Word multiply(const Word& x, const Word& y) const;
  InertialPresentation pres_;
  FiniteGroup g_;
  std::vector<long> center_;
  bool one_simple_ = false;
};

}  // namespace blocklab
