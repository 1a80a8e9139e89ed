// A finite group given by an explicit multiplication table, with conjugacy
// classes, power maps and p-regularity. Everything downstream (character
// tables, induction, restriction) works through this interface.
#pragma once

#include <cstdint>
#include <functional>
#include <vector>

namespace blocklab {

class FiniteGroup {
 public:
  FiniteGroup() = default;
  static FiniteGroup from_function(long n, const std::function<long(long, long)>& mul,
                                   long identity = 0);

  long size() const { return n_; }
  long identity() const { return id_; }
  long mul(long a, long b) const { return mul_[a * n_ + b]; }
  long inverse(long a) const { return inv_[a]; }
  long power(long a, long e) const;
  long element_order(long a) const { return order_[a]; }
  long exponent() const { return exponent_; }

  long class_count() const { return (long)class_reps_.size(); }
  long class_of(long a) const { return class_of_[a]; }
  long class_rep(long c) const { return class_reps_[c]; }
  long class_size(long c) const { return class_sizes_[c]; }
  long inverse_class(long c) const { return inverse_class_[c]; }
  const std::vector<long>& class_elements(long c) const { return class_elems_[c]; }
  long centralizer_order(long c) const { return n_ / class_sizes_[c]; }

  bool is_p_regular(long a, long p) const { return order_[a] % p != 0; }
  std::vector<long> p_regular_classes(long p) const;

  bool is_abelian() const;
  // the subgroup generated by `gens`, as sorted parent indices
  std::vector<long> generated_subgroup(const std::vector<long>& gens) const;
  std::vector<long> center() const;

 private:
  void finalize();

  long n_ = 0;
  long id_ = 0;
  std::vector<uint32_t> mul_;
  std::vector<long> inv_;
  std::vector<long> order_;
  long exponent_ = 1;
  std::vector<long> class_of_;
  std::vector<long> class_reps_;
  std::vector<long> class_sizes_;
  std::vector<long> inverse_class_;
  std::vector<std::vector<long>> class_elems_;
};

// A subgroup presented as its own FiniteGroup plus the embedding.
struct SubgroupView {
  FiniteGroup group;
  std::vector<long> to_parent;    // subgroup index -> parent index
  std::vector<long> from_parent;  // parent index -> subgroup index or -1
};
SubgroupView subgroup_view(const FiniteGroup& g, std::vector<long> elements_sorted);

// Quotient by a central subgroup (elements given as parent indices).
struct QuotientView {
  FiniteGroup group;
  std::vector<long> projection;  // parent index -> quotient index
  std::vector<long> section;     // quotient index -> a representative
};
QuotientView quotient_by_normal(const FiniteGroup& g, const std::vector<long>& subgroup_elems);

}  // namespace blocklab
