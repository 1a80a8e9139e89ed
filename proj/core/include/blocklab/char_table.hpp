// Exact complex character tables of finite groups.
//
// Class-sum matrices are split over a prime field F_l with l = 1 mod exp(G),
// the common eigenvectors give the central characters mod l, and the values
// are lifted to exact cyclotomic numbers through the root-of-unity
// correspondence. The finished table is verified against the orthogonality
// relations, exactly.
#pragma once

#include <vector>

#include "blocklab/cyclotomic.hpp"
#include "blocklab/finite_group.hpp"

namespace blocklab {

class ClassFunction {
 public:
  ClassFunction() = default;
  ClassFunction(const FiniteGroup& g, std::vector<Cyclotomic> values)
      : g_(&g), vals_(std::move(values)) {}

  const FiniteGroup& group() const { return *g_; }
  const Cyclotomic& value(long class_idx) const { return vals_[class_idx]; }
  const Cyclotomic& value_at_element(long elem) const { return vals_[g_->class_of(elem)]; }
  const std::vector<Cyclotomic>& values() const { return vals_; }

  Cyclotomic degree() const { return vals_[g_->class_of(g_->identity())]; }
  long degree_int() const;

  // (1/|G|) sum_g f(g) h(g^{-1}), exact
  Cyclotomic inner(const ClassFunction& other) const;
  ClassFunction operator+(const ClassFunction& o) const;
  ClassFunction operator-(const ClassFunction& o) const;
  ClassFunction operator*(const ClassFunction& o) const;  // pointwise
  ClassFunction scaled(const mpq_class& c) const;
  bool operator==(const ClassFunction& o) const { return vals_ == o.vals_; }

 private:
  const FiniteGroup* g_ = nullptr;
  std::vector<Cyclotomic> vals_;
};

// All irreducible characters, canonically ordered (degree, then value data).
std::vector<ClassFunction> character_table(const FiniteGroup& g);

// induction of a class function along a subgroup embedding
ClassFunction induce(const FiniteGroup& g, const SubgroupView& sub, const ClassFunction& chi);
// restriction to a subgroup
ClassFunction restrict_to(const SubgroupView& sub, const ClassFunction& chi);
// inflation along a quotient map
ClassFunction inflate(const FiniteGroup& g, const QuotientView& q, const ClassFunction& chi);

}  // namespace blocklab
