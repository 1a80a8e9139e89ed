#include "blocklab/finite_group.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "blocklab/numutil.hpp"

namespace blocklab {

FiniteGroup FiniteGroup::from_function(long n, const std::function<long(long, long)>& mul,
                                       long identity) {
  if (n < 1) throw SpecError("FiniteGroup: empty group");
  if (n > 4096) throw SpecError("FiniteGroup: order " + std::to_string(n) + " too large for tables");
  FiniteGroup g;
  g.n_ = n;
  g.id_ = identity;
  g.mul_.assign(n * n, 0);
  for (long a = 0; a < n; ++a)
    for (long b = 0; b < n; ++b) {
      long c = mul(a, b);
      if (c < 0 || c >= n) throw SpecError("FiniteGroup: multiplication out of range");
      g.mul_[a * n + b] = (uint32_t)c;
    }
  g.finalize();
  return g;
}

void FiniteGroup::finalize() {
  // identity sanity
  for (long a = 0; a < n_; ++a)
    if (mul(id_, a) != a || mul(a, id_) != a)
      throw SpecError("FiniteGroup: identity element is wrong");
  // inverses
  inv_.assign(n_, -1);
  for (long a = 0; a < n_; ++a) {
    for (long b = 0; b < n_; ++b)
      if (mul(a, b) == id_ && mul(b, a) == id_) {
        inv_[a] = b;
        break;
      }
    if (inv_[a] < 0) throw SpecError("FiniteGroup: element without inverse");
  }
  // orders and exponent
  order_.assign(n_, 0);
  exponent_ = 1;
  for (long a = 0; a < n_; ++a) {
    long x = a, o = 1;
    while (x != id_) {
      x = mul(x, a);
      ++o;
      if (o > n_) throw SpecError("FiniteGroup: order computation overflow");
    }
    order_[a] = o;
    exponent_ = lcm_long(exponent_, o);
  }
  // conjugacy classes
  class_of_.assign(n_, -1);
  for (long a = 0; a < n_; ++a) {
    if (class_of_[a] != -1) continue;
    long c = (long)class_reps_.size();
    class_reps_.push_back(a);
    std::vector<long> members;
    std::vector<long> queue{a};
    class_of_[a] = c;
    members.push_back(a);
    for (size_t head = 0; head < queue.size(); ++head) {
      long x = queue[head];
      for (long g = 0; g < n_; ++g) {
        long y = mul(mul(g, x), inv_[g]);
        if (class_of_[y] == -1) {
          class_of_[y] = c;
          members.push_back(y);
          queue.push_back(y);
        }
      }
    }
    std::sort(members.begin(), members.end());
    class_sizes_.push_back((long)members.size());
    class_elems_.push_back(std::move(members));
  }
  inverse_class_.resize(class_reps_.size());
  for (size_t c = 0; c < class_reps_.size(); ++c)
    inverse_class_[c] = class_of_[inv_[class_reps_[c]]];
}

long FiniteGroup::power(long a, long e) const {
  long m = element_order(a);
  e %= m;
  if (e < 0) e += m;
  long r = id_;
  long b = a;
  while (e > 0) {
    if (e & 1) r = mul(r, b);
    b = mul(b, b);
    e >>= 1;
  }
  return r;
}

std::vector<long> FiniteGroup::p_regular_classes(long p) const {
  std::vector<long> out;
  for (long c = 0; c < class_count(); ++c)
    if (order_[class_reps_[c]] % p != 0) out.push_back(c);
  return out;
}

bool FiniteGroup::is_abelian() const {
  return (long)class_reps_.size() == n_;
}

std::vector<long> FiniteGroup::generated_subgroup(const std::vector<long>& gens) const {
  std::set<long> elems{id_};
  std::vector<long> queue{id_};
  for (long g : gens)
    if (elems.insert(g).second) queue.push_back(g);
  for (size_t head = 0; head < queue.size(); ++head)
    for (long g : gens) {
      long x = mul(queue[head], g);
      if (elems.insert(x).second) queue.push_back(x);
      long y = mul(g, queue[head]);
      if (elems.insert(y).second) queue.push_back(y);
    }
  return std::vector<long>(elems.begin(), elems.end());
}

std::vector<long> FiniteGroup::center() const {
  std::vector<long> out;
  for (long a = 0; a < n_; ++a) {
    bool central = true;
    for (long b = 0; b < n_ && central; ++b)
      if (mul(a, b) != mul(b, a)) central = false;
    if (central) out.push_back(a);
  }
  return out;
}

SubgroupView subgroup_view(const FiniteGroup& g, std::vector<long> elements_sorted) {
  std::sort(elements_sorted.begin(), elements_sorted.end());
  SubgroupView v;
  v.to_parent = elements_sorted;
  v.from_parent.assign(g.size(), -1);
  for (size_t i = 0; i < elements_sorted.size(); ++i) v.from_parent[elements_sorted[i]] = (long)i;
  long id_idx = v.from_parent[g.identity()];
  if (id_idx < 0) throw SpecError("subgroup_view: identity not in subgroup");
  v.group = FiniteGroup::from_function(
      (long)elements_sorted.size(),
      [&](long a, long b) {
        long prod = g.mul(v.to_parent[a], v.to_parent[b]);
        long idx = v.from_parent[prod];
        if (idx < 0) throw SpecError("subgroup_view: set not closed under multiplication");
        return idx;
      },
      id_idx);
  return v;
}

QuotientView quotient_by_normal(const FiniteGroup& g, const std::vector<long>& subgroup_elems) {
  std::set<long> nset(subgroup_elems.begin(), subgroup_elems.end());
  if (!nset.count(g.identity())) throw SpecError("quotient: subgroup misses identity");
  for (long x : subgroup_elems)
    for (long a = 0; a < g.size(); ++a)
      if (!nset.count(g.mul(g.mul(a, x), g.inverse(a))))
        throw SpecError("quotient: subgroup is not normal");
  QuotientView q;
  q.projection.assign(g.size(), -1);
  for (long a = 0; a < g.size(); ++a) {
    if (q.projection[a] != -1) continue;
    long c = (long)q.section.size();
    q.section.push_back(a);
    for (long x : subgroup_elems) q.projection[g.mul(a, x)] = c;
  }
  long qn = (long)q.section.size();
  q.group = FiniteGroup::from_function(
      qn, [&](long a, long b) { return q.projection[g.mul(q.section[a], q.section[b])]; },
      q.projection[g.identity()]);
  return q;
}

}  // namespace blocklab
