#include "blocklab/group_algebra.hpp"

#include "blocklab/numutil.hpp"

namespace blocklab {

void GroupAlgebraElem::set(const AbelianPGroup::Elem& g, const mpz_class& c) {
  long idx = P_->index_of(P_->reduce(g));
  if (c == 0)
    coef_.erase(idx);
  else
    coef_[idx] = c;
}

void GroupAlgebraElem::add_term(const AbelianPGroup::Elem& g, const mpz_class& c) {
  long idx = P_->index_of(P_->reduce(g));
  auto it = coef_.find(idx);
  if (it == coef_.end()) {
    if (c != 0) coef_[idx] = c;
  } else {
    it->second += c;
    if (it->second == 0) coef_.erase(it);
  }
}

mpz_class GroupAlgebraElem::augmentation() const {
  mpz_class s = 0;
  for (const auto& [g, c] : coef_) s += c;
  return s;
}

bool GroupAlgebraElem::is_zero() const { return coef_.empty(); }

GroupAlgebraElem GroupAlgebraElem::operator+(const GroupAlgebraElem& o) const {
  GroupAlgebraElem r = *this;
  for (const auto& [g, c] : o.coef_) {
    auto it = r.coef_.find(g);
    if (it == r.coef_.end())
      r.coef_[g] = c;
    else {
      it->second += c;
      if (it->second == 0) r.coef_.erase(it);
    }
  }
  return r;
}

GroupAlgebraElem GroupAlgebraElem::operator-(const GroupAlgebraElem& o) const {
  return *this + o.scaled(-1);
}

GroupAlgebraElem GroupAlgebraElem::operator*(const GroupAlgebraElem& o) const {
  GroupAlgebraElem r(*P_);
  for (const auto& [g1, c1] : coef_) {
    AbelianPGroup::Elem e1 = P_->element_at(g1);
    for (const auto& [g2, c2] : o.coef_) {
      AbelianPGroup::Elem e2 = P_->element_at(g2);
      r.add_term(P_->add(e1, e2), c1 * c2);
    }
  }
  return r;
}

GroupAlgebraElem GroupAlgebraElem::pow(long e) const {
  GroupAlgebraElem r = one(*P_), b = *this;
  while (e > 0) {
    if (e & 1) r = r * b;
    b = b * b;
    e >>= 1;
  }
  return r;
}

GroupAlgebraElem GroupAlgebraElem::scaled(const mpz_class& c) const {
  GroupAlgebraElem r(*P_);
  if (c == 0) return r;
  for (const auto& [g, co] : coef_) r.coef_[g] = co * c;
  return r;
}

bool GroupAlgebraElem::divisible_by(const mpz_class& c) const {
  for (const auto& [g, co] : coef_)
    if (co % c != 0) return false;
  return true;
}

GroupAlgebraElem GroupAlgebraElem::divided_by(const mpz_class& c) const {
  GroupAlgebraElem r(*P_);
  for (const auto& [g, co] : coef_) r.coef_[g] = co / c;
  return r;
}

GroupAlgebraElem GroupAlgebraElem::one(const AbelianPGroup& P) {
  GroupAlgebraElem r(P);
  r.set(P.identity(), 1);
  return r;
}

GroupAlgebraElem GroupAlgebraElem::one_minus(const AbelianPGroup& P,
                                             const AbelianPGroup::Elem& g) {
  GroupAlgebraElem r(P);
  r.add_term(P.identity(), 1);
  r.add_term(g, -1);
  return r;
}

std::vector<long> radical_square_coords(const GroupAlgebraElem& x) {
  const AbelianPGroup& P = x.group();
  if (x.augmentation() != 0)
    throw SpecError("radical_square_coords: element has nonzero augmentation");
  long p = P.p();
  // x = sum c_g g with sum c_g = 0 equals -sum c_g (1 - g); and
  // 1 - g == sum_i g_i (1 - x_i) mod J^2.
  std::vector<long> coords(P.rank(), 0);
  for (const auto& [gidx, c] : x.coefficients()) {
    AbelianPGroup::Elem g = P.element_at(gidx);
    mpz_class cm = c % p;
    long cl = ((cm.get_si() % p) + p) % p;
    for (int i = 0; i < P.rank(); ++i)
      coords[i] = (coords[i] + (p - cl) % p * (g[i] % p)) % p;
  }
  return coords;
}

bool outside_radical_square(const GroupAlgebraElem& x) {
  for (long c : radical_square_coords(x))
    if (c % x.group().p() != 0) return true;
  return false;
}

RadicalPowerSplit radical_power_split(const GroupAlgebraElem& x, int n) {
  const AbelianPGroup& P = x.group();
  long p = P.p();
  if (n < 1) throw SpecError("radical_power_split: n must be positive");
  if (x.augmentation() != 0)
    throw SpecError("radical_power_split: element has nonzero augmentation");
  long pn = ipow(p, n);
  GroupAlgebraElem xp = x.pow(pn);
  if (!xp.divisible_by(p)) {
    if (pn >= P.exponent())
      throw VerificationError("radical power split: p^n-th power not divisible by p");
    throw SpecError("radical_power_split: requires p^n >= exponent of P for divisibility");
  }
  RadicalPowerSplit out{xp.divided_by(p)};
  if (out.quotient.augmentation() != 0)
    throw VerificationError("radical power split: quotient left the augmentation ideal");
  if (p == 2 && n == 1) {
    out.p2_case = true;
    out.x_outside_j2 = outside_radical_square(x);
    out.y_outside_j2 = outside_radical_square(out.quotient);
  }
  return out;
}

}  // namespace blocklab
