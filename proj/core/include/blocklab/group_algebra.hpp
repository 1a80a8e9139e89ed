// Exact arithmetic in Z[P] for an abelian p-group P, augmentation ideal
// bookkeeping, and the p-divisibility split of p^n-th powers.
#pragma once

#include <gmpxx.h>

#include <map>

#include "blocklab/abelian.hpp"

namespace blocklab {

class GroupAlgebraElem {
 public:
  explicit GroupAlgebraElem(const AbelianPGroup& P) : P_(&P) {}

  const AbelianPGroup& group() const { return *P_; }
  const std::map<long, mpz_class>& coefficients() const { return coef_; }

  void set(const AbelianPGroup::Elem& g, const mpz_class& c);
  void add_term(const AbelianPGroup::Elem& g, const mpz_class& c);
  mpz_class augmentation() const;
  bool is_zero() const;

  GroupAlgebraElem operator+(const GroupAlgebraElem& o) const;
  GroupAlgebraElem operator-(const GroupAlgebraElem& o) const;
  GroupAlgebraElem operator*(const GroupAlgebraElem& o) const;
  GroupAlgebraElem pow(long e) const;
  GroupAlgebraElem scaled(const mpz_class& c) const;
  bool divisible_by(const mpz_class& c) const;
  GroupAlgebraElem divided_by(const mpz_class& c) const;

  // one(): the identity element of the algebra
  static GroupAlgebraElem one(const AbelianPGroup& P);
  // 1 - g
  static GroupAlgebraElem one_minus(const AbelianPGroup& P, const AbelianPGroup::Elem& g);

 private:
  const AbelianPGroup* P_;
  std::map<long, mpz_class> coef_;
};

// coordinates of x mod J^2 in the basis {1 - x_1, ..., 1 - x_r} over F_p;
// defined for augmentation-zero x
std::vector<long> radical_square_coords(const GroupAlgebraElem& x);

// x lies in J but outside J_{O,2}: some basis coordinate is a unit mod p
bool outside_radical_square(const GroupAlgebraElem& x);

struct RadicalPowerSplit {
  GroupAlgebraElem quotient;   // y = x^{p^n} / p
  bool p2_case = false;        // p = 2, n = 1 tracking below is meaningful
  bool x_outside_j2 = false;
  bool y_outside_j2 = false;
};

// Computes x^{p^n}, verifies every coefficient is divisible by p and that the
// quotient has augmentation zero. Divisibility failure with p^n >= exp(P) is
// a verification error; with p^n < exp(P) the hypothesis is not met and a
// SpecError is raised instead.
RadicalPowerSplit radical_power_split(const GroupAlgebraElem& x, int n);

}  // namespace blocklab
