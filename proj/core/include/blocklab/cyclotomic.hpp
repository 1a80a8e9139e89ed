// Exact arithmetic in cyclotomic fields Q(zeta_n).
//
// Values are stored on the power basis 1, zeta, ..., zeta^(phi(n)-1) with
// rational coordinates, reduced modulo the n-th cyclotomic polynomial.
// Mixed-conductor arithmetic lifts both operands into Q(zeta_lcm).
#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

namespace blocklab {

struct CyclotomicField {
  long n;
  int degree;                            // phi(n)
  std::vector<mpz_class> poly;           // Phi_n, monic, index = power
  std::vector<std::vector<mpq_class>> zeta_pow;  // zeta^k reduced, 0 <= k < n
};

// Cached field data, created on first use (thread safe).
const CyclotomicField& cyclotomic_field(long n);

// Phi_n over Z.
std::vector<mpz_class> cyclotomic_polynomial(long n);

class Cyclotomic {
 public:
  Cyclotomic() : n_(1), c_(1, mpq_class(0)) {}
  static Cyclotomic zero(long n = 1);
  static Cyclotomic one(long n = 1);
  static Cyclotomic from_rational(const mpq_class& q, long n = 1);
  static Cyclotomic root_of_unity(long n, long a);  // zeta_n^a
  // coordinates on the power basis of Q(zeta_n); must have length phi(n)
  static Cyclotomic from_coords(long n, std::vector<mpq_class> coords);

  long conductor() const { return n_; }
  const std::vector<mpq_class>& coords() const { return c_; }

  Cyclotomic to_conductor(long m) const;  // requires n_ | m

  Cyclotomic operator+(const Cyclotomic& o) const;
  Cyclotomic operator-(const Cyclotomic& o) const;
  Cyclotomic operator-() const;
  Cyclotomic operator*(const Cyclotomic& o) const;
  Cyclotomic& operator+=(const Cyclotomic& o) { return *this = *this + o; }
  Cyclotomic& operator*=(const Cyclotomic& o) { return *this = *this * o; }
  Cyclotomic& operator-=(const Cyclotomic& o) { return *this = *this - o; }
  bool operator==(const Cyclotomic& o) const;
  bool operator!=(const Cyclotomic& o) const { return !(*this == o); }

  Cyclotomic scaled(const mpq_class& q) const;
  Cyclotomic inverse() const;  // throws SpecError on zero
  Cyclotomic pow(long e) const;
  Cyclotomic galois(long a) const;     // zeta -> zeta^a, gcd(a, n) = 1
  Cyclotomic conjugate() const { return galois(-1); }

  bool is_zero() const;
  bool is_rational() const;
  bool is_integral() const;  // lies in Z[zeta_n]
  mpq_class rational_value() const;

  // multiplicative order if this is a root of unity, nullopt otherwise
  std::optional<long> root_order(long bound) const;

  std::string to_string() const;

 private:
  Cyclotomic(long n, std::vector<mpq_class> c) : n_(n), c_(std::move(c)) {}
  long n_;
  std::vector<mpq_class> c_;
};

// prod over 0 <= i < p^n, p not dividing i, of (1 - zeta_{p^n}^i).
// An exact rational integer; equality with p is the caller's check.
Cyclotomic one_minus_root_product(long p, int n);

}  // namespace blocklab
