// A fixed prime P of Z[zeta_n] above p, with ideal-power membership tests.
//
// The prime is (p, g(zeta)) for g the lexicographically first irreducible
// factor of Phi_n mod p; valuations are computed by membership of integral
// elements in cached Hermite bases of P^k.
#pragma once

#include <limits>
#include <memory>
#include <mutex>
#include <vector>

#include "blocklab/cyclotomic.hpp"
#include "blocklab/fppoly.hpp"
#include "blocklab/intmat.hpp"

namespace blocklab {

inline constexpr long kValuationInfinity = std::numeric_limits<long>::max();

class PrimeIdeal {
 public:
  PrimeIdeal(long p, long n);

  long p() const { return p_; }
  long conductor() const { return n_; }
  long ramification() const { return e_; }     // v_P(p)
  long residue_degree() const { return d_; }
  long num_primes_above() const { return g_; }  // phi(n) / (e d)
  const FpPoly& generator_polynomial() const { return gen_; }
  const ZMat& ideal_basis() const { return powers_[0]; }

  // v_P(x) for x in Z[zeta_n]; kValuationInfinity for x = 0.
  long valuation(const Cyclotomic& x) const;
  bool in_ideal_power(const Cyclotomic& x, long k) const;  // x in P^k
  // x in p^k O, i.e. v_P(x) >= k * e.
  bool in_power_of_p(const Cyclotomic& x, long k) const;
  // v_P of a rational number (can be negative); infinity for 0.
  long valuation_rational(const mpq_class& q) const;
  // x in O (the localization at P): v_P >= 0 after clearing denominators.
  bool is_local_integer(const Cyclotomic& x) const;

 private:
  ZVec integral_coords(const Cyclotomic& x) const;
  const ZMat& power_basis(size_t k) const;  // basis of P^(k+1)

  long p_, n_, e_, d_, g_;
  FpPoly gen_;
  mutable std::vector<ZMat> powers_;
  mutable std::mutex mutex_;
};

}  // namespace blocklab
