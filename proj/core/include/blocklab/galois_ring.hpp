// Galois rings GR(p^m, d): the unramified degree-d extension of Z/p^m.
// Elements are polynomial vectors mod a fixed monic lift of the
// lexicographically first irreducible of degree d over F_p.
#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "blocklab/fppoly.hpp"

namespace blocklab {

class GaloisRing;

struct GRElem {
  const GaloisRing* ring = nullptr;
  std::vector<long> c;  // length d, entries in [0, p^m)

  bool operator==(const GRElem& o) const { return c == o.c; }
  bool operator!=(const GRElem& o) const { return c != o.c; }
  bool operator<(const GRElem& o) const { return c < o.c; }
};

class GaloisRing {
 public:
  GaloisRing(long p, int m, int d);
  GaloisRing(const GaloisRing&) = delete;
  GaloisRing& operator=(const GaloisRing&) = delete;

  long p() const { return p_; }
  int m() const { return m_; }
  int d() const { return d_; }
  long modulus() const { return q_; }           // p^m
  long residue_order() const { return rq_; }    // p^d
  const FpPoly& modulus_poly() const { return poly_; }
  long size() const;                            // p^(m*d)

  GRElem zero() const;
  GRElem one() const;
  GRElem from_int(long a) const;
  GRElem add(const GRElem& a, const GRElem& b) const;
  GRElem sub(const GRElem& a, const GRElem& b) const;
  GRElem neg(const GRElem& a) const;
  GRElem mul(const GRElem& a, const GRElem& b) const;
  GRElem pow(GRElem a, long e) const;
  bool is_zero(const GRElem& a) const;
  bool is_unit(const GRElem& a) const;          // nonzero mod p
  GRElem inverse(const GRElem& a) const;        // throws on non-unit
  // max k with a in p^k GR (m for zero)
  int p_valuation(const GRElem& a) const;

  // Teichmueller unit of multiplicative order p^d - 1.
  GRElem teichmuller_base() const;
  // primitive root of unity of order r (requires r | p^d - 1)
  GRElem root_of_unity(long r) const;

  // element <-> integer index, for exhaustive scans (mixed radix by p^m)
  GRElem from_index(long idx) const;
  long to_index(const GRElem& a) const;

 private:
  long p_, q_, rq_;
  int m_, d_;
  FpPoly poly_;       // monic degree-d, coefficients in [0, p)
  GRElem teich_;      // cached Teichmueller base
};

}  // namespace blocklab
