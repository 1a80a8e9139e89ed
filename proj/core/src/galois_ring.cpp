#include "blocklab/galois_ring.hpp"

#include "blocklab/numutil.hpp"

namespace blocklab {

GaloisRing::GaloisRing(long p, int m, int d) : p_(p), m_(m), d_(d) {
  if (!is_prime(p)) throw SpecError("GaloisRing: p must be prime");
  if (m < 1 || d < 1) throw SpecError("GaloisRing: m, d must be >= 1");
  q_ = ipow(p, m);
  rq_ = ipow(p, d);
  poly_ = fp::first_irreducible(p, d);

  // Teichmueller base: lift a primitive element of F_{p^d}, then iterate
  // the q-power map so the (1 + p·R) part dies.
  teich_.ring = this;
  teich_.c.assign(d_, 0);
  // search primitive element of F_{p^d} in index order
  std::vector<long> qfacs = prime_factors(rq_ - 1);
  long total = rq_;
  GRElem candidate;
  candidate.ring = this;
  bool found = false;
  for (long idx = 1; idx < total && !found; ++idx) {
    // digits base p give an F_{p^d} element; embed with entries in [0, p)
    candidate.c.assign(d_, 0);
    long c = idx;
    for (int i = 0; i < d_; ++i) {
      candidate.c[i] = c % p_;
      c /= p_;
    }
    if (!is_unit(candidate)) continue;
    // order in the residue field: reduce computations mod p by working with
    // the full ring element and checking mod p
    bool primitive = true;
    for (long qf : qfacs) {
      GRElem t = pow(candidate, (rq_ - 1) / qf);
      // t mod p == 1?
      bool is_one_mod_p = true;
      for (int i = 0; i < d_; ++i) {
        long want = (i == 0) ? 1 : 0;
        if (((t.c[i] - want) % p_ + p_) % p_ != 0) is_one_mod_p = false;
      }
      if (is_one_mod_p) {
        primitive = false;
        break;
      }
    }
    if (primitive) {
      GRElem t = candidate;
      for (int i = 0; i < m_ - 1; ++i) t = pow(t, rq_);
      teich_ = t;
      found = true;
    }
  }
  if (!found) throw SpecError("GaloisRing: no primitive element found (unreachable)");
  // verify the advertised order
  GRElem x = teich_;
  long order = 1;
  while (x != one()) {
    x = mul(x, teich_);
    ++order;
    if (order > rq_) throw VerificationError("Teichmueller base order overflow");
  }
  if (order != rq_ - 1)
    throw VerificationError("Teichmueller base has order " + std::to_string(order) +
                            ", expected " + std::to_string(rq_ - 1));
}

long GaloisRing::size() const { return ipow(q_, d_); }

GRElem GaloisRing::zero() const { return GRElem{this, std::vector<long>(d_, 0)}; }

GRElem GaloisRing::one() const {
  GRElem e{this, std::vector<long>(d_, 0)};
  e.c[0] = 1;
  return e;
}

GRElem GaloisRing::from_int(long a) const {
  GRElem e{this, std::vector<long>(d_, 0)};
  e.c[0] = ((a % q_) + q_) % q_;
  return e;
}

GRElem GaloisRing::add(const GRElem& a, const GRElem& b) const {
  GRElem r{this, std::vector<long>(d_)};
  for (int i = 0; i < d_; ++i) r.c[i] = (a.c[i] + b.c[i]) % q_;
  return r;
}

GRElem GaloisRing::sub(const GRElem& a, const GRElem& b) const {
  GRElem r{this, std::vector<long>(d_)};
  for (int i = 0; i < d_; ++i) r.c[i] = ((a.c[i] - b.c[i]) % q_ + q_) % q_;
  return r;
}

GRElem GaloisRing::neg(const GRElem& a) const { return sub(zero(), a); }

GRElem GaloisRing::mul(const GRElem& a, const GRElem& b) const {
  std::vector<long> conv(2 * d_ - 1, 0);
  for (int i = 0; i < d_; ++i) {
    if (a.c[i] == 0) continue;
    for (int j = 0; j < d_; ++j) conv[i + j] = (conv[i + j] + a.c[i] * b.c[j]) % q_;
  }
  // reduce modulo the monic modulus polynomial
  for (int k = 2 * d_ - 2; k >= d_; --k) {
    long c = conv[k] % q_;
    if (c == 0) continue;
    for (int i = 0; i < d_; ++i)
      conv[k - d_ + i] = ((conv[k - d_ + i] - c * poly_[i]) % q_ + q_) % q_;
    conv[k] = 0;
  }
  GRElem r{this, std::vector<long>(d_)};
  for (int i = 0; i < d_; ++i) r.c[i] = ((conv[i] % q_) + q_) % q_;
  return r;
}

GRElem GaloisRing::pow(GRElem a, long e) const {
  GRElem r = one();
  while (e > 0) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

bool GaloisRing::is_zero(const GRElem& a) const {
  for (long x : a.c)
    if (x % q_ != 0) return false;
  return true;
}

bool GaloisRing::is_unit(const GRElem& a) const {
  for (long x : a.c)
    if (x % p_ != 0) return true;
  return false;
}

GRElem GaloisRing::inverse(const GRElem& a) const {
  if (!is_unit(a)) throw SpecError("GaloisRing: division by non-unit");
  // invert mod p by extended Euclid in F_p[x], then Hensel-lift mod p^m
  FpPoly ap(a.c.begin(), a.c.end());
  for (auto& x : ap) x %= p_;
  ap = fp::trim(std::move(ap));
  // extended Euclid: find s with s*ap == 1 mod poly_
  FpPoly r0 = poly_, r1 = ap, s0 = {}, s1 = {1};
  while (fp::deg(r1) > 0) {
    auto [q, rem] = fp::divmod(r0, r1, p_);
    FpPoly s2 = fp::sub(s0, fp::mul(q, s1, p_), p_);
    r0 = r1;
    r1 = rem;
    s0 = s1;
    s1 = s2;
    if (r1.empty()) throw SpecError("GaloisRing: inverse failed (non-coprime)");
  }
  long unit_inv = mod_inverse(r1[0], p_);
  FpPoly s = fp::mod(fp::mul(s1, FpPoly{unit_inv}, p_), poly_, p_);
  GRElem v{this, std::vector<long>(d_, 0)};
  for (size_t i = 0; i < s.size(); ++i) v.c[i] = s[i];
  // Hensel: v <- v(2 - a v), doubling precision each round
  int rounds = 0;
  for (int prec = 1; prec < m_; prec *= 2) ++rounds;
  for (int i = 0; i < rounds; ++i) {
    GRElem av = mul(a, v);
    GRElem two_minus = sub(from_int(2), av);
    v = mul(v, two_minus);
  }
  return v;
}

int GaloisRing::p_valuation(const GRElem& a) const {
  if (is_zero(a)) return m_;
  int v = 0;
  long pk = 1;
  while (true) {
    bool divisible = true;
    for (long x : a.c)
      if (x % (pk * p_) != 0) divisible = false;
    if (!divisible) return v;
    ++v;
    pk *= p_;
  }
}

GRElem GaloisRing::teichmuller_base() const { return teich_; }

GRElem GaloisRing::root_of_unity(long r) const {
  if (r <= 0 || (rq_ - 1) % r != 0)
    throw SpecError("GaloisRing: no root of unity of order " + std::to_string(r));
  return pow(teich_, (rq_ - 1) / r);
}

GRElem GaloisRing::from_index(long idx) const {
  GRElem e{this, std::vector<long>(d_)};
  for (int i = 0; i < d_; ++i) {
    e.c[i] = idx % q_;
    idx /= q_;
  }
  return e;
}

long GaloisRing::to_index(const GRElem& a) const {
  long idx = 0;
  for (int i = d_ - 1; i >= 0; --i) idx = idx * q_ + a.c[i];
  return idx;
}

}  // namespace blocklab
