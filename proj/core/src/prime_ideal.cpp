#include "blocklab/prime_ideal.hpp"

#include "blocklab/numutil.hpp"

namespace blocklab {

namespace {

// lexicographically first monic degree-d divisor of f over F_p
// (tuple (c_{d-1}, ..., c_0) ascending; any such divisor is irreducible when
// every irreducible factor of f has degree d)
FpPoly first_factor_of_degree(const FpPoly& f, long p, int d) {
  long total = ipow(p, d);
  for (long counter = 0; counter < total; ++counter) {
    FpPoly g(d + 1, 0);
    g[d] = 1;
    long c = counter;
    for (int i = 0; i < d; ++i) {
      g[i] = c % p;
      c /= p;
    }
    if (fp::mod(f, g, p).empty()) return g;
  }
  throw SpecError("no factor of expected degree (inconsistent cyclotomic data)");
}

}  // namespace

PrimeIdeal::PrimeIdeal(long p, long n) : p_(p), n_(n) {
  if (!is_prime(p)) throw SpecError("PrimeIdeal: p must be prime");
  long m = n;
  long pa = 1;
  while (m % p == 0) {
    m /= p;
    pa *= p;
  }
  e_ = (pa == 1) ? 1 : euler_phi(pa);
  d_ = (m == 1) ? 1 : multiplicative_order(p, m);

  // Phi_m mod p; its irreducible factors all have degree d_
  std::vector<mpz_class> phim = cyclotomic_polynomial(m);
  FpPoly phim_p(phim.size());
  for (size_t i = 0; i < phim.size(); ++i) {
    mpz_class r = phim[i] % p;
    if (r < 0) r += p;
    phim_p[i] = r.get_si();
  }
  phim_p = fp::trim(std::move(phim_p));
  if (fp::deg(phim_p) == d_) {
    gen_ = fp::monic(phim_p, p);
  } else {
    gen_ = first_factor_of_degree(phim_p, p, (int)d_);
  }

  // basis of P = (p, g(zeta)) in Z[zeta_n]
  const auto& F = cyclotomic_field(n);
  Cyclotomic gz = Cyclotomic::zero(n);
  for (int i = 0; i <= fp::deg(gen_); ++i)
    if (gen_[i] != 0)
      gz += Cyclotomic::root_of_unity(n, i).scaled(mpq_class(gen_[i]));
  ZMat rows;
  for (int i = 0; i < F.degree; ++i) {
    Cyclotomic zi = Cyclotomic::root_of_unity(n, i);
    Cyclotomic a = zi.scaled(mpq_class(p));
    Cyclotomic b = zi * gz;
    ZVec ra(F.degree), rb(F.degree);
    for (int j = 0; j < F.degree; ++j) {
      ra[j] = a.coords()[j].get_num();
      rb[j] = b.coords()[j].get_num();
    }
    rows.push_back(std::move(ra));
    rows.push_back(std::move(rb));
  }
  powers_.push_back(hermite_normal_form(std::move(rows)));

  // P cap Z = pZ: p in P, 1 not in P
  ZVec one(F.degree, 0), pv(F.degree, 0);
  one[0] = 1;
  pv[0] = p;
  if (!hnf_contains(powers_[0], pv) || hnf_contains(powers_[0], one))
    throw VerificationError("prime ideal construction: P cap Z != pZ");
  g_ = F.degree / (e_ * d_);
  if (g_ * e_ * d_ != F.degree)
    throw VerificationError("prime ideal construction: e*d does not divide phi(n)");
  // stored ramification agrees with v_P(p) from ideal powers; for very
  // ramified conductors the e+1 ideal powers are out of reach and the
  // e*d*g = phi(n) identity above carries the consistency check
  if (F.degree * e_ <= 400) {
    long vp = valuation(Cyclotomic::from_rational(mpq_class(p), n));
    if (vp != e_)
      throw VerificationError("prime ideal construction: v_P(p) = " + std::to_string(vp) +
                              " but expected ramification " + std::to_string(e_));
  }
}

ZVec PrimeIdeal::integral_coords(const Cyclotomic& x) const {
  Cyclotomic y = x.to_conductor(n_);
  if (!y.is_integral()) throw SpecError("valuation: element is not a cyclotomic integer");
  ZVec v(y.coords().size());
  for (size_t i = 0; i < v.size(); ++i) v[i] = y.coords()[i].get_num();
  return v;
}

const ZMat& PrimeIdeal::power_basis(size_t k) const {
  std::lock_guard<std::mutex> lock(mutex_);
  while (powers_.size() <= k) {
    const ZMat& prev = powers_.back();
    const auto& F = cyclotomic_field(n_);
    Cyclotomic gz = Cyclotomic::zero(n_);
    for (int i = 0; i <= fp::deg(gen_); ++i)
      if (gen_[i] != 0)
        gz += Cyclotomic::root_of_unity(n_, i).scaled(mpq_class(gen_[i]));
    ZMat rows;
    for (const ZVec& b : prev) {
      std::vector<mpq_class> bc(F.degree);
      for (int j = 0; j < F.degree; ++j) bc[j] = mpq_class(b[j]);
      Cyclotomic bz = Cyclotomic::from_coords(n_, std::move(bc));
      ZVec rp(F.degree), rg(F.degree);
      Cyclotomic bg = bz * gz;
      for (int j = 0; j < F.degree; ++j) {
        rp[j] = b[j] * p_;
        rg[j] = bg.coords()[j].get_num();
      }
      rows.push_back(std::move(rp));
      rows.push_back(std::move(rg));
    }
    powers_.push_back(hermite_normal_form(std::move(rows)));
  }
  return powers_[k];
}

bool PrimeIdeal::in_ideal_power(const Cyclotomic& x, long k) const {
  if (k <= 0) return true;
  ZVec v = integral_coords(x);
  return hnf_contains(power_basis((size_t)k - 1), std::move(v));
}

long PrimeIdeal::valuation(const Cyclotomic& x) const {
  ZVec v = integral_coords(x);
  bool zero = true;
  for (const auto& c : v)
    if (c != 0) zero = false;
  if (zero) return kValuationInfinity;
  long k = 0;
  while (hnf_contains(power_basis((size_t)k), v)) {
    ++k;
    if (k > 100000) throw VerificationError("valuation did not terminate");
  }
  return k;
}

bool PrimeIdeal::in_power_of_p(const Cyclotomic& x, long k) const {
  if (k <= 0) return true;
  if (g_ == 1) {
    // unique prime above p: (p) = P^e as ideals, so p^k O cap Z[zeta] is
    // plain coordinate divisibility by p^k
    ZVec v = integral_coords(x);
    mpz_class pk = 1;
    for (long i = 0; i < k; ++i) pk *= p_;
    for (const auto& c : v)
      if (c % pk != 0) return false;
    return true;
  }
  long v = valuation(x);
  return v == kValuationInfinity || v >= k * e_;
}

long PrimeIdeal::valuation_rational(const mpq_class& q) const {
  if (q == 0) return kValuationInfinity;
  mpz_class num = q.get_num(), den = q.get_den(), tmp;
  long vn = (long)mpz_remove(tmp.get_mpz_t(), num.get_mpz_t(), mpz_class(p_).get_mpz_t());
  long vd = (long)mpz_remove(tmp.get_mpz_t(), den.get_mpz_t(), mpz_class(p_).get_mpz_t());
  return e_ * (vn - vd);
}

bool PrimeIdeal::is_local_integer(const Cyclotomic& x) const {
  Cyclotomic y = x.to_conductor(n_);
  if (y.is_zero()) return true;
  mpz_class den = 1;
  for (const auto& c : y.coords()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den().get_mpz_t());
  mpz_class tmp;
  long vden = (long)mpz_remove(tmp.get_mpz_t(), den.get_mpz_t(), mpz_class(p_).get_mpz_t());
  if (vden == 0) return true;  // denominator prime to p
  Cyclotomic scaled = y.scaled(mpq_class(den));
  return valuation(scaled) >= e_ * vden;
}

}  // namespace blocklab
