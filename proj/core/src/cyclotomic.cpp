#include "blocklab/cyclotomic.hpp"

#include <map>
#include <mutex>

#include "blocklab/numutil.hpp"

namespace blocklab {

namespace {

using QVec = std::vector<mpq_class>;
using ZPoly = std::vector<mpz_class>;

ZPoly zpoly_trim(ZPoly f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
  return f;
}

// exact division of integer polynomials (remainder known to be zero)
ZPoly zpoly_div_exact(const ZPoly& a, const ZPoly& b) {
  ZPoly r = zpoly_trim(a), q;
  if (r.size() < b.size()) throw SpecError("zpoly_div_exact: degree underflow");
  q.assign(r.size() - b.size() + 1, 0);
  while (r.size() >= b.size()) {
    mpz_class c = r.back() / b.back();
    size_t shift = r.size() - b.size();
    q[shift] = c;
    for (size_t i = 0; i < b.size(); ++i) r[shift + i] -= c * b[i];
    r = zpoly_trim(std::move(r));
    if (r.empty()) break;
  }
  if (!r.empty()) throw SpecError("zpoly_div_exact: nonzero remainder");
  return zpoly_trim(std::move(q));
}

std::map<long, ZPoly>& phi_cache() {
  static std::map<long, ZPoly> cache;
  return cache;
}
std::mutex phi_mutex;

ZPoly phi_n_locked(long n) {
  auto it = phi_cache().find(n);
  if (it != phi_cache().end()) return it->second;
  ZPoly f(n + 1, 0);
  f[0] = -1;
  f[n] = 1;  // x^n - 1
  for (long d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    f = zpoly_div_exact(f, phi_n_locked(d));
  }
  phi_cache()[n] = f;
  return f;
}

std::map<long, CyclotomicField>& field_cache() {
  static std::map<long, CyclotomicField> cache;
  return cache;
}
std::mutex field_mutex;

// reduce a rational polynomial mod Phi_n (monic, integer)
QVec reduce_mod_phi(QVec v, const ZPoly& phi) {
  size_t d = phi.size() - 1;
  while (v.size() > d) {
    mpq_class c = v.back();
    size_t shift = v.size() - 1 - d;
    if (c != 0)
      for (size_t i = 0; i < d; ++i) v[shift + i] -= c * mpq_class(phi[i]);
    v.pop_back();
  }
  v.resize(d, mpq_class(0));
  return v;
}

}  // namespace

std::vector<mpz_class> cyclotomic_polynomial(long n) {
  std::lock_guard<std::mutex> lock(phi_mutex);
  return phi_n_locked(n);
}

const CyclotomicField& cyclotomic_field(long n) {
  if (n < 1) throw SpecError("conductor must be positive");
  std::lock_guard<std::mutex> lock(field_mutex);
  auto it = field_cache().find(n);
  if (it != field_cache().end()) return it->second;
  CyclotomicField F;
  F.n = n;
  {
    std::lock_guard<std::mutex> plock(phi_mutex);
    F.poly = phi_n_locked(n);
  }
  F.degree = (int)F.poly.size() - 1;
  F.zeta_pow.resize(n);
  QVec cur(F.degree, mpq_class(0));
  if (F.degree == 0) throw SpecError("degenerate cyclotomic field");
  cur[0] = 1;
  for (long k = 0; k < n; ++k) {
    F.zeta_pow[k] = cur;
    // multiply by zeta: shift up, reduce
    QVec next(cur.size() + 1, mpq_class(0));
    for (size_t i = 0; i < cur.size(); ++i) next[i + 1] = cur[i];
    cur = reduce_mod_phi(std::move(next), F.poly);
  }
  return field_cache().emplace(n, std::move(F)).first->second;
}

Cyclotomic Cyclotomic::zero(long n) {
  const auto& F = cyclotomic_field(n);
  return Cyclotomic(n, QVec(F.degree, mpq_class(0)));
}

Cyclotomic Cyclotomic::one(long n) { return from_rational(mpq_class(1), n); }

Cyclotomic Cyclotomic::from_rational(const mpq_class& q, long n) {
  const auto& F = cyclotomic_field(n);
  QVec c(F.degree, mpq_class(0));
  c[0] = q;
  return Cyclotomic(n, std::move(c));
}

Cyclotomic Cyclotomic::from_coords(long n, std::vector<mpq_class> coords) {
  const auto& F = cyclotomic_field(n);
  if ((long)coords.size() != F.degree)
    throw SpecError("from_coords: expected " + std::to_string(F.degree) + " coordinates");
  return Cyclotomic(n, std::move(coords));
}

Cyclotomic Cyclotomic::root_of_unity(long n, long a) {
  if (n < 1) throw SpecError("root_of_unity: conductor must be >= 1");
  const auto& F = cyclotomic_field(n);
  long k = ((a % n) + n) % n;
  return Cyclotomic(n, F.zeta_pow[k]);
}

Cyclotomic Cyclotomic::to_conductor(long m) const {
  if (m == n_) return *this;
  if (m % n_ != 0) throw SpecError("to_conductor: target must be a multiple of the conductor");
  const auto& F = cyclotomic_field(m);
  long step = m / n_;
  QVec out(F.degree, mpq_class(0));
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    const QVec& zp = F.zeta_pow[(long)i * step % m];
    for (int j = 0; j < F.degree; ++j) out[j] += c_[i] * zp[j];
  }
  return Cyclotomic(m, std::move(out));
}

Cyclotomic Cyclotomic::operator+(const Cyclotomic& o) const {
  long m = lcm_long(n_, o.n_);
  Cyclotomic a = to_conductor(m), b = o.to_conductor(m);
  for (size_t i = 0; i < a.c_.size(); ++i) a.c_[i] += b.c_[i];
  return a;
}

Cyclotomic Cyclotomic::operator-(const Cyclotomic& o) const { return *this + (-o); }

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

Cyclotomic Cyclotomic::operator*(const Cyclotomic& o) const {
  long m = lcm_long(n_, o.n_);
  Cyclotomic a = to_conductor(m), b = o.to_conductor(m);
  const auto& F = cyclotomic_field(m);
  QVec conv(2 * F.degree, mpq_class(0));
  for (size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (size_t j = 0; j < b.c_.size(); ++j) {
      if (b.c_[j] == 0) continue;
      conv[i + j] += a.c_[i] * b.c_[j];
    }
  }
  return Cyclotomic(m, reduce_mod_phi(std::move(conv), F.poly));
}

bool Cyclotomic::operator==(const Cyclotomic& o) const {
  long m = lcm_long(n_, o.n_);
  Cyclotomic a = to_conductor(m), b = o.to_conductor(m);
  return a.c_ == b.c_;
}

Cyclotomic Cyclotomic::scaled(const mpq_class& q) const {
  Cyclotomic r = *this;
  for (auto& x : r.c_) x *= q;
  return r;
}

Cyclotomic Cyclotomic::inverse() const {
  if (is_zero()) throw SpecError("inverse of zero cyclotomic");
  // extended Euclid in Q[x] against Phi_n
  const auto& F = cyclotomic_field(n_);
  QVec r0(F.poly.size());
  for (size_t i = 0; i < F.poly.size(); ++i) r0[i] = mpq_class(F.poly[i]);
  QVec r1 = c_;
  while (!r1.empty() && r1.back() == 0) r1.pop_back();
  QVec s0(1, mpq_class(0)), s1(1, mpq_class(1));  // track coeff of input
  auto qtrim = [](QVec v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
    return v;
  };
  r0 = qtrim(r0);
  while (true) {
    if (r1.empty()) throw SpecError("inverse: not coprime with Phi_n (unreachable)");
    if (r1.size() == 1) break;
    // divide r0 by r1
    QVec q(r0.size() - r1.size() + 1, mpq_class(0));
    QVec rem = r0;
    while (rem.size() >= r1.size()) {
      mpq_class c = rem.back() / r1.back();
      size_t shift = rem.size() - r1.size();
      q[shift] = c;
      for (size_t i = 0; i < r1.size(); ++i) rem[shift + i] -= c * r1[i];
      rem = qtrim(std::move(rem));
      if (rem.empty()) break;
    }
    // s_next = s0 - q*s1
    QVec qs(q.size() + s1.size(), mpq_class(0));
    for (size_t i = 0; i < q.size(); ++i) {
      if (q[i] == 0) continue;
      for (size_t j = 0; j < s1.size(); ++j) qs[i + j] += q[i] * s1[j];
    }
    QVec s2(std::max(s0.size(), qs.size()), mpq_class(0));
    for (size_t i = 0; i < s2.size(); ++i)
      s2[i] = (i < s0.size() ? s0[i] : mpq_class(0)) - (i < qs.size() ? qs[i] : mpq_class(0));
    r0 = std::move(r1);
    r1 = std::move(rem);
    s0 = std::move(s1);
    s1 = qtrim(std::move(s2));
  }
  mpq_class unit = r1[0];
  QVec inv(F.degree, mpq_class(0));
  for (size_t i = 0; i < s1.size() && i < inv.size(); ++i) inv[i] = s1[i] / unit;
  // s1 may exceed degree: reduce
  if (s1.size() > (size_t)F.degree) {
    QVec full(s1.size());
    for (size_t i = 0; i < s1.size(); ++i) full[i] = s1[i] / unit;
    inv = reduce_mod_phi(std::move(full), F.poly);
  }
  return Cyclotomic(n_, std::move(inv));
}

Cyclotomic Cyclotomic::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  Cyclotomic r = Cyclotomic::one(n_), b = *this;
  while (e > 0) {
    if (e & 1) r = r * b;
    b = b * b;
    e >>= 1;
  }
  return r;
}

Cyclotomic Cyclotomic::galois(long a) const {
  long aa = ((a % n_) + n_) % n_;
  if (gcd_long(aa, n_) != 1) throw SpecError("galois: exponent not coprime to conductor");
  const auto& F = cyclotomic_field(n_);
  QVec out(F.degree, mpq_class(0));
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    const QVec& zp = F.zeta_pow[(long)i * aa % n_];
    for (int j = 0; j < F.degree; ++j) out[j] += c_[i] * zp[j];
  }
  return Cyclotomic(n_, std::move(out));
}

bool Cyclotomic::is_zero() const {
  for (const auto& x : c_)
    if (x != 0) return false;
  return true;
}

bool Cyclotomic::is_rational() const {
  for (size_t i = 1; i < c_.size(); ++i)
    if (c_[i] != 0) return false;
  return true;
}

bool Cyclotomic::is_integral() const {
  for (const auto& x : c_)
    if (x.get_den() != 1) return false;
  return true;
}

mpq_class Cyclotomic::rational_value() const {
  if (!is_rational()) throw SpecError("rational_value of non-rational cyclotomic");
  return c_[0];
}

std::optional<long> Cyclotomic::root_order(long bound) const {
  Cyclotomic x = *this;
  Cyclotomic id = Cyclotomic::one(n_);
  for (long k = 1; k <= bound; ++k) {
    if (x == id) return k;
    x = x * *this;
  }
  return std::nullopt;
}

std::string Cyclotomic::to_string() const {
  std::string s = "[n=" + std::to_string(n_) + ";";
  for (size_t i = 0; i < c_.size(); ++i) {
    if (i) s += ",";
    s += c_[i].get_str();
  }
  return s + "]";
}

Cyclotomic one_minus_root_product(long p, int n) {
  long pn = ipow(p, n);
  Cyclotomic prod = Cyclotomic::one(pn);
  for (long i = 1; i < pn; ++i) {
    if (i % p == 0) continue;
    prod = prod * (Cyclotomic::one(pn) - Cyclotomic::root_of_unity(pn, i));
  }
  return prod;
}

}  // namespace blocklab
