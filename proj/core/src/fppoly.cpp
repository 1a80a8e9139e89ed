#include "blocklab/fppoly.hpp"

#include <algorithm>

#include "blocklab/numutil.hpp"

namespace blocklab {
namespace fp {

namespace {
long norm(long a, long p) { return ((a % p) + p) % p; }

struct SplitRng {  // deterministic xorshift for equal-degree splitting
  uint64_t s;
  explicit SplitRng(uint64_t seed) : s(seed ? seed : 0x9e3779b97f4a7c15ULL) {}
  uint64_t next() {
    s ^= s << 13;
    s ^= s >> 7;
    s ^= s << 17;
    return s;
  }
};
}  // namespace

FpPoly trim(FpPoly f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
  return f;
}

int deg(const FpPoly& f) { return (int)f.size() - 1; }

FpPoly add(const FpPoly& a, const FpPoly& b, long p) {
  FpPoly r(std::max(a.size(), b.size()), 0);
  for (size_t i = 0; i < r.size(); ++i) {
    long v = (i < a.size() ? a[i] : 0) + (i < b.size() ? b[i] : 0);
    r[i] = norm(v, p);
  }
  return trim(r);
}

FpPoly sub(const FpPoly& a, const FpPoly& b, long p) {
  FpPoly r(std::max(a.size(), b.size()), 0);
  for (size_t i = 0; i < r.size(); ++i) {
    long v = (i < a.size() ? a[i] : 0) - (i < b.size() ? b[i] : 0);
    r[i] = norm(v, p);
  }
  return trim(r);
}

FpPoly mul(const FpPoly& a, const FpPoly& b, long p) {
  if (a.empty() || b.empty()) return {};
  FpPoly r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) r[i + j] = norm(r[i + j] + a[i] * b[j], p);
  }
  return trim(r);
}

std::pair<FpPoly, FpPoly> divmod(const FpPoly& a, const FpPoly& g, long p) {
  if (g.empty()) throw SpecError("fp::divmod by zero polynomial");
  FpPoly r = a, q;
  long lead_inv = mod_inverse(g.back(), p);
  if ((int)a.size() >= (int)g.size()) q.assign(a.size() - g.size() + 1, 0);
  for (auto& c : r) c = norm(c, p);
  r = trim(std::move(r));
  while ((int)r.size() >= (int)g.size()) {
    long c = norm(r.back() * lead_inv, p);
    size_t shift = r.size() - g.size();
    q[shift] = c;
    for (size_t i = 0; i < g.size(); ++i) r[shift + i] = norm(r[shift + i] - c * g[i], p);
    r = trim(std::move(r));
  }
  return {trim(std::move(q)), r};
}

FpPoly mod(const FpPoly& a, const FpPoly& g, long p) { return divmod(a, g, p).second; }

FpPoly monic(FpPoly f, long p) {
  f = trim(std::move(f));
  if (f.empty()) return f;
  long inv = mod_inverse(f.back(), p);
  for (auto& c : f) c = norm(c * inv, p);
  return f;
}

FpPoly gcd(FpPoly a, FpPoly b, long p) {
  a = trim(std::move(a));
  b = trim(std::move(b));
  while (!b.empty()) {
    FpPoly r = mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return monic(std::move(a), p);
}

FpPoly powmod(const FpPoly& base, long e, const FpPoly& f, long p) {
  FpPoly r{1}, b = mod(base, f, p);
  while (e > 0) {
    if (e & 1) r = mod(mul(r, b, p), f, p);
    b = mod(mul(b, b, p), f, p);
    e >>= 1;
  }
  return r;
}

FpPoly frobenius_power(const FpPoly& f, long p, int k) {
  FpPoly x{0, 1};
  FpPoly r = mod(x, f, p);
  for (int i = 0; i < k; ++i) r = powmod(r, p, f, p);
  return r;
}

long eval(const FpPoly& f, long x, long p) {
  long r = 0;
  for (int i = deg(f); i >= 0; --i) r = norm(r * x + f[i], p);
  return r;
}

bool is_irreducible(const FpPoly& f, long p) {
  int d = deg(f);
  if (d <= 0) return false;
  if (d == 1) return true;
  FpPoly x{0, 1};
  // x^(p^d) == x mod f
  FpPoly xpd = frobenius_power(f, p, d);
  if (trim(sub(xpd, x, p)) != FpPoly{}) return false;
  for (long q : prime_factors(d)) {
    FpPoly xq = frobenius_power(f, p, d / (int)q);
    if (deg(gcd(sub(xq, x, p), f, p)) > 0) return false;
  }
  return true;
}

namespace {

// equal-degree splitting of a squarefree product of degree-d irreducibles
void equal_degree(const FpPoly& f, int d, long p, SplitRng& rng,
                  std::vector<FpPoly>& out) {
  int n = deg(f);
  if (n == d) {
    out.push_back(monic(f, p));
    return;
  }
  while (true) {
    FpPoly r(n, 0);
    for (int i = 0; i < n; ++i) r[i] = (long)(rng.next() % (uint64_t)p);
    r = trim(std::move(r));
    if (deg(r) < 1) continue;
    FpPoly g = gcd(r, f, p);
    if (deg(g) == 0) {
      if (p % 2 == 1) {
        // r^((p^d-1)/2) - 1 splits for odd p
        long e = (ipow(p, d) - 1) / 2;
        FpPoly t = powmod(r, e, f, p);
        t = sub(t, FpPoly{1}, p);
        g = gcd(t, f, p);
      } else {
        // trace map over F_2: r + r^2 + r^4 + ... + r^(2^(d*k-1))
        FpPoly t = mod(r, f, p), acc = t;
        int steps = d * (n / d);
        for (int i = 1; i < steps; ++i) {
          t = mod(mul(t, t, p), f, p);
          acc = add(acc, t, p);
        }
        g = gcd(acc, f, p);
      }
    }
    if (deg(g) > 0 && deg(g) < n) {
      equal_degree(g, d, p, rng, out);
      equal_degree(divmod(f, g, p).first, d, p, rng, out);
      return;
    }
  }
}

void factor_squarefree(const FpPoly& f, long p, SplitRng& rng, std::vector<FpPoly>& out) {
  FpPoly rest = monic(f, p);
  FpPoly x{0, 1};
  FpPoly h = mod(x, rest, p);
  int d = 0;
  while (deg(rest) > 0) {
    ++d;
    if (2 * d > deg(rest)) {
      out.push_back(rest);
      break;
    }
    h = powmod(h, p, rest, p);  // h = x^(p^d) mod rest
    FpPoly g = gcd(sub(h, x, p), rest, p);
    if (deg(g) > 0) {
      equal_degree(g, d, p, rng, out);
      rest = divmod(rest, g, p).first;
      h = mod(h, rest, p);
    }
  }
}

}  // namespace

std::vector<std::pair<FpPoly, int>> factor(const FpPoly& f_in, long p, uint64_t seed) {
  SplitRng rng(seed);
  std::vector<std::pair<FpPoly, int>> result;
  FpPoly f = monic(trim(f_in), p);
  if (deg(f) <= 0) return result;

  // peel squarefree layers: f = prod_i sf_i^i, handling derivative == 0 (p-th powers)
  std::vector<std::pair<FpPoly, int>> stack{{f, 1}};
  while (!stack.empty()) {
    auto [g, mult] = stack.back();
    stack.pop_back();
    if (deg(g) <= 0) continue;
    FpPoly gp;  // derivative
    for (int i = 1; i <= deg(g); ++i) gp.push_back(norm(g[i] * i, p));
    gp = trim(std::move(gp));
    if (gp.empty()) {
      // g(x) = h(x^p); over F_p, h has the same coefficients compressed
      FpPoly h;
      for (int i = 0; i <= deg(g); i += (int)p) h.push_back(g[i]);
      stack.push_back({trim(std::move(h)), mult * (int)p});
      continue;
    }
    FpPoly sq = gcd(g, gp, p);
    FpPoly sf = divmod(g, sq, p).first;  // squarefree part
    if (deg(sq) > 0) stack.push_back({sq, mult});
    // remove sf-factors already accounted in sq to avoid double count:
    // classical approach: factor sf now, then divide their full power out.
    std::vector<FpPoly> irr;
    factor_squarefree(sf, p, rng, irr);
    for (auto& q : irr) {
      // total multiplicity of q in g^mult beyond what sq-branch will report:
      // here we report one layer; the sq branch carries the rest.
      bool found = false;
      for (auto& [fq, fm] : result)
        if (fq == q) {
          fm += mult;
          found = true;
        }
      if (!found) result.push_back({q, mult});
      // divide q out of the pending sq-branch copies
    }
  }
  // The layered peeling above over-counts: recompute multiplicities directly.
  for (auto& [q, m] : result) {
    m = 0;
    FpPoly rest = f;
    while (true) {
      auto [quo, rem] = divmod(rest, q, p);
      if (!rem.empty()) break;
      ++m;
      rest = quo;
    }
  }
  std::sort(result.begin(), result.end());
  return result;
}

FpPoly first_irreducible(long p, int d) {
  if (d == 1) return FpPoly{0, 1};  // x
  long total = ipow(p, d);
  for (long counter = 0; counter < total; ++counter) {
    FpPoly f(d + 1, 0);
    f[d] = 1;
    long c = counter;
    for (int i = 0; i < d; ++i) {  // constant coefficient varies fastest
      f[i] = c % p;
      c /= p;
    }
    if (is_irreducible(f, p)) return f;
  }
  throw SpecError("no irreducible polynomial found (unreachable)");
}

}  // namespace fp

namespace fpmat {

namespace {
long norm(long a, long p) { return ((a % p) + p) % p; }
}

FpMat identity(int n) {
  FpMat m(n, std::vector<long>(n, 0));
  for (int i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

FpMat mul(const FpMat& a, const FpMat& b, long p) {
  size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
  FpMat r(n, std::vector<long>(m, 0));
  for (size_t i = 0; i < n; ++i)
    for (size_t l = 0; l < k; ++l) {
      if (a[i][l] == 0) continue;
      for (size_t j = 0; j < m; ++j) r[i][j] = norm(r[i][j] + a[i][l] * b[l][j], p);
    }
  return r;
}

FpMat add(const FpMat& a, const FpMat& b, long p) {
  FpMat r = a;
  for (size_t i = 0; i < r.size(); ++i)
    for (size_t j = 0; j < r[i].size(); ++j) r[i][j] = norm(r[i][j] + b[i][j], p);
  return r;
}

FpMat scalar(int n, long c) {
  FpMat m(n, std::vector<long>(n, 0));
  for (int i = 0; i < n; ++i) m[i][i] = c;
  return m;
}

FpMat pow(FpMat a, long e, long p) {
  FpMat r = identity((int)a.size());
  while (e > 0) {
    if (e & 1) r = mul(r, a, p);
    a = mul(a, a, p);
    e >>= 1;
  }
  return r;
}

long det(FpMat a, long p) {
  size_t n = a.size();
  for (auto& row : a)
    for (auto& x : row) x = norm(x, p);
  long d = 1;
  for (size_t c = 0; c < n; ++c) {
    size_t piv = c;
    while (piv < n && a[piv][c] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != c) {
      std::swap(a[piv], a[c]);
      d = norm(-d, p);
    }
    d = norm(d * a[c][c], p);
    long inv = mod_inverse(norm(a[c][c], p), p);
    for (size_t r = c + 1; r < n; ++r) {
      long f = norm(a[r][c] * inv, p);
      if (f == 0) continue;
      for (size_t j = c; j < n; ++j) a[r][j] = norm(a[r][j] - f * a[c][j], p);
    }
  }
  return d;
}

std::vector<int> rref(FpMat& a, long p) {
  std::vector<int> pivots;
  size_t rows = a.size(), cols = rows ? a[0].size() : 0;
  size_t r = 0;
  for (size_t c = 0; c < cols && r < rows; ++c) {
    size_t piv = r;
    while (piv < rows && norm(a[piv][c], p) == 0) ++piv;
    if (piv == rows) continue;
    std::swap(a[piv], a[r]);
    long inv = mod_inverse(norm(a[r][c], p), p);
    for (size_t j = 0; j < cols; ++j) a[r][j] = norm(a[r][j] * inv, p);
    for (size_t i = 0; i < rows; ++i) {
      if (i == r) continue;
      long f = norm(a[i][c], p);
      if (f == 0) continue;
      for (size_t j = 0; j < cols; ++j) a[i][j] = norm(a[i][j] - f * a[r][j], p);
    }
    pivots.push_back((int)c);
    ++r;
  }
  return pivots;
}

FpMat kernel(const FpMat& a, long p) {
  size_t cols = a.empty() ? 0 : a[0].size();
  FpMat m = a;
  std::vector<int> piv = rref(m, p);
  std::vector<bool> is_pivot(cols, false);
  for (int c : piv) is_pivot[c] = true;
  FpMat basis;
  for (size_t free_c = 0; free_c < cols; ++free_c) {
    if (is_pivot[free_c]) continue;
    std::vector<long> x(cols, 0);
    x[free_c] = 1;
    for (size_t i = 0; i < piv.size(); ++i) x[piv[i]] = norm(-m[i][free_c], p);
    basis.push_back(std::move(x));
  }
  return basis;
}

bool solve(const FpMat& a, const std::vector<long>& b, std::vector<long>& x, long p) {
  size_t rows = a.size(), cols = rows ? a[0].size() : 0;
  FpMat aug = a;
  for (size_t i = 0; i < rows; ++i) aug[i].push_back(b[i]);
  std::vector<int> piv = rref(aug, p);
  x.assign(cols, 0);
  for (size_t i = 0; i < piv.size(); ++i) {
    if (piv[i] == (int)cols) return false;  // inconsistent
    x[piv[i]] = aug[i][cols];
  }
  // verify (catches pivots-in-b edge)
  for (size_t i = 0; i < rows; ++i) {
    long s = 0;
    for (size_t j = 0; j < cols; ++j) s = norm(s + a[i][j] * x[j], p);
    if (s != norm(b[i], p)) return false;
  }
  return true;
}

FpPoly min_poly(const FpMat& a, long p) {
  size_t n = a.size();
  // minimal polynomial = lcm over basis vectors of the (A, e_i) annihilator
  FpPoly m{1};
  for (size_t start = 0; start < n; ++start) {
    // Krylov sequence from e_start
    std::vector<std::vector<long>> krylov;
    std::vector<long> v(n, 0);
    v[start] = 1;
    krylov.push_back(v);
    for (size_t k = 1; k <= n; ++k) {
      v = apply(a, v, p);
      krylov.push_back(v);
      // test linear dependence of krylov
      FpMat sys((size_t)n, std::vector<long>(krylov.size() - 1, 0));
      for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j + 1 < krylov.size(); ++j) sys[i][j] = krylov[j][i];
      std::vector<long> coeff;
      std::vector<long> rhs(n);
      for (size_t i = 0; i < n; ++i) rhs[i] = v[i];
      if (solve(sys, rhs, coeff, p)) {
        FpPoly ann(k + 1, 0);
        ann[k] = 1;
        for (size_t j = 0; j < k; ++j) ann[j] = norm(-coeff[j], p);
        // m = lcm(m, ann)
        FpPoly g = fp::gcd(m, ann, p);
        m = fp::divmod(fp::mul(m, ann, p), g, p).first;
        break;
      }
    }
    if (fp::deg(m) == (int)n) break;
  }
  return fp::monic(m, p);
}

FpPoly char_poly(FpMat a, long p) {
  // Hessenberg reduction, then the standard recurrence.
  size_t n = a.size();
  for (auto& row : a)
    for (auto& x : row) x = norm(x, p);
  for (size_t c = 0; c + 2 < n; ++c) {
    size_t piv = c + 1;
    while (piv < n && a[piv][c] == 0) ++piv;
    if (piv == n) continue;
    if (piv != c + 1) {
      std::swap(a[piv], a[c + 1]);
      for (size_t i = 0; i < n; ++i) std::swap(a[i][piv], a[i][c + 1]);
    }
    long inv = mod_inverse(norm(a[c + 1][c], p), p);
    for (size_t r = c + 2; r < n; ++r) {
      long f = norm(a[r][c] * inv, p);
      if (f == 0) continue;
      for (size_t j = 0; j < n; ++j) a[r][j] = norm(a[r][j] - f * a[c + 1][j], p);
      for (size_t i = 0; i < n; ++i) a[i][c + 1] = norm(a[i][c + 1] + f * a[i][r], p);
    }
  }
  // p_0 = 1; p_k(x) per leading principal Hessenberg minor
  std::vector<FpPoly> ps(n + 1);
  ps[0] = FpPoly{1};
  for (size_t k = 1; k <= n; ++k) {
    // p_k = (x - a[k-1][k-1]) p_{k-1} - sum_{i=1}^{k-1} a[k-1-i][k-1] * (prod of subdiag) * p_{k-1-i}
    FpPoly t = fp::mul(ps[k - 1], FpPoly{norm(-a[k - 1][k - 1], p), 1}, p);
    long beta = 1;
    for (size_t i = 1; i < k; ++i) {
      beta = norm(beta * a[k - i][k - i - 1], p);
      if (beta == 0) break;
      long coeff = norm(a[k - 1 - i][k - 1] * beta, p);
      if (coeff == 0) continue;
      FpPoly sub_term = fp::mul(ps[k - 1 - i], FpPoly{coeff}, p);
      t = fp::sub(t, sub_term, p);
    }
    ps[k] = t;
  }
  return ps[n];
}

std::vector<long> apply(const FpMat& a, const std::vector<long>& x, long p) {
  size_t n = a.size();
  std::vector<long> r(n, 0);
  for (size_t i = 0; i < n; ++i) {
    long s = 0;
    for (size_t j = 0; j < x.size(); ++j) s = norm(s + a[i][j] * x[j], p);
    r[i] = s;
  }
  return r;
}

}  // namespace fpmat
}  // namespace blocklab
