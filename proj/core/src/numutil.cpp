#include "blocklab/numutil.hpp"

#include <numeric>

namespace blocklab {

long gcd_long(long a, long b) { return std::gcd(a, b); }
long lcm_long(long a, long b) { return std::lcm(a, b); }

bool is_prime(long n) {
  if (n < 2) return false;
  for (long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

long ipow(long base, int exp) {
  long r = 1;
  for (int i = 0; i < exp; ++i) {
    if (base != 0 && r > (1L << 62) / std::abs(base))
      throw SpecError("integer power overflow: " + std::to_string(base) + "^" + std::to_string(exp));
    r *= base;
  }
  return r;
}

long euler_phi(long n) {
  long result = n;
  long m = n;
  for (long p = 2; p * p <= m; ++p) {
    if (m % p == 0) {
      while (m % p == 0) m /= p;
      result -= result / p;
    }
  }
  if (m > 1) result -= result / m;
  return result;
}

std::vector<long> prime_factors(long n) {
  std::vector<long> out;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      out.push_back(p);
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

long mod_pow(long base, long exp, long mod) {
  if (mod == 1) return 0;
  long r = 1;
  base %= mod;
  if (base < 0) base += mod;
  while (exp > 0) {
    if (exp & 1) r = (__int128)r * base % mod;
    base = (__int128)base * base % mod;
    exp >>= 1;
  }
  return r;
}

long mod_inverse(long a, long mod) {
  long t = 0, new_t = 1, r = mod, new_r = ((a % mod) + mod) % mod;
  while (new_r != 0) {
    long q = r / new_r;
    long tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (r != 1) throw SpecError("element not invertible mod " + std::to_string(mod));
  return ((t % mod) + mod) % mod;
}

long multiplicative_order(long a, long n) {
  if (n == 1) return 1;
  a = ((a % n) + n) % n;
  if (gcd_long(a, n) != 1) throw SpecError("multiplicative_order: not a unit");
  long x = a % n, k = 1;
  while (x != 1 % n) {
    x = (__int128)x * a % n;
    ++k;
    if (k > n) throw SpecError("multiplicative_order: no order found");
  }
  return k;
}

int int_valuation(long x, long p) {
  if (x == 0) throw SpecError("int_valuation of zero");
  if (x < 0) x = -x;
  int v = 0;
  while (x % p == 0) {
    x /= p;
    ++v;
  }
  return v;
}

}  // namespace blocklab
