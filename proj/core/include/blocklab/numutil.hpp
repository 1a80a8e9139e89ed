// Small integer number theory helpers shared across the library.
#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace blocklab {

// Invalid input (bad spec file, violated precondition). CLI exit code 1.
struct SpecError : std::runtime_error {
  explicit SpecError(const std::string& what) : std::runtime_error(what) {}
};

// A machine-checked structural claim failed. CLI exit code 2.
struct VerificationError : std::runtime_error {
  explicit VerificationError(const std::string& what) : std::runtime_error(what) {}
};

long gcd_long(long a, long b);
long lcm_long(long a, long b);
bool is_prime(long n);
long ipow(long base, int exp);            // throws on overflow
long euler_phi(long n);
std::vector<long> prime_factors(long n);  // distinct primes, ascending
long mod_pow(long base, long exp, long mod);
long mod_inverse(long a, long mod);       // throws if not invertible
long multiplicative_order(long a, long n);  // order of a in (Z/n)^x
int int_valuation(long x, long p);          // largest k with p^k | x, x != 0

}  // namespace blocklab
