#include "doctest.h"

#include "blocklab/numutil.hpp"
#include "blocklab/prime_ideal.hpp"

using namespace blocklab;

namespace {

// field norm of a cyclotomic integer: product over the Galois orbit
Cyclotomic norm(const Cyclotomic& x) {
  long n = x.conductor();
  Cyclotomic prod = Cyclotomic::one(n);
  for (long a = 1; a <= n; ++a) {
    if (gcd_long(a, n) != 1) continue;
    prod *= x.galois(a);
  }
  return prod;
}

struct XorShift {
  uint64_t s = 0x1234567;
  long next(long bound) {
    s ^= s << 13;
    s ^= s >> 7;
    s ^= s << 17;
    return (long)(s % (uint64_t)bound);
  }
};

Cyclotomic random_integral(long n, XorShift& rng) {
  Cyclotomic x = Cyclotomic::zero(n);
  const auto& f = cyclotomic_field(n);
  for (int i = 0; i < f.degree; ++i)
    x += Cyclotomic::root_of_unity(n, i).scaled(mpq_class(rng.next(7) - 3));
  return x;
}

}  // namespace

TEST_CASE("valuations at p = 3 in Q(zeta_3)") {
  PrimeIdeal prime(3, 3);
  Cyclotomic x = Cyclotomic::one(3) - Cyclotomic::root_of_unity(3, 1);
  // the independent oracle: N(1 - zeta_3) = 3 and v_P(3) = 2
  Cyclotomic nx = norm(x);
  REQUIRE(nx.is_rational());
  CHECK(nx.rational_value() == 3);
  CHECK(prime.valuation(x) == 1);
  CHECK(prime.valuation(Cyclotomic::from_rational(mpq_class(3))) == 2);
  CHECK(prime.ramification() == 2);
  CHECK(prime.valuation(Cyclotomic::zero(3)) == kValuationInfinity);
}

TEST_CASE("valuations at p = 2 in Q(zeta_4)") {
  PrimeIdeal prime(2, 4);
  CHECK(prime.valuation(Cyclotomic::one(4) - Cyclotomic::root_of_unity(4, 1)) == 1);
  CHECK(prime.valuation(Cyclotomic::from_rational(mpq_class(2))) == 2);
}

TEST_CASE("valuation is additive on products") {
  XorShift rng;
  for (auto [p, n] : std::vector<std::pair<long, long>>{{3, 3}, {2, 4}, {3, 12}, {2, 12}}) {
    PrimeIdeal prime(p, n);
    int done = 0;
    while (done < 200) {
      Cyclotomic x = random_integral(n, rng), y = random_integral(n, rng);
      if (x.is_zero() || y.is_zero()) continue;
      CHECK(prime.valuation(x * y) == prime.valuation(x) + prime.valuation(y));
      ++done;
    }
  }
}

TEST_CASE("membership in pO") {
  PrimeIdeal p2(2, 2);
  CHECK(p2.in_power_of_p(Cyclotomic::from_rational(mpq_class(2)), 1));  // 1 - (-1)
  PrimeIdeal p3(3, 3);
  CHECK_FALSE(p3.in_power_of_p(Cyclotomic::one(3) - Cyclotomic::root_of_unity(3, 1), 1));
  CHECK(p3.in_power_of_p(Cyclotomic::zero(3), 5));
}

TEST_CASE("unique-prime shortcut agrees with the ideal-power route") {
  // conductor 12 at p = 3 has a single prime above p
  PrimeIdeal prime(3, 12);
  REQUIRE(prime.num_primes_above() == 1);
  XorShift rng;
  for (int trial = 0; trial < 40; ++trial) {
    Cyclotomic x = random_integral(12, rng);
    for (long k = 1; k <= 2; ++k) {
      bool fast = prime.in_power_of_p(x, k);
      bool slow = x.is_zero() || prime.valuation(x) >= k * prime.ramification();
      CHECK(fast == slow);
    }
  }
}

TEST_CASE("non-integral input is rejected") {
  PrimeIdeal prime(3, 3);
  CHECK_THROWS_AS(prime.valuation(Cyclotomic::from_rational(mpq_class(1, 3), 3)), SpecError);
}

TEST_CASE("split prime: several primes above p") {
  // p = 5 in Q(zeta_12): ord_12(5) = 2, e = 1, so g = 2
  PrimeIdeal prime(5, 12);
  CHECK(prime.ramification() == 1);
  CHECK(prime.num_primes_above() == 2);
  CHECK(prime.valuation(Cyclotomic::from_rational(mpq_class(5))) == 1);
}
