#include "doctest.h"

#include "blocklab/cyclotomic.hpp"
#include "blocklab/numutil.hpp"

using namespace blocklab;

TEST_CASE("roots of unity: defining cases") {
  CHECK(Cyclotomic::root_of_unity(1, 0) == Cyclotomic::one());
  CHECK(Cyclotomic::root_of_unity(2, 1) == Cyclotomic::from_rational(mpq_class(-1)));
  Cyclotomic z3 = Cyclotomic::root_of_unity(3, 1);
  Cyclotomic z3sq = Cyclotomic::root_of_unity(3, 2);
  CHECK(z3 * z3sq == Cyclotomic::one());
  // X^2 + X + 1 is the minimal polynomial of zeta_3
  CHECK(z3 + z3sq == Cyclotomic::from_rational(mpq_class(-1)));
}

TEST_CASE("multiplicative orders across conductors") {
  for (long n = 1; n <= 36; ++n) {
    for (long a = 0; a < n; ++a) {
      Cyclotomic z = Cyclotomic::root_of_unity(n, a);
      long expected = n / gcd_long(n, a == 0 ? n : a);
      auto order = z.root_order(40);
      REQUIRE(order.has_value());
      CHECK(*order == expected);
    }
  }
}

TEST_CASE("mixed-conductor arithmetic") {
  // zeta_2 * zeta_3 = zeta_6^5
  CHECK(Cyclotomic::root_of_unity(2, 1) * Cyclotomic::root_of_unity(3, 1) ==
        Cyclotomic::root_of_unity(6, 5));
  Cyclotomic x = Cyclotomic::root_of_unity(4, 1) + Cyclotomic::root_of_unity(6, 1);
  Cyclotomic y = x.to_conductor(12);
  CHECK(x == y);
}

TEST_CASE("inverse and galois conjugation") {
  Cyclotomic x = Cyclotomic::one(5) + Cyclotomic::root_of_unity(5, 1);
  CHECK(x * x.inverse() == Cyclotomic::one(5));
  Cyclotomic z = Cyclotomic::root_of_unity(7, 2);
  CHECK(z.galois(3) == Cyclotomic::root_of_unity(7, 6));
  CHECK(z * z.conjugate() == Cyclotomic::one(7));
  CHECK_THROWS_AS(Cyclotomic::zero(5).inverse(), SpecError);
}

TEST_CASE("integrality and rationality predicates") {
  CHECK(Cyclotomic::root_of_unity(8, 3).is_integral());
  CHECK_FALSE(Cyclotomic::root_of_unity(8, 3).scaled(mpq_class(1, 2)).is_integral());
  CHECK(Cyclotomic::from_rational(mpq_class(7, 3)).is_rational());
  CHECK_FALSE(Cyclotomic::root_of_unity(5, 1).is_rational());
}

TEST_CASE("product of (1 - root) over primitive p-power roots equals p") {
  for (long p : {2L, 3L, 5L, 7L, 11L, 13L, 17L, 19L, 23L}) {
    for (int n = 1; ipow(p, n) <= 27; ++n) {
      Cyclotomic prod = one_minus_root_product(p, n);
      REQUIRE(prod.is_rational());
      CHECK(prod.rational_value() == p);
    }
  }
}

TEST_CASE("cyclotomic polynomial degrees and known coefficients") {
  CHECK(cyclotomic_polynomial(1) == std::vector<mpz_class>{-1, 1});
  CHECK(cyclotomic_polynomial(6) == std::vector<mpz_class>{1, -1, 1});
  CHECK(cyclotomic_polynomial(12) == std::vector<mpz_class>{1, 0, -1, 0, 1});
  for (long n : {8L, 9L, 15L, 36L})
    CHECK((long)cyclotomic_polynomial(n).size() == euler_phi(n) + 1);
}
