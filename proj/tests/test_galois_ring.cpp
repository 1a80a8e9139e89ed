#include "doctest.h"

#include "blocklab/galois_ring.hpp"
#include "blocklab/numutil.hpp"

using namespace blocklab;

TEST_CASE("GR(3,1,1) is the field with three elements") {
  GaloisRing r(3, 1, 1);
  CHECK(r.size() == 3);
  // -1 is the unique element of multiplicative order 2
  int order2 = 0;
  for (long i = 1; i < 3; ++i) {
    GRElem x = r.from_index(i);
    if (r.mul(x, x) == r.one() && !(x == r.one())) ++order2;
  }
  CHECK(order2 == 1);
  CHECK(r.from_int(-1) == r.from_index(2));
}

TEST_CASE("GR(2,2,1) is Z/4 with units {1,3}") {
  GaloisRing r(2, 2, 1);
  CHECK(r.size() == 4);
  std::vector<long> units;
  for (long i = 0; i < 4; ++i)
    if (r.is_unit(r.from_index(i))) units.push_back(i);
  CHECK(units == std::vector<long>{1, 3});
  CHECK(r.mul(r.from_int(2), r.from_int(2)) == r.zero());
}

TEST_CASE("Teichmueller base order, against exhaustive orders in the field") {
  GaloisRing f9(3, 1, 2);
  GRElem t = f9.teichmuller_base();
  // oracle: exhaust all orders in F_9
  long max_order = 0;
  for (long i = 1; i < f9.size(); ++i) {
    GRElem x = f9.from_index(i);
    if (!f9.is_unit(x)) continue;
    GRElem y = x;
    long o = 1;
    while (!(y == f9.one())) {
      y = f9.mul(y, x);
      ++o;
    }
    max_order = std::max(max_order, o);
  }
  CHECK(max_order == 8);
  GRElem y = t;
  long o = 1;
  while (!(y == f9.one())) {
    y = f9.mul(y, t);
    ++o;
  }
  CHECK(o == 8);
}

TEST_CASE("fields: every nonzero element is invertible (orders up to 81)") {
  for (auto [p, d] : std::vector<std::pair<long, int>>{{2, 1}, {2, 2}, {2, 3}, {3, 1},
                                                       {3, 2}, {5, 1}, {7, 1}, {3, 4}}) {
    GaloisRing f(p, 1, d);
    for (long i = 1; i < f.size(); ++i) {
      GRElem x = f.from_index(i);
      REQUIRE(f.is_unit(x));
      CHECK(f.mul(x, f.inverse(x)) == f.one());
    }
  }
}

TEST_CASE("Hensel inverses in GR(p^2, d)") {
  for (auto [p, d] : std::vector<std::pair<long, int>>{{2, 2}, {3, 2}, {2, 3}}) {
    GaloisRing r(p, 2, d);
    long units = 0;
    for (long i = 0; i < r.size(); ++i) {
      GRElem x = r.from_index(i);
      if (!r.is_unit(x)) continue;
      ++units;
      CHECK(r.mul(x, r.inverse(x)) == r.one());
    }
    // |GR^x| = p^(md) - p^((m-1)d)
    CHECK(units == r.size() - r.size() / ipow(p, d));
  }
  CHECK_THROWS_AS(GaloisRing(2, 2, 1).inverse(GaloisRing(2, 2, 1).from_int(2)), SpecError);
}

TEST_CASE("roots of unity inside the ring") {
  GaloisRing r(2, 2, 2);  // GR(4, 2): Teichmueller order 3
  GRElem w = r.root_of_unity(3);
  CHECK(r.pow(w, 3) == r.one());
  CHECK_FALSE(w == r.one());
  CHECK_THROWS_AS(r.root_of_unity(5), SpecError);
  GaloisRing f(3, 1, 2);
  GRElem i4 = f.root_of_unity(4);
  CHECK(f.pow(i4, 2) == f.from_int(-1));
}

TEST_CASE("p-valuation inside the ring") {
  GaloisRing r(3, 2, 1);  // Z/9
  CHECK(r.p_valuation(r.from_int(3)) == 1);
  CHECK(r.p_valuation(r.from_int(6)) == 1);
  CHECK(r.p_valuation(r.from_int(1)) == 0);
  CHECK(r.p_valuation(r.zero()) == 2);
}
