#include "doctest.h"

#include "blocklab/catalog.hpp"
#include "blocklab/numutil.hpp"
#include "blocklab/spec_io.hpp"

using namespace blocklab;

TEST_CASE("spec files round-trip through JSON") {
  for (const auto& spec : builtin_catalog()) {
    CAPTURE(spec.name);
    Json j = spec_to_json(spec);
    BlockSpec back = parse_spec(j);
    CHECK(back.name == spec.name);
    CHECK(back.p == spec.p);
    CHECK(back.defect.exponents() == spec.defect.exponents());
    CHECK(back.action == spec.action);
    CHECK(back.phi_exponent == spec.phi_exponent);
    CHECK(back.inertial->size() == spec.inertial->size());
  }
}

TEST_CASE("malformed specs are reported with the failing invariant") {
  Json j = spec_to_json(catalog_spec("q8_c3c3"));
  SUBCASE("phi must be faithful") {
    j["phi"] = 0;
    CHECK_THROWS_WITH_AS(parse_spec(j), doctest::Contains("phi not faithful"), SpecError);
  }
  SUBCASE("defect orders must be p-powers") {
    j["defect"] = {6, 3};
    CHECK_THROWS_WITH_AS(parse_spec(j), doctest::Contains("power of p"), SpecError);
  }
  SUBCASE("descending order is required") {
    j["defect"] = {3, 9};
    CHECK_THROWS_AS(parse_spec(j), SpecError);
  }
  SUBCASE("missing keys surface as spec errors") {
    Json empty;
    empty["p"] = 3;
    CHECK_THROWS_AS(parse_spec(empty), SpecError);
  }
}

TEST_CASE("cyclotomic values round-trip exactly") {
  Cyclotomic x = Cyclotomic::root_of_unity(12, 5).scaled(mpq_class(-7, 3)) +
                 Cyclotomic::one(12).scaled(mpq_class(1, 2));
  Cyclotomic back = cyclotomic_from_json(cyclotomic_to_json(x));
  CHECK(back == x);
}

TEST_CASE("reports are byte-identical across recomputation") {
  BlockSpec spec = catalog_spec("c5_c4z2");
  std::string a = characters_report(compute_block(spec)).dump(2);
  std::string b = characters_report(compute_block(spec)).dump(2);
  CHECK(a == b);
  std::string pa = action_report(spec).dump(2);
  std::string pb = action_report(spec).dump(2);
  CHECK(pa == pb);
}

TEST_CASE("report files carry the advertised sections") {
  BlockSpec spec = catalog_spec("c2c2_c3");
  BlockData data = compute_block(spec);
  Json chars = characters_report(data);
  CHECK(chars.contains("characters"));
  CHECK(chars.contains("decomposition_matrix"));
  CHECK(chars.contains("cartan_matrix"));
  CHECK(chars.contains("brauer_characters"));
  for (const auto& c : chars["characters"]) {
    CHECK(c.contains("degree"));
    CHECK(c.contains("values"));
  }
  Json dec = decomposition_report(data);
  CHECK(dec.contains("projective_degrees"));
}
