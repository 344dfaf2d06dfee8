#include <doctest.h>

#include "linefree/certificate.hpp"

using namespace linefree;

TEST_CASE("certificate for p = 17") {
  const auto c = certify(make_modulus(17));
  CHECK(c.all_passed());
  CHECK(c.consistent());
  CHECK(c.p == 17);
  CHECK(c.params.r == 4);
  CHECK(c.params.s == 3);
  CHECK(c.params.l == 1);
  CHECK(c.sizes.s == 4105);
  CHECK(c.sizes.s_star == 4105);
  CHECK(c.sizes.removed == 0);
  CHECK(c.sizes.hypercube == 4096);
  CHECK(c.sizes.complement == 808);
  CHECK(c.checks.line_free.lines_checked == 88723);
  CHECK(c.checks.complement_blocking.lines_checked == 88723);
  CHECK(c.provenance.seed == kDefaultSeed);
  CHECK(c.provenance.tool_version == std::string(kToolVersion));
}

TEST_CASE("JSON round trip is lossless") {
  for (std::uint64_t p : {3, 17, 23}) {
    const auto c = certify(make_modulus(p));
    const nlohmann::json j = c;
    CHECK(j["schema_version"] == "1");
    CHECK(j.get<Certificate>() == c);
    CHECK(nlohmann::json::parse(j.dump()).get<Certificate>() == c);
  }
}

TEST_CASE("degenerate certificate") {
  const auto c = certify(make_modulus(7));
  CHECK(c.params.degenerate);
  CHECK(c.all_passed());
  CHECK(c.sizes.s == 216);
}

TEST_CASE("mutated set fails with a witness that survives serialization") {
  const auto mod = make_modulus(17);
  auto s = build_s(mod);
  s.insert(s.space().make_point({15, 16, 0}));
  const auto c = certify_set(s, "mutant");
  CHECK_FALSE(c.all_passed());
  CHECK_FALSE(c.checks.size_accounting_ok);
  CHECK_FALSE(c.checks.matches_construction);
  CHECK(c.consistent());
  const nlohmann::json j = c;
  CHECK(j.get<Certificate>() == c);
  if (!c.checks.line_free.ok) CHECK_FALSE(j["checks"]["line_free"]["witness"].is_null());
}

TEST_CASE("inconsistent certificates are detected") {
  auto c = certify(make_modulus(17));
  auto bad = c;
  bad.sizes.complement += 1;
  CHECK_FALSE(bad.consistent());
  bad = c;
  bad.checks.thm3_ok = false;
  CHECK_FALSE(bad.consistent());
  bad = c;
  bad.sizes.s = 4000;
  bad.sizes.complement = 913;
  CHECK_FALSE(bad.consistent());
}

TEST_CASE("malformed certificate JSON") {
  nlohmann::json j = certify(make_modulus(3));
  auto wrong_schema = j;
  wrong_schema["schema_version"] = "2";
  CHECK_THROWS(wrong_schema.get<Certificate>());
  auto missing = j;
  missing.erase("sizes");
  CHECK_THROWS(missing.get<Certificate>());
}

TEST_CASE("sets from another space are refused") {
  CHECK_THROWS_AS(certify_set(PointSet(Space(make_modulus(17), 2)), "plane"), Error);
}
