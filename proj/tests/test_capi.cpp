// Exercises the shared library through its C interface only.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <string>

#include <json.hpp>

#include "linefree/linefree.h"

namespace {

struct Set {
  lf_pointset* h = nullptr;
  ~Set() { lf_pointset_free(h); }
};

std::string take(char* s) {
  std::string out(s);
  lf_string_free(s);
  return out;
}

}  // namespace

TEST_CASE("version and status strings") {
  CHECK(std::string(lf_version()) == "0.3.1");
  CHECK(std::string(lf_status_string(LF_OK)) != "");
  CHECK(std::string(lf_status_string(LF_ERR_NOT_PRIME)) != std::string(lf_status_string(LF_ERR_IO)));
}

TEST_CASE("modulus errors map to distinct codes") {
  CHECK(lf_check_modulus(17) == LF_OK);
  CHECK(lf_check_modulus(15) == LF_ERR_NOT_PRIME);
  CHECK(lf_check_modulus(2) == LF_ERR_MODULUS_TOO_SMALL);
  CHECK(lf_check_modulus(1) == LF_ERR_BELOW_TWO);
  CHECK(std::string(lf_last_error()).find('1') != std::string::npos);
  uint32_t inv = 0;
  CHECK(lf_field_inv(5, 2, &inv) == LF_OK);
  CHECK(inv == 3);
  CHECK(lf_field_inv(5, 0, &inv) == LF_ERR_ZERO_INVERSE);
  CHECK(lf_field_inv(5, 7, &inv) == LF_ERR_OUT_OF_RANGE);
}

TEST_CASE("params") {
  lf_params params;
  REQUIRE(lf_derive_params(101, &params) == LF_OK);
  CHECK(params.p == 101);
  CHECK(params.r == 10);
  CHECK(params.s == 9);
  CHECK(params.l == 2);
  CHECK(params.degenerate == 0);
  CHECK(lf_derive_params(100, &params) == LF_ERR_NOT_PRIME);
  CHECK(lf_derive_params(101, nullptr) == LF_ERR_INVALID_ARGUMENT);
}

TEST_CASE("point set handles") {
  Set s;
  REQUIRE(lf_pointset_new(5, 3, &s.h) == LF_OK);
  CHECK(lf_pointset_prime(s.h) == 5);
  CHECK(lf_pointset_dim(s.h) == 3);
  const uint32_t pt[3] = {1, 2, 3};
  CHECK(lf_pointset_insert(s.h, pt, 3) == LF_OK);
  int in = 0;
  CHECK(lf_pointset_contains(s.h, pt, 3, &in) == LF_OK);
  CHECK(in == 1);
  CHECK(lf_pointset_cardinality(s.h) == 1);
  const uint32_t bad[3] = {1, 2, 5};
  CHECK(lf_pointset_insert(s.h, bad, 3) == LF_ERR_OUT_OF_RANGE);
  CHECK(lf_pointset_insert(s.h, pt, 2) == LF_ERR_DIMENSION_MISMATCH);

  Set c;
  REQUIRE(lf_pointset_complement(s.h, &c.h) == LF_OK);
  CHECK(lf_pointset_cardinality(c.h) == 124);
  Set d;
  REQUIRE(lf_pointset_clone(s.h, &d.h) == LF_OK);
  int eq = 0;
  CHECK(lf_pointset_equal(s.h, d.h, &eq) == LF_OK);
  CHECK(eq == 1);
  CHECK(lf_pointset_remove(d.h, pt, 3) == LF_OK);
  CHECK(lf_pointset_equal(s.h, d.h, &eq) == LF_OK);
  CHECK(eq == 0);
  CHECK(lf_pointset_new(5, 4, &d.h) != LF_OK);
}

TEST_CASE("builders and verification") {
  Set s, star, rem, hyper, lemma, excl;
  REQUIRE(lf_build_s(17, &s.h) == LF_OK);
  REQUIRE(lf_build_s_star(17, &star.h) == LF_OK);
  REQUIRE(lf_build_removal(101, &rem.h) == LF_OK);
  REQUIRE(lf_build_hypercube(17, 3, &hyper.h) == LF_OK);
  REQUIRE(lf_build_lemma_set(17, 0, &lemma.h) == LF_OK);
  REQUIRE(lf_build_layer_exclusion(17, 15, &excl.h) == LF_OK);
  CHECK(lf_pointset_cardinality(s.h) == 4105);
  CHECK(lf_pointset_cardinality(star.h) == 4105);
  CHECK(lf_pointset_cardinality(hyper.h) == 4096);
  CHECK(lf_pointset_cardinality(excl.h) == 40);
  CHECK(lf_pointset_cardinality(rem.h) <= 20);
  lf_pointset* none = nullptr;
  CHECK(lf_build_lemma_set(17, 14, &none) == LF_ERR_OUT_OF_RANGE);
  CHECK(none == nullptr);

  lf_verdict v;
  REQUIRE(lf_verify_line_free(s.h, 2, nullptr, nullptr, &v) == LF_OK);
  CHECK(v.ok == 1);
  CHECK(v.has_witness == 0);
  CHECK(v.lines_checked == 88723);
  REQUIRE(lf_verify_blocking(lemma.h, 1, nullptr, nullptr, &v) == LF_OK);
  CHECK(v.ok == 1);

  const uint32_t extra[3] = {15, 16, 0};
  REQUIRE(lf_pointset_insert(s.h, extra, 3) == LF_OK);
  REQUIRE(lf_verify_line_free(s.h, 1, nullptr, nullptr, &v) == LF_OK);
  CHECK(v.ok == 0);
  CHECK(v.has_witness == 1);
  CHECK(v.witness.dim == 3);

  Set small;
  REQUIRE(lf_build_s(7, &small.h) == LF_OK);
  lf_verdict naive;
  REQUIRE(lf_verify_line_free_naive(small.h, &naive) == LF_OK);
  CHECK(naive.ok == 1);
  CHECK(lf_verify_line_free_naive(s.h, &naive) == LF_ERR_OUT_OF_RANGE);
}

TEST_CASE("progress callback") {
  Set s;
  REQUIRE(lf_build_hypercube(7, 3, &s.h) == LF_OK);
  struct State {
    uint64_t last = 0, total = 0;
  } st;
  lf_verdict v;
  REQUIRE(lf_verify_line_free(
              s.h, 2,
              [](uint64_t done, uint64_t total, void* user) {
                auto* s = static_cast<State*>(user);
                s->last = done;
                s->total = total;
              },
              &st, &v) == LF_OK);
  CHECK(st.total == 49 * 57);
  CHECK(st.last == st.total);
}

TEST_CASE("save and load") {
  const auto dir = std::filesystem::temp_directory_path() / "linefree_capi_test";
  std::filesystem::create_directories(dir);
  Set s;
  REQUIRE(lf_build_s(19, &s.h) == LF_OK);
  for (auto [name, fmt] : {std::pair{"s.bin", LF_FORMAT_AUTO}, std::pair{"s.txt", LF_FORMAT_AUTO},
                           std::pair{"s.dat", LF_FORMAT_TEXT}}) {
    const auto path = (dir / name).string();
    REQUIRE(lf_pointset_save(s.h, path.c_str(), fmt) == LF_OK);
    Set back;
    REQUIRE(lf_pointset_load(path.c_str(), &back.h) == LF_OK);
    int eq = 0;
    CHECK(lf_pointset_equal(s.h, back.h, &eq) == LF_OK);
    CHECK(eq == 1);
  }
  Set missing;
  CHECK(lf_pointset_load((dir / "nope").string().c_str(), &missing.h) == LF_ERR_IO);
  std::filesystem::remove_all(dir);
}

TEST_CASE("bounds, table and certificates") {
  int ok = 0;
  CHECK(lf_thm3_check(17, 4105, &ok) == LF_OK);
  CHECK(ok == 1);
  CHECK(lf_thm3_check(17, 4000, &ok) == LF_OK);
  CHECK(ok == 0);

  char* text = nullptr;
  int all_ok = 0;
  REQUIRE(lf_table(17, 17, 1, 1, LF_TABLE_JSON, &text, &all_ok) == LF_OK);
  const auto rows = nlohmann::json::parse(take(text));
  CHECK(rows.size() == 1);
  CHECK(rows[0]["thm3_ok"] == true);
  CHECK(all_ok == 1);
  CHECK(lf_table(14, 16, 0, 1, LF_TABLE_CSV, &text, &all_ok) == LF_ERR_INVALID_ARGUMENT);

  int passed = 0;
  REQUIRE(lf_certify(17, 1, 7, nullptr, nullptr, &text, &passed) == LF_OK);
  const auto cert = nlohmann::json::parse(take(text));
  CHECK(passed == 1);
  CHECK(cert["provenance"]["seed"] == 7);
  CHECK(cert["sizes"]["s"] == 4105);

  Set s;
  REQUIRE(lf_build_s(17, &s.h) == LF_OK);
  const uint32_t extra[3] = {15, 16, 4};
  REQUIRE(lf_pointset_insert(s.h, extra, 3) == LF_OK);
  REQUIRE(lf_certify_pointset(s.h, "mutant", 1, 7, nullptr, nullptr, &text, &passed) == LF_OK);
  const auto bad = nlohmann::json::parse(take(text));
  CHECK(passed == 0);
  CHECK(bad["provenance"]["input"] == "mutant");
  CHECK(bad["checks"]["size_accounting_ok"] == false);
}

TEST_CASE("oracle") {
  lf_search_result r;
  lf_pointset* best = nullptr;
  REQUIRE(lf_oracle(5, 2, 0, 0, &r, &best) == LF_OK);
  Set owned{best};
  CHECK(r.best_size == 16);
  CHECK(r.exact == 1);
  CHECK(lf_pointset_cardinality(best) == 16);
  lf_verdict v;
  REQUIRE(lf_verify_line_free(best, 1, nullptr, nullptr, &v) == LF_OK);
  CHECK(v.ok == 1);
  CHECK(lf_oracle(4, 2, 0, 0, &r, nullptr) == LF_ERR_NOT_PRIME);
}
