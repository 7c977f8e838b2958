#include "qloop/qloop.h"

#include <nlohmann/json.hpp>

#include <doctest.h>

#include <string>

namespace {

std::string take(char* s) {
  std::string out = s;
  ql_string_free(s);
  return out;
}

} // namespace

TEST_CASE("tables through the C interface") {
  ql_table* t = nullptr;
  REQUIRE(ql_table_load("catalog:theta_star", &t) == QL_OK);
  CHECK(ql_table_order(t) == 6);
  int v = 0;
  CHECK(ql_table_get(t, 2, 3, &v) == QL_OK);
  CHECK(v == 5);
  CHECK(ql_table_get(t, 7, 1, &v) == QL_ERR_DOMAIN);
  CHECK(std::string(ql_last_error()).find("7") != std::string::npos);

  char* s = nullptr;
  REQUIRE(ql_table_describe_json(t, &s) == QL_OK);
  const auto d = nlohmann::json::parse(take(s));
  CHECK(d["latin"] == true);
  CHECK(d["identity"] == 1);

  REQUIRE(ql_table_to_json(t, &s) == QL_OK);
  ql_table* back = nullptr;
  REQUIRE(ql_table_parse(take(s).c_str(), &back) == QL_OK);
  ql_verdict verdict;
  CHECK(ql_isomorphic(t, back, 0, &verdict, nullptr) == QL_OK);
  CHECK(verdict == QL_RELATED);
  ql_table_free(back);
  ql_table_free(t);
}

TEST_CASE("errors map to status codes") {
  ql_table* t = nullptr;
  CHECK(ql_table_parse("2\n1 2\n2 x\n", &t) == QL_ERR_PARSE);
  CHECK(std::string(ql_last_error()).find("line 3") != std::string::npos);
  CHECK(ql_table_load("catalog:nope", &t) == QL_ERR_DOMAIN);
  CHECK(ql_table_load("/nonexistent/file", &t) == QL_ERR_IO);
  CHECK(ql_table_parse(nullptr, &t) == QL_ERR_ARGUMENT);

  REQUIRE(ql_table_catalog("otimes_recomputed", &t) == QL_OK);
  ql_table* out = nullptr;
  CHECK(ql_principal_isotope(t, 1, 1, &out) == QL_ERR_STRUCTURE);
  char* s = nullptr;
  CHECK(ql_identities_json(t, "bogus", &s) == QL_ERR_ARGUMENT);
  int holds = -1;
  CHECK(ql_identity_holds(t, "lc2", &holds) == QL_OK);
  CHECK(holds == 1);
  CHECK(ql_identity_holds(t, "lc1", &holds) == QL_OK);
  CHECK(holds == 0);
  ql_table_free(t);
}

TEST_CASE("transforms and morphisms through the C interface") {
  ql_table *theta = nullptr, *printed = nullptr, *iso = nullptr;
  REQUIRE(ql_table_catalog("theta_star", &theta) == QL_OK);
  REQUIRE(ql_table_catalog("oplus_printed", &printed) == QL_OK);
  ql_perm *a = nullptr, *b = nullptr;
  REQUIRE(ql_perm_parse("(1 5 2 4 3 6)", 6, &a) == QL_OK);
  REQUIRE(ql_perm_parse("(1 3 4 6 5 2)", 6, &b) == QL_OK);
  REQUIRE(ql_isotope(theta, a, b, a, &iso) == QL_OK);
  for (int x = 1; x <= 6; ++x)
    for (int y = 1; y <= 6; ++y) {
      int u = 0, w = 0;
      ql_table_get(iso, x, y, &u);
      ql_table_get(printed, x, y, &w);
      CHECK(u == w);
    }
  char* s = nullptr;
  CHECK(ql_perm_to_string(a, &s) == QL_OK);
  CHECK(take(s) == "(1 5 2 4 3 6)");

  ql_verdict verdict;
  CHECK(ql_isotopic(theta, printed, 0, QL_PRINCIPAL_ISOTOPES, &verdict, &s) == QL_OK);
  CHECK(verdict == QL_RELATED);
  CHECK(nlohmann::json::parse(take(s)).contains("isotopism"));

  ql_table *d4 = nullptr, *q8 = nullptr;
  ql_table_catalog("D4", &d4);
  ql_table_catalog("Q8", &q8);
  CHECK(ql_isomorphic(d4, q8, 0, &verdict, nullptr) == QL_OK);
  CHECK(verdict == QL_UNRELATED);
  CHECK(ql_rank_json(d4, &s) == QL_OK);
  const auto r = nlohmann::json::parse(take(s));
  CHECK(r["rank"] == 1);
  CHECK(r["center"].size() == 2);
  CHECK(r["indecomposable"] == true);

  ql_table* der = nullptr;
  CHECK(ql_derivative(theta, QL_RIGHT, 2, &der) == QL_OK);
  CHECK(ql_derivative(theta, static_cast<ql_side>(5), 2, &der) == QL_ERR_ARGUMENT);
  ql_table_free(der);

  for (ql_table* t : {theta, printed, iso, d4, q8})
    ql_table_free(t);
  ql_perm_free(a);
  ql_perm_free(b);
}

TEST_CASE("claim report and witness replay") {
  char* s = nullptr;
  int passed = 0;
  REQUIRE(ql_verify_claims_json(0, 4, &passed, &s) == QL_OK);
  CHECK(passed == 1);
  const auto report = nlohmann::json::parse(take(s));
  int deviations = 0;
  for (const auto& c : report)
    if (c["status"] == "deviation-from-paper") {
      ++deviations;
      int again = 0;
      CHECK(ql_replay_witness(c["witness"].dump().c_str(), &again) == QL_OK);
      CHECK(again == 1);
    }
  CHECK(deviations == 2);
  CHECK(ql_verify_claims_json(0, 9, &passed, &s) == QL_ERR_BUDGET);
}
