// Exercises the shared library through its C header only.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <string>

#include "doctest.h"
#include "lppkit.h"

namespace {

std::string take(char* s) {
  std::string out = s ? s : "";
  lpp_free(s);
  return out;
}

}  // namespace

TEST_SUITE("capi") {

TEST_CASE("bounds") {
  long long v = 0;
  CHECK(lpp_classical_bound(32, 3, &v) == LPP_OK);
  CHECK(v == 58);
  CHECK(lpp_bound(10, 4, "3,4,11", &v) == LPP_OK);
  CHECK(v == 10);
  CHECK(lpp_bound_oracle(7, 12, "3,4,11", &v) == LPP_OK);
  CHECK(v == 4);
  CHECK(lpp_binomial(6, 3, &v) == LPP_OK);
  CHECK(v == 20);
  char* trace = nullptr;
  CHECK(lpp_bound_trace(10, 4, "3,4,11", 0, &trace) == LPP_OK);
  CHECK(take(trace).find("bound = 4 + 4 + 1 + 1 = 10") != std::string::npos);
}

TEST_CASE("errors carry a status and a message") {
  long long v = 0;
  CHECK(lpp_bound(10, 4, "3,x,11", &v) == LPP_E_PARSE);
  CHECK(std::string(lpp_last_error()).size() > 0);
  CHECK(lpp_bound(10, 4, nullptr, &v) == LPP_E_ARGUMENT);
  CHECK(lpp_bound(100, 4, "3,4,11", &v) == LPP_E_RANGE);
  lpp_ideal* ideal = nullptr;
  CHECK(lpp_ideal_parse("x^2, y^^3", 2, &ideal) == LPP_E_PARSE);
  CHECK(ideal == nullptr);
  CHECK(std::string(lpp_status_name(LPP_E_GUARD)).size() > 0);
}

TEST_CASE("codimension") {
  long long c = 0;
  CHECK(lpp_codim_from_monomial("x1^2*x2^3*x3^7", "3,4,11", &c) == LPP_OK);
  CHECK(c == 8);
  char* m = nullptr;
  CHECK(lpp_monomial_from_codim(0, 12, "3,4,11", &m) == LPP_OK);
  CHECK(take(m) == "x2^2*x3^10");
}

TEST_CASE("ideals") {
  lpp_ideal *j = nullptr, *i = nullptr, *q = nullptr, *w = nullptr;
  REQUIRE(lpp_ideal_parse("x^5, y^7", 2, &j) == LPP_OK);
  lpp_vector* t = nullptr;
  REQUIRE(lpp_vector_parse("[1,3,4,7,7]", 2, &t) == LPP_OK);
  REQUIRE(lpp_vector_ideal(t, "5,7", &i) == LPP_OK);
  REQUIRE(lpp_ideal_colon(j, i, &q) == LPP_OK);
  CHECK(lpp_ideal_nvars(q) == 2);
  char* s = nullptr;
  CHECK(lpp_ideal_format(q, 0, &s) == LPP_OK);
  CHECK(take(s) == "x1^3, x1^2*x2^3, x1*x2^4, x2^6");
  lpp_vector* d = nullptr;
  REQUIRE(lpp_vector_dual(t, "5,7", &d) == LPP_OK);
  CHECK(lpp_vector_format(d, &s) == LPP_OK);
  CHECK(take(s) == "[3,4,6]");
  REQUIRE(lpp_vector_ideal(d, "5,7", &w) == LPP_OK);
  int eq = 0;
  CHECK(lpp_ideal_equal(q, w, &eq) == LPP_OK);
  CHECK(eq == 1);
  int lpp = 0;
  CHECK(lpp_ideal_is_lpp(i, "5,7", &lpp) == LPP_OK);
  CHECK(lpp == 1);
  CHECK(lpp_ideal_hf(i, &s) == LPP_OK);
  CHECK(take(s).back() == '0');
  lpp_vector_destroy(d);
  lpp_vector_destroy(t);
  lpp_ideal_destroy(w);
  lpp_ideal_destroy(q);
  lpp_ideal_destroy(i);
  lpp_ideal_destroy(j);
}

TEST_CASE("vectors") {
  lpp_vector* t = nullptr;
  REQUIRE(lpp_vector_from_hf("1 3 6 10 13 10 5 3 0", "4,4,6", &t) == LPP_OK);
  char* s = nullptr;
  CHECK(lpp_vector_format(t, &s) == LPP_OK);
  CHECK(take(s) == "[[1,2],[1,3,4],[2,3,6,6],[5,6,6,6]]");
  int ok = 0;
  CHECK(lpp_vector_validate(t, "4,4,6", &ok, nullptr) == LPP_OK);
  CHECK(ok == 1);
  CHECK(lpp_vector_hf(t, &s) == LPP_OK);
  CHECK(take(s) == "1 3 6 10 13 10 5 3 0");
  lpp_vector_destroy(t);
  REQUIRE(lpp_vector_parse("[6,5]", 2, &t) == LPP_OK);
  char* why = nullptr;
  CHECK(lpp_vector_validate(t, "4,7", &ok, &why) == LPP_OK);
  CHECK(ok == 0);
  CHECK(take(why).size() > 0);
  lpp_vector_destroy(t);
  size_t count = 0;
  CHECK(lpp_vector_count("2,3", &count) == LPP_OK);
  CHECK(count > 0);
}

TEST_CASE("betti and mapping cone") {
  lpp_ideal* ideal = nullptr;
  REQUIRE(lpp_ideal_parse("x^2, x*y, y^2", 2, &ideal) == LPP_OK);
  lpp_betti* b = nullptr;
  REQUIRE(lpp_betti_compute(ideal, 0, &b) == LPP_OK);
  long long v = 0;
  CHECK(lpp_betti_get(b, 1, 2, &v) == LPP_OK);
  CHECK(v == 3);
  CHECK(lpp_betti_get(b, 2, 3, &v) == LPP_OK);
  CHECK(v == 2);
  lpp_betti_destroy(b);
  char* s = nullptr;
  CHECK(lpp_mapping_cone(ideal, "2,2", 0, 0, &s) == LPP_OK);
  CHECK(take(s).find("result: ok") != std::string::npos);
  CHECK(lpp_betti_compute(ideal, 4, &b) == LPP_E_RANGE);
  lpp_ideal_destroy(ideal);
}

TEST_CASE("checks and reports") {
  lpp_report* r = nullptr;
  REQUIRE(lpp_check("growth", "1 3 5 3 1 0", "2,3,4", nullptr, &r) == LPP_OK);
  CHECK(lpp_report_size(r) == 1);
  CHECK(std::string(lpp_report_verdict(r, 0)) == "pass");
  CHECK(lpp_report_verdict(r, 1) == nullptr);
  CHECK(lpp_report_exit_code(r) == 0);
  char* s = nullptr;
  CHECK(lpp_report_format(r, 1, &s) == LPP_OK);
  CHECK(take(s).find("\"verdict\"") != std::string::npos);
  lpp_report_destroy(r);

  lpp_check_options opts{0, 0, 1};
  REQUIRE(lpp_check("lpp", "1 3 5 3 1 0", "2,3,4", &opts, &r) == LPP_OK);
  CHECK(lpp_report_exit_code(r) == 3);
  lpp_report_destroy(r);

  REQUIRE(lpp_sweep("residual", 2, 3, 6, nullptr, &r) == LPP_OK);
  CHECK(lpp_report_size(r) > 1);
  CHECK(lpp_report_exit_code(r) == 0);
  lpp_report_destroy(r);

  CHECK(lpp_check("bogus", nullptr, "2,2", nullptr, &r) != LPP_OK);
}

}  // TEST_SUITE
