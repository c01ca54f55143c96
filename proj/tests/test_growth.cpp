#include <set>

#include "doctest.h"
#include "lppkit/growth.hpp"
#include "oracles.hpp"

using namespace lppkit;

namespace {

std::vector<DegreeList> small_lists(int max_n, int max_entry) {
  std::vector<DegreeList> out;
  std::function<void(std::vector<int>&, int)> rec = [&](std::vector<int>& cur, int lo) {
    if (!cur.empty()) out.emplace_back(cur);
    if (static_cast<int>(cur.size()) == max_n) return;
    for (int v = lo; v <= max_entry; ++v) {
      cur.push_back(v);
      rec(cur, v);
      cur.pop_back();
    }
  };
  std::vector<int> cur;
  rec(cur, 1);
  return out;
}

}  // namespace

TEST_SUITE("growth") {

TEST_CASE("binomials") {
  CHECK(binomial(6, 3) == 20);
  CHECK(binomial(3, 5) == 0);
  CHECK(binomial(60, 30) == 118264581564861424LL);
  CHECK_THROWS_AS(binomial(200, 100), RangeError);
}

TEST_CASE("classical expansion of 32 in degree 3") {
  auto e = classical_expansion(32, 3);
  REQUIRE(e.terms.size() == 3);
  CHECK(e.terms[0].k == 6);
  CHECK(e.terms[0].t == 3);
  CHECK(e.terms[1].k == 5);
  CHECK(e.terms[1].t == 2);
  CHECK(e.terms[2].k == 2);
  CHECK(e.terms[2].t == 1);
  CHECK(classical_bound(32, 3) == 58);
}

TEST_CASE("rows of the rectangle for 3,4,11") {
  CiRectangle r(DegreeList({3, 4, 11}), 17);
  std::vector<Count> top, mid, bottom;
  for (int c = 0; c <= 16; ++c) {
    top.push_back(r.at(0, c));
    mid.push_back(r.at(1, c));
    bottom.push_back(r.at(2, c));
  }
  CHECK(top == std::vector<Count>{1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 0, 0, 0, 0, 0, 0});
  CHECK(mid == std::vector<Count>{1, 2, 3, 4, 4, 4, 4, 4, 4, 4, 4, 3, 2, 1, 0, 0, 0});
  CHECK(bottom ==
        std::vector<Count>{1, 3, 6, 9, 11, 12, 12, 12, 12, 12, 12, 11, 9, 6, 3, 1, 0});
  CHECK(r.row_label(1) == std::vector<int>{10, 3});
}

TEST_CASE("worked bounds") {
  DegreeList a({3, 4, 11});
  CHECK(lpp_bound(10, 4, a) == 10);
  CHECK(lpp_bound(7, 12, a) == 4);
  CHECK(lpp_bound_oracle(10, 4, a) == 10);
  CHECK(lpp_bound_oracle(7, 12, a) == 4);
  auto e = gk_expansion(10, 4, a);
  REQUIRE(e.terms.size() == 4);
  CHECK(e.terms[0].value == 4);
  CHECK(e.terms[1].value == 4);
  CHECK(e.terms[2].value == 1);
  CHECK(e.terms[3].value == 1);
}

TEST_CASE("edge cases of the bound") {
  DegreeList a({2, 3});
  CHECK(lpp_bound(0, 3, a) == 0);
  CHECK(lpp_bound(1, 0, a) == 2);
  CHECK_THROWS_AS(lpp_bound(2, 0, a), RangeError);
  CHECK_THROWS_AS(gk_expansion(7, 2, a), RangeError);
}

TEST_CASE("complete intersection values against brute force") {
  for (const auto& a : small_lists(3, 5))
    for (int d = 0; d <= 12; ++d) CHECK(ci_value(a, d) == oracle::ci_count(a.degrees(), d));
}

TEST_CASE("exhaustive: greedy bound equals the lex segment oracle") {
  std::size_t cases = 0;
  for (const auto& a : small_lists(3, 6)) {
    for (int d = 1; d <= 10; ++d) {
      Count top = ci_value(a, d);
      for (Count h = 1; h <= top; ++h) {
        CAPTURE(format_degree_list(a));
        CAPTURE(d);
        CAPTURE(h);
        CHECK(lpp_bound(h, d, a) == lpp_bound_oracle(h, d, a));
        ++cases;
      }
    }
  }
  CHECK(cases > 2500);
}

TEST_CASE("classical bound equals the oracle with large powers") {
  DegreeList big({30, 30, 30, 30});
  for (int d = 1; d <= 5; ++d)
    for (Count h = 1; h <= binomial(d + 3, d); ++h)
      CHECK(classical_bound(h, d) == lpp_bound_oracle(h, d, big));
}

TEST_CASE("codimension table in degree 12") {
  DegreeList a({3, 4, 11});
  std::vector<std::pair<std::vector<int>, Count>> table{
      {{2, 3, 7}, 8}, {{2, 2, 8}, 7}, {{2, 1, 9}, 6}, {{2, 0, 10}, 5}, {{1, 3, 8}, 4},
      {{1, 2, 9}, 3}, {{1, 1, 10}, 2}, {{0, 3, 9}, 1}, {{0, 2, 10}, 0}};
  CHECK(standard_monomials_of_degree(a, 12).size() == table.size());
  for (const auto& [e, c] : table) {
    CHECK(codim_from_monomial(Monomial(e), a) == c);
    CHECK(monomial_from_codim(c, 12, a) == Monomial(e));
  }
}

TEST_CASE("codimension counts lex-smaller standard monomials") {
  for (const auto& a : small_lists(3, 4)) {
    for (int d = 0; d <= 9; ++d) {
      auto s = oracle::standard_of_degree(a.degrees(), d);
      for (const auto& m : s) {
        Count smaller = 0;
        for (const auto& o : s)
          if (oracle::lex_greater(m, o)) ++smaller;
        CHECK(codim_from_monomial(Monomial(m), a) == smaller);
        CHECK(monomial_from_codim(smaller, d, a) == Monomial(m));
      }
    }
  }
  CHECK_THROWS(codim_from_monomial(Monomial({3, 0, 0}), DegreeList({3, 4, 11})));
}

TEST_CASE("lpp sequences are exactly Hilbert functions of ideals in the box") {
  for (std::vector<int> box : {std::vector<int>{3, 4}, {2, 3, 3}, {2, 2, 4}, {1, 3, 3}, {5}}) {
    auto seen = oracle::box_hilbert_functions(box);
    DegreeList a(box);
    for (const auto& h : seen) CHECK(is_lpp_sequence(HilbertFunction(h), a));
    // Every sequence bounded by the complete intersection that passes is among them.
    auto ci = ci_hilbert_function(a);
    std::size_t passing = 0;
    std::vector<Count> cur{1};
    std::function<void()> rec = [&] {
      std::vector<Count> full = cur;
      full.push_back(0);
      if (is_lpp_sequence(HilbertFunction(full), a)) {
        ++passing;
        CHECK(seen.count(HilbertFunction(full).values()) == 1);
      }
      int d = static_cast<int>(cur.size());
      if (ci(d) == 0) return;
      for (Count v = 1; v <= ci(d); ++v) {
        cur.push_back(v);
        rec();
        cur.pop_back();
      }
    };
    rec();
    CHECK(passing == seen.size());
  }
}

TEST_CASE("trace rendering") {
  auto text = format_gk_trace(gk_expansion(10, 4, DegreeList({3, 4, 11})));
  CHECK(text.find("(1,4,11):") != std::string::npos);
  CHECK(text.find("[4]") != std::string::npos);
  CHECK(text.substr(text.size() - 3) == "10\n");
  CHECK(format_classical_trace(classical_expansion(32, 3)).find("= 58") != std::string::npos);
}

}  // TEST_SUITE
