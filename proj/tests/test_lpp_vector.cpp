#include <random>

#include "doctest.h"
#include "lppkit/growth.hpp"
#include "lppkit/lpp_vector.hpp"
#include "oracles.hpp"

using namespace lppkit;

namespace {

const char* kRunning = "[[1,2],[1,3,4],[2,3,6,6],[5,6,6,6]]";

std::vector<DegreeList> lists_up_to(int max_n, int max_entry) {
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

int ci_sigma(const DegreeList& a) {
  int s = 1;
  for (int x : a.degrees()) s += x - 1;
  return s;
}

}  // namespace

TEST_SUITE("lpp_vectors") {

TEST_CASE("parse and format") {
  auto t = parse_vector(kRunning);
  CHECK(t.arity() == 3);
  CHECK(t.length() == 4);
  CHECK(format_vector(t) == kRunning);
  CHECK(format_vector(parse_vector("((1,2),(1,3,4))")) == "[[1,2],[1,3,4]]");
  CHECK(parse_vector("[]").is_empty());
  CHECK(parse_vector("[1,3,4]", 2).arity() == 2);
  CHECK(parse_vector("[4]", 1).is_leaf());
  CHECK_THROWS_AS(parse_vector("[1,2]", 1), ParseError);
  CHECK_THROWS_AS(parse_vector("[1,3"), ParseError);
}

TEST_CASE("validation of the running example and its neighbours") {
  DegreeList a({4, 4, 6});
  CHECK(validate(parse_vector(kRunning), a).ok);
  CHECK(validate(parse_vector("[[1,3,4],[2,3,6,6],[5,6,6,6],[6,6,6,6]]"), a).ok);
  auto five = parse_vector("[[1,2],[1,3,4],[2,3,6,6],[5,6,6,6],[6,6,6,6]]");
  CHECK_FALSE(validate(five, a).ok);
  CHECK_FALSE(validate(five, DegreeList({5, 5, 6})).ok);
  CHECK_FALSE(validate(five, DegreeList({5, 6, 6})).ok);
  for (const char* s : {"[2,3,6,6]", "[5,6,6,6]", "[6,6,6,6]"}) {
    CHECK(validate(parse_vector(s), DegreeList({5, 6})).ok);
    CHECK_FALSE(validate(parse_vector(s), DegreeList({4, 7})).ok);
  }
  auto bad = validate(parse_vector("[[2,1],[1,3,4]]"), a);
  CHECK_FALSE(bad.ok);
  CHECK(bad.diagnostic.find("T_1") != std::string::npos);
  CHECK_THROWS_AS(validate(parse_vector("[1,2]"), a), DimensionError);
}

TEST_CASE("stats of the children in the running example") {
  DegreeList a2({4, 6});
  auto s1 = stats(parse_vector("[1,2]"), a2);
  auto s2 = stats(parse_vector("[1,3,4]"), a2);
  auto s3 = stats(parse_vector("[2,3,6,6]"), a2);
  auto s4 = stats(parse_vector("[5,6,6,6]"), a2);
  auto s5 = stats(parse_vector("[6,6,6,6]"), a2);
  CHECK(s1.sigma == 2);
  CHECK(s2.alpha == 3);
  CHECK(s2.sigma == 4);
  CHECK(s3.alpha == 5);
  CHECK(s3.sigma == 7);
  CHECK(s4.alpha == 8);
  CHECK(s4.sigma == 8);
  CHECK_FALSE(s5.alpha.has_value());
  CHECK(s5.is_ci);
}

TEST_CASE("ideal and Hilbert function of the running example") {
  DegreeList a({4, 4, 6});
  auto t = parse_vector(kRunning);
  CHECK(hf_of_vector(t) == parse_hf("1 3 6 10 13 10 5 3 0"));
  CHECK(hilbert_function(ideal_of_vector(t, a)) == hf_of_vector(t));
  CHECK(hf_of_vector(parse_vector("[1,3,4]")) == parse_hf("1 2 3 2 0"));
  CHECK(hf_of_vector(LppVector::leaf(4)) == parse_hf("1 1 1 1 0"));
  auto s = stats(t, a);
  CHECK(s.sigma == 8);
  CHECK(s.alpha == 5);
  CHECK(sequence_alpha(hf_of_vector(t), a) == 5);
  CHECK(alpha_of_ideal(ideal_of_vector(t, a), a) == 5);
}

TEST_CASE("two-variable ideals") {
  DegreeList a({5, 7});
  CHECK(format_ideal(ideal_of_vector(parse_vector("[1,3,4,7,7]"), a)) ==
        "x1^5, x1^4*x2, x1^3*x2^3, x1^2*x2^4, x2^7");
  DegreeList b({5, 6});
  CHECK(format_ideal(ideal_of_vector(parse_vector("[3,5,6,6,6]"), b)) ==
        "x1^5, x2^6, x1^4*x2^3, x1^3*x2^5");
  auto six = parse_vector("[2,4,5,5,5,5]");
  CHECK_FALSE(validate(six, b).ok);
  CHECK(hf_of_vector(six) == hf_of_vector(parse_vector("[3,5,6,6,6]")));
}

TEST_CASE("decomposition of the running example") {
  DegreeList a({4, 4, 6});
  auto d = decompose(parse_hf("1 3 6 10 13 10 5 3 0"), a);
  CHECK(d.s1 == parse_hf("1 3 6 9 6 2 1 0"));
  CHECK(d.s1p == parse_hf("1 2 3 4 4 4 3 2 0"));
  std::vector<Count> e(d.e.begin(), d.e.begin() + 10);
  CHECK(e == std::vector<Count>{1, 2, 3, 4, 4, 4, 3, 2, 1, 0});
  CHECK(vector_of_hf(parse_hf("1 2 3 4 4 4 3 2 0"), DegreeList({4, 6})) ==
        parse_vector("[5,6,6,6]"));
  CHECK_THROWS_AS(decompose(parse_hf("1 1 1 0"), a), InvalidSequenceError);
}

TEST_CASE("bijection on the running example") {
  DegreeList a({4, 4, 6});
  CHECK(format_vector(vector_of_hf(parse_hf("1 3 6 10 13 10 5 3"), a)) == kRunning);
  CHECK(vector_of_hf(ci_hilbert_function(a), a) == ci_vector(a));
  CHECK_THROWS_AS(vector_of_hf(parse_hf("1 3 7"), a), InvalidSequenceError);
}

TEST_CASE("dual of the two-variable example") {
  DegreeList a({5, 7});
  auto t = parse_vector("[1,3,4,7,7]");
  auto d = dual(t, a);
  CHECK(format_vector(d) == "[3,4,6]");
  CHECK(dual(d, a) == t);
  CHECK(format_ideal(ideal_of_vector(d, a)) == "x1^3, x1^2*x2^3, x1*x2^4, x2^6");
  CHECK(dual(ci_vector(a), a).is_empty());
  CHECK(dual(LppVector::empty(), a) == ci_vector(a));
  CHECK(ideal_of_vector(LppVector::empty(), a).is_unit());
}

TEST_CASE("staircase of the two-variable example") {
  auto s = render_staircase(parse_vector("[1,3,4,7,7]"), DegreeList({5, 7}), true);
  CHECK(s ==
        "* o o o o o o\n"
        "* * * o o o o\n"
        "* * * * o o o\n"
        "* * * * * * *\n"
        "* * * * * * *\n");
  CHECK_THROWS_AS(render_staircase(parse_vector(kRunning), DegreeList({4, 4, 6})), DimensionError);
}

TEST_CASE("containment chain") {
  CHECK(containment_chain_check(parse_vector(kRunning), DegreeList({4, 4, 6})));
  CHECK(containment_chain_check(ci_vector(DegreeList({2, 3, 3})), DegreeList({2, 3, 3})));
}

TEST_CASE("exhaustive invariants for n <= 3, entries <= 4") {
  std::size_t total = 0;
  for (const auto& a : lists_up_to(3, 4)) {
    CAPTURE(format_degree_list(a));
    auto all = all_valid_vectors(a);
    const int sci = ci_sigma(a);
    for (const auto& t : all) {
      CAPTURE(format_vector(t));
      ++total;
      REQUIRE(validate(t, a).ok);
      auto w = ideal_of_vector(t, a);
      auto h = hf_of_vector(t);
      auto st = stats(t, a);
      // Hilbert function, alpha and sigma agree with the ideal.
      CHECK(hilbert_function(w) == h);
      CHECK(alpha_of_ideal(w, a) == st.alpha);
      CHECK(h.sigma() == st.sigma);
      CHECK(sequence_alpha(h, a) == st.alpha);
      if (!st.is_ci) CHECK(*st.alpha <= st.sigma);
      // The ideal is lex plus powers for its own profile, bounded by A.
      auto prof = sorted_power_profile(w);
      REQUIRE(prof.has_value());
      auto raw = pure_power_profile(w);
      std::vector<int> b;
      for (int i = 0; i < a.n(); ++i) {
        b.push_back(*raw[i]);
        CHECK(b.back() <= a[i]);
      }
      CHECK(is_lpp(w, DegreeList(*prof)) == std::is_sorted(b.begin(), b.end()));
      if (std::is_sorted(b.begin(), b.end())) CHECK(is_lpp(w, DegreeList(b)));
      // Bijection.
      CHECK(is_lpp_sequence(h, a));
      CHECK(vector_of_hf(h, a) == t);
      if (h(1) >= 2 && a.n() > 1) {
        auto d = decompose(h, a);
        CHECK(is_lpp_sequence(d.s1, a));
        CHECK(is_lpp_sequence(d.s1p, a));
        for (int i = 0; i <= h.sigma() + 1; ++i) CHECK(h(i) == d.s1p(i) + (i ? d.s1(i - 1) : 0));
        if (h(1) == a.n() && st.alpha) {
          auto a1 = sequence_alpha(d.s1, a);
          REQUIRE(a1.has_value());
          CHECK(*a1 < *st.alpha);
        }
      }
      // Dual, residual and the alpha/sigma identity.
      auto ts = dual(t, a);
      CHECK(validate(ts, a).ok);
      CHECK(dual(ts, a) == t);
      auto pp = MonomialIdeal::pure_powers(a);
      CHECK(colon(pp, w) == ideal_of_vector(ts, a));
      auto ss = stats(ts, a);
      if (st.alpha) CHECK(*st.alpha + ss.sigma == sci);
      if (ss.alpha) CHECK(st.sigma + *ss.alpha == sci);
      if (t.is_node()) CHECK(containment_chain_check(t, a));
    }
  }
  MESSAGE("valid vectors checked: " << total);
  CHECK(total > 300);
}

TEST_CASE("residual brute force for 2,3,4") {
  DegreeList a({2, 3, 4});
  auto pp = MonomialIdeal::pure_powers(a);
  std::vector<oracle::Exps> ppg;
  for (const auto& g : pp.gens()) ppg.push_back(g.exps());
  for (const auto& t : all_valid_vectors(a)) {
    auto w = ideal_of_vector(t, a);
    std::vector<oracle::Exps> wg;
    for (const auto& g : w.gens()) wg.push_back(g.exps());
    auto d = ideal_of_vector(dual(t, a), a);
    for (int deg = 0; deg <= 7; ++deg)
      oracle::all_of_degree(3, deg, [&](const oracle::Exps& m) {
        CHECK(d.contains(Monomial(m)) == oracle::colon_member(ppg, wg, m));
      });
  }
}

TEST_CASE("sampled pairs: sigma below alpha flips under the dual") {
  std::mt19937 rng(5);
  for (const auto& a : {DegreeList({3, 4}), DegreeList({2, 3, 3}), DegreeList({3, 3, 4})}) {
    auto all = all_valid_vectors(a);
    std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
    int checked = 0;
    for (int k = 0; k < 4000; ++k) {
      const auto& s = all[pick(rng)];
      const auto& t = all[pick(rng)];
      auto ss = stats(s, a), st = stats(t, a);
      if (ss.is_ci) continue;  // both duals empty, the strict inequality degenerates
      if (st.alpha && !(ss.sigma < *st.alpha)) continue;
      auto sd = stats(dual(s, a), a), td = stats(dual(t, a), a);
      REQUIRE(sd.alpha.has_value());
      CHECK(td.sigma < *sd.alpha);
      ++checked;
    }
    CHECK(checked > 0);
  }
}

TEST_CASE("generation is complete") {
  // Valid vectors correspond to lpp sequences, which are exactly the Hilbert
  // functions of order ideals in the box.
  for (std::vector<int> box : {std::vector<int>{3, 4}, {2, 3, 3}, {2, 2, 4}, {1, 3, 3}, {5}}) {
    auto seen = oracle::box_hilbert_functions(box);
    auto all = all_valid_vectors(DegreeList(box));
    CHECK(all.size() == seen.size());
    for (const auto& t : all) CHECK(seen.count(hf_of_vector(t).values()) == 1);
  }
}

TEST_CASE("generation guard") {
  CHECK_THROWS_AS(all_valid_vectors(DegreeList({4, 4, 4}), 5), GuardExceeded);
}

}  // TEST_SUITE
