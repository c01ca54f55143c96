#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lppkit/error.hpp"

namespace lppkit {

using Count = std::int64_t;

class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::vector<int> exps);
  static Monomial one(int n) { return Monomial(std::vector<int>(n, 0)); }
  static Monomial power(int n, int var, int e);

  int n() const { return static_cast<int>(exps_.size()); }
  int degree() const { return degree_; }
  int operator[](int i) const { return exps_[i]; }
  const std::vector<int>& exps() const { return exps_; }

  bool divides(const Monomial& other) const;
  // Index of the single variable if this is x_i^e with e > 0, otherwise -1.
  int pure_power_var() const;

  Monomial times(const Monomial& other) const;
  Monomial lcm(const Monomial& other) const;
  // x^max(u - v, 0)
  Monomial quotient(const Monomial& v) const;
  Monomial times_var(int var, int e = 1) const;

  bool operator==(const Monomial& o) const { return exps_ == o.exps_; }

 private:
  std::vector<int> exps_;
  int degree_ = 0;
};

// Lex comparison with x1 > x2 > ... > xn. Throws DimensionError when n differs.
std::strong_ordering lex_compare(const Monomial& a, const Monomial& b);

// Degree first, then lex descending. The canonical generator order.
struct GradedLexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

class DegreeList {
 public:
  DegreeList() = default;
  explicit DegreeList(std::vector<int> degrees);

  int n() const { return static_cast<int>(a_.size()); }
  int operator[](int i) const { return a_[i]; }
  const std::vector<int>& degrees() const { return a_; }
  int omega() const;
  int multiplicity(int j) const;
  // A_2 = {a_2, ..., a_n}
  DegreeList tail() const;
  bool operator==(const DegreeList& o) const { return a_ == o.a_; }

 private:
  std::vector<int> a_;
};

class HilbertFunction {
 public:
  HilbertFunction() : values_{0} {}
  // Trailing zeros are normalized to exactly one.
  explicit HilbertFunction(std::vector<Count> values);

  Count operator()(int d) const;
  const std::vector<Count>& values() const { return values_; }
  int sigma() const;
  int rho() const { return sigma() - 1; }
  bool operator==(const HilbertFunction& o) const { return values_ == o.values_; }

 private:
  std::vector<Count> values_;
};

class MonomialIdeal {
 public:
  MonomialIdeal() = default;
  // Minimalizes the given generators.
  MonomialIdeal(int n, const std::vector<Monomial>& gens);
  static MonomialIdeal unit(int n) { return MonomialIdeal(n, {Monomial::one(n)}); }
  static MonomialIdeal pure_powers(const DegreeList& a);

  int n() const { return n_; }
  const std::vector<Monomial>& gens() const { return gens_; }
  bool contains(const Monomial& m) const;
  bool is_unit() const;
  bool is_artinian() const;
  bool operator==(const MonomialIdeal& o) const { return n_ == o.n_ && gens_ == o.gens_; }

  MonomialIdeal sum(const MonomialIdeal& other) const;
  MonomialIdeal intersect(const MonomialIdeal& other) const;
  bool is_subset_of(const MonomialIdeal& other) const;

 private:
  int n_ = 0;
  std::vector<Monomial> gens_;
};

MonomialIdeal minimalize(int n, const std::vector<Monomial>& gens);

// All degree d monomials in n variables, lex descending.
std::vector<Monomial> monomials_of_degree(int n, int d);
// Same, restricted to exponents below caps (standard modulo pure powers).
std::vector<Monomial> standard_monomials_of_degree(const DegreeList& a, int d);
void for_each_monomial(int n, int d, const std::function<void(const Monomial&)>& f);

bool contains(const MonomialIdeal& ideal, const Monomial& m);
HilbertFunction hilbert_function(const MonomialIdeal& ideal);
MonomialIdeal colon(const MonomialIdeal& j, const MonomialIdeal& i);
bool is_lpp(const MonomialIdeal& ideal, const DegreeList& a);
bool is_lex_segment(const MonomialIdeal& ideal, int d);
std::map<int, std::vector<Monomial>> socle_monomials(const MonomialIdeal& ideal);
MonomialIdeal add_maximal_power(const MonomialIdeal& ideal, int t);

// Least e with x_i^e in the ideal, per variable; nullopt when no power lies in it.
std::vector<std::optional<int>> pure_power_profile(const MonomialIdeal& ideal);
// Sorted profile when every entry is finite.
std::optional<std::vector<int>> sorted_power_profile(const MonomialIdeal& ideal);

// Least degree of a monomial in the ideal outside <x_i^{a_i}>; nullopt if none.
std::optional<int> alpha_of_ideal(const MonomialIdeal& ideal, const DegreeList& a);

// Human format: "x1^2, x2^3, x1*x2^2". "1" is the unit ideal and "0" the zero ideal.
// Variables x, y, z, w are accepted as aliases of x1..x4 when parsing.
std::string format_monomial(const Monomial& m);
std::string format_ideal(const MonomialIdeal& ideal);
MonomialIdeal parse_ideal(const std::string& text, int n = 0);
Monomial parse_monomial(const std::string& text, int n);
std::string ideal_to_json(const MonomialIdeal& ideal);
MonomialIdeal ideal_from_json(const std::string& text);
// Detects JSON by a leading '{'.
MonomialIdeal parse_ideal_any(const std::string& text, int n = 0);

// "1 3 5 1" or "1,3,5,1 0"; trailing zero optional.
HilbertFunction parse_hf(const std::string& text);
std::string format_hf(const HilbertFunction& h);
DegreeList parse_degree_list(const std::string& text);
std::string format_degree_list(const DegreeList& a);

}  // namespace lppkit
