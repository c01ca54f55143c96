#pragma once

#include <string>
#include <vector>

#include "lppkit/monomial.hpp"

namespace lppkit {

Count binomial(int k, int t);

struct MacaulayTerm {
  int k;
  int t;
};

struct MacaulayExpansion {
  Count h = 0;
  int d = 0;
  std::vector<MacaulayTerm> terms;
};

MacaulayExpansion classical_expansion(Count h, int d);
Count classical_bound(Count h, int d);

// Coefficients of prod_j (1 + t + ... + t^{e_j}) in degrees 0..upto.
std::vector<Count> gk_coefficients(const std::vector<int>& e, int upto);

// Rows of the rectangle for A: row r uses (a_n - 1, ..., a_{n-r} - 1), so the
// deepest row n-1 is the Hilbert function of the complete intersection.
class CiRectangle {
 public:
  CiRectangle(const DegreeList& a, int max_column);

  int depth_count() const { return static_cast<int>(rows_.size()); }
  int max_column() const { return max_column_; }
  // Zero outside the stored range.
  Count at(int depth, int column) const;
  Count ci(int column) const { return at(depth_count() - 1, column); }
  // The entries (a_n - 1, ...) labelling a row.
  std::vector<int> row_label(int depth) const;

 private:
  DegreeList a_;
  int max_column_;
  std::vector<std::vector<Count>> rows_;
};

// H(R/<x_1^{a_1},...,x_n^{a_n}>, d)
Count ci_value(const DegreeList& a, int d);
HilbertFunction ci_hilbert_function(const DegreeList& a);

struct GKTerm {
  int column;
  int depth;
  Count value;
  int k() const { return column + depth; }
};

struct GKExpansion {
  DegreeList a;
  int d = 0;
  Count h = 0;
  std::vector<GKTerm> terms;
};

GKExpansion gk_expansion(Count h, int d, const DegreeList& a);
Count lpp_bound(Count h, int d, const DegreeList& a);
// The rectangle in columns 0..d+1 with the chosen entries boxed, then the expansion
// and the bound on the last line.
std::string format_gk_trace(const GKExpansion& e);
std::string format_classical_trace(const MacaulayExpansion& e);
Count lpp_bound_oracle(Count h, int d, const DegreeList& a);
bool is_lpp_sequence(const HilbertFunction& s, const DegreeList& a);

// Number of standard degree-d monomials lex-smaller than m.
Count codim_from_monomial(const Monomial& m, const DegreeList& a);
Monomial monomial_from_codim(Count h, int d, const DegreeList& a);

}  // namespace lppkit
