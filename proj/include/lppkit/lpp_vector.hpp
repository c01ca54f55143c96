#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lppkit/monomial.hpp"

namespace lppkit {

class LppVector {
 public:
  enum class Kind { kEmpty, kLeaf, kNode };

  LppVector() = default;
  static LppVector empty() { return LppVector(); }
  static LppVector leaf(int d);
  static LppVector node(std::vector<LppVector> children);

  Kind kind() const { return kind_; }
  bool is_empty() const { return kind_ == Kind::kEmpty; }
  bool is_leaf() const { return kind_ == Kind::kLeaf; }
  bool is_node() const { return kind_ == Kind::kNode; }
  int leaf_value() const;
  const std::vector<LppVector>& children() const { return children_; }
  // Leaf 1, Node 1 + child arity, Empty 0.
  int arity() const;
  // l(T)
  int length() const;

  bool operator==(const LppVector& o) const;

 private:
  Kind kind_ = Kind::kEmpty;
  int leaf_ = 0;
  std::vector<LppVector> children_;
};

struct ValidationResult {
  bool ok = true;
  std::string diagnostic;
};

struct VectorStats {
  int length = 0;
  int sigma = 0;
  std::optional<int> alpha;  // nullopt means infinite
  bool is_ci = false;
};

ValidationResult validate(const LppVector& t, const DegreeList& a);
VectorStats stats(const LppVector& t, const DegreeList& a);
LppVector ci_vector(const DegreeList& a);
MonomialIdeal ideal_of_vector(const LppVector& t, const DegreeList& a);
HilbertFunction hf_of_vector(const LppVector& t);

struct Decomposition {
  HilbertFunction s1;
  HilbertFunction s1p;
  std::optional<int> h;  // nullopt when no c_i is negative
  std::vector<Count> e;  // the e_i row used, through the stored range
};

Decomposition decompose(const HilbertFunction& s, const DegreeList& a);
LppVector vector_of_hf(const HilbertFunction& h, const DegreeList& a);
std::optional<int> sequence_alpha(const HilbertFunction& s, const DegreeList& a);
int sequence_sigma(const HilbertFunction& s);

LppVector dual(const LppVector& t, const DegreeList& a);
bool containment_chain_check(const LppVector& t, const DegreeList& a);

// Every valid vector for A in a deterministic order. Throws GuardExceeded past limit.
std::vector<LppVector> all_valid_vectors(const DegreeList& a, std::size_t limit = 1000000);

// Nested bracket lists; "[]" is Empty. Bare integers at node depth are leaves.
// With n = 0 the arity is inferred from the nesting depth.
LppVector parse_vector(const std::string& text, int n = 0);
std::string format_vector(const LppVector& t);

// Two-variable staircase of W_T inside the a1 x a2 box. Row r from the top holds
// x-exponent a1-1-r, column c holds y-exponent c.
std::string render_staircase(const LppVector& t, const DegreeList& a, bool ascii = false);

}  // namespace lppkit
