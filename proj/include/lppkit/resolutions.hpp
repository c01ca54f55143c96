#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lppkit/monomial.hpp"

namespace lppkit {

class FieldSpec {
 public:
  // 0 or a prime; anything else throws RangeError.
  FieldSpec() = default;
  explicit FieldSpec(int characteristic);
  int characteristic() const { return p_; }

 private:
  int p_ = 0;
};

// Graded Betti numbers of R/I, beta_{i,j} = dim Tor_i(R/I, k)_j.
class BettiDiagram {
 public:
  BettiDiagram() = default;
  explicit BettiDiagram(int n) : n_(n) {}

  int n() const { return n_; }
  Count get(int i, int j) const;
  void add(int i, int j, Count v);
  // Nonzero entries keyed by (i, j).
  const std::map<std::pair<int, int>, Count>& entries() const { return entries_; }
  Count total(int i) const;
  bool operator==(const BettiDiagram& o) const {
    return n_ == o.n_ && entries_ == o.entries_;
  }

 private:
  int n_ = 0;
  std::map<std::pair<int, int>, Count> entries_;
};

// Per-multidegree Betti numbers: multidegree -> (i -> beta_{i,b}).
using MultigradedBetti = std::map<std::vector<int>, std::map<int, Count>>;

struct BettiOptions {
  std::size_t max_multidegrees = 20000000;
  unsigned threads = 0;  // 0 picks the hardware concurrency
};

MultigradedBetti multigraded_betti(const MonomialIdeal& ideal, const FieldSpec& field,
                                   const BettiOptions& opts = {});
BettiDiagram betti_diagram(const MonomialIdeal& ideal, const FieldSpec& field = FieldSpec(),
                           const BettiOptions& opts = {});
std::map<int, Count> socle_dims(const MonomialIdeal& ideal, const FieldSpec& field = FieldSpec());

// Euler characteristic of the Taylor complex per multidegree, compared with the
// alternating sum of the multigraded Betti numbers.
bool taylor_euler_check(const MonomialIdeal& ideal, const MultigradedBetti& betti);

struct StanleyResult {
  bool ok = true;
  std::optional<int> first_failing_degree;
};
StanleyResult stanley_check(const HilbertFunction& h, const BettiDiagram& b);

bool last_betti_consequences(const HilbertFunction& h, const BettiDiagram& b1,
                             const BettiDiagram& b2);

struct MappingConeRow {
  int j;
  Count beta1;        // beta_{1,j}(R/I)
  Count beta_n_colon; // beta_{n,omega-j}(R/(x:I))
  Count t;
  int multiplicity;   // |j|
};

struct MappingConeReport {
  std::vector<int> powers;
  int omega = 0;
  MonomialIdeal colon_ideal;
  std::vector<MappingConeRow> rows;
  bool bounds_hold = true;        // 0 <= t_j <= |j| for all j
  bool powers_minimal = false;    // every x_i^{p_i} is a minimal generator
  bool all_equal = true;          // t_j = |j| for all j
  bool ok() const { return bounds_hold && (!powers_minimal || all_equal); }
};

MappingConeReport mapping_cone_check(const MonomialIdeal& ideal, const DegreeList& a,
                                     const FieldSpec& field = FieldSpec());
// Powers given per variable: x_i^{powers[i]} must lie in the ideal.
MappingConeReport mapping_cone_check(const MonomialIdeal& ideal, const std::vector<int>& powers,
                                     const FieldSpec& field = FieldSpec());

std::string format_betti(const BettiDiagram& b);
std::string betti_to_json(const BettiDiagram& b);

// Rank of a small integer matrix over Q (p = 0) or F_p.
int matrix_rank(std::vector<std::vector<Count>> m, int p);

}  // namespace lppkit
