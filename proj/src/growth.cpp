#include "lppkit/growth.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

namespace lppkit {

namespace {

Count checked_add(Count a, Count b) {
  Count r = 0;
  if (__builtin_add_overflow(a, b, &r)) throw RangeError("integer overflow");
  return r;
}

}  // namespace

Count binomial(int k, int t) {
  if (t < 0 || k < t) return 0;
  t = std::min(t, k - t);
  __int128 r = 1;
  for (int i = 1; i <= t; ++i) {
    r = r * (k - t + i) / i;
    if (r > std::numeric_limits<Count>::max()) throw RangeError("binomial overflow");
  }
  return static_cast<Count>(r);
}

MacaulayExpansion classical_expansion(Count h, int d) {
  if (h < 1) throw RangeError("value must be positive");
  if (d < 1) throw RangeError("degree must be positive");
  MacaulayExpansion out{h, d, {}};
  Count rem = h;
  for (int t = d; t >= 1 && rem > 0; --t) {
    int k = t;
    while (binomial(k + 1, t) <= rem) ++k;
    out.terms.push_back({k, t});
    rem -= binomial(k, t);
  }
  return out;
}

Count classical_bound(Count h, int d) {
  if (h == 0) return 0;
  Count total = 0;
  for (const auto& term : classical_expansion(h, d).terms)
    total = checked_add(total, binomial(term.k + 1, term.t + 1));
  return total;
}

std::vector<Count> gk_coefficients(const std::vector<int>& e, int upto) {
  if (e.empty()) throw DimensionError("need at least one factor");
  if (upto < 0) return {};
  std::vector<Count> poly(upto + 1, 0);
  poly[0] = 1;
  for (int ej : e) {
    if (ej < 0) throw RangeError("factor degree must be nonnegative");
    // Multiply by 1 + t + ... + t^ej via a sliding window sum.
    std::vector<Count> next(upto + 1, 0);
    Count window = 0;
    for (int i = 0; i <= upto; ++i) {
      window = checked_add(window, poly[i]);
      if (i - ej - 1 >= 0) window -= poly[i - ej - 1];
      next[i] = window;
    }
    poly = std::move(next);
  }
  return poly;
}

CiRectangle::CiRectangle(const DegreeList& a, int max_column)
    : a_(a), max_column_(std::max(max_column, 0)) {
  for (int r = 0; r < a.n(); ++r) rows_.push_back(gk_coefficients(row_label(r), max_column_));
}

std::vector<int> CiRectangle::row_label(int depth) const {
  std::vector<int> e;
  for (int i = a_.n() - 1; i >= a_.n() - 1 - depth; --i) e.push_back(a_[i] - 1);
  return e;
}

Count CiRectangle::at(int depth, int column) const {
  if (depth < 0 || depth >= depth_count() || column < 0 || column > max_column_) return 0;
  return rows_[depth][column];
}

Count ci_value(const DegreeList& a, int d) {
  if (d < 0) return 0;
  std::vector<int> e;
  for (int x : a.degrees()) e.push_back(x - 1);
  return gk_coefficients(e, d)[d];
}

HilbertFunction ci_hilbert_function(const DegreeList& a) {
  std::vector<int> e;
  for (int x : a.degrees()) e.push_back(x - 1);
  int top = std::accumulate(e.begin(), e.end(), 0);
  return HilbertFunction(gk_coefficients(e, top + 1));
}

GKExpansion gk_expansion(Count h, int d, const DegreeList& a) {
  if (d < 1) throw RangeError("degree must be positive");
  CiRectangle rect(a, d + 1);
  if (h < 1 || h > rect.ci(d))
    throw RangeError("value " + std::to_string(h) + " outside 1.." + std::to_string(rect.ci(d)) +
                     " in degree " + std::to_string(d));
  GKExpansion out{a, d, h, {}};
  Count rem = h;
  for (int t = d; t >= 1 && rem > 0; --t) {
    int depth = 0;
    for (int r = rect.depth_count() - 1; r >= 0; --r) {
      if (rect.at(r, t) <= rem) {
        depth = r;
        break;
      }
    }
    Count v = rect.at(depth, t);
    out.terms.push_back({t, depth, v});
    rem -= v;
  }
  if (rem != 0) throw Error(ErrorCode::kInternal, "greedy expansion left a remainder");

  const int n = a.n();
  Count sum = 0;
  std::vector<int> per_depth(n, 0);
  for (std::size_t i = 0; i < out.terms.size(); ++i) {
    if (i > 0 && out.terms[i].k() >= out.terms[i - 1].k())
      throw Error(ErrorCode::kInternal, "expansion indices are not strictly decreasing");
    sum += out.terms[i].value;
    ++per_depth[out.terms[i].depth];
  }
  for (int i = 0; i < n; ++i) {
    int idx = n - i - 1;  // 1-based index into A
    if (idx >= 1 && idx <= n && per_depth[i] >= a[idx - 1])
      throw Error(ErrorCode::kInternal, "expansion violates the row-count constraint");
  }
  if (out.terms.empty() || out.terms.back().value == 0)
    throw Error(ErrorCode::kInternal, "expansion ends with a zero term");
  if (sum != h) throw Error(ErrorCode::kInternal, "expansion does not sum to h");
  return out;
}

Count lpp_bound(Count h, int d, const DegreeList& a) {
  if (h < 0 || d < 0) throw RangeError("negative input");
  if (h == 0) return 0;
  if (d == 0) {
    if (h != 1) throw RangeError("degree 0 value must be 1");
    return ci_value(a, 1);
  }
  GKExpansion e = gk_expansion(h, d, a);
  CiRectangle rect(a, d + 1);
  Count total = 0;
  for (const auto& t : e.terms) total = checked_add(total, rect.at(t.depth, t.column + 1));
  return total;
}

Count lpp_bound_oracle(Count h, int d, const DegreeList& a) {
  if (h < 0 || d < 0) throw RangeError("negative input");
  auto standard = standard_monomials_of_degree(a, d);
  Count codim = static_cast<Count>(standard.size());
  if (h > codim)
    throw RangeError("no lex segment leaves " + std::to_string(h) + " monomials in degree " +
                     std::to_string(d));
  std::vector<Monomial> gens(MonomialIdeal::pure_powers(a).gens());
  gens.insert(gens.end(), standard.begin(), standard.begin() + (codim - h));
  MonomialIdeal ideal(a.n(), gens);
  Count out = 0;
  for (const auto& m : standard_monomials_of_degree(a, d + 1))
    if (!ideal.contains(m)) ++out;
  return out;
}

bool is_lpp_sequence(const HilbertFunction& s, const DegreeList& a) {
  if (s(0) != 1) return false;
  const int len = static_cast<int>(s.values().size());
  for (int i = 0; i < len; ++i) {
    if (s(i) > ci_value(a, i)) return false;
    if (s(i + 1) > lpp_bound(s(i), i, a)) return false;
  }
  return true;
}

Count codim_from_monomial(const Monomial& m, const DegreeList& a) {
  if (m.n() != a.n()) throw DimensionError("monomial and degree list differ in length");
  for (int i = 0; i < a.n(); ++i)
    if (m[i] >= a[i]) throw RangeError("monomial is not standard modulo the pure powers");
  const int n = a.n();
  CiRectangle rect(a, m.degree());
  Count h = 0;
  int column = m.degree();
  for (int i = 1; i <= n - 1; ++i) {
    for (int j = 0; j < m[i - 1]; ++j) h += rect.at(n - 1 - i, column--);
  }
  return h;
}

Monomial monomial_from_codim(Count h, int d, const DegreeList& a) {
  if (d < 0) throw RangeError("negative degree");
  const int n = a.n();
  CiRectangle rect(a, d);
  if (h < 0 || h >= rect.ci(d))
    throw RangeError("codimension " + std::to_string(h) + " outside 0.." +
                     std::to_string(rect.ci(d) - 1) + " in degree " + std::to_string(d));
  std::vector<int> e(n, 0);
  int rem_degree = d;
  for (int i = 1; i <= n - 1; ++i) {
    const int depth = n - 1 - i;
    int best = -1;
    Count below = 0;
    Count best_below = 0;
    // below(e) counts completions with a smaller exponent at this position.
    for (int x = 0; x <= std::min(a[i - 1] - 1, rem_degree); ++x) {
      if (below > h) break;
      if (rect.at(depth, rem_degree - x) > 0) {
        best = x;
        best_below = below;
      }
      below += rect.at(depth, rem_degree - x);
    }
    if (best < 0) throw Error(ErrorCode::kInternal, "unranking failed");
    e[i - 1] = best;
    h -= best_below;
    rem_degree -= best;
  }
  e[n - 1] = rem_degree;
  if (h != 0 || rem_degree >= a[n - 1]) throw Error(ErrorCode::kInternal, "unranking failed");
  return Monomial(e);
}

std::string format_gk_trace(const GKExpansion& e) {
  const int d = e.d;
  CiRectangle rect(e.a, d + 1);
  std::vector<std::vector<std::string>> rows;
  const int n = e.a.n();
  std::vector<std::string> head{""};
  for (int c = 0; c <= d + 1; ++c) head.push_back(std::to_string(c));
  rows.push_back(head);
  for (int r = 0; r < rect.depth_count(); ++r) {
    // Labelled by the type of the complete intersection whose h-vector the row is.
    std::string label = "(";
    for (int i = 0; i < n; ++i)
      label += (i ? "," : "") + std::to_string(i >= n - 1 - r ? e.a[i] : 1);
    std::vector<std::string> row{label + "):"};
    for (int c = 0; c <= d + 1; ++c) {
      std::string cell = std::to_string(rect.at(r, c));
      for (const auto& t : e.terms)
        if (t.depth == r && t.column == c) cell = "[" + cell + "]";
      row.push_back(cell);
    }
    rows.push_back(row);
  }
  std::vector<std::size_t> w(d + 3, 0);
  for (const auto& row : rows)
    for (std::size_t c = 0; c < row.size(); ++c) w[c] = std::max(w[c], row[c].size());
  std::string out;
  for (const auto& row : rows) {
    std::string line = row[0] + std::string(w[0] - row[0].size(), ' ');
    for (std::size_t c = 1; c < row.size(); ++c)
      line += std::string(w[c] - row[c].size() + 2, ' ') + row[c];
    out += line + "\n";
  }
  std::string lhs, rhs;
  Count bound = 0;
  for (const auto& t : e.terms) {
    lhs += (lhs.empty() ? "" : " + ") + std::to_string(t.value);
    Count up = rect.at(t.depth, t.column + 1);
    rhs += (rhs.empty() ? "" : " + ") + std::to_string(up);
    bound += up;
  }
  out += std::to_string(e.h) + " = " + lhs + "\n";
  out += "bound = " + rhs + " = " + std::to_string(bound) + "\n";
  out += std::to_string(bound) + "\n";
  return out;
}

std::string format_classical_trace(const MacaulayExpansion& e) {
  std::string lhs, rhs;
  Count bound = 0;
  for (const auto& t : e.terms) {
    lhs += (lhs.empty() ? "" : " + ") + std::string("C(") + std::to_string(t.k) + "," +
           std::to_string(t.t) + ")";
    rhs += (rhs.empty() ? "" : " + ") + std::string("C(") + std::to_string(t.k + 1) + "," +
           std::to_string(t.t + 1) + ")";
    bound = checked_add(bound, binomial(t.k + 1, t.t + 1));
  }
  std::string out = std::to_string(e.h) + " = " + lhs + "\n";
  out += "bound = " + rhs + " = " + std::to_string(bound) + "\n";
  out += std::to_string(bound) + "\n";
  return out;
}

}  // namespace lppkit
