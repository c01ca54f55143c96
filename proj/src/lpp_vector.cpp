#include "lppkit/lpp_vector.hpp"

#include <algorithm>
#include <cctype>

#include "lppkit/growth.hpp"

namespace lppkit {

LppVector LppVector::leaf(int d) {
  if (d < 1) throw InvalidVectorError("leaf entries must be positive");
  LppVector v;
  v.kind_ = Kind::kLeaf;
  v.leaf_ = d;
  return v;
}

LppVector LppVector::node(std::vector<LppVector> children) {
  if (children.empty()) return empty();
  const int ar = children.front().arity();
  for (const auto& c : children) {
    if (c.is_empty()) throw InvalidVectorError("empty vector inside a node");
    if (c.arity() != ar) throw DimensionError("children of a node differ in arity");
  }
  LppVector v;
  v.kind_ = Kind::kNode;
  v.children_ = std::move(children);
  return v;
}

int LppVector::leaf_value() const {
  if (!is_leaf()) throw InvalidVectorError("not a leaf");
  return leaf_;
}

int LppVector::arity() const {
  switch (kind_) {
    case Kind::kEmpty:
      return 0;
    case Kind::kLeaf:
      return 1;
    case Kind::kNode:
      return 1 + children_.front().arity();
  }
  return 0;
}

int LppVector::length() const {
  switch (kind_) {
    case Kind::kEmpty:
      return 0;
    case Kind::kLeaf:
      return leaf_;
    case Kind::kNode:
      return static_cast<int>(children_.size());
  }
  return 0;
}

bool LppVector::operator==(const LppVector& o) const {
  return kind_ == o.kind_ && leaf_ == o.leaf_ && children_ == o.children_;
}

namespace {

void check_arity(const LppVector& t, const DegreeList& a) {
  if (!t.is_empty() && t.arity() != a.n())
    throw DimensionError("vector has arity " + std::to_string(t.arity()) +
                         " but the degree list has " + std::to_string(a.n()) + " entries");
}

bool is_ci_unchecked(const LppVector& t, const DegreeList& a) {
  if (t.is_empty()) return false;
  if (t.is_leaf()) return t.leaf_value() == a[0];
  if (t.length() != a[0]) return false;
  DegreeList a2 = a.tail();
  return std::all_of(t.children().begin(), t.children().end(),
                     [&](const LppVector& c) { return is_ci_unchecked(c, a2); });
}

// Stats by the recursive definition, without validity checks. Also used on duals.
VectorStats stats_unchecked(const LppVector& t, const DegreeList& a) {
  VectorStats s;
  if (t.is_empty()) {
    s.alpha = 0;
    return s;
  }
  s.length = t.length();
  s.is_ci = is_ci_unchecked(t, a);
  if (t.is_leaf()) {
    s.sigma = t.leaf_value();
    if (!s.is_ci) s.alpha = t.leaf_value();
    return s;
  }
  DegreeList a2 = a.tail();
  const auto& ch = t.children();
  const LppVector& last = ch.back();
  VectorStats last_stats = stats_unchecked(last, a2);
  s.sigma = last_stats.sigma;
  if (last_stats.is_ci) {
    int copies = static_cast<int>(std::count(ch.begin(), ch.end(), last));
    s.sigma += copies - 1;
  }
  if (s.is_ci) return s;
  if (s.length < a[0]) {
    s.alpha = s.length;
  } else {
    VectorStats first = stats_unchecked(ch.front(), a2);
    if (first.alpha) s.alpha = s.length + *first.alpha - 1;
  }
  return s;
}

ValidationResult validate_rec(const LppVector& t, const DegreeList& a, const std::string& path) {
  auto fail = [&](const std::string& msg) {
    return ValidationResult{false, (path.empty() ? std::string("T") : path) + ": " + msg};
  };
  if (t.is_leaf()) {
    if (t.leaf_value() > a[0])
      return fail("leaf " + std::to_string(t.leaf_value()) + " exceeds a_1 = " +
                  std::to_string(a[0]));
    return {};
  }
  const int u = t.length();
  if (u > a[0])
    return fail("length " + std::to_string(u) + " exceeds a_1 = " + std::to_string(a[0]));
  DegreeList a2 = a.tail();
  const auto& ch = t.children();
  for (int i = 0; i < u; ++i) {
    std::string sub = (path.empty() ? std::string("T") : path) + "_" + std::to_string(i + 1);
    auto r = validate_rec(ch[i], a2, sub);
    if (!r.ok) return r;
  }
  if (u > ch.back().length())
    return fail("length " + std::to_string(u) + " exceeds l(T_u) = " +
                std::to_string(ch.back().length()));
  for (int i = 0; i + 1 < u; ++i) {
    VectorStats si = stats_unchecked(ch[i], a2);
    VectorStats sj = stats_unchecked(ch[i + 1], a2);
    if (sj.alpha && si.sigma >= *sj.alpha)
      return fail("sigma(T_" + std::to_string(i + 1) + ") = " + std::to_string(si.sigma) +
                  " is not below alpha(T_" + std::to_string(i + 2) +
                  ") = " + std::to_string(*sj.alpha));
  }
  return {};
}

void require_valid(const LppVector& t, const DegreeList& a) {
  auto r = validate(t, a);
  if (!r.ok) throw InvalidVectorError(r.diagnostic);
}

MonomialIdeal ideal_unchecked(const LppVector& t, int n) {
  if (t.is_empty()) return MonomialIdeal::unit(n);
  if (t.is_leaf()) return MonomialIdeal(1, {Monomial::power(1, 0, t.leaf_value())});
  const int u = t.length();
  std::vector<Monomial> gens{Monomial::power(n, 0, u)};
  for (int i = 0; i < u; ++i) {
    MonomialIdeal sub = ideal_unchecked(t.children()[i], n - 1);
    for (const auto& g : sub.gens()) {
      std::vector<int> e{u - 1 - i};
      e.insert(e.end(), g.exps().begin(), g.exps().end());
      gens.emplace_back(e);
    }
  }
  return MonomialIdeal(n, gens);
}

}  // namespace

ValidationResult validate(const LppVector& t, const DegreeList& a) {
  check_arity(t, a);
  if (t.is_empty()) return {};
  return validate_rec(t, a, "");
}

VectorStats stats(const LppVector& t, const DegreeList& a) {
  require_valid(t, a);
  return stats_unchecked(t, a);
}

LppVector ci_vector(const DegreeList& a) {
  if (a.n() == 1) return LppVector::leaf(a[0]);
  return LppVector::node(std::vector<LppVector>(a[0], ci_vector(a.tail())));
}

MonomialIdeal ideal_of_vector(const LppVector& t, const DegreeList& a) {
  require_valid(t, a);
  return ideal_unchecked(t, a.n());
}

HilbertFunction hf_of_vector(const LppVector& t) {
  if (t.is_empty()) return HilbertFunction();
  if (t.is_leaf()) return HilbertFunction(std::vector<Count>(t.leaf_value(), 1));
  const int u = t.length();
  std::vector<HilbertFunction> parts;
  std::size_t len = 0;
  for (int j = 0; j < u; ++j) {
    parts.push_back(hf_of_vector(t.children()[j]));
    len = std::max(len, parts.back().values().size() + (u - 1 - j));
  }
  std::vector<Count> v(len, 0);
  for (std::size_t i = 0; i < len; ++i)
    for (int j = 0; j < u; ++j) v[i] += parts[j](static_cast<int>(i) - (u - 1 - j));
  return HilbertFunction(v);
}

Decomposition decompose(const HilbertFunction& s, const DegreeList& a) {
  if (s(1) < 2) throw InvalidSequenceError("decomposition needs S(1) >= 2");
  if (!is_lpp_sequence(s, a)) throw InvalidSequenceError("not an lpp sequence for A");
  const int n = a.n();
  const int b1 = static_cast<int>(s(1));
  if (b1 - 1 > n) throw InvalidSequenceError("S(1) exceeds the number of variables");
  std::vector<int> factors;
  for (int i = n - 1; i >= n - (b1 - 1); --i) factors.push_back(a[i] - 1);
  int top = static_cast<int>(s.values().size()) + 2;
  for (int f : factors) top += f;
  std::vector<Count> e = gk_coefficients(factors, top);

  Decomposition out;
  std::optional<int> h;
  std::vector<Count> s1;
  for (int i = 0; i + 1 <= top; ++i) {
    Count c = s(i + 1) - e[i + 1];
    if (c < 0) {
      h = i;
      break;
    }
    s1.push_back(c);
  }
  std::vector<Count> s1p;
  for (int i = 0; i <= top; ++i) s1p.push_back(!h || i <= *h ? e[i] : s(i));
  out.s1 = HilbertFunction(s1);
  out.s1p = HilbertFunction(s1p);
  out.h = h;
  while (!e.empty() && e.back() == 0) e.pop_back();
  e.push_back(0);
  out.e = e;
  return out;
}

namespace {

LppVector vector_of_hf_rec(const HilbertFunction& h, const DegreeList& a) {
  const int n = a.n();
  if (n == 1) {
    int d = h.sigma();
    for (int i = 0; i < d; ++i)
      if (h(i) != 1) throw InvalidSequenceError("one-variable sequence must be 1 ... 1 0");
    if (static_cast<int>(h.values().size()) != d + 1)
      throw InvalidSequenceError("one-variable sequence must be 1 ... 1 0");
    if (d > a[0]) throw InvalidSequenceError("one-variable sequence exceeds a_1");
    return LppVector::leaf(d);
  }
  if (h(1) < n) return LppVector::node({vector_of_hf_rec(h, a.tail())});
  Decomposition dec = decompose(h, a);
  LppVector first = vector_of_hf_rec(dec.s1, a);
  std::vector<LppVector> ch = first.children();
  ch.push_back(vector_of_hf_rec(dec.s1p, a.tail()));
  return LppVector::node(std::move(ch));
}

}  // namespace

LppVector vector_of_hf(const HilbertFunction& h, const DegreeList& a) {
  if (!is_lpp_sequence(h, a)) throw InvalidSequenceError("not an lpp sequence for A");
  LppVector t = vector_of_hf_rec(h, a);
  if (hf_of_vector(t) != h) throw Error(ErrorCode::kInternal, "vector does not reproduce H");
  return t;
}

std::optional<int> sequence_alpha(const HilbertFunction& s, const DegreeList& a) {
  HilbertFunction ci = ci_hilbert_function(a);
  const int top = std::max<int>(static_cast<int>(ci.values().size()),
                                static_cast<int>(s.values().size()));
  for (int i = 0; i < top; ++i)
    if (s(i) < ci(i)) return i;
  return std::nullopt;
}

int sequence_sigma(const HilbertFunction& s) { return s.sigma(); }

LppVector dual(const LppVector& t, const DegreeList& a) {
  if (t.is_empty()) return ci_vector(a);
  require_valid(t, a);
  if (t.is_leaf()) {
    if (t.leaf_value() < a[0]) return LppVector::leaf(a[0] - t.leaf_value());
    return LppVector::empty();
  }
  DegreeList a2 = a.tail();
  std::vector<LppVector> ch;
  const auto& src = t.children();
  for (auto it = src.rbegin(); it != src.rend(); ++it) {
    LppVector d = dual(*it, a2);
    if (!d.is_empty()) ch.push_back(std::move(d));
  }
  for (int i = t.length(); i < a[0]; ++i) ch.push_back(ci_vector(a2));
  if (ch.empty()) return LppVector::empty();
  return LppVector::node(std::move(ch));
}

bool containment_chain_check(const LppVector& t, const DegreeList& a) {
  require_valid(t, a);
  if (!t.is_node()) throw InvalidVectorError("containment chain needs a node");
  const auto& ch = t.children();
  std::size_t end = ch.size();
  while (end > 1 && ch[end - 2] == ch.back()) --end;
  DegreeList a2 = a.tail();
  for (std::size_t i = 0; i + 1 < end; ++i) {
    MonomialIdeal wi = ideal_unchecked(ch[i], a2.n());
    MonomialIdeal wj = ideal_unchecked(ch[i + 1], a2.n());
    if (!wj.is_subset_of(wi) || wi.is_subset_of(wj)) return false;
  }
  return true;
}

namespace {

struct Candidate {
  LppVector v;
  VectorStats s;
};

void extend(const std::vector<Candidate>& pool, int a1, std::vector<int>& chosen,
            std::vector<LppVector>& out, std::size_t limit) {
  if (!chosen.empty()) {
    const Candidate& last = pool[chosen.back()];
    if (static_cast<int>(chosen.size()) <= last.s.length) {
      std::vector<LppVector> ch;
      for (int idx : chosen) ch.push_back(pool[idx].v);
      out.push_back(LppVector::node(std::move(ch)));
      if (out.size() > limit) throw GuardExceeded("too many vectors");
    }
  }
  if (static_cast<int>(chosen.size()) == a1) return;
  for (std::size_t j = 0; j < pool.size(); ++j) {
    if (!chosen.empty()) {
      const Candidate& prev = pool[chosen.back()];
      if (pool[j].s.alpha && prev.s.sigma >= *pool[j].s.alpha) continue;
    }
    chosen.push_back(static_cast<int>(j));
    extend(pool, a1, chosen, out, limit);
    chosen.pop_back();
  }
}

}  // namespace

std::vector<LppVector> all_valid_vectors(const DegreeList& a, std::size_t limit) {
  std::vector<LppVector> out;
  if (a.n() == 1) {
    for (int d = 1; d <= a[0]; ++d) out.push_back(LppVector::leaf(d));
    return out;
  }
  DegreeList a2 = a.tail();
  std::vector<Candidate> pool;
  for (auto& v : all_valid_vectors(a2, limit)) {
    VectorStats s = stats_unchecked(v, a2);
    pool.push_back({std::move(v), s});
  }
  std::vector<int> chosen;
  extend(pool, a[0], chosen, out, limit);
  return out;
}

namespace {

struct RawNode {
  bool is_int = false;
  int value = 0;
  std::vector<RawNode> items;
};

class VectorParser {
 public:
  explicit VectorParser(const std::string& s) : s_(s) {}

  RawNode parse() {
    skip();
    RawNode r = item();
    skip();
    if (pos_ != s_.size()) throw ParseError("unexpected '" + rest() + "' after vector");
    return r;
  }

 private:
  std::string rest() const { return s_.substr(pos_, 12); }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  RawNode item() {
    skip();
    if (pos_ >= s_.size()) throw ParseError("vector text ends early");
    char c = s_[pos_];
    if (c == '[' || c == '(') {
      char close = c == '[' ? ']' : ')';
      ++pos_;
      RawNode r;
      skip();
      if (pos_ < s_.size() && s_[pos_] == close) {
        ++pos_;
        return r;
      }
      while (true) {
        r.items.push_back(item());
        skip();
        if (pos_ >= s_.size()) throw ParseError("missing '" + std::string(1, close) + "'");
        if (s_[pos_] == ',') {
          ++pos_;
          continue;
        }
        if (s_[pos_] == close) {
          ++pos_;
          return r;
        }
        throw ParseError("unexpected '" + rest() + "' in vector");
      }
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (pos_ - start > 6) throw ParseError("number too large in vector");
      RawNode r;
      r.is_int = true;
      r.value = std::stoi(s_.substr(start, pos_ - start));
      return r;
    }
    throw ParseError("unexpected '" + rest() + "' in vector");
  }

  const std::string& s_;
  std::size_t pos_ = 0;
};

int raw_depth(const RawNode& r) {
  if (r.is_int) return 0;
  int d = 0;
  for (const auto& c : r.items) d = std::max(d, raw_depth(c));
  return d + 1;
}

// Builds a vector of the given arity. A list at arity 1 holds a single integer;
// a bare integer at arity > 1 becomes a chain of single-child nodes.
LppVector build(const RawNode& r, int arity) {
  if (r.is_int) {
    if (arity == 1) return LppVector::leaf(r.value);
    RawNode wrap;
    wrap.items.push_back(r);
    return build(wrap, arity);
  }
  if (arity == 1) {
    if (r.items.size() != 1 || !r.items[0].is_int)
      throw ParseError("a one-variable vector is a single integer");
    return LppVector::leaf(r.items[0].value);
  }
  if (r.items.empty()) throw ParseError("empty list inside a vector");
  std::vector<LppVector> ch;
  for (const auto& c : r.items) {
    if (c.is_int && arity == 2) {
      ch.push_back(LppVector::leaf(c.value));
    } else {
      ch.push_back(build(c, arity - 1));
    }
  }
  return LppVector::node(std::move(ch));
}

}  // namespace

LppVector parse_vector(const std::string& text, int n) {
  RawNode r = VectorParser(text).parse();
  if (!r.is_int && r.items.empty()) return LppVector::empty();
  if (n == 0) n = raw_depth(r) + 1;
  if (n == 1 && r.is_int) return LppVector::leaf(r.value);
  return build(r, n);
}

std::string format_vector(const LppVector& t) {
  if (t.is_empty()) return "[]";
  if (t.is_leaf()) return std::to_string(t.leaf_value());
  std::string out = "[";
  for (std::size_t i = 0; i < t.children().size(); ++i) {
    if (i) out += ',';
    out += format_vector(t.children()[i]);
  }
  return out + "]";
}

std::string render_staircase(const LppVector& t, const DegreeList& a, bool ascii) {
  if (a.n() != 2) throw DimensionError("staircase needs two variables");
  MonomialIdeal w = ideal_of_vector(t, a);
  const char* in_std = ascii ? "*" : "•";
  const char* in_ideal = ascii ? "o" : "○";
  std::string out;
  for (int r = 0; r < a[0]; ++r) {
    int xe = a[0] - 1 - r;
    for (int c = 0; c < a[1]; ++c) {
      if (c) out += ' ';
      out += w.contains(Monomial({xe, c})) ? in_ideal : in_std;
    }
    out += '\n';
  }
  return out;
}

}  // namespace lppkit
