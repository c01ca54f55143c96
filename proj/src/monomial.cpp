#include "lppkit/monomial.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

#include "json.hpp"

namespace lppkit {

Monomial::Monomial(std::vector<int> exps) : exps_(std::move(exps)) {
  for (int e : exps_) {
    if (e < 0) throw RangeError("negative exponent");
    degree_ += e;
  }
}

Monomial Monomial::power(int n, int var, int e) {
  std::vector<int> v(n, 0);
  v.at(var) = e;
  return Monomial(std::move(v));
}

bool Monomial::divides(const Monomial& other) const {
  if (degree_ > other.degree_) return false;
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] > other.exps_[i]) return false;
  return true;
}

int Monomial::pure_power_var() const {
  int var = -1;
  for (int i = 0; i < n(); ++i) {
    if (exps_[i] == 0) continue;
    if (var >= 0) return -1;
    var = i;
  }
  return var;
}

Monomial Monomial::times(const Monomial& other) const {
  std::vector<int> v(exps_);
  for (std::size_t i = 0; i < v.size(); ++i) v[i] += other.exps_[i];
  return Monomial(std::move(v));
}

Monomial Monomial::lcm(const Monomial& other) const {
  std::vector<int> v(exps_);
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = std::max(v[i], other.exps_[i]);
  return Monomial(std::move(v));
}

Monomial Monomial::quotient(const Monomial& v) const {
  std::vector<int> out(exps_);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = std::max(out[i] - v.exps_[i], 0);
  return Monomial(std::move(out));
}

Monomial Monomial::times_var(int var, int e) const {
  std::vector<int> v(exps_);
  v.at(var) += e;
  return Monomial(std::move(v));
}

std::strong_ordering lex_compare(const Monomial& a, const Monomial& b) {
  if (a.n() != b.n()) throw DimensionError("monomials live in different rings");
  for (int i = 0; i < a.n(); ++i)
    if (a[i] != b[i]) return a[i] <=> b[i];
  return std::strong_ordering::equal;
}

bool GradedLexGreater::operator()(const Monomial& a, const Monomial& b) const {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  return lex_compare(a, b) == std::strong_ordering::greater;
}

DegreeList::DegreeList(std::vector<int> degrees) : a_(std::move(degrees)) {
  if (a_.empty()) throw DimensionError("degree list is empty");
  for (std::size_t i = 0; i < a_.size(); ++i) {
    if (a_[i] < 1) throw RangeError("degrees must be positive");
    if (i > 0 && a_[i] < a_[i - 1]) throw RangeError("degrees must be non-decreasing");
  }
}

int DegreeList::omega() const { return std::accumulate(a_.begin(), a_.end(), 0); }

int DegreeList::multiplicity(int j) const {
  return static_cast<int>(std::count(a_.begin(), a_.end(), j));
}

DegreeList DegreeList::tail() const {
  if (a_.size() < 2) throw DimensionError("tail of a one-entry degree list");
  return DegreeList(std::vector<int>(a_.begin() + 1, a_.end()));
}

HilbertFunction::HilbertFunction(std::vector<Count> values) : values_(std::move(values)) {
  for (Count v : values_)
    if (v < 0) throw RangeError("Hilbert function values must be nonnegative");
  while (!values_.empty() && values_.back() == 0) values_.pop_back();
  values_.push_back(0);
}

Count HilbertFunction::operator()(int d) const {
  if (d < 0 || d >= static_cast<int>(values_.size())) return 0;
  return values_[d];
}

int HilbertFunction::sigma() const {
  for (std::size_t i = 0; i < values_.size(); ++i)
    if (values_[i] == 0) return static_cast<int>(i);
  return static_cast<int>(values_.size());
}

MonomialIdeal minimalize(int n, const std::vector<Monomial>& gens) {
  return MonomialIdeal(n, gens);
}

MonomialIdeal::MonomialIdeal(int n, const std::vector<Monomial>& gens) : n_(n) {
  if (n < 1) throw DimensionError("ideal needs at least one variable");
  std::vector<Monomial> sorted;
  sorted.reserve(gens.size());
  for (const auto& g : gens) {
    if (g.n() != n) throw DimensionError("generator has the wrong number of variables");
    sorted.push_back(g);
  }
  std::sort(sorted.begin(), sorted.end(), GradedLexGreater{});
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  for (const auto& g : sorted) {
    bool redundant = false;
    for (const auto& k : gens_) {
      if (k.divides(g)) {
        redundant = true;
        break;
      }
    }
    if (!redundant) gens_.push_back(g);
  }
}

MonomialIdeal MonomialIdeal::pure_powers(const DegreeList& a) {
  std::vector<Monomial> g;
  for (int i = 0; i < a.n(); ++i) g.push_back(Monomial::power(a.n(), i, a[i]));
  return MonomialIdeal(a.n(), g);
}

bool MonomialIdeal::contains(const Monomial& m) const {
  if (m.n() != n_) throw DimensionError("monomial has the wrong number of variables");
  for (const auto& g : gens_)
    if (g.divides(m)) return true;
  return false;
}

bool MonomialIdeal::is_unit() const {
  return gens_.size() == 1 && gens_.front().degree() == 0;
}

bool MonomialIdeal::is_artinian() const {
  if (is_unit()) return true;
  std::vector<bool> seen(n_, false);
  for (const auto& g : gens_) {
    int v = g.pure_power_var();
    if (v >= 0) seen[v] = true;
  }
  return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
}

MonomialIdeal MonomialIdeal::sum(const MonomialIdeal& other) const {
  if (other.n_ != n_) throw DimensionError("ideals live in different rings");
  std::vector<Monomial> g(gens_);
  g.insert(g.end(), other.gens_.begin(), other.gens_.end());
  return MonomialIdeal(n_, g);
}

MonomialIdeal MonomialIdeal::intersect(const MonomialIdeal& other) const {
  if (other.n_ != n_) throw DimensionError("ideals live in different rings");
  std::vector<Monomial> g;
  for (const auto& a : gens_)
    for (const auto& b : other.gens_) g.push_back(a.lcm(b));
  return MonomialIdeal(n_, g);
}

bool MonomialIdeal::is_subset_of(const MonomialIdeal& other) const {
  return std::all_of(gens_.begin(), gens_.end(),
                     [&](const Monomial& g) { return other.contains(g); });
}

namespace {

void compositions(int n, int d, std::vector<int>& cur, int pos,
                  const std::function<void(const Monomial&)>& f) {
  if (pos == n - 1) {
    cur[pos] = d;
    f(Monomial(cur));
    return;
  }
  for (int e = d; e >= 0; --e) {
    cur[pos] = e;
    compositions(n, d - e, cur, pos + 1, f);
  }
}

// Standard monomials degree by degree, each degree in lex descending order.
std::vector<std::vector<Monomial>> standard_by_degree(const MonomialIdeal& ideal) {
  if (!ideal.is_artinian())
    throw NotArtinianError("ideal does not contain a power of every variable");
  std::vector<std::vector<Monomial>> out;
  if (ideal.is_unit()) return out;
  const int n = ideal.n();
  out.push_back({Monomial::one(n)});
  while (true) {
    std::vector<Monomial> next;
    for (const auto& m : out.back()) {
      int last = 0;
      for (int i = n - 1; i >= 0; --i) {
        if (m[i] > 0) {
          last = i;
          break;
        }
      }
      for (int i = last; i < n; ++i) {
        Monomial c = m.times_var(i);
        if (!ideal.contains(c)) next.push_back(std::move(c));
      }
    }
    if (next.empty()) break;
    std::sort(next.begin(), next.end(), [](const Monomial& a, const Monomial& b) {
      return lex_compare(a, b) == std::strong_ordering::greater;
    });
    out.push_back(std::move(next));
  }
  return out;
}

}  // namespace

void for_each_monomial(int n, int d, const std::function<void(const Monomial&)>& f) {
  if (n < 1) throw DimensionError("need at least one variable");
  if (d < 0) return;
  std::vector<int> cur(n, 0);
  compositions(n, d, cur, 0, f);
}

std::vector<Monomial> monomials_of_degree(int n, int d) {
  std::vector<Monomial> out;
  for_each_monomial(n, d, [&](const Monomial& m) { out.push_back(m); });
  return out;
}

std::vector<Monomial> standard_monomials_of_degree(const DegreeList& a, int d) {
  std::vector<Monomial> out;
  for_each_monomial(a.n(), d, [&](const Monomial& m) {
    for (int i = 0; i < a.n(); ++i)
      if (m[i] >= a[i]) return;
    out.push_back(m);
  });
  return out;
}

bool contains(const MonomialIdeal& ideal, const Monomial& m) { return ideal.contains(m); }

HilbertFunction hilbert_function(const MonomialIdeal& ideal) {
  auto layers = standard_by_degree(ideal);
  std::vector<Count> v;
  for (const auto& layer : layers) v.push_back(static_cast<Count>(layer.size()));
  return HilbertFunction(v);
}

MonomialIdeal colon(const MonomialIdeal& j, const MonomialIdeal& i) {
  if (j.n() != i.n()) throw DimensionError("ideals live in different rings");
  const int n = j.n();
  MonomialIdeal result = MonomialIdeal::unit(n);
  for (const auto& g : i.gens()) {
    std::vector<Monomial> q;
    for (const auto& u : j.gens()) q.push_back(u.quotient(g));
    result = result.intersect(MonomialIdeal(n, q));
  }
  return result;
}

bool is_lpp(const MonomialIdeal& ideal, const DegreeList& a) {
  if (a.n() != ideal.n()) return false;
  const int n = ideal.n();
  std::vector<bool> found(n, false);
  for (const auto& g : ideal.gens()) {
    int v = g.pure_power_var();
    if (v >= 0) {
      if (g[v] != a[v]) return false;
      found[v] = true;
      continue;
    }
    if (g.degree() == 0) return false;
    bool ok = true;
    for_each_monomial(n, g.degree(), [&](const Monomial& m) {
      if (ok && lex_compare(m, g) == std::strong_ordering::greater && !ideal.contains(m))
        ok = false;
    });
    if (!ok) return false;
  }
  return std::all_of(found.begin(), found.end(), [](bool b) { return b; });
}

bool is_lex_segment(const MonomialIdeal& ideal, int d) {
  bool gap = false;
  bool ok = true;
  for_each_monomial(ideal.n(), d, [&](const Monomial& m) {
    if (!ok) return;
    if (ideal.contains(m)) {
      if (gap) ok = false;
    } else {
      gap = true;
    }
  });
  return ok;
}

std::map<int, std::vector<Monomial>> socle_monomials(const MonomialIdeal& ideal) {
  auto layers = standard_by_degree(ideal);
  std::map<int, std::vector<Monomial>> out;
  for (std::size_t d = 0; d < layers.size(); ++d) {
    for (const auto& m : layers[d]) {
      bool socle = true;
      for (int i = 0; i < ideal.n() && socle; ++i)
        if (!ideal.contains(m.times_var(i))) socle = false;
      if (socle) out[static_cast<int>(d)].push_back(m);
    }
  }
  return out;
}

MonomialIdeal add_maximal_power(const MonomialIdeal& ideal, int t) {
  if (t < 1) throw RangeError("power of the maximal ideal must be at least 1");
  std::vector<Monomial> g(ideal.gens());
  auto top = monomials_of_degree(ideal.n(), t);
  g.insert(g.end(), top.begin(), top.end());
  return MonomialIdeal(ideal.n(), g);
}

std::vector<std::optional<int>> pure_power_profile(const MonomialIdeal& ideal) {
  std::vector<std::optional<int>> out(ideal.n());
  for (const auto& g : ideal.gens()) {
    if (g.degree() == 0) return std::vector<std::optional<int>>(ideal.n(), 0);
    int v = g.pure_power_var();
    if (v >= 0 && (!out[v] || *out[v] > g[v])) out[v] = g[v];
  }
  return out;
}

std::optional<std::vector<int>> sorted_power_profile(const MonomialIdeal& ideal) {
  std::vector<int> out;
  for (const auto& e : pure_power_profile(ideal)) {
    if (!e) return std::nullopt;
    out.push_back(*e);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<int> alpha_of_ideal(const MonomialIdeal& ideal, const DegreeList& a) {
  if (a.n() != ideal.n()) throw DimensionError("degree list does not match the ring");
  auto powers = MonomialIdeal::pure_powers(a);
  std::optional<int> best;
  for (const auto& g : ideal.gens()) {
    if (powers.contains(g)) continue;
    if (!best || g.degree() < *best) best = g.degree();
  }
  return best;
}

std::string format_monomial(const Monomial& m) {
  if (m.degree() == 0) return "1";
  std::string out;
  for (int i = 0; i < m.n(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += 'x' + std::to_string(i + 1);
    if (m[i] > 1) out += '^' + std::to_string(m[i]);
  }
  return out;
}

std::string format_ideal(const MonomialIdeal& ideal) {
  if (ideal.gens().empty()) return "0";
  std::string out;
  for (const auto& g : ideal.gens()) {
    if (!out.empty()) out += ", ";
    out += format_monomial(g);
  }
  return out;
}

namespace {

struct Factor {
  int var;
  int exp;
};

int read_int(const std::string& s, std::size_t& pos, const std::string& token) {
  std::size_t start = pos;
  while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
  if (start == pos) throw ParseError("expected a number in '" + token + "'");
  if (pos - start > 6) throw ParseError("number too large in '" + token + "'");
  return std::stoi(s.substr(start, pos - start));
}

// Returns nullopt for the literal "1"; throws on anything malformed.
std::optional<std::vector<Factor>> parse_term(const std::string& raw) {
  std::string s;
  for (char c : raw)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.empty()) throw ParseError("empty generator");
  if (s == "1") return std::nullopt;
  std::vector<Factor> out;
  std::size_t pos = 0;
  while (pos < s.size()) {
    if (s[pos] == '*') {
      if (out.empty() || pos + 1 == s.size() || s[pos + 1] == '*')
        throw ParseError("misplaced '*' in '" + raw + "'");
      ++pos;
      continue;
    }
    char c = static_cast<char>(std::tolower(static_cast<unsigned char>(s[pos])));
    int var = -1;
    if (c == 'x') {
      ++pos;
      if (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
        var = read_int(s, pos, raw) - 1;
        if (var < 0) throw ParseError("variable index must start at 1 in '" + raw + "'");
      } else {
        var = 0;
      }
    } else if (c == 'y') {
      var = 1;
      ++pos;
    } else if (c == 'z') {
      var = 2;
      ++pos;
    } else if (c == 'w') {
      var = 3;
      ++pos;
    } else {
      throw ParseError("unexpected character '" + std::string(1, s[pos]) + "' in '" + raw + "'");
    }
    int e = 1;
    if (pos < s.size() && s[pos] == '^') {
      ++pos;
      e = read_int(s, pos, raw);
    }
    out.push_back({var, e});
  }
  return out;
}

std::vector<std::string> split_commas(const std::string& text) {
  std::vector<std::string> parts;
  std::string cur;
  for (char c : text) {
    if (c == ',' || c == '\n' || c == ';') {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  parts.push_back(cur);
  std::vector<std::string> out;
  for (auto& p : parts) {
    bool blank = std::all_of(p.begin(), p.end(),
                             [](char c) { return std::isspace(static_cast<unsigned char>(c)); });
    if (!blank) out.push_back(p);
  }
  return out;
}

std::string trim(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

}  // namespace

Monomial parse_monomial(const std::string& text, int n) {
  if (n < 1) throw DimensionError("number of variables must be positive");
  auto term = parse_term(text);
  std::vector<int> e(n, 0);
  if (!term) return Monomial(e);
  for (const auto& f : *term) {
    if (f.var >= n)
      throw DimensionError("variable x" + std::to_string(f.var + 1) + " outside a ring with " +
                           std::to_string(n) + " variables");
    e[f.var] += f.exp;
  }
  return Monomial(e);
}

MonomialIdeal parse_ideal(const std::string& text, int n) {
  std::string body = trim(text);
  if (!body.empty() && (body.front() == '<' || body.front() == '(') &&
      (body.back() == '>' || body.back() == ')'))
    body = trim(body.substr(1, body.size() - 2));
  if (body == "0" || body.empty()) {
    if (n < 1) throw DimensionError("cannot infer the number of variables of the zero ideal");
    return MonomialIdeal(n, {});
  }
  auto parts = split_commas(body);
  std::vector<std::optional<std::vector<Factor>>> terms;
  int max_var = -1;
  for (const auto& p : parts) {
    terms.push_back(parse_term(p));
    if (terms.back())
      for (const auto& f : *terms.back()) max_var = std::max(max_var, f.var);
  }
  if (n == 0) {
    if (max_var < 0) throw DimensionError("cannot infer the number of variables of the unit ideal");
    n = max_var + 1;
  }
  std::vector<Monomial> gens;
  for (const auto& p : parts) gens.push_back(parse_monomial(p, n));
  return MonomialIdeal(n, gens);
}

std::string ideal_to_json(const MonomialIdeal& ideal) {
  nlohmann::json j;
  j["n"] = ideal.n();
  j["gens"] = nlohmann::json::array();
  for (const auto& g : ideal.gens()) j["gens"].push_back(g.exps());
  return j.dump();
}

MonomialIdeal ideal_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("invalid ideal JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("n") || !j.contains("gens") || !j["n"].is_number_integer() ||
      !j["gens"].is_array())
    throw ParseError("ideal JSON needs integer \"n\" and array \"gens\"");
  int n = j["n"].get<int>();
  std::vector<Monomial> gens;
  for (const auto& g : j["gens"]) {
    if (!g.is_array()) throw ParseError("generator must be an exponent array");
    std::vector<int> e;
    for (const auto& x : g) {
      if (!x.is_number_integer()) throw ParseError("exponent must be an integer");
      e.push_back(x.get<int>());
    }
    if (static_cast<int>(e.size()) != n)
      throw DimensionError("generator length differs from n");
    gens.push_back(Monomial(e));
  }
  return MonomialIdeal(n, gens);
}

MonomialIdeal parse_ideal_any(const std::string& text, int n) {
  std::string t = trim(text);
  if (!t.empty() && t.front() == '{') {
    auto ideal = ideal_from_json(t);
    if (n != 0 && ideal.n() != n) throw DimensionError("ideal has the wrong number of variables");
    return ideal;
  }
  return parse_ideal(t, n);
}

HilbertFunction parse_hf(const std::string& text) {
  std::vector<Count> v;
  std::string tok;
  auto flush = [&]() {
    if (tok.empty()) return;
    std::size_t used = 0;
    long long x = 0;
    try {
      x = std::stoll(tok, &used);
    } catch (const std::exception&) {
      throw ParseError("bad Hilbert function value '" + tok + "'");
    }
    if (used != tok.size()) throw ParseError("bad Hilbert function value '" + tok + "'");
    if (x < 0) throw ParseError("negative Hilbert function value '" + tok + "'");
    v.push_back(x);
    tok.clear();
  };
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c)) || c == ',') {
      flush();
    } else {
      tok += c;
    }
  }
  flush();
  if (v.empty()) throw ParseError("empty Hilbert function");
  return HilbertFunction(v);
}

std::string format_hf(const HilbertFunction& h) {
  std::ostringstream os;
  for (std::size_t i = 0; i < h.values().size(); ++i) {
    if (i) os << ' ';
    os << h.values()[i];
  }
  return os.str();
}

DegreeList parse_degree_list(const std::string& text) {
  std::vector<int> v;
  std::string tok;
  auto flush = [&]() {
    if (tok.empty()) return;
    std::size_t used = 0;
    int x = 0;
    try {
      x = std::stoi(tok, &used);
    } catch (const std::exception&) {
      throw ParseError("bad degree '" + tok + "'");
    }
    if (used != tok.size()) throw ParseError("bad degree '" + tok + "'");
    v.push_back(x);
    tok.clear();
  };
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c)) || c == ',' || c == '{' || c == '}') {
      flush();
    } else {
      tok += c;
    }
  }
  flush();
  if (v.empty()) throw ParseError("empty degree list");
  return DegreeList(v);
}

std::string format_degree_list(const DegreeList& a) {
  std::string out;
  for (int i = 0; i < a.n(); ++i) {
    if (i) out += ',';
    out += std::to_string(a[i]);
  }
  return out;
}

}  // namespace lppkit
