#include "lppkit/resolutions.hpp"

#include <algorithm>
#include <bit>
#include <future>
#include <iomanip>
#include <sstream>
#include <thread>

#include "json.hpp"
#include "lppkit/growth.hpp"

namespace lppkit {

namespace {

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

Count mul_checked(Count a, Count b) {
  Count r = 0;
  if (__builtin_mul_overflow(a, b, &r)) throw RangeError("overflow in exact elimination");
  return r;
}

Count sub_checked(Count a, Count b) {
  Count r = 0;
  if (__builtin_sub_overflow(a, b, &r)) throw RangeError("overflow in exact elimination");
  return r;
}

Count mod_pow(Count a, Count e, Count p) {
  Count r = 1;
  a %= p;
  while (e > 0) {
    if (e & 1) r = r * a % p;
    a = a * a % p;
    e >>= 1;
  }
  return r;
}

}  // namespace

FieldSpec::FieldSpec(int characteristic) : p_(characteristic) {
  if (p_ != 0 && !is_prime(p_))
    throw RangeError("field characteristic must be 0 or a prime, got " + std::to_string(p_));
}

Count BettiDiagram::get(int i, int j) const {
  auto it = entries_.find({i, j});
  return it == entries_.end() ? 0 : it->second;
}

void BettiDiagram::add(int i, int j, Count v) {
  if (v == 0) return;
  Count& slot = entries_[{i, j}];
  slot += v;
  if (slot == 0) entries_.erase({i, j});
}

Count BettiDiagram::total(int i) const {
  Count t = 0;
  for (const auto& [key, v] : entries_)
    if (key.first == i) t += v;
  return t;
}

int matrix_rank(std::vector<std::vector<Count>> m, int p) {
  if (m.empty()) return 0;
  const std::size_t rows = m.size();
  const std::size_t cols = m.front().size();
  int rank = 0;
  if (p != 0) {
    for (auto& row : m)
      for (auto& x : row) x = ((x % p) + p) % p;
    for (std::size_t c = 0; c < cols && static_cast<std::size_t>(rank) < rows; ++c) {
      std::size_t piv = rank;
      while (piv < rows && m[piv][c] == 0) ++piv;
      if (piv == rows) continue;
      std::swap(m[piv], m[rank]);
      Count inv = mod_pow(m[rank][c], p - 2, p);
      for (std::size_t r = 0; r < rows; ++r) {
        if (r == static_cast<std::size_t>(rank) || m[r][c] == 0) continue;
        Count f = m[r][c] * inv % p;
        for (std::size_t k = c; k < cols; ++k) m[r][k] = ((m[r][k] - f * m[rank][k]) % p + p) % p;
      }
      ++rank;
    }
    return rank;
  }
  // Fraction-free Bareiss elimination.
  Count prev = 1;
  for (std::size_t c = 0; c < cols && static_cast<std::size_t>(rank) < rows; ++c) {
    std::size_t piv = rank;
    while (piv < rows && m[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[rank]);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      for (std::size_t k = c + 1; k < cols; ++k) {
        Count v = sub_checked(mul_checked(m[rank][c], m[r][k]), mul_checked(m[r][c], m[rank][k]));
        m[r][k] = v / prev;
      }
      m[r][c] = 0;
    }
    prev = m[rank][c];
    ++rank;
  }
  return rank;
}

namespace {

// Reduced homology dimensions of the upper Koszul complex at b, indexed by face size.
std::vector<Count> koszul_homology(const MonomialIdeal& ideal, const std::vector<int>& b, int p) {
  const int n = ideal.n();
  const unsigned full = 1u << n;
  std::vector<std::vector<unsigned>> by_size(n + 1);
  std::vector<int> e(n);
  for (unsigned mask = 0; mask < full; ++mask) {
    bool ok = true;
    for (int i = 0; i < n; ++i) {
      e[i] = b[i] - ((mask >> i) & 1u);
      if (e[i] < 0) ok = false;
    }
    if (!ok || !ideal.contains(Monomial(e))) continue;
    by_size[std::popcount(mask)].push_back(mask);
  }
  std::vector<Count> out(n + 1, 0);
  if (by_size[0].empty()) return out;
  // rank of the boundary from size k faces to size k-1 faces.
  std::vector<int> rk(n + 2, 0);
  for (int k = 1; k <= n; ++k) {
    const auto& hi = by_size[k];
    const auto& lo = by_size[k - 1];
    if (hi.empty() || lo.empty()) continue;
    std::vector<std::vector<Count>> m(lo.size(), std::vector<Count>(hi.size(), 0));
    for (std::size_t c = 0; c < hi.size(); ++c) {
      int sign_pos = 0;
      for (int v = 0; v < n; ++v) {
        if (!((hi[c] >> v) & 1u)) continue;
        unsigned face = hi[c] & ~(1u << v);
        auto it = std::lower_bound(lo.begin(), lo.end(), face);
        if (it != lo.end() && *it == face)
          m[it - lo.begin()][c] = (sign_pos % 2 == 0) ? 1 : -1;
        ++sign_pos;
      }
    }
    rk[k] = matrix_rank(std::move(m), p);
  }
  for (int k = 0; k <= n; ++k)
    out[k] = static_cast<Count>(by_size[k].size()) - rk[k] - rk[k + 1];
  return out;
}

}  // namespace

MultigradedBetti multigraded_betti(const MonomialIdeal& ideal, const FieldSpec& field,
                                   const BettiOptions& opts) {
  if (!ideal.is_artinian())
    throw NotArtinianError("Betti numbers need an Artinian ideal");
  MultigradedBetti out;
  if (ideal.is_unit()) return out;
  const int n = ideal.n();
  if (n > 16) throw GuardExceeded("too many variables for the Koszul computation");
  std::vector<int> box(n, 0);
  for (const auto& g : ideal.gens())
    for (int i = 0; i < n; ++i) box[i] = std::max(box[i], g[i]);
  std::size_t total = 1;
  for (int m : box) {
    total *= static_cast<std::size_t>(m + 1);
    if (total > opts.max_multidegrees)
      throw GuardExceeded("multidegree box exceeds " + std::to_string(opts.max_multidegrees));
  }
  out[std::vector<int>(n, 0)][0] = 1;

  auto work = [&](std::size_t lo, std::size_t hi) {
    MultigradedBetti part;
    std::vector<int> b(n);
    for (std::size_t idx = lo; idx < hi; ++idx) {
      std::size_t rest = idx;
      for (int i = 0; i < n; ++i) {
        b[i] = static_cast<int>(rest % (box[i] + 1));
        rest /= box[i] + 1;
      }
      auto h = koszul_homology(ideal, b, field.characteristic());
      for (int k = 0; k <= n; ++k)
        if (h[k] != 0) part[b][k + 1] = h[k];
    }
    return part;
  };

  unsigned threads = opts.threads ? opts.threads : std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(1, total / 64)));
  if (threads <= 1) {
    auto part = work(0, total);
    out.insert(part.begin(), part.end());
    return out;
  }
  std::vector<std::future<MultigradedBetti>> jobs;
  std::size_t chunk = (total + threads - 1) / threads;
  for (unsigned t = 0; t < threads; ++t) {
    std::size_t lo = t * chunk;
    std::size_t hi = std::min(total, lo + chunk);
    if (lo >= hi) break;
    jobs.push_back(std::async(std::launch::async, work, lo, hi));
  }
  for (auto& j : jobs) {
    auto part = j.get();
    out.insert(part.begin(), part.end());
  }
  return out;
}

BettiDiagram betti_diagram(const MonomialIdeal& ideal, const FieldSpec& field,
                           const BettiOptions& opts) {
  BettiDiagram out(ideal.n());
  for (const auto& [b, per_i] : multigraded_betti(ideal, field, opts)) {
    int j = 0;
    for (int x : b) j += x;
    for (const auto& [i, v] : per_i) out.add(i, j, v);
  }
  return out;
}

std::map<int, Count> socle_dims(const MonomialIdeal& ideal, const FieldSpec& field) {
  std::map<int, Count> out;
  BettiDiagram b = betti_diagram(ideal, field);
  for (const auto& [key, v] : b.entries())
    if (key.first == ideal.n()) out[key.second - ideal.n()] = v;
  return out;
}

bool taylor_euler_check(const MonomialIdeal& ideal, const MultigradedBetti& betti) {
  const auto& gens = ideal.gens();
  if (ideal.is_unit()) return betti.empty();
  if (gens.size() > 22) throw GuardExceeded("too many generators for the Taylor complex");
  std::map<std::vector<int>, Count> taylor;
  const std::size_t g = gens.size();
  for (std::size_t mask = 0; mask < (std::size_t{1} << g); ++mask) {
    Monomial l = Monomial::one(ideal.n());
    int size = 0;
    for (std::size_t k = 0; k < g; ++k) {
      if ((mask >> k) & 1u) {
        l = l.lcm(gens[k]);
        ++size;
      }
    }
    taylor[l.exps()] += (size % 2 == 0) ? 1 : -1;
  }
  std::map<std::vector<int>, Count> minimal;
  for (const auto& [b, per_i] : betti)
    for (const auto& [i, v] : per_i) minimal[b] += (i % 2 == 0) ? v : -v;
  auto strip = [](std::map<std::vector<int>, Count>& m) {
    for (auto it = m.begin(); it != m.end();) it = it->second == 0 ? m.erase(it) : std::next(it);
  };
  strip(taylor);
  strip(minimal);
  return taylor == minimal;
}

StanleyResult stanley_check(const HilbertFunction& h, const BettiDiagram& b) {
  const int n = b.n();
  int top = static_cast<int>(h.values().size()) + n;
  for (const auto& [key, v] : b.entries()) top = std::max(top, key.second);
  std::vector<Count> lhs(top + 1, 0);
  for (int d = 0; d < static_cast<int>(h.values().size()); ++d) {
    for (int k = 0; k <= n && d + k <= top; ++k) {
      Count c = (k % 2 ? -1 : 1) * binomial(n, k);
      lhs[d + k] += c * h(d);
    }
  }
  std::vector<Count> rhs(top + 1, 0);
  for (const auto& [key, v] : b.entries()) rhs[key.second] += (key.first % 2 == 0) ? v : -v;
  for (int d = 0; d <= top; ++d)
    if (lhs[d] != rhs[d]) return {false, d};
  return {};
}

bool last_betti_consequences(const HilbertFunction& h, const BettiDiagram& b1,
                             const BettiDiagram& b2) {
  if (b1.n() != b2.n()) throw DimensionError("Betti diagrams of different rings");
  const int n = b1.n();
  const int rho = h.rho();
  if (rho < 0) return true;
  if (b1.get(n, rho + n) != b2.get(n, rho + n)) return false;
  return b1.get(n - 1, rho + n - 1) - b1.get(n, rho + n - 1) ==
         b2.get(n - 1, rho + n - 1) - b2.get(n, rho + n - 1);
}

MappingConeReport mapping_cone_check(const MonomialIdeal& ideal, const DegreeList& a,
                                     const FieldSpec& field) {
  if (a.n() != ideal.n()) throw DimensionError("degree list does not match the ring");
  return mapping_cone_check(ideal, a.degrees(), field);
}

MappingConeReport mapping_cone_check(const MonomialIdeal& ideal, const std::vector<int>& powers,
                                     const FieldSpec& field) {
  const int n = ideal.n();
  if (static_cast<int>(powers.size()) != n)
    throw DimensionError("need one power per variable");
  std::vector<Monomial> pp;
  for (int i = 0; i < n; ++i) {
    if (powers[i] < 1) throw RangeError("powers must be positive");
    pp.push_back(Monomial::power(n, i, powers[i]));
    if (!ideal.contains(pp.back()))
      throw PreconditionError("x" + std::to_string(i + 1) + "^" + std::to_string(powers[i]) +
                              " is not in the ideal");
  }
  MappingConeReport rep;
  rep.powers = powers;
  for (int p : powers) rep.omega += p;
  rep.colon_ideal = colon(MonomialIdeal(n, pp), ideal);
  BettiDiagram bi = betti_diagram(ideal, field);
  BettiDiagram bc = betti_diagram(rep.colon_ideal, field);
  rep.powers_minimal = std::all_of(pp.begin(), pp.end(), [&](const Monomial& m) {
    return std::find(ideal.gens().begin(), ideal.gens().end(), m) != ideal.gens().end();
  });
  for (int j = 0; j <= rep.omega; ++j) {
    MappingConeRow row;
    row.j = j;
    row.beta1 = bi.get(1, j);
    row.beta_n_colon = bc.get(n, rep.omega - j);
    row.t = row.beta1 - row.beta_n_colon;
    row.multiplicity = static_cast<int>(std::count(powers.begin(), powers.end(), j));
    if (row.beta1 == 0 && row.beta_n_colon == 0 && row.multiplicity == 0) continue;
    if (row.t < 0 || row.t > row.multiplicity) rep.bounds_hold = false;
    if (row.t != row.multiplicity) rep.all_equal = false;
    rep.rows.push_back(row);
  }
  return rep;
}

std::string format_betti(const BettiDiagram& b) {
  const int n = b.n();
  int lo = 0;
  int hi = -1;
  bool any = false;
  for (const auto& [key, v] : b.entries()) {
    int r = key.second - key.first;
    if (!any) {
      lo = hi = r;
      any = true;
    }
    lo = std::min(lo, r);
    hi = std::max(hi, r);
  }
  std::vector<std::vector<std::string>> cells;
  std::vector<std::string> labels;
  std::vector<std::string> header{""};
  for (int i = 0; i <= n; ++i) header.push_back(std::to_string(i));
  labels.push_back("");
  cells.push_back(header);
  std::vector<std::string> totals{"total:"};
  for (int i = 0; i <= n; ++i) totals.push_back(std::to_string(b.total(i)));
  cells.push_back(totals);
  for (int r = lo; any && r <= hi; ++r) {
    std::vector<std::string> row{std::to_string(r) + ":"};
    for (int i = 0; i <= n; ++i) {
      Count v = b.get(i, i + r);
      row.push_back(v == 0 ? "." : std::to_string(v));
    }
    cells.push_back(row);
  }
  std::vector<std::size_t> width(n + 2, 0);
  for (const auto& row : cells)
    for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
  std::ostringstream os;
  for (const auto& row : cells) {
    std::string line;
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c) line += ' ';
      line += std::string(width[c] - row[c].size(), ' ') + row[c];
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    os << line << '\n';
  }
  return os.str();
}

std::string betti_to_json(const BettiDiagram& b) {
  nlohmann::json j;
  j["n"] = b.n();
  j["betti"] = nlohmann::json::array();
  for (const auto& [key, v] : b.entries()) j["betti"].push_back({key.first, key.second, v});
  return j.dump();
}

}  // namespace lppkit
