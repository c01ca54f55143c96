#include "lppkit/harness.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>
#include <sstream>

#include "json.hpp"
#include "lppkit/growth.hpp"
#include "lppkit/lpp_vector.hpp"

namespace lppkit {

using nlohmann::json;

EnumerationOptions default_enumeration_options() {
  EnumerationOptions o;
  if (const char* env = std::getenv("LPPKIT_GUARD")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) o.max_ideals = static_cast<std::size_t>(v);
  }
  return o;
}

namespace {

using ExpSet = std::set<std::vector<int>>;

class Enumerator {
 public:
  Enumerator(const HilbertFunction& h, const DegreeList& a,
             const std::function<bool(const MonomialIdeal&)>& sink, const EnumerationOptions& opts)
      : h_(h), a_(a), n_(a.n()), sink_(sink), opts_(opts) {}

  std::size_t run() {
    layers_.push_back({Monomial::one(n_)});
    sets_.push_back({Monomial::one(n_).exps()});
    step(1);
    return emitted_;
  }

 private:
  bool divisors_in(const Monomial& m, const ExpSet& below) const {
    for (int i = 0; i < n_; ++i) {
      if (m[i] == 0) continue;
      std::vector<int> e = m.exps();
      --e[i];
      if (!below.count(e)) return false;
    }
    return true;
  }

  // Monomials of degree d whose immediate divisors all lie in the previous layer.
  std::vector<Monomial> frontier(int d) const {
    ExpSet seen;
    std::vector<Monomial> out;
    for (const auto& s : layers_[d - 1]) {
      for (int i = 0; i < n_; ++i) {
        Monomial m = s.times_var(i);
        if (!seen.insert(m.exps()).second) continue;
        if (divisors_in(m, sets_[d - 1])) out.push_back(m);
      }
    }
    std::sort(out.begin(), out.end(), [](const Monomial& x, const Monomial& y) {
      return lex_compare(x, y) == std::strong_ordering::greater;
    });
    return out;
  }

  bool standard(const Monomial& m) const {
    for (int i = 0; i < n_; ++i)
      if (m[i] >= a_[i]) return false;
    return true;
  }

  void emit() {
    std::vector<Monomial> gens;
    for (std::size_t d = 1; d < layers_.size() + 1; ++d) {
      const ExpSet* here = d < sets_.size() ? &sets_[d] : nullptr;
      for (const auto& m : frontier(static_cast<int>(d)))
        if (!here || !here->count(m.exps())) gens.push_back(m);
      if (!here) break;
    }
    MonomialIdeal ideal(n_, gens);
    ++emitted_;
    if (emitted_ > opts_.max_ideals)
      throw GuardExceeded("more than " + std::to_string(opts_.max_ideals) + " ideals");
    if (!sink_(ideal)) stopped_ = true;
  }

  void step(int d) {
    if (stopped_) return;
    const Count want = h_(d);
    if (want == 0) {
      emit();
      return;
    }
    std::vector<Monomial> cand;
    for (auto& m : frontier(d))
      if (standard(m)) cand.push_back(std::move(m));
    if (static_cast<Count>(cand.size()) < want) return;
    const int k = static_cast<int>(want);
    const int m = static_cast<int>(cand.size());
    std::vector<int> idx(k);
    for (int i = 0; i < k; ++i) idx[i] = i;
    while (!stopped_) {
      std::vector<Monomial> layer;
      ExpSet set;
      for (int i : idx) {
        layer.push_back(cand[i]);
        set.insert(cand[i].exps());
      }
      layers_.push_back(std::move(layer));
      sets_.push_back(std::move(set));
      step(d + 1);
      layers_.pop_back();
      sets_.pop_back();
      int i = k - 1;
      while (i >= 0 && idx[i] == m - k + i) --i;
      if (i < 0) break;
      ++idx[i];
      for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
  }

  const HilbertFunction& h_;
  const DegreeList& a_;
  int n_;
  const std::function<bool(const MonomialIdeal&)>& sink_;
  EnumerationOptions opts_;
  std::vector<std::vector<Monomial>> layers_;
  std::vector<ExpSet> sets_;
  std::size_t emitted_ = 0;
  bool stopped_ = false;
};

}  // namespace

std::size_t enumerate_ideals(const HilbertFunction& h, const DegreeList& a,
                             const std::function<bool(const MonomialIdeal&)>& sink,
                             const EnumerationOptions& opts) {
  if (!is_lpp_sequence(h, a)) throw InvalidSequenceError("not an lpp sequence for A");
  Count total = 0;
  for (Count v : h.values()) total += v;
  if (static_cast<std::size_t>(total) > opts.max_standard)
    throw GuardExceeded("sum of H is " + std::to_string(total) + ", above the cap " +
                        std::to_string(opts.max_standard));
  return Enumerator(h, a, sink, opts).run();
}

std::vector<MonomialIdeal> enumerate_ideals(const HilbertFunction& h, const DegreeList& a,
                                            const EnumerationOptions& opts) {
  std::vector<MonomialIdeal> out;
  enumerate_ideals(
      h, a,
      [&](const MonomialIdeal& i) {
        out.push_back(i);
        return true;
      },
      opts);
  return out;
}

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::kPass:
      return "pass";
    case Verdict::kCounterexample:
      return "counterexample";
    case Verdict::kNotValid:
      return "not-valid";
    case Verdict::kGuardExceeded:
      return "guard-exceeded";
  }
  return "?";
}

std::optional<MonomialIdeal> lex_plus_powers_ideal(const HilbertFunction& h, const DegreeList& a) {
  if (!is_lpp_sequence(h, a)) return std::nullopt;
  MonomialIdeal l = ideal_of_vector(vector_of_hf(h, a), a);
  auto profile = pure_power_profile(l);
  for (int i = 0; i < a.n(); ++i)
    if (!profile[i] || *profile[i] != a[i]) return std::nullopt;
  return l;
}

namespace {

json ideal_json(const MonomialIdeal& i) { return json::parse(ideal_to_json(i)); }

json hf_json(const HilbertFunction& h) { return h.values(); }

CheckReport make_report(const std::string& name, const DegreeList& a,
                        const std::optional<HilbertFunction>& h) {
  CheckReport r;
  r.check = name;
  r.a = a;
  r.h = h;
  return r;
}

template <typename F>
CheckReport guarded(CheckReport r, F&& body) {
  try {
    body(r);
  } catch (const GuardExceeded& e) {
    r.verdict = Verdict::kGuardExceeded;
    r.message = e.what();
  }
  return r;
}

void set_counterexample(CheckReport& r, const std::string& detail, const json& extra) {
  if (r.verdict == Verdict::kCounterexample) return;
  r.verdict = Verdict::kCounterexample;
  r.message = detail;
  json w;
  w["check"] = r.check;
  w["A"] = r.a.degrees();
  if (r.h) w["H"] = hf_json(*r.h);
  w["detail"] = detail;
  for (auto it = extra.begin(); it != extra.end(); ++it) w[it.key()] = it.value();
  r.witness_json = w.dump();
}

// Counts standard monomials of degree d+1 outside <gens of I up to degree d> + powers.
Count truncated_growth(const MonomialIdeal& ideal, const DegreeList& a, int d,
                       const std::vector<Monomial>& next_layer) {
  std::vector<Monomial> gens(MonomialIdeal::pure_powers(a).gens());
  for (const auto& g : ideal.gens())
    if (g.degree() <= d) gens.push_back(g);
  MonomialIdeal j(a.n(), gens);
  Count c = 0;
  for (const auto& m : next_layer)
    if (!j.contains(m)) ++c;
  return c;
}

std::string betti_mismatch(const BettiDiagram& big, const BettiDiagram& small, int only_i = -1) {
  for (const auto& [key, v] : small.entries()) {
    if (only_i >= 0 && key.first != only_i) continue;
    if (big.get(key.first, key.second) < v)
      return "beta_{" + std::to_string(key.first) + "," + std::to_string(key.second) + "}: " +
             std::to_string(big.get(key.first, key.second)) + " < " + std::to_string(v);
  }
  return "";
}

void note_characteristic(CheckReport& r, const MonomialIdeal& ideal, const BettiDiagram& b,
                         const CheckOptions& opts, std::size_t& sensitive) {
  if (opts.compare_characteristic == 0 ||
      opts.compare_characteristic == opts.field.characteristic())
    return;
  BettiDiagram other = betti_diagram(ideal, FieldSpec(opts.compare_characteristic));
  if (!(other == b)) {
    ++sensitive;
    r.notes["characteristic_sensitive_example"] = format_ideal(ideal);
  }
}

}  // namespace

CheckReport growth_check(const HilbertFunction& h, const DegreeList& a, const CheckOptions& opts) {
  return guarded(make_report("growth", a, h), [&](CheckReport& r) {
    if (!is_lpp_sequence(h, a)) {
      r.verdict = Verdict::kNotValid;
      r.message = "H is not an lpp sequence for A";
      return;
    }
    const int sigma = h.sigma();
    std::vector<Count> bounds;
    bool equality = true;
    for (int d = 0; d < sigma; ++d) {
      bounds.push_back(lpp_bound(h(d), d, a));
      if (h(d + 1) > bounds.back()) {
        set_counterexample(r, "H(" + std::to_string(d + 1) + ") exceeds the bound", json::object());
        return;
      }
      if (h(d + 1) != bounds.back()) equality = false;
    }
    std::vector<std::vector<Monomial>> layers;
    for (int d = 0; d <= sigma; ++d) layers.push_back(standard_monomials_of_degree(a, d));
    r.instances = enumerate_ideals(
        h, a,
        [&](const MonomialIdeal& ideal) {
          for (int d = 0; d < sigma; ++d) {
            Count g = truncated_growth(ideal, a, d, layers[d + 1]);
            if (g > bounds[d]) {
              json extra;
              extra["I"] = ideal_json(ideal);
              extra["degree"] = d;
              extra["growth"] = g;
              extra["bound"] = bounds[d];
              set_counterexample(r, "truncation exceeds the growth bound", extra);
              return false;
            }
          }
          return true;
        },
        opts.enumeration);
    r.notes["equality_everywhere"] = equality ? "yes" : "no";
  });
}

CheckReport lpp_dominance_check(const HilbertFunction& h, const DegreeList& a,
                                const CheckOptions& opts) {
  return guarded(make_report("lpp", a, h), [&](CheckReport& r) {
    auto l = lex_plus_powers_ideal(h, a);
    if (!l) {
      r.verdict = Verdict::kNotValid;
      r.message = "no A-lex-plus-powers ideal has this Hilbert function";
      return;
    }
    BettiDiagram bl = betti_diagram(*l, opts.field);
    std::size_t bad = 0;
    std::size_t sensitive = 0;
    r.instances = enumerate_ideals(
        h, a,
        [&](const MonomialIdeal& ideal) {
          BettiDiagram bi = betti_diagram(ideal, opts.field);
          note_characteristic(r, ideal, bi, opts, sensitive);
          std::string why = betti_mismatch(bl, bi);
          if (!why.empty()) {
            ++bad;
            json extra;
            extra["L"] = ideal_json(*l);
            extra["I"] = ideal_json(ideal);
            set_counterexample(r, why, extra);
          }
          return true;
        },
        opts.enumeration);
    r.notes["lpp_ideal"] = format_ideal(*l);
    if (bad) r.notes["counterexamples"] = std::to_string(bad);
    if (opts.compare_characteristic) r.notes["characteristic_sensitive"] = std::to_string(sensitive);
  });
}

CheckReport residual_lpp_check(const DegreeList& a, const CheckOptions& opts) {
  return guarded(make_report("residual", a, std::nullopt), [&](CheckReport& r) {
    MonomialIdeal powers = MonomialIdeal::pure_powers(a);
    for (const auto& t : all_valid_vectors(a, opts.max_vectors)) {
      ++r.instances;
      json extra;
      extra["T"] = format_vector(t);
      LppVector ts = dual(t, a);
      extra["T*"] = format_vector(ts);
      auto v = validate(ts, a);
      if (!v.ok) {
        set_counterexample(r, "dual is not a valid vector: " + v.diagnostic, extra);
        return;
      }
      MonomialIdeal res = colon(powers, ideal_of_vector(t, a));
      if (!(res == ideal_of_vector(ts, a))) {
        extra["colon"] = ideal_json(res);
        set_counterexample(r, "colon differs from the ideal of the dual", extra);
        return;
      }
      if (!(dual(ts, a) == t)) {
        set_counterexample(r, "dual is not an involution", extra);
        return;
      }
      if (res.is_unit()) continue;
      std::vector<int> prof;
      for (const auto& e : pure_power_profile(res)) prof.push_back(e.value_or(0));
      if (!std::is_sorted(prof.begin(), prof.end()) || !is_lpp(res, DegreeList(prof))) {
        extra["colon"] = ideal_json(res);
        set_counterexample(r, "colon is not lex plus powers for its profile", extra);
        return;
      }
    }
  });
}

CheckReport lexseg_lemma_check(const DegreeList& a, const CheckOptions& opts) {
  return guarded(make_report("lexseg", a, std::nullopt), [&](CheckReport& r) {
    MonomialIdeal powers = MonomialIdeal::pure_powers(a);
    std::size_t drops = 0;
    for (const auto& t : all_valid_vectors(a, opts.max_vectors)) {
      MonomialIdeal l = ideal_of_vector(t, a);
      auto prof = pure_power_profile(l);
      bool exact = true;
      for (int i = 0; i < a.n(); ++i)
        if (!prof[i] || *prof[i] != a[i]) exact = false;
      if (!exact) continue;
      ++r.instances;
      MonomialIdeal res = colon(powers, l);
      auto rp = pure_power_profile(res);
      for (int s = 0; s < a.n(); ++s) {
        int as = rp[s].value_or(a[s]);
        if (as >= a[s]) continue;
        ++drops;
        if (!is_lex_segment(res, as)) {
          json extra;
          extra["L"] = ideal_json(l);
          extra["colon"] = ideal_json(res);
          extra["s"] = s + 1;
          set_counterexample(r, "colon is not a lex segment in degree " + std::to_string(as), extra);
          return;
        }
      }
    }
    r.notes["drops_checked"] = std::to_string(drops);
  });
}

CheckReport socle_equivalence_check(const HilbertFunction& h, const DegreeList& a,
                                    const CheckOptions& opts) {
  return guarded(make_report("socle-equiv", a, h), [&](CheckReport& r) {
    auto l = lex_plus_powers_ideal(h, a);
    if (!l) {
      r.verdict = Verdict::kNotValid;
      r.message = "no A-lex-plus-powers ideal has this Hilbert function";
      return;
    }
    const int n = a.n();
    const int rho = h.rho();
    BettiDiagram bl = betti_diagram(*l, opts.field);
    std::size_t fail_a = 0, fail_b = 0, fail_c = 0, fail_first = 0;
    r.instances = enumerate_ideals(
        h, a,
        [&](const MonomialIdeal& ideal) {
          BettiDiagram bi = betti_diagram(ideal, opts.field);
          json extra;
          extra["L"] = ideal_json(*l);
          extra["I"] = ideal_json(ideal);
          std::string why = betti_mismatch(bl, bi, n);
          if (!why.empty()) {
            ++fail_a;
            set_counterexample(r, "socle dominance: " + why, extra);
          }
          if (bl.get(n, rho + n - 1) < bi.get(n, rho + n - 1)) {
            ++fail_b;
            set_counterexample(r, "last socle degree dominance fails", extra);
          }
          if (bl.get(n, rho + n) != bi.get(n, rho + n)) {
            ++fail_c;
            set_counterexample(r, "top socle degree differs", extra);
          }
          if (rho >= 1) {
            BettiDiagram bt = betti_diagram(add_maximal_power(ideal, rho), opts.field);
            for (int j = 0; j <= rho + n - 2; ++j) {
              if (bt.get(n, j) != bi.get(n, j)) {
                ++fail_c;
                set_counterexample(r, "truncation changes beta_{n," + std::to_string(j) + "}",
                                   extra);
                break;
              }
            }
          }
          if (!betti_mismatch(bl, bi, 1).empty()) ++fail_first;
          return true;
        },
        opts.enumeration);
    r.notes["socle_failures"] = std::to_string(fail_a);
    r.notes["last_degree_failures"] = std::to_string(fail_b);
    r.notes["truncation_failures"] = rho >= 1 ? std::to_string(fail_c) : "skipped";
    r.notes["first_betti_failures"] = std::to_string(fail_first);
    if (fail_first && r.verdict == Verdict::kPass) {
      json extra;
      set_counterexample(r, "first Betti dominance fails", extra);
    }
  });
}

bool check_needs_hf(const std::string& name) {
  return name == "growth" || name == "lpp" || name == "socle-equiv";
}

CheckReport run_check(const std::string& name, const std::optional<HilbertFunction>& h,
                      const DegreeList& a, const CheckOptions& opts) {
  if (check_needs_hf(name) && !h) throw ParseError("check '" + name + "' needs a Hilbert function");
  if (name == "growth") return growth_check(*h, a, opts);
  if (name == "lpp") return lpp_dominance_check(*h, a, opts);
  if (name == "socle-equiv") return socle_equivalence_check(*h, a, opts);
  if (name == "residual") return residual_lpp_check(a, opts);
  if (name == "lexseg") return lexseg_lemma_check(a, opts);
  throw ParseError("unknown check '" + name + "'");
}

std::vector<DegreeList> degree_lists(int n, int max_entry) {
  if (n < 1) throw DimensionError("need at least one variable");
  std::vector<DegreeList> out;
  std::vector<int> cur(n, 1);
  if (max_entry < 1) return out;
  while (true) {
    out.emplace_back(cur);
    int i = n - 1;
    while (i >= 0 && cur[i] == max_entry) --i;
    if (i < 0) break;
    ++cur[i];
    for (int j = i + 1; j < n; ++j) cur[j] = cur[i];
  }
  return out;
}

std::vector<HilbertFunction> lpp_valid_sequences(const DegreeList& a, int max_sigma) {
  std::vector<HilbertFunction> out;
  for (const auto& t : all_valid_vectors(a)) {
    if (stats(t, a).sigma > max_sigma) continue;
    auto prof = pure_power_profile(ideal_of_vector(t, a));
    bool exact = true;
    for (int i = 0; i < a.n(); ++i)
      if (!prof[i] || *prof[i] != a[i]) exact = false;
    if (exact) out.push_back(hf_of_vector(t));
  }
  return out;
}

std::vector<CheckReport> sweep(const std::string& name, const SweepSpec& spec,
                               const CheckOptions& opts) {
  std::vector<CheckReport> out;
  for (const auto& a : degree_lists(spec.n, spec.max_entry)) {
    if (!check_needs_hf(name)) {
      out.push_back(run_check(name, std::nullopt, a, opts));
      continue;
    }
    for (const auto& h : lpp_valid_sequences(a, spec.max_sigma))
      out.push_back(run_check(name, h, a, opts));
  }
  return out;
}

std::string format_reports(const std::vector<CheckReport>& reports) {
  std::vector<std::vector<std::string>> rows{{"check", "A", "H", "count", "verdict", "message"}};
  for (const auto& r : reports)
    rows.push_back({r.check, format_degree_list(r.a), r.h ? format_hf(*r.h) : "-",
                    std::to_string(r.instances), verdict_name(r.verdict), r.message});
  std::vector<std::size_t> w(6, 0);
  for (const auto& row : rows)
    for (std::size_t c = 0; c < row.size(); ++c) w[c] = std::max(w[c], row[c].size());
  std::ostringstream os;
  for (const auto& row : rows) {
    std::string line;
    for (std::size_t c = 0; c < row.size(); ++c) {
      line += row[c];
      if (c + 1 < row.size()) line += std::string(w[c] - row[c].size() + 2, ' ');
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    os << line << '\n';
  }
  std::size_t pass = 0, bad = 0, guard = 0, invalid = 0;
  for (const auto& r : reports) {
    switch (r.verdict) {
      case Verdict::kPass:
        ++pass;
        break;
      case Verdict::kCounterexample:
        ++bad;
        break;
      case Verdict::kGuardExceeded:
        ++guard;
        break;
      case Verdict::kNotValid:
        ++invalid;
        break;
    }
  }
  os << "summary: " << reports.size() << " reports, " << pass << " pass, " << bad
     << " counterexample, " << invalid << " not-valid, " << guard << " guard-exceeded\n";
  return os.str();
}

std::string report_to_json(const CheckReport& r) {
  json j;
  j["check"] = r.check;
  j["A"] = r.a.degrees();
  j["H"] = r.h ? hf_json(*r.h) : json(nullptr);
  j["verdict"] = verdict_name(r.verdict);
  j["instances"] = r.instances;
  j["message"] = r.message;
  j["class"] = "monomial ideals containing the pure powers";
  j["notes"] = r.notes;
  j["witness"] = r.witness_json.empty() ? json(nullptr) : json::parse(r.witness_json);
  return j.dump();
}

int exit_code(const std::vector<CheckReport>& reports) {
  bool guard = false;
  for (const auto& r : reports) {
    if (r.verdict == Verdict::kCounterexample) return 2;
    if (r.verdict == Verdict::kGuardExceeded) guard = true;
  }
  return guard ? 3 : 0;
}

}  // namespace lppkit
