#include "lppkit.h"

#include <cstring>
#include <memory>
#include <string>

#include "json.hpp"
#include "lppkit/growth.hpp"
#include "lppkit/harness.hpp"
#include "lppkit/lpp_vector.hpp"
#include "lppkit/monomial.hpp"
#include "lppkit/resolutions.hpp"

struct lpp_ideal {
  lppkit::MonomialIdeal value;
};
struct lpp_vector {
  lppkit::LppVector value;
};
struct lpp_betti {
  lppkit::BettiDiagram value;
};
struct lpp_report {
  std::vector<lppkit::CheckReport> value;
};

namespace {

using nlohmann::json;
using namespace lppkit;

thread_local std::string g_last_error;

lpp_status to_status(ErrorCode c) {
  switch (c) {
    case ErrorCode::kArgument:
      return LPP_E_ARGUMENT;
    case ErrorCode::kParse:
      return LPP_E_PARSE;
    case ErrorCode::kDimension:
      return LPP_E_DIMENSION;
    case ErrorCode::kRange:
      return LPP_E_RANGE;
    case ErrorCode::kNotArtinian:
      return LPP_E_NOT_ARTINIAN;
    case ErrorCode::kInvalidVector:
      return LPP_E_INVALID_VECTOR;
    case ErrorCode::kInvalidSequence:
      return LPP_E_INVALID_SEQUENCE;
    case ErrorCode::kGuardExceeded:
      return LPP_E_GUARD;
    case ErrorCode::kPrecondition:
      return LPP_E_PRECONDITION;
    case ErrorCode::kInternal:
      return LPP_E_INTERNAL;
  }
  return LPP_E_INTERNAL;
}

template <typename F>
lpp_status guard(F&& f) {
  g_last_error.clear();
  try {
    f();
    return LPP_OK;
  } catch (const Error& e) {
    g_last_error = e.what();
    return to_status(e.code());
  } catch (const nlohmann::json::exception& e) {
    g_last_error = e.what();
    return LPP_E_PARSE;
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
    return LPP_E_INTERNAL;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return LPP_E_INTERNAL;
  }
}

void need(const void* p, const char* what) {
  if (!p) throw Error(ErrorCode::kArgument, std::string(what) + " is null");
}

char* dup(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (!p) throw std::bad_alloc();
  std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

DegreeList deg(const char* a) {
  need(a, "degree list");
  return parse_degree_list(a);
}

HilbertFunction hfun(const char* h) {
  need(h, "Hilbert function");
  return parse_hf(h);
}

json stats_json(const VectorStats& s) {
  json j;
  j["length"] = s.length;
  j["sigma"] = s.sigma;
  j["alpha"] = s.alpha ? json(*s.alpha) : json(nullptr);
  j["ci"] = s.is_ci;
  return j;
}

CheckOptions check_options(const lpp_check_options* o) {
  CheckOptions opts;
  if (!o) return opts;
  opts.field = FieldSpec(o->characteristic);
  if (o->compare_characteristic) opts.compare_characteristic = FieldSpec(o->compare_characteristic).characteristic();
  if (o->max_ideals < 0) throw RangeError("max_ideals must be nonnegative");
  if (o->max_ideals > 0) opts.enumeration.max_ideals = static_cast<std::size_t>(o->max_ideals);
  return opts;
}

}  // namespace

extern "C" {

const char* lpp_last_error(void) { return g_last_error.c_str(); }

const char* lpp_status_name(lpp_status s) {
  switch (s) {
    case LPP_OK:
      return "ok";
    case LPP_E_ARGUMENT:
      return "argument";
    case LPP_E_PARSE:
      return "parse";
    case LPP_E_DIMENSION:
      return "dimension";
    case LPP_E_RANGE:
      return "range";
    case LPP_E_NOT_ARTINIAN:
      return "not-artinian";
    case LPP_E_INVALID_VECTOR:
      return "invalid-vector";
    case LPP_E_INVALID_SEQUENCE:
      return "invalid-sequence";
    case LPP_E_GUARD:
      return "guard-exceeded";
    case LPP_E_PRECONDITION:
      return "precondition";
    case LPP_E_INTERNAL:
      return "internal";
  }
  return "unknown";
}

void lpp_free(char* s) { std::free(s); }

lpp_status lpp_binomial(int k, int t, long long* out) {
  return guard([&] {
    need(out, "out");
    *out = binomial(k, t);
  });
}

lpp_status lpp_classical_bound(long long h, int d, long long* out) {
  return guard([&] {
    need(out, "out");
    *out = classical_bound(h, d);
  });
}

lpp_status lpp_bound(long long h, int d, const char* a, long long* out) {
  return guard([&] {
    need(out, "out");
    *out = lppkit::lpp_bound(h, d, deg(a));
  });
}

lpp_status lpp_bound_oracle(long long h, int d, const char* a, long long* out) {
  return guard([&] {
    need(out, "out");
    *out = lppkit::lpp_bound_oracle(h, d, deg(a));
  });
}

lpp_status lpp_bound_trace(long long h, int d, const char* a, int as_json, char** out) {
  return guard([&] {
    need(out, "out");
    if (!a) {
      MacaulayExpansion e = classical_expansion(h, d);
      if (!as_json) {
        *out = dup(format_classical_trace(e));
        return;
      }
      json j;
      j["h"] = h;
      j["d"] = d;
      j["A"] = nullptr;
      j["terms"] = json::array();
      for (const auto& t : e.terms) j["terms"].push_back({{"k", t.k}, {"t", t.t}});
      j["bound"] = classical_bound(h, d);
      *out = dup(j.dump() + "\n");
      return;
    }
    DegreeList da = deg(a);
    GKExpansion e = gk_expansion(h, d, da);
    if (!as_json) {
      *out = dup(format_gk_trace(e));
      return;
    }
    json j;
    j["h"] = h;
    j["d"] = d;
    j["A"] = da.degrees();
    j["terms"] = json::array();
    for (const auto& t : e.terms)
      j["terms"].push_back(
          {{"column", t.column}, {"depth", t.depth}, {"value", t.value}, {"k", t.k()}});
    j["bound"] = lppkit::lpp_bound(h, d, da);
    *out = dup(j.dump() + "\n");
  });
}

lpp_status lpp_ci_rows(const char* a, int max_column, char** out) {
  return guard([&] {
    need(out, "out");
    CiRectangle rect(deg(a), max_column);
    std::string s;
    for (int r = 0; r < rect.depth_count(); ++r) {
      std::string line;
      for (int c = 0; c <= max_column; ++c)
        line += (c ? " " : "") + std::to_string(rect.at(r, c));
      s += line + "\n";
    }
    *out = dup(s);
  });
}

lpp_status lpp_is_lpp_sequence(const char* hf, const char* a, int* out) {
  return guard([&] {
    need(out, "out");
    *out = is_lpp_sequence(hfun(hf), deg(a)) ? 1 : 0;
  });
}

lpp_status lpp_codim_from_monomial(const char* monomial, const char* a, long long* out) {
  return guard([&] {
    need(out, "out");
    need(monomial, "monomial");
    DegreeList da = deg(a);
    *out = codim_from_monomial(parse_monomial(monomial, da.n()), da);
  });
}

lpp_status lpp_monomial_from_codim(long long h, int d, const char* a, char** out) {
  return guard([&] {
    need(out, "out");
    *out = dup(format_monomial(monomial_from_codim(h, d, deg(a))));
  });
}

lpp_status lpp_ideal_parse(const char* text, int n, lpp_ideal** out) {
  return guard([&] {
    need(out, "out");
    need(text, "text");
    *out = new lpp_ideal{parse_ideal_any(text, n)};
  });
}

void lpp_ideal_destroy(lpp_ideal* ideal) { delete ideal; }

int lpp_ideal_nvars(const lpp_ideal* ideal) { return ideal ? ideal->value.n() : 0; }

lpp_status lpp_ideal_format(const lpp_ideal* ideal, int as_json, char** out) {
  return guard([&] {
    need(ideal, "ideal");
    need(out, "out");
    *out = dup(as_json ? ideal_to_json(ideal->value) : format_ideal(ideal->value));
  });
}

lpp_status lpp_ideal_equal(const lpp_ideal* a, const lpp_ideal* b, int* out) {
  return guard([&] {
    need(a, "ideal");
    need(b, "ideal");
    need(out, "out");
    *out = a->value == b->value ? 1 : 0;
  });
}

lpp_status lpp_ideal_hf(const lpp_ideal* ideal, char** out) {
  return guard([&] {
    need(ideal, "ideal");
    need(out, "out");
    *out = dup(format_hf(hilbert_function(ideal->value)));
  });
}

lpp_status lpp_ideal_colon(const lpp_ideal* j, const lpp_ideal* i, lpp_ideal** out) {
  return guard([&] {
    need(j, "ideal");
    need(i, "ideal");
    need(out, "out");
    *out = new lpp_ideal{colon(j->value, i->value)};
  });
}

lpp_status lpp_ideal_is_lpp(const lpp_ideal* ideal, const char* a, int* out) {
  return guard([&] {
    need(ideal, "ideal");
    need(out, "out");
    *out = is_lpp(ideal->value, deg(a)) ? 1 : 0;
  });
}

lpp_status lpp_ideal_is_lex_segment(const lpp_ideal* ideal, int d, int* out) {
  return guard([&] {
    need(ideal, "ideal");
    need(out, "out");
    *out = is_lex_segment(ideal->value, d) ? 1 : 0;
  });
}

lpp_status lpp_ideal_socle(const lpp_ideal* ideal, int as_json, char** out) {
  return guard([&] {
    need(ideal, "ideal");
    need(out, "out");
    auto soc = socle_monomials(ideal->value);
    if (as_json) {
      json j = json::object();
      for (const auto& [d, ms] : soc) {
        json arr = json::array();
        for (const auto& m : ms) arr.push_back(m.exps());
        j[std::to_string(d)] = arr;
      }
      *out = dup(j.dump() + "\n");
      return;
    }
    std::string s;
    for (const auto& [d, ms] : soc) {
      s += std::to_string(d) + ": " + std::to_string(ms.size());
      std::string list;
      for (const auto& m : ms) list += (list.empty() ? "" : ", ") + format_monomial(m);
      s += "  " + list + "\n";
    }
    *out = dup(s);
  });
}

lpp_status lpp_vector_parse(const char* text, int n, lpp_vector** out) {
  return guard([&] {
    need(out, "out");
    need(text, "text");
    *out = new lpp_vector{parse_vector(text, n)};
  });
}

void lpp_vector_destroy(lpp_vector* v) { delete v; }

lpp_status lpp_vector_format(const lpp_vector* v, char** out) {
  return guard([&] {
    need(v, "vector");
    need(out, "out");
    *out = dup(format_vector(v->value));
  });
}

lpp_status lpp_vector_validate(const lpp_vector* v, const char* a, int* ok, char** diagnostic) {
  return guard([&] {
    need(v, "vector");
    need(ok, "ok");
    ValidationResult r = validate(v->value, deg(a));
    *ok = r.ok ? 1 : 0;
    if (diagnostic) *diagnostic = dup(r.diagnostic);
  });
}

lpp_status lpp_vector_ideal(const lpp_vector* v, const char* a, lpp_ideal** out) {
  return guard([&] {
    need(v, "vector");
    need(out, "out");
    *out = new lpp_ideal{ideal_of_vector(v->value, deg(a))};
  });
}

lpp_status lpp_vector_hf(const lpp_vector* v, char** out) {
  return guard([&] {
    need(v, "vector");
    need(out, "out");
    *out = dup(format_hf(hf_of_vector(v->value)));
  });
}

lpp_status lpp_vector_from_hf(const char* hf, const char* a, lpp_vector** out) {
  return guard([&] {
    need(out, "out");
    *out = new lpp_vector{vector_of_hf(hfun(hf), deg(a))};
  });
}

lpp_status lpp_vector_dual(const lpp_vector* v, const char* a, lpp_vector** out) {
  return guard([&] {
    need(v, "vector");
    need(out, "out");
    *out = new lpp_vector{dual(v->value, deg(a))};
  });
}

lpp_status lpp_vector_stats(const lpp_vector* v, const char* a, int as_json, char** out) {
  return guard([&] {
    need(v, "vector");
    need(out, "out");
    VectorStats s = stats(v->value, deg(a));
    if (as_json) {
      *out = dup(stats_json(s).dump() + "\n");
      return;
    }
    std::string text = "length " + std::to_string(s.length) + "\n";
    text += "sigma " + std::to_string(s.sigma) + "\n";
    text += "alpha " + (s.alpha ? std::to_string(*s.alpha) : std::string("inf")) + "\n";
    text += std::string("ci ") + (s.is_ci ? "yes" : "no") + "\n";
    *out = dup(text);
  });
}

lpp_status lpp_vector_staircase(const lpp_vector* v, const char* a, int ascii, char** out) {
  return guard([&] {
    need(v, "vector");
    need(out, "out");
    *out = dup(render_staircase(v->value, deg(a), ascii != 0));
  });
}

lpp_status lpp_vector_count(const char* a, size_t* out) {
  return guard([&] {
    need(out, "out");
    *out = all_valid_vectors(deg(a)).size();
  });
}

lpp_status lpp_betti_compute(const lpp_ideal* ideal, int characteristic, lpp_betti** out) {
  return guard([&] {
    need(ideal, "ideal");
    need(out, "out");
    *out = new lpp_betti{betti_diagram(ideal->value, FieldSpec(characteristic))};
  });
}

void lpp_betti_destroy(lpp_betti* b) { delete b; }

lpp_status lpp_betti_get(const lpp_betti* b, int i, int j, long long* out) {
  return guard([&] {
    need(b, "diagram");
    need(out, "out");
    *out = b->value.get(i, j);
  });
}

lpp_status lpp_betti_format(const lpp_betti* b, int as_json, char** out) {
  return guard([&] {
    need(b, "diagram");
    need(out, "out");
    *out = dup(as_json ? betti_to_json(b->value) + "\n" : format_betti(b->value));
  });
}

lpp_status lpp_mapping_cone(const lpp_ideal* ideal, const char* a, int characteristic,
                            int as_json, char** out) {
  return guard([&] {
    need(ideal, "ideal");
    need(out, "out");
    FieldSpec field(characteristic);
    MappingConeReport rep;
    if (a) {
      rep = mapping_cone_check(ideal->value, deg(a), field);
    } else {
      std::vector<int> powers;
      for (const auto& p : pure_power_profile(ideal->value)) {
        if (!p) throw NotArtinianError("the ideal contains no power of some variable");
        powers.push_back(*p);
      }
      rep = mapping_cone_check(ideal->value, powers, field);
    }
    if (as_json) {
      json j;
      j["powers"] = rep.powers;
      j["omega"] = rep.omega;
      j["colon"] = json::parse(ideal_to_json(rep.colon_ideal));
      j["rows"] = json::array();
      for (const auto& r : rep.rows)
        j["rows"].push_back({{"j", r.j},
                             {"beta1", r.beta1},
                             {"beta_n_colon", r.beta_n_colon},
                             {"t", r.t},
                             {"multiplicity", r.multiplicity}});
      j["bounds_hold"] = rep.bounds_hold;
      j["powers_minimal"] = rep.powers_minimal;
      j["all_equal"] = rep.all_equal;
      j["ok"] = rep.ok();
      *out = dup(j.dump() + "\n");
      return;
    }
    std::string s = "colon: " + format_ideal(rep.colon_ideal) + "\n";
    s += "omega: " + std::to_string(rep.omega) + "\n";
    s += "j  beta_1j  beta_n(omega-j)  t  |j|\n";
    for (const auto& r : rep.rows)
      s += std::to_string(r.j) + "  " + std::to_string(r.beta1) + "  " +
           std::to_string(r.beta_n_colon) + "  " + std::to_string(r.t) + "  " +
           std::to_string(r.multiplicity) + "\n";
    s += std::string("powers minimal: ") + (rep.powers_minimal ? "yes" : "no") + "\n";
    s += std::string("result: ") + (rep.ok() ? "ok" : "fail") + "\n";
    *out = dup(s);
  });
}

lpp_status lpp_check(const char* name, const char* hf, const char* a,
                     const lpp_check_options* opts, lpp_report** out) {
  return guard([&] {
    need(name, "name");
    need(out, "out");
    std::optional<HilbertFunction> h;
    if (hf) h = parse_hf(hf);
    auto rep = std::make_unique<lpp_report>();
    rep->value.push_back(run_check(name, h, deg(a), check_options(opts)));
    *out = rep.release();
  });
}

lpp_status lpp_sweep(const char* name, int n, int max_entry, int max_sigma,
                     const lpp_check_options* opts, lpp_report** out) {
  return guard([&] {
    need(name, "name");
    need(out, "out");
    SweepSpec spec{n, max_entry, max_sigma};
    *out = new lpp_report{sweep(name, spec, check_options(opts))};
  });
}

void lpp_report_destroy(lpp_report* r) { delete r; }

size_t lpp_report_size(const lpp_report* r) { return r ? r->value.size() : 0; }

const char* lpp_report_verdict(const lpp_report* r, size_t index) {
  if (!r || index >= r->value.size()) return nullptr;
  return verdict_name(r->value[index].verdict);
}

lpp_status lpp_report_witness(const lpp_report* r, size_t index, char** out) {
  return guard([&] {
    need(r, "report");
    need(out, "out");
    if (index >= r->value.size()) throw RangeError("report index out of range");
    *out = dup(r->value[index].witness_json);
  });
}

lpp_status lpp_report_format(const lpp_report* r, int as_json, char** out) {
  return guard([&] {
    need(r, "report");
    need(out, "out");
    if (!as_json) {
      *out = dup(format_reports(r->value));
      return;
    }
    std::string s;
    for (const auto& c : r->value) s += report_to_json(c) + "\n";
    *out = dup(s);
  });
}

int lpp_report_exit_code(const lpp_report* r) { return r ? exit_code(r->value) : 0; }

}  // extern "C"
