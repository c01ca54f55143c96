#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <memory>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "lppkit.h"

namespace {

struct CallError {
  lpp_status status;
  std::string message;
};

void ok(lpp_status s) {
  if (s != LPP_OK) throw CallError{s, lpp_last_error()};
}

std::string take(char* s) {
  std::string out = s ? s : "";
  lpp_free(s);
  return out;
}

template <typename T, void (*Del)(T*)>
struct Deleter {
  void operator()(T* p) const { Del(p); }
};
using Ideal = std::unique_ptr<lpp_ideal, Deleter<lpp_ideal, lpp_ideal_destroy>>;
using Vector = std::unique_ptr<lpp_vector, Deleter<lpp_vector, lpp_vector_destroy>>;
using Betti = std::unique_ptr<lpp_betti, Deleter<lpp_betti, lpp_betti_destroy>>;
using Report = std::unique_ptr<lpp_report, Deleter<lpp_report, lpp_report_destroy>>;

// "-" reads stdin, an existing path reads the file, anything else is inline text.
std::string read_source(const std::string& arg) {
  if (arg == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
  std::error_code ec;
  if (std::filesystem::is_regular_file(arg, ec)) {
    std::ifstream in(arg);
    return {std::istreambuf_iterator<char>(in), {}};
  }
  return arg;
}

Ideal load_ideal(const std::string& arg, int n) {
  lpp_ideal* p = nullptr;
  ok(lpp_ideal_parse(read_source(arg).c_str(), n, &p));
  return Ideal(p);
}

Vector load_vector(const std::string& text, int n) {
  lpp_vector* p = nullptr;
  ok(lpp_vector_parse(text.c_str(), n, &p));
  return Vector(p);
}

int arity(const std::string& a) {
  if (a.empty()) return 0;
  return static_cast<int>(std::count(a.begin(), a.end(), ',')) + 1;
}

struct Flags {
  std::string a;
  int d = 0;
  long long h = 0;
  std::string hf;
  std::string vec;
  std::string ideal;
  std::string by;
  std::string monomial;
  int n = 0;
  int characteristic = 0;
  int compare_characteristic = 0;
  bool json = false;
  bool ascii = false;
  long long max_count = 0;
  bool sweep = false;
  int max_entry = 3;
  int max_sigma = 6;
  std::string witness = ".";
};

void print(const std::string& s) {
  std::cout << s;
  if (!s.empty() && s.back() != '\n') std::cout << '\n';
}

std::string json_string(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

int run_vec(const std::string& action, const Flags& f) {
  const char* a = f.a.c_str();
  const int n = arity(f.a);
  if (action == "from-hf") {
    lpp_vector* v = nullptr;
    ok(lpp_vector_from_hf(f.hf.c_str(), a, &v));
    Vector hold(v);
    char* s = nullptr;
    ok(lpp_vector_format(v, &s));
    std::string text = take(s);
    print(f.json ? "{\"vector\":" + json_string(text) + "}" : text);
    return 0;
  }
  Vector v = load_vector(f.vec, n);
  if (action == "validate") {
    int valid = 0;
    char* diag = nullptr;
    ok(lpp_vector_validate(v.get(), a, &valid, &diag));
    std::string d = take(diag);
    if (f.json)
      print(std::string("{\"valid\":") + (valid ? "true" : "false") +
            ",\"diagnostic\":" + json_string(d) + "}");
    else
      print(valid ? std::string("valid") : "invalid: " + d);
    return valid ? 0 : 4;
  }
  char* s = nullptr;
  if (action == "to-ideal") {
    lpp_ideal* p = nullptr;
    ok(lpp_vector_ideal(v.get(), a, &p));
    Ideal hold(p);
    ok(lpp_ideal_format(p, f.json, &s));
  } else if (action == "to-hf") {
    ok(lpp_vector_hf(v.get(), &s));
    if (f.json) {
      std::string text = take(s);
      std::string arr = "[";
      std::istringstream in(text);
      std::string tok;
      while (in >> tok) arr += (arr.size() > 1 ? "," : "") + tok;
      print("{\"hf\":" + arr + "]}");
      return 0;
    }
  } else if (action == "dual") {
    lpp_vector* p = nullptr;
    ok(lpp_vector_dual(v.get(), a, &p));
    Vector hold(p);
    ok(lpp_vector_format(p, &s));
    if (f.json) {
      print("{\"vector\":" + json_string(take(s)) + "}");
      return 0;
    }
  } else if (action == "stats") {
    ok(lpp_vector_stats(v.get(), a, f.json, &s));
  } else {
    throw CallError{LPP_E_ARGUMENT, "unknown vec action '" + action + "'"};
  }
  print(take(s));
  return 0;
}

int run_check(const std::string& name, const Flags& f) {
  lpp_check_options opts{f.characteristic, f.compare_characteristic, f.max_count};
  lpp_report* r = nullptr;
  if (f.sweep) {
    ok(lpp_sweep(name.c_str(), f.n ? f.n : 3, f.max_entry, f.max_sigma, &opts, &r));
  } else {
    ok(lpp_check(name.c_str(), f.hf.empty() ? nullptr : f.hf.c_str(), f.a.c_str(), &opts, &r));
  }
  Report hold(r);
  char* s = nullptr;
  ok(lpp_report_format(r, f.json, &s));
  print(take(s));
  for (size_t i = 0; i < lpp_report_size(r); ++i) {
    if (std::string(lpp_report_verdict(r, i)) != "counterexample") continue;
    ok(lpp_report_witness(r, i, &s));
    std::filesystem::path path =
        std::filesystem::path(f.witness) / ("witness-" + name + "-" + std::to_string(i) + ".json");
    std::ofstream out(path);
    out << take(s) << '\n';
    std::cerr << "witness written to " << path.string() << '\n';
  }
  return lpp_report_exit_code(r);
}

int dispatch(const std::string& cmd, const std::string& action, const Flags& f) {
  char* s = nullptr;
  if (cmd == "hf") {
    Ideal i = load_ideal(f.ideal, f.n);
    ok(lpp_ideal_hf(i.get(), &s));
    std::string text = take(s);
    if (f.json) {
      std::string arr = "[";
      std::istringstream in(text);
      std::string tok;
      while (in >> tok) arr += (arr.size() > 1 ? "," : "") + tok;
      text = "{\"hf\":" + arr + "]}";
    }
    print(text);
  } else if (cmd == "bound") {
    ok(lpp_bound_trace(f.h, f.d, f.a.empty() ? nullptr : f.a.c_str(), f.json, &s));
    print(take(s));
  } else if (cmd == "rows") {
    ok(lpp_ci_rows(f.a.c_str(), f.d, &s));
    print(take(s));
  } else if (cmd == "validseq") {
    int valid = 0;
    ok(lpp_is_lpp_sequence(f.hf.c_str(), f.a.c_str(), &valid));
    print(f.json ? std::string("{\"valid\":") + (valid ? "true" : "false") + "}"
                 : std::string(valid ? "valid" : "invalid"));
    return valid ? 0 : 4;
  } else if (cmd == "vec") {
    return run_vec(action, f);
  } else if (cmd == "colon") {
    Ideal i = load_ideal(f.ideal, f.n ? f.n : arity(f.a));
    Ideal j;
    if (!f.by.empty()) {
      j = load_ideal(f.by, lpp_ideal_nvars(i.get()));
    } else {
      std::string powers;
      if (f.a.empty()) throw CallError{LPP_E_ARGUMENT, "colon needs --A or --into"};
      std::istringstream in(f.a);
      std::string tok;
      for (int v = 1; std::getline(in, tok, ','); ++v)
        powers += (powers.empty() ? "" : ", ") + std::string("x") + std::to_string(v) + "^" + tok;
      j = load_ideal(powers, arity(f.a));
    }
    lpp_ideal* c = nullptr;
    ok(lpp_ideal_colon(j.get(), i.get(), &c));
    Ideal hold(c);
    ok(lpp_ideal_format(c, f.json, &s));
    print(take(s));
  } else if (cmd == "betti") {
    Ideal i = load_ideal(f.ideal, f.n);
    lpp_betti* b = nullptr;
    ok(lpp_betti_compute(i.get(), f.characteristic, &b));
    Betti hold(b);
    ok(lpp_betti_format(b, f.json, &s));
    print(take(s));
  } else if (cmd == "socle") {
    Ideal i = load_ideal(f.ideal, f.n);
    ok(lpp_ideal_socle(i.get(), f.json, &s));
    print(take(s));
  } else if (cmd == "check") {
    return run_check(action, f);
  } else if (cmd == "staircase") {
    Vector v = load_vector(f.vec, 2);
    ok(lpp_vector_staircase(v.get(), f.a.c_str(), f.ascii, &s));
    print(take(s));
  } else if (cmd == "codim") {
    if (!f.monomial.empty()) {
      long long c = 0;
      ok(lpp_codim_from_monomial(f.monomial.c_str(), f.a.c_str(), &c));
      print(f.json ? "{\"codim\":" + std::to_string(c) + "}" : std::to_string(c));
    } else {
      ok(lpp_monomial_from_codim(f.h, f.d, f.a.c_str(), &s));
      std::string m = take(s);
      print(f.json ? "{\"monomial\":" + json_string(m) + "}" : m);
    }
  } else if (cmd == "mapcone") {
    Ideal i = load_ideal(f.ideal, f.n ? f.n : arity(f.a));
    ok(lpp_mapping_cone(i.get(), f.a.empty() ? nullptr : f.a.c_str(), f.characteristic, f.json,
                        &s));
    std::string text = take(s);
    print(text);
    return text.find("result: fail") != std::string::npos ||
                   text.find("\"ok\":false") != std::string::npos
               ? 2
               : 0;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"lppkit: Artinian monomial ideals, lex-plus-powers ideals and their vectors"};
  app.set_help_flag("--help", "print help and exit");
  app.require_subcommand(1);
  Flags f;
  std::string vec_action, check_name;

  auto add_a = [&](CLI::App* c, bool required) {
    auto* o = c->add_option("--A", f.a, "degree list, e.g. 3,4,11");
    if (required) o->required();
  };
  auto add_ideal = [&](CLI::App* c) {
    c->add_option("--ideal", f.ideal, "ideal: file, inline text, or - for stdin")->required();
    c->add_option("--n", f.n, "number of variables (inferred when 0)");
  };
  auto add_json = [&](CLI::App* c) { c->add_flag("--json", f.json, "emit JSON"); };

  auto* hf = app.add_subcommand("hf", "Hilbert function of R/I");
  add_ideal(hf);
  add_json(hf);

  auto* bound = app.add_subcommand("bound", "growth bound with its expansion");
  add_a(bound, false);
  bound->add_option("--d", f.d, "degree")->required();
  bound->add_option("--h", f.h, "value in degree d")->required();
  add_json(bound);

  auto* rows = app.add_subcommand("rows", "complete intersection rows for A");
  add_a(rows, true);
  rows->add_option("--d", f.d, "last column")->required();

  auto* validseq = app.add_subcommand("validseq", "is H an lpp sequence for A");
  add_a(validseq, true);
  validseq->add_option("--hf", f.hf, "Hilbert function")->required();
  add_json(validseq);

  auto* vec = app.add_subcommand("vec", "lpp vector operations");
  vec->add_option("action", vec_action, "validate|to-ideal|to-hf|from-hf|dual|stats")
      ->required()
      ->check(CLI::IsMember({"validate", "to-ideal", "to-hf", "from-hf", "dual", "stats"}));
  add_a(vec, false);
  vec->add_option("--vec", f.vec, "bracket list");
  vec->add_option("--hf", f.hf, "Hilbert function");
  add_json(vec);

  auto* col = app.add_subcommand("colon", "(J : I), J defaulting to the powers of --A");
  add_ideal(col);
  add_a(col, false);
  col->add_option("--into", f.by, "the ideal J");
  add_json(col);

  auto* betti = app.add_subcommand("betti", "graded Betti numbers of R/I");
  add_ideal(betti);
  betti->add_option("--char", f.characteristic, "field characteristic, 0 or a prime");
  add_json(betti);

  auto* socle = app.add_subcommand("socle", "socle monomials of R/I by degree");
  add_ideal(socle);
  add_json(socle);

  auto* check = app.add_subcommand("check", "verification harness");
  check->add_option("name", check_name, "growth|lpp|residual|lexseg|socle-equiv")
      ->required()
      ->check(CLI::IsMember({"growth", "lpp", "residual", "lexseg", "socle-equiv"}));
  add_a(check, false);
  check->add_option("--hf", f.hf, "Hilbert function");
  check->add_option("--char", f.characteristic, "field characteristic");
  check->add_option("--compare-char", f.compare_characteristic,
                    "also compute in this characteristic and record differences");
  check->add_option("--max-count", f.max_count, "cap on enumerated ideals");
  check->add_flag("--sweep", f.sweep, "run over every A and valid H in range");
  check->add_option("--n", f.n, "sweep: number of variables");
  check->add_option("--max-entry", f.max_entry, "sweep: largest entry of A");
  check->add_option("--max-sigma", f.max_sigma, "sweep: largest sigma(H)");
  check->add_option("--witness", f.witness, "directory for witness files");
  add_json(check);

  auto* stair = app.add_subcommand("staircase", "two-variable staircase of W_T");
  add_a(stair, true);
  stair->add_option("--vec", f.vec, "bracket list")->required();
  stair->add_flag("--ascii", f.ascii, "use * and o");

  auto* codim = app.add_subcommand("codim", "lex rank of a monomial, or its inverse");
  add_a(codim, true);
  codim->add_option("--monomial", f.monomial, "monomial such as x1^2*x2^3*x3^7");
  codim->add_option("--d", f.d, "degree");
  codim->add_option("--h", f.h, "number of lex-smaller standard monomials");
  add_json(codim);

  auto* mapcone = app.add_subcommand("mapcone", "compare first and last Betti numbers through the colon");
  add_ideal(mapcone);
  add_a(mapcone, false);
  mapcone->add_option("--char", f.characteristic, "field characteristic");
  add_json(mapcone);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }

  std::string cmd = app.get_subcommands().front()->get_name();
  std::string action = cmd == "vec" ? vec_action : check_name;
  try {
    return dispatch(cmd, action, f);
  } catch (const CallError& e) {
    std::cerr << "error (" << lpp_status_name(e.status) << "): " << e.message << '\n';
    return e.status == LPP_E_GUARD ? 3 : 1;
  }
}
