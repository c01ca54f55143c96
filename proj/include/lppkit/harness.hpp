#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lppkit/monomial.hpp"
#include "lppkit/resolutions.hpp"

namespace lppkit {

struct EnumerationOptions {
  std::size_t max_ideals = 200000;
  std::size_t max_standard = 4096;  // cap on sum of H
};

// Defaults, with max_ideals taken from LPPKIT_GUARD when set.
EnumerationOptions default_enumeration_options();

// Every monomial ideal containing x_i^{a_i} whose quotient has Hilbert function H,
// each once, in a fixed order. The callback returns false to stop early.
std::size_t enumerate_ideals(const HilbertFunction& h, const DegreeList& a,
                             const std::function<bool(const MonomialIdeal&)>& sink,
                             const EnumerationOptions& opts = default_enumeration_options());
std::vector<MonomialIdeal> enumerate_ideals(
    const HilbertFunction& h, const DegreeList& a,
    const EnumerationOptions& opts = default_enumeration_options());

enum class Verdict { kPass, kCounterexample, kNotValid, kGuardExceeded };
const char* verdict_name(Verdict v);

struct CheckReport {
  std::string check;
  DegreeList a;
  std::optional<HilbertFunction> h;
  Verdict verdict = Verdict::kPass;
  std::size_t instances = 0;
  std::string message;
  std::string witness_json;  // set for counterexamples
  std::map<std::string, std::string> notes;
};

struct CheckOptions {
  FieldSpec field;
  EnumerationOptions enumeration = default_enumeration_options();
  std::size_t max_vectors = 200000;
  // When nonzero, Betti numbers are also computed in this characteristic and
  // differences are recorded in the notes.
  int compare_characteristic = 0;
};

// The A-lex-plus-powers ideal with Hilbert function H, if one exists.
std::optional<MonomialIdeal> lex_plus_powers_ideal(const HilbertFunction& h, const DegreeList& a);

CheckReport growth_check(const HilbertFunction& h, const DegreeList& a,
                         const CheckOptions& opts = {});
CheckReport lpp_dominance_check(const HilbertFunction& h, const DegreeList& a,
                                const CheckOptions& opts = {});
CheckReport residual_lpp_check(const DegreeList& a, const CheckOptions& opts = {});
CheckReport lexseg_lemma_check(const DegreeList& a, const CheckOptions& opts = {});
CheckReport socle_equivalence_check(const HilbertFunction& h, const DegreeList& a,
                                    const CheckOptions& opts = {});

// Check names accepted by run_check/sweep: growth, lpp, residual, lexseg, socle-equiv.
bool check_needs_hf(const std::string& name);
CheckReport run_check(const std::string& name, const std::optional<HilbertFunction>& h,
                      const DegreeList& a, const CheckOptions& opts = {});

struct SweepSpec {
  int n = 3;
  int max_entry = 3;
  int max_sigma = 6;
};

std::vector<DegreeList> degree_lists(int n, int max_entry);
// Hilbert functions H with sigma(H) <= max_sigma for which an A-LPP ideal exists.
std::vector<HilbertFunction> lpp_valid_sequences(const DegreeList& a, int max_sigma);
std::vector<CheckReport> sweep(const std::string& name, const SweepSpec& spec,
                               const CheckOptions& opts = {});

std::string format_reports(const std::vector<CheckReport>& reports);
std::string report_to_json(const CheckReport& r);
// 0 all pass, 2 counterexample, 3 guard exceeded.
int exit_code(const std::vector<CheckReport>& reports);

}  // namespace lppkit
