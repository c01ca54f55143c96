#ifndef LPPKIT_H
#define LPPKIT_H

#include <stddef.h>

#if defined(_WIN32)
#define LPP_API __declspec(dllexport)
#else
#define LPP_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum lpp_status {
  LPP_OK = 0,
  LPP_E_ARGUMENT,
  LPP_E_PARSE,
  LPP_E_DIMENSION,
  LPP_E_RANGE,
  LPP_E_NOT_ARTINIAN,
  LPP_E_INVALID_VECTOR,
  LPP_E_INVALID_SEQUENCE,
  LPP_E_GUARD,
  LPP_E_PRECONDITION,
  LPP_E_INTERNAL
} lpp_status;

typedef struct lpp_ideal lpp_ideal;
typedef struct lpp_vector lpp_vector;
typedef struct lpp_betti lpp_betti;
typedef struct lpp_report lpp_report;

/* Message for the last failing call on this thread, "" if none. */
LPP_API const char* lpp_last_error(void);
LPP_API const char* lpp_status_name(lpp_status s);
/* Releases any string returned through a char** out parameter. */
LPP_API void lpp_free(char* s);

/* Degree lists A are passed as "3,4,11"; Hilbert functions as "1 3 5 1 0". */

LPP_API lpp_status lpp_binomial(int k, int t, long long* out);
LPP_API lpp_status lpp_classical_bound(long long h, int d, long long* out);
LPP_API lpp_status lpp_bound(long long h, int d, const char* a, long long* out);
LPP_API lpp_status lpp_bound_oracle(long long h, int d, const char* a, long long* out);
/* Expansion trace; a == NULL selects the classical binomial expansion. */
LPP_API lpp_status lpp_bound_trace(long long h, int d, const char* a, int json, char** out);
LPP_API lpp_status lpp_ci_rows(const char* a, int max_column, char** out);
LPP_API lpp_status lpp_is_lpp_sequence(const char* hf, const char* a, int* out);
LPP_API lpp_status lpp_codim_from_monomial(const char* monomial, const char* a, long long* out);
LPP_API lpp_status lpp_monomial_from_codim(long long h, int d, const char* a, char** out);

/* Ideals: text like "x^2, x*y, y^3" or {"n":2,"gens":[[2,0],...]}; n = 0 infers. */
LPP_API lpp_status lpp_ideal_parse(const char* text, int n, lpp_ideal** out);
LPP_API void lpp_ideal_destroy(lpp_ideal* ideal);
LPP_API int lpp_ideal_nvars(const lpp_ideal* ideal);
LPP_API lpp_status lpp_ideal_format(const lpp_ideal* ideal, int json, char** out);
LPP_API lpp_status lpp_ideal_equal(const lpp_ideal* a, const lpp_ideal* b, int* out);
LPP_API lpp_status lpp_ideal_hf(const lpp_ideal* ideal, char** out);
LPP_API lpp_status lpp_ideal_colon(const lpp_ideal* j, const lpp_ideal* i, lpp_ideal** out);
LPP_API lpp_status lpp_ideal_is_lpp(const lpp_ideal* ideal, const char* a, int* out);
LPP_API lpp_status lpp_ideal_is_lex_segment(const lpp_ideal* ideal, int d, int* out);
/* Socle monomials by degree. */
LPP_API lpp_status lpp_ideal_socle(const lpp_ideal* ideal, int json, char** out);

LPP_API lpp_status lpp_vector_parse(const char* text, int n, lpp_vector** out);
LPP_API void lpp_vector_destroy(lpp_vector* v);
LPP_API lpp_status lpp_vector_format(const lpp_vector* v, char** out);
/* ok receives 1 or 0; diagnostic (may be NULL) receives the reason. */
LPP_API lpp_status lpp_vector_validate(const lpp_vector* v, const char* a, int* ok,
                                       char** diagnostic);
LPP_API lpp_status lpp_vector_ideal(const lpp_vector* v, const char* a, lpp_ideal** out);
LPP_API lpp_status lpp_vector_hf(const lpp_vector* v, char** out);
LPP_API lpp_status lpp_vector_from_hf(const char* hf, const char* a, lpp_vector** out);
LPP_API lpp_status lpp_vector_dual(const lpp_vector* v, const char* a, lpp_vector** out);
LPP_API lpp_status lpp_vector_stats(const lpp_vector* v, const char* a, int json, char** out);
LPP_API lpp_status lpp_vector_staircase(const lpp_vector* v, const char* a, int ascii, char** out);
LPP_API lpp_status lpp_vector_count(const char* a, size_t* out);

/* characteristic is 0 or a prime. */
LPP_API lpp_status lpp_betti_compute(const lpp_ideal* ideal, int characteristic, lpp_betti** out);
LPP_API void lpp_betti_destroy(lpp_betti* b);
LPP_API lpp_status lpp_betti_get(const lpp_betti* b, int i, int j, long long* out);
LPP_API lpp_status lpp_betti_format(const lpp_betti* b, int json, char** out);
/* Mapping cone comparison against x_i^{a_i}; a == NULL uses the ideal's own powers. */
LPP_API lpp_status lpp_mapping_cone(const lpp_ideal* ideal, const char* a, int characteristic,
                                    int json, char** out);

typedef struct lpp_check_options {
  int characteristic;
  int compare_characteristic; /* 0 disables */
  long long max_ideals;       /* 0 keeps the default */
} lpp_check_options;

/* name: growth, lpp, residual, lexseg, socle-equiv. hf may be NULL for residual and lexseg. */
LPP_API lpp_status lpp_check(const char* name, const char* hf, const char* a,
                             const lpp_check_options* opts, lpp_report** out);
LPP_API lpp_status lpp_sweep(const char* name, int n, int max_entry, int max_sigma,
                             const lpp_check_options* opts, lpp_report** out);
LPP_API void lpp_report_destroy(lpp_report* r);
LPP_API size_t lpp_report_size(const lpp_report* r);
/* "pass", "counterexample", "not-valid" or "guard-exceeded"; NULL past the end. */
LPP_API const char* lpp_report_verdict(const lpp_report* r, size_t index);
LPP_API lpp_status lpp_report_witness(const lpp_report* r, size_t index, char** out);
/* Table, or one JSON object per line. */
LPP_API lpp_status lpp_report_format(const lpp_report* r, int json, char** out);
/* 0 all pass, 2 counterexample, 3 guard exceeded. */
LPP_API int lpp_report_exit_code(const lpp_report* r);

#ifdef __cplusplus
}
#endif

#endif
