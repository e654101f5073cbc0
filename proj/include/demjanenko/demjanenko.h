/*
 * Copyright 2026 The demjanenko authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
#ifndef DEMJANENKO_DEMJANENKO_H
#define DEMJANENKO_DEMJANENKO_H

/*
 * C interface to the demjanenko library.
 *
 * Every fallible call returns a demj_status. On failure the out-parameters
 * are left untouched and demj_last_error_message() describes the error for
 * the calling thread. Objects returned through `**out` are owned by the
 * caller and released with the matching *_free function; strings are
 * released with demj_string_free().
 */

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32) && defined(DEMJ_BUILDING)
#define DEMJ_API __declspec(dllexport)
#elif defined(_WIN32)
#define DEMJ_API __declspec(dllimport)
#elif defined(__GNUC__)
#define DEMJ_API __attribute__((visibility("default")))
#else
#define DEMJ_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum demj_status {
  DEMJ_OK = 0,
  DEMJ_INVALID_ARGUMENT = 1,
  DEMJ_NOT_PRIME = 2,
  DEMJ_NOT_UNIT = 3,
  DEMJ_K_OUT_OF_RANGE = 4,
  DEMJ_H_OUT_OF_RANGE = 5,
  DEMJ_RANGE_EXCEEDED = 6,
  DEMJ_DIMENSION_TOO_LARGE = 7,
  DEMJ_NON_INTEGER_RANK = 8,
  DEMJ_BETA_ZERO = 9,
  DEMJ_NO_PRIMITIVE_ROOT = 10,
  DEMJ_CAP_EXCEEDED = 11,
  DEMJ_ZERO_POLYNOMIAL = 12,
  DEMJ_DEGENERATE_PARAMETERS = 13,
  DEMJ_FACTORIZATION_INCOMPLETE = 14,
  DEMJ_BOUND_VIOLATED = 15,
  DEMJ_IO = 16,
  DEMJ_CALLBACK_ABORTED = 17,
  DEMJ_INTERNAL = 99
} demj_status;

typedef enum demj_format {
  DEMJ_FORMAT_PLAIN = 0,
  DEMJ_FORMAT_JSON = 1,
  DEMJ_FORMAT_CSV = 2
} demj_format;

DEMJ_API const char* demj_version(void);
DEMJ_API const char* demj_status_name(demj_status status);
/* Message of the last failed call on this thread, "" if none. */
DEMJ_API const char* demj_last_error_message(void);
DEMJ_API void demj_string_free(char* s);

/* Default dimension cap for exact rank computations. */
DEMJ_API size_t demj_default_rank_cap(void);

/* ---- arithmetic ---- */

DEMJ_API demj_status demj_is_prime(uint64_t n, int* out);
/* ell - 1 = 2^alpha 3^beta m with gcd(m, 6) = 1. */
DEMJ_API demj_status demj_prime_split(uint64_t ell, unsigned* alpha, unsigned* beta,
                                      uint64_t* m);
/* Multiplicative order of u modulo the prime ell; u may be negative. */
DEMJ_API demj_status demj_mult_order(uint64_t ell, int64_t u, uint64_t* order);

/* ---- singular sets ---- */

typedef struct demj_kset demj_kset;

DEMJ_API demj_status demj_kset_compute(uint64_t ell, demj_kset** out);
/* Same report, members taken from matrix rank deficiency. */
DEMJ_API demj_status demj_kset_compute_oracle(uint64_t ell, size_t rank_cap, demj_kset** out);
DEMJ_API uint64_t demj_kset_ell(const demj_kset* ks);
DEMJ_API size_t demj_kset_count(const demj_kset* ks);
DEMJ_API uint64_t demj_kset_member(const demj_kset* ks, size_t index);
DEMJ_API int demj_kset_within_bound(const demj_kset* ks);
DEMJ_API demj_status demj_kset_format(const demj_kset* ks, demj_format fmt, char** out);
/* One census row; for CSV without the header. */
DEMJ_API demj_status demj_kset_format_row(const demj_kset* ks, demj_format fmt, char** out);
DEMJ_API void demj_kset_free(demj_kset* ks);

/* Criterion evidence for a single k; *in_k may be NULL. */
DEMJ_API demj_status demj_criterion_format(uint64_t ell, uint64_t k, demj_format fmt, int* in_k,
                                           char** out);

/* ---- matrices ---- */

typedef struct demj_matrix demj_matrix;

DEMJ_API demj_status demj_matrix_build(uint64_t ell, uint64_t k, demj_matrix** out);
DEMJ_API size_t demj_matrix_dim(const demj_matrix* mx);
DEMJ_API size_t demj_matrix_stabilizer_size(const demj_matrix* mx);
/* +1 or -1; 0 for an index out of range. */
DEMJ_API int demj_matrix_sign(const demj_matrix* mx, size_t row, size_t col);
DEMJ_API demj_status demj_matrix_rank(const demj_matrix* mx, size_t cap, size_t* rank);
DEMJ_API demj_status demj_matrix_format(const demj_matrix* mx, demj_format fmt, char** out);
DEMJ_API demj_status demj_matrix_format_rank(const demj_matrix* mx, size_t rank, demj_format fmt,
                                             char** out);
DEMJ_API void demj_matrix_free(demj_matrix* mx);

/* ---- searches ---- */

typedef struct demj_search_options {
  uint64_t max_ell;
  unsigned workers;            /* 0 means 1 */
  const char* checkpoint_path; /* NULL for none */
  uint64_t shard_size;         /* 0 for the default */
} demj_search_options;

DEMJ_API void demj_search_options_init(demj_search_options* opts);

/*
 * Called once per prime in ascending order. The report is borrowed for the
 * duration of the call. Return 0 to continue, a positive value to stop
 * quietly, a negative value to abort with DEMJ_CALLBACK_ABORTED.
 */
typedef int (*demj_census_callback)(const demj_kset* report, void* user);

/* Fails with DEMJ_BOUND_VIOLATED after delivering a report outside the bound. */
DEMJ_API demj_status demj_census(const demj_search_options* opts, demj_census_callback cb,
                                 void* user);
DEMJ_API demj_status demj_census_header(demj_format fmt, char** out);

typedef struct demj_u64_list demj_u64_list;

DEMJ_API demj_status demj_u64_list_create(const uint64_t* values, size_t n, demj_u64_list** out);
DEMJ_API size_t demj_u64_list_size(const demj_u64_list* list);
DEMJ_API uint64_t demj_u64_list_get(const demj_u64_list* list, size_t index);
DEMJ_API demj_status demj_u64_list_format(const demj_u64_list* list, demj_format fmt, char** out);
DEMJ_API void demj_u64_list_free(demj_u64_list* list);

/* Primes 2 * 3^beta * m + 1 over the full finite parameter range. */
DEMJ_API demj_status demj_family_search(demj_u64_list** out);
/* The m = 1 members of the same family. */
DEMJ_API demj_status demj_family_m_one(demj_u64_list** out);
DEMJ_API demj_status demj_empty_k_primes(const demj_u64_list* primes, unsigned workers,
                                         demj_u64_list** out);

typedef struct demj_ls demj_ls;

/* opts->max_ell is ignored; the search stops at `limit`. */
DEMJ_API demj_status demj_find_ls(unsigned s, uint64_t limit, const demj_search_options* opts,
                                  demj_ls** out);
DEMJ_API int demj_ls_found(const demj_ls* rec);
DEMJ_API uint64_t demj_ls_ell(const demj_ls* rec);
DEMJ_API size_t demj_ls_factor_count(const demj_ls* rec);
DEMJ_API demj_status demj_ls_factor(const demj_ls* rec, size_t index, uint64_t* prime,
                                    unsigned* exponent);
DEMJ_API demj_status demj_ls_format(const demj_ls* rec, demj_format fmt, char** out);
DEMJ_API void demj_ls_free(demj_ls* rec);

typedef enum demj_lbm_status {
  DEMJ_LBM_IN_L = 0,
  DEMJ_LBM_NOT_IN_L = 1,
  DEMJ_LBM_SKIPPED = 2
} demj_lbm_status;

typedef struct demj_lbm demj_lbm;

/* budget 0 selects the default of 2^40. */
DEMJ_API demj_status demj_lbm_scan(unsigned beta, uint64_t m, unsigned alpha_max, uint64_t budget,
                                   demj_lbm** out);
DEMJ_API size_t demj_lbm_row_count(const demj_lbm* scan);
DEMJ_API demj_status demj_lbm_row(const demj_lbm* scan, size_t index, unsigned* alpha,
                                  uint64_t* ell, demj_lbm_status* status);
/* Witness of an in-L row: 1 iff ell divides the matching resultant. */
DEMJ_API demj_status demj_lbm_row_divides_resultant(const demj_lbm* scan, size_t index, int* out);
DEMJ_API demj_status demj_lbm_format(const demj_lbm* scan, demj_format fmt, char** out);
DEMJ_API void demj_lbm_free(demj_lbm* scan);

typedef struct demj_density demj_density;

DEMJ_API demj_status demj_density_census(uint64_t x, const demj_search_options* opts,
                                         demj_density** out);
DEMJ_API size_t demj_density_count(const demj_density* rep);
DEMJ_API demj_status demj_density_format(const demj_density* rep, demj_format fmt, char** out);
DEMJ_API void demj_density_free(demj_density* rep);

/* ---- cyclotomic resultants ---- */

typedef struct demj_resultant demj_resultant;

DEMJ_API demj_status demj_l_set(unsigned a, unsigned b, uint64_t d, uint64_t e,
                                demj_resultant** out);
DEMJ_API demj_status demj_resultant_decimal(const demj_resultant* rec, char** out);
DEMJ_API size_t demj_resultant_prime_count(const demj_resultant* rec);
DEMJ_API demj_status demj_resultant_prime_decimal(const demj_resultant* rec, size_t index,
                                                  char** out);
DEMJ_API demj_status demj_resultant_format(const demj_resultant* rec, demj_format fmt,
                                           char** out);
DEMJ_API void demj_resultant_free(demj_resultant* rec);

/* Coefficients of the n-th cyclotomic polynomial as text, highest first. */
DEMJ_API demj_status demj_cyclotomic_string(uint64_t n, char** out);

/* ---- statistics and verification ---- */

typedef struct demj_mstats demj_mstats;

DEMJ_API demj_status demj_mstats_compute(uint64_t ell, demj_mstats** out);
DEMJ_API size_t demj_mstats_count(const demj_mstats* s);
DEMJ_API demj_status demj_mstats_format(const demj_mstats* s, demj_format fmt, char** out);
DEMJ_API void demj_mstats_free(demj_mstats* s);

typedef enum demj_verify_mode {
  DEMJ_VERIFY_ORACLE = 0,
  DEMJ_VERIFY_COUNT_BOUND = 1,
  DEMJ_VERIFY_IDENTITIES = 2,
  DEMJ_VERIFY_RANK_FORMULA = 3
} demj_verify_mode;

typedef struct demj_verify demj_verify;

DEMJ_API demj_status demj_verify_parse_mode(const char* name, demj_verify_mode* mode);
DEMJ_API uint64_t demj_verify_mode_cap(demj_verify_mode mode, size_t rank_cap);
DEMJ_API demj_status demj_verify_run(demj_verify_mode mode, uint64_t max_ell, unsigned workers,
                                     size_t rank_cap, demj_verify** out);
DEMJ_API int demj_verify_passed(const demj_verify* rep);
DEMJ_API size_t demj_verify_failure_count(const demj_verify* rep);
DEMJ_API demj_status demj_verify_format(const demj_verify* rep, demj_format fmt, char** out);
DEMJ_API void demj_verify_free(demj_verify* rep);

#ifdef __cplusplus
}
#endif

#endif
