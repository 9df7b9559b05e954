/* Copyright 2026 The Trideco Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *   http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/* C interface to libtrideco: triangular sets over F_p.
 *
 * Every call returns a trideco_status. On failure the message is kept in
 * the context until its next call (trideco_context_last_error). Handles are
 * opaque; free each with its own _free function. Strings returned through
 * char** are owned by the caller and released with trideco_string_free.
 * A context is not thread-safe; use one per thread.
 *
 * Residue elements and linear forms are arrays of delta values on the
 * monomial basis, first variable fastest. */

#ifndef TRIDECO_TRIDECO_H_
#define TRIDECO_TRIDECO_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define TRIDECO_API __declspec(dllexport)
#else
#define TRIDECO_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum trideco_status {
  TRIDECO_OK = 0,
  /* Mathematical errors. */
  TRIDECO_E_INVALID_ARGUMENT = 1,
  TRIDECO_E_DIVISION_BY_ZERO_POLY = 2,
  TRIDECO_E_BOTH_ZERO = 3,
  TRIDECO_E_DEGREE_EXCEEDS_CHARACTERISTIC = 4,
  TRIDECO_E_EMPTY_LEAF_SET = 5,
  TRIDECO_E_NON_COPRIME_MODULI = 6,
  TRIDECO_E_CHARACTERISTIC_TOO_SMALL = 7,
  TRIDECO_E_LENGTH_MISMATCH = 8,
  TRIDECO_E_VARIABLE_NOT_IN_RING = 9,
  TRIDECO_E_UNSUPPORTED_ARITY = 10,
  TRIDECO_E_BOUNDS_EXCEED_RING_DEGREE = 11,
  TRIDECO_E_NOT_SEPARATING = 12,
  TRIDECO_E_NOT_IN_SUBALGEBRA = 13,
  TRIDECO_E_ZERO_DIVISOR = 14,
  TRIDECO_E_RETRY_BUDGET_EXHAUSTED = 15,
  TRIDECO_E_RADICALITY_SUSPECT = 16,
  TRIDECO_E_NOT_EQUIPROJECTABLE = 17,
  TRIDECO_E_STALE_CONVERSION_DATA = 18,
  TRIDECO_E_MALFORMED_RESULT_CHAIN = 19,
  TRIDECO_E_NOT_SPLIT = 20,
  /* Input and plumbing errors. */
  TRIDECO_E_PARSE = 100,
  TRIDECO_E_NULL_ARGUMENT = 101,
  TRIDECO_E_INTERNAL = 102
} trideco_status;

typedef enum trideco_via {
  TRIDECO_VIA_KERNEL = 0,
  TRIDECO_VIA_DECOMPOSITION = 1
} trideco_via;

typedef struct trideco_context trideco_context;
typedef struct trideco_doc trideco_doc;
typedef struct trideco_triset trideco_triset;

TRIDECO_API const char* trideco_version(void);
/* Error name such as "NotSeparating"; "Ok" for TRIDECO_OK. */
TRIDECO_API const char* trideco_status_name(trideco_status s);
/* Process exit code for a status: 0 ok, 2 mathematical, 3 parse, 1 other. */
TRIDECO_API int trideco_status_exit_code(trideco_status s);

/* Context: seeded random stream plus the retry budget of Las Vegas loops. */
TRIDECO_API trideco_status trideco_context_new(uint64_t seed, size_t max_retries,
                                               trideco_context** out);
TRIDECO_API void trideco_context_free(trideco_context* ctx);
TRIDECO_API const char* trideco_context_last_error(const trideco_context* ctx);
TRIDECO_API trideco_status trideco_context_retry_stats(const trideco_context* ctx, size_t* loops,
                                                       size_t* attempts, size_t* max_attempts,
                                                       size_t* exhausted);
TRIDECO_API void trideco_string_free(char* s);

/* Text documents (triangular sets plus operands). */
TRIDECO_API trideco_status trideco_doc_parse(trideco_context* ctx, const char* text,
                                             trideco_doc** out);
TRIDECO_API void trideco_doc_free(trideco_doc* doc);
TRIDECO_API trideco_status trideco_doc_print(trideco_context* ctx, const trideco_doc* doc,
                                             char** out);
TRIDECO_API size_t trideco_doc_chain_count(const trideco_doc* doc);
TRIDECO_API trideco_status trideco_doc_chain(trideco_context* ctx, const trideco_doc* doc,
                                             size_t i, trideco_triset** out);

/* Verbs. order strings are comma-separated variable names, smallest first;
 * NULL keeps the document's order. */
TRIDECO_API trideco_status trideco_decompose(trideco_context* ctx, const trideco_doc* in,
                                             const char* order, trideco_doc** out);
TRIDECO_API trideco_status trideco_change_order(trideco_context* ctx, const trideco_doc* in,
                                                const char* source_order,
                                                const char* target_order, trideco_doc** out);
TRIDECO_API trideco_status trideco_quasi_inverse(trideco_context* ctx, const trideco_doc* in,
                                                 const char* target_order, trideco_doc** out);
TRIDECO_API trideco_status trideco_modcomp(trideco_context* ctx, const trideco_doc* in,
                                           trideco_via via, char** out);
TRIDECO_API trideco_status trideco_powproj(trideco_context* ctx, const trideco_doc* in,
                                           trideco_via via, char** out);
/* One "PASS name" or "FAIL name" line per check; count instances each. */
TRIDECO_API trideco_status trideco_selfcheck(trideco_context* ctx, size_t count,
                                             char** report, int* all_passed);
/* Times op on a random instance of multidegree (d, ..., d). */
TRIDECO_API trideco_status trideco_bench_cell(trideco_context* ctx, const char* op, size_t n,
                                              size_t d, uint64_t prime, uint64_t seed,
                                              size_t* delta, double* seconds);

/* Triangular sets. polys[i] holds (d[i] + 1) * d[0] * ... * d[i-1] values:
 * the coefficient of X_i^a is the block starting at a * d[0] * ... * d[i-1]. */
TRIDECO_API trideco_status trideco_triset_new(trideco_context* ctx, uint64_t p, size_t n,
                                              const size_t* d, const uint64_t* const* polys,
                                              trideco_triset** out);
TRIDECO_API void trideco_triset_free(trideco_triset* T);
TRIDECO_API size_t trideco_triset_n(const trideco_triset* T);
TRIDECO_API size_t trideco_triset_degree(const trideco_triset* T, size_t i);
TRIDECO_API size_t trideco_triset_delta(const trideco_triset* T);
TRIDECO_API uint64_t trideco_triset_prime(const trideco_triset* T);

/* Kernels (n <= 2). out has delta entries unless noted. */
TRIDECO_API trideco_status trideco_ring_mul(trideco_context* ctx, const trideco_triset* T,
                                            const uint64_t* a, const uint64_t* b, uint64_t* out);
TRIDECO_API trideco_status trideco_transposed_mul(trideco_context* ctx, const trideco_triset* T,
                                                  const uint64_t* a, const uint64_t* l,
                                                  uint64_t* out);
TRIDECO_API trideco_status trideco_trace_form(trideco_context* ctx, const trideco_triset* T,
                                              uint64_t* out);
/* F has bounds[0] * ... * bounds[m-1] entries (Y1 fastest); G[j] are elements. */
TRIDECO_API trideco_status trideco_mod_compose(trideco_context* ctx, const trideco_triset* T,
                                               const uint64_t* F, size_t m, const size_t* bounds,
                                               const uint64_t* const* G, uint64_t* out);
/* out has bounds[0] * ... * bounds[m-1] entries. */
TRIDECO_API trideco_status trideco_power_project(trideco_context* ctx, const trideco_triset* T,
                                                 const uint64_t* l, size_t m,
                                                 const size_t* bounds, const uint64_t* const* G,
                                                 uint64_t* out);
/* out has delta + 1 entries, lowest degree first. */
TRIDECO_API trideco_status trideco_char_poly(trideco_context* ctx, const trideco_triset* T,
                                             const uint64_t* a, uint64_t* out);
TRIDECO_API trideco_status trideco_invert(trideco_context* ctx, const trideco_triset* T,
                                          const uint64_t* a, uint64_t* out);

#ifdef __cplusplus
}
#endif

#endif /* TRIDECO_TRIDECO_H_ */
