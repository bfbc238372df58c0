/*
 * Copyright 2026 The tfa Authors
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

/*
 * tfa: time-frequency analysis on finite cyclic and Abelian groups.
 *
 * C interface to the tfa shared library. All functions return a tfa_status
 * code; outputs are written through out-parameters. On any nonzero status a
 * human-readable message is available from tfa_last_error() until the next
 * tfa call on the same thread. Returned strings are heap copies owned by the
 * caller and must be released with tfa_string_free(); handles with their
 * matching *_free function. Handles are not thread-safe; distinct handles
 * may be used from distinct threads freely.
 *
 * Signals on Z_n are serialized as {"n":N,"re":[...],"im":[...]}; support
 * sets as {"n":N,"points":[[j,k],...]} sorted lexicographically; tables as
 * CSV with header "j,k,re,im" and floats with 17 significant digits. All
 * emitted documents are byte-stable for identical inputs.
 */

#ifndef TFA_TFA_H
#define TFA_TFA_H

#include <stdint.h>

#if defined(_WIN32)
#if defined(TFA_BUILDING)
#define TFA_API __declspec(dllexport)
#else
#define TFA_API __declspec(dllimport)
#endif
#else
#define TFA_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum tfa_status {
    TFA_OK = 0,
    TFA_ERR_NULL = 1,         /* required pointer argument was NULL */
    TFA_ERR_INVALID = 2,      /* argument outside the documented domain */
    TFA_ERR_MISMATCH = 3,     /* operands live on different groups */
    TFA_ERR_PARSE = 4,        /* malformed JSON or factor list */
    TFA_ERR_NOT_EXTREMAL = 5, /* support strictly larger than the modulus */
    TFA_ERR_AMBIGUOUS = 6,    /* numerics too close to a threshold to decide */
    TFA_ERR_INCONSISTENT = 7, /* table is not a transform of any signal */
    TFA_ERR_INTERNAL = 8      /* allocation failure or unexpected condition */
} tfa_status;

typedef struct tfa_signal tfa_signal;   /* complex vector on Z_n */
typedef struct tfa_table tfa_table;     /* n x n transform table */
typedef struct tfa_support tfa_support; /* subset of Z_n x Z_n */

/* ---- library ---------------------------------------------------------- */

/* Semantic version of the library, static storage. */
TFA_API const char* tfa_version(void);

/* Message for the most recent failing call on this thread; empty string
 * when the last call succeeded. Storage is thread-local; do not free. */
TFA_API const char* tfa_last_error(void);

TFA_API void tfa_string_free(char* s);
TFA_API void tfa_signal_free(tfa_signal* s);
TFA_API void tfa_table_free(tfa_table* t);
TFA_API void tfa_support_free(tfa_support* s);

/* ---- signals ---------------------------------------------------------- */

TFA_API tfa_status tfa_signal_from_json(const char* json, tfa_signal** out);
TFA_API tfa_status tfa_signal_to_json(const tfa_signal* s, char** out);
TFA_API tfa_status tfa_signal_length(const tfa_signal* s, int64_t* out);

/* ---- transform tables -------------------------------------------------- */

/* Windowed transform of f against window g. Moduli must match and must not
 * exceed the library's table cap (4096). */
TFA_API tfa_status tfa_stft(const tfa_signal* f, const tfa_signal* g, tfa_table** out);

TFA_API tfa_status tfa_table_to_csv(const tfa_table* t, char** out);

/* Entries above tau * max|entry|; tau must be positive. */
TFA_API tfa_status tfa_table_support(const tfa_table* t, double tau, tfa_support** out);

/* Relative defect of the table energy against ||f||^2 ||g||^2. */
TFA_API tfa_status tfa_table_parseval_residual(const tfa_table* t, const tfa_signal* f,
                                               const tfa_signal* g, double* out);

/* One-call summary: computes the transform, then writes the support size,
 * the energy defect, and a JSON document
 * {"support_size":...,"support":[...],"parseval_residual":...}.
 * Out-parameters other than json may be NULL when not wanted. */
TFA_API tfa_status tfa_stft_report(const tfa_signal* f, const tfa_signal* g, double tau,
                                   int64_t* support_size, double* parseval_residual, char** json);

TFA_API tfa_status tfa_support_to_json(const tfa_support* s, char** out);
TFA_API tfa_status tfa_support_size(const tfa_support* s, int64_t* out);

/* Inverts an auto-transform table (one produced by tfa_stft(f, f)) back to a
 * signal, unique up to one global phase. Fails with TFA_ERR_INCONSISTENT
 * when no signal reproduces the table. */
TFA_API tfa_status tfa_reconstruct_window(const tfa_table* t, double tau, tfa_signal** out);

/* ---- minimum-support pairs --------------------------------------------- */

/* Builds the canonical pair (f, g) for a parameter document
 * {"n":N,"b":b,"p":p,"lambda":[j,k],"mu":[j,k],"c1":[re,im],"c2":[re,im]}.
 * Any of the out-parameters may be NULL. The support out-parameter receives
 * the predicted transform support (a subgroup coset of size n). */
TFA_API tfa_status tfa_extremal_pair(const char* spec_json, tfa_signal** f, tfa_signal** g,
                                     tfa_support** support);

/* Recovers the pair parameters from signals whose transform support has the
 * minimum size. On success writes {"extremal":true,"spec":{...},...}. When
 * the support is strictly larger than n, returns TFA_ERR_NOT_EXTREMAL and
 * still writes {"extremal":false,"support_size":...} so callers can report
 * the failure. */
TFA_API tfa_status tfa_classify(const tfa_signal* f, const tfa_signal* g, double tau,
                                char** report_json);

/* ---- verification runs -------------------------------------------------- */

/* Seeded Gaussian ensembles. Each writes the number of bound violations and
 * a JSON summary; violations stays 0 unless a mathematical claim fails. */
TFA_API tfa_status tfa_verify_weak(int64_t n, int64_t trials, uint64_t seed, double tau,
                                   int64_t* violations, char** json);
TFA_API tfa_status tfa_verify_donoho_stark(int64_t n, int64_t trials, uint64_t seed, double tau,
                                           int64_t* violations, char** json);
/* n must be prime. */
TFA_API tfa_status tfa_verify_tao(int64_t n, int64_t trials, uint64_t seed, double tau,
                                  int64_t* violations, char** json);

/* Single-signal bound reports ({"check":...,"support_size":...,...}). */
TFA_API tfa_status tfa_check_donoho_stark(const tfa_signal* f, double tau, char** json);
TFA_API tfa_status tfa_check_tao(const tfa_signal* f, double tau, char** json);

/* All order-n subgroups of Z_n x Z_n, optionally with their point lists. */
TFA_API tfa_status tfa_subgroups(int64_t n, int include_points, char** json);

/* Exhaustive scan of all nonzero pairs with coordinates from a named
 * alphabet ("binary", "pm1", "gauss") on Z_n, n <= 6. */
TFA_API tfa_status tfa_scan(int64_t n, const char* alphabet, double tau, int64_t* violations,
                            char** json);

/* Seeded ensemble on a product group given as "n1xn2x...", e.g. "2x4". */
TFA_API tfa_status tfa_verify_abelian(const char* factors, int64_t trials, uint64_t seed,
                                      double tau, int64_t* violations, char** json);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* TFA_TFA_H */
