// Copyright 2026 The iterdep Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


/* C interface to the iterdep library.
 *
 * Objects are opaque handles created by *_new / *_parse and released by the
 * matching *_free. Every call returns an itd_status; on failure a message is
 * available from itd_last_error() on the same thread until the next call.
 * Results of analysis calls are UTF-8 JSON documents allocated by the
 * library and released with itd_string_free(). Integers that do not fit in
 * 64 bits are emitted as decimal strings. */

#ifndef ITERDEP_H
#define ITERDEP_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define ITD_API __declspec(dllexport)
#else
#define ITD_API __attribute__((visibility("default")))
#endif

typedef enum itd_status {
  ITD_OK = 0,
  ITD_ERR_INTERNAL = 1,     /* allocation failure or unexpected exception */
  ITD_ERR_PRECONDITION = 2, /* bad input, including parse errors */
  ITD_ERR_REFUSED = 3,      /* cutoff or size guard hit */
  ITD_ERR_INVARIANT = 4     /* a proven identity failed to hold */
} itd_status;

typedef struct itd_field itd_field;
typedef struct itd_ratfunc itd_ratfunc;
typedef struct itd_shift_system itd_shift_system;

ITD_API const char* itd_version(void);
ITD_API const char* itd_last_error(void);
ITD_API void itd_string_free(char* s);

/* Fields: "Q", "Fq:<p>", "Fq:<p>^<k>[:<modulus>]". */
ITD_API itd_status itd_field_new(const char* descriptor, itd_field** out);
ITD_API itd_status itd_field_describe(const itd_field* field, char** out);
ITD_API void itd_field_free(itd_field* field);

/* Rational functions g/h over a field, kept in lowest terms. */
ITD_API itd_status itd_ratfunc_parse(const itd_field* field, const char* text, itd_ratfunc** out);
ITD_API itd_status itd_ratfunc_format(const itd_ratfunc* f, char** out);
ITD_API itd_status itd_ratfunc_degree(const itd_ratfunc* f, int* out);
ITD_API itd_status itd_ratfunc_iterate(const itd_ratfunc* f, unsigned k, itd_ratfunc** out);
ITD_API itd_status itd_ratfunc_compose(const itd_ratfunc* u, const itd_ratfunc* f, itd_ratfunc** out);
ITD_API void itd_ratfunc_free(itd_ratfunc* f);

/* Orbit invariants, exceptional classification and the valuations S_k, T_k
 * for k <= k_max. iterates_shown > 0 also prints f^(1..iterates_shown).
 * cutoff bounds orbit steps over Q (0 selects the default). */
ITD_API itd_status itd_analyze(const itd_ratfunc* f, unsigned k_max, unsigned iterates_shown, uint64_t cutoff,
                               char** json);

/* Degree lower bound for power products of f^(1..n); with search_bound > 0
 * the exact minimum over exponents in [-K, K] is computed alongside. */
ITD_API itd_status itd_psi(const itd_ratfunc* f, unsigned n, long search_bound, uint64_t cutoff, char** json);

/* Multiplicative dependence of `count` functions over one field. */
ITD_API itd_status itd_dep_test(const itd_ratfunc* const* inputs, size_t count, char** json);

/* Factorization into monic irreducibles, seeded for reproducibility. */
ITD_API itd_status itd_factor(const itd_field* field, const char* poly, uint64_t seed, char** json);

/* Certified element of order >= order_bound in F_q[X]/(P), deg P = n.
 * pair_limit = 0 searches all candidates; shuffle != 0 permutes the search
 * order with shuffle_seed. */
ITD_API itd_status itd_high_order(uint64_t q, uint64_t n, uint64_t pair_limit, int verify, int shuffle,
                                  uint64_t shuffle_seed, uint64_t seed, char** json);

/* Success statistics of the construction for n in [n_from, n_to];
 * sample = 0 is exhaustive. */
ITD_API itd_status itd_scan(uint64_t q, uint64_t n_from, uint64_t n_to, uint64_t sample, uint64_t seed,
                            char** json);

/* Bivariate functions G_i(X,Y)/H_i(X,Y) over Q, one per line; blank lines
 * and text after '#' are ignored. */
ITD_API itd_status itd_shift_system_parse(const char* text, itd_shift_system** out);
ITD_API size_t itd_shift_system_size(const itd_shift_system* s);
ITD_API void itd_shift_system_free(itd_shift_system* s);

ITD_API itd_status itd_shift_bound(const itd_shift_system* s, char** json);
/* coeffs: "a..b" (integers) or a comma-separated list of rationals. */
ITD_API itd_status itd_shift_search(const itd_shift_system* s, int max_deg, const char* coeffs, char** json);
/* Dependence of F_i(X, u(X)) for monic u. */
ITD_API itd_status itd_shift_dep_test(const itd_shift_system* s, const char* u, char** json);

/* A + B + C = 0 over Q, coprime, not all constant. */
ITD_API itd_status itd_mason(const char* a, const char* b, const char* c, char** json);

#ifdef __cplusplus
}
#endif

#endif /* ITERDEP_H */
