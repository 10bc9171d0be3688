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


/* Exercises the C interface from C: handles, status codes, error messages,
 * JSON results and text round trips. */

#include <stdio.h>
#include <stdlib.h>
#include <string.h>

#include "iterdep.h"

static int failures = 0;

#define EXPECT(cond)                                              \
  do {                                                            \
    if (!(cond)) {                                                \
      fprintf(stderr, "%s:%d: %s\n", __FILE__, __LINE__, #cond);  \
      ++failures;                                                 \
    }                                                             \
  } while (0)

static int contains(const char* s, const char* needle) { return s != NULL && strstr(s, needle) != NULL; }

static void test_fields(void) {
  itd_field* f = NULL;
  char* s = NULL;
  EXPECT(itd_field_new("Fq:2^4:X^4+X+1", &f) == ITD_OK);
  EXPECT(itd_field_describe(f, &s) == ITD_OK);
  EXPECT(strcmp(s, "Fq:2^4:X^4+X+1") == 0);
  itd_string_free(s);
  itd_field_free(f);
  f = NULL;
  EXPECT(itd_field_new("Fq:6", &f) == ITD_ERR_PRECONDITION);
  EXPECT(f == NULL);
  EXPECT(strlen(itd_last_error()) > 0);
  EXPECT(itd_field_new(NULL, &f) == ITD_ERR_PRECONDITION);
}

static void test_ratfunc(void) {
  itd_field* k = NULL;
  itd_ratfunc *f = NULL, *g = NULL, *h = NULL;
  char* s = NULL;
  int d = 0;
  EXPECT(itd_field_new("Fq:2", &k) == ITD_OK);
  EXPECT(itd_ratfunc_parse(k, "(X^2+1)/X^2", &f) == ITD_OK);
  EXPECT(itd_ratfunc_degree(f, &d) == ITD_OK && d == 2);
  EXPECT(itd_ratfunc_iterate(f, 2, &g) == ITD_OK);
  EXPECT(itd_ratfunc_format(g, &s) == ITD_OK);
  EXPECT(strcmp(s, "1/(X^4+1)") == 0);
  itd_string_free(s);
  EXPECT(itd_ratfunc_compose(f, g, &h) == ITD_OK);
  EXPECT(itd_ratfunc_format(h, &s) == ITD_OK);
  EXPECT(strcmp(s, "X^8") == 0);
  itd_string_free(s);
  EXPECT(itd_ratfunc_parse(k, "X^2+", &f) == ITD_ERR_PRECONDITION);
  EXPECT(contains(itd_last_error(), "position 4"));
  itd_ratfunc_free(f);
  itd_ratfunc_free(g);
  itd_ratfunc_free(h);
  itd_field_free(k);
}

/* Text printed by the library parses back to the same function. */
static void test_round_trip(void) {
  static const char* const cases[][2] = {
      {"Q", "(X^4+3X^2+1)/(X^3+X)"}, {"Q", "(1/2)X^3-X/3"}, {"Fq:5", "(3X^2+4)/(X+2)"}, {"Fq:2^2", "(zX^2+X+z)/(X+z)"}};
  for (size_t i = 0; i < sizeof cases / sizeof cases[0]; ++i) {
    itd_field* k = NULL;
    itd_ratfunc *f = NULL, *g = NULL;
    char *s = NULL, *t = NULL;
    EXPECT(itd_field_new(cases[i][0], &k) == ITD_OK);
    EXPECT(itd_ratfunc_parse(k, cases[i][1], &f) == ITD_OK);
    EXPECT(itd_ratfunc_format(f, &s) == ITD_OK);
    EXPECT(itd_ratfunc_parse(k, s, &g) == ITD_OK);
    EXPECT(itd_ratfunc_format(g, &t) == ITD_OK);
    EXPECT(s != NULL && t != NULL && strcmp(s, t) == 0);
    itd_string_free(s);
    itd_string_free(t);
    itd_ratfunc_free(f);
    itd_ratfunc_free(g);
    itd_field_free(k);
  }
}

static void test_analysis(void) {
  itd_field* k = NULL;
  itd_ratfunc* f = NULL;
  char* j = NULL;
  EXPECT(itd_field_new("Q", &k) == ITD_OK);
  EXPECT(itd_ratfunc_parse(k, "X^2+1", &f) == ITD_OK);
  EXPECT(itd_psi(f, 5, 0, 0, &j) == ITD_OK);
  EXPECT(contains(j, "\"bound\": 32"));
  EXPECT(contains(j, "case-i, n<=e"));
  itd_string_free(j);
  EXPECT(itd_psi(f, 17, 1, 0, &j) == ITD_ERR_REFUSED);
  EXPECT(itd_analyze(f, 2, 2, 0, &j) == ITD_OK);
  EXPECT(contains(j, "\"exceptional\": \"PolynomialType\""));
  itd_string_free(j);
  itd_ratfunc_free(f);

  itd_ratfunc* pair[2] = {NULL, NULL};
  EXPECT(itd_ratfunc_parse(k, "-X", &pair[0]) == ITD_OK);
  EXPECT(itd_ratfunc_parse(k, "X", &pair[1]) == ITD_OK);
  EXPECT(itd_dep_test((const itd_ratfunc* const*)pair, 2, &j) == ITD_OK);
  EXPECT(contains(j, "\"dependent\": true"));
  itd_string_free(j);
  itd_ratfunc_free(pair[0]);
  itd_ratfunc_free(pair[1]);
  itd_field_free(k);

  EXPECT(itd_high_order(2, 4, 0, 1, 0, 0, 0, &j) == ITD_OK);
  EXPECT(contains(j, "\"order_bound\": 4"));
  itd_string_free(j);
  EXPECT(itd_high_order(6, 4, 0, 0, 0, 0, 0, &j) == ITD_ERR_PRECONDITION);
  EXPECT(itd_mason("X^2", "1-X^2", "-1", &j) == ITD_OK);
  EXPECT(contains(j, "\"rad_degree\": 3"));
  itd_string_free(j);
  EXPECT(itd_mason("X", "X", "X", &j) == ITD_ERR_PRECONDITION);
}

static void test_shifts(void) {
  itd_shift_system* s = NULL;
  char* j = NULL;
  EXPECT(itd_shift_system_parse("# two shifts\nY+X^2+2X\n\nY+X  # second\n", &s) == ITD_OK);
  EXPECT(itd_shift_system_size(s) == 2);
  EXPECT(itd_shift_bound(s, &j) == ITD_OK);
  EXPECT(contains(j, "\"count_bound\": 36"));
  itd_string_free(j);
  EXPECT(itd_shift_search(s, 2, "-2..2", &j) == ITD_OK);
  EXPECT(contains(j, "\"candidates\": 31"));
  itd_string_free(j);
  EXPECT(itd_shift_dep_test(s, "X", &j) == ITD_OK);
  EXPECT(contains(j, "\"dependent\": false"));
  itd_string_free(j);
  EXPECT(itd_shift_search(s, 2, "1..0", &j) == ITD_ERR_PRECONDITION);
  itd_shift_system_free(s);
  EXPECT(itd_shift_system_parse("Y+X\nY+Z\n", &s) == ITD_ERR_PRECONDITION);
  EXPECT(contains(itd_last_error(), "line 2"));
}

int main(void) {
  test_fields();
  test_ratfunc();
  test_round_trip();
  test_analysis();
  test_shifts();
  if (failures) fprintf(stderr, "%d failures\n", failures);
  else printf("capi: all checks passed\n");
  return failures ? 1 : 0;
}
