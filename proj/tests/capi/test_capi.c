/* Exercises the shared library through its C header only. */
#include <stdio.h>
#include <stdlib.h>
#include <string.h>

#include "jetvar/jetvar.h"

static int failures = 0;

#define EXPECT(cond)                                                  \
  do {                                                                \
    if (!(cond)) {                                                    \
      fprintf(stderr, "%s:%d: expected %s\n", __FILE__, __LINE__, #cond); \
      ++failures;                                                     \
    }                                                                 \
  } while (0)

static char* join(const char* dir, const char* name) {
  size_t n = strlen(dir) + strlen(name) + 2;
  char* s = malloc(n);
  snprintf(s, n, "%s/%s", dir, name);
  return s;
}

static void test_polynomials(void) {
  jetvar_poly *p = NULL, *q = NULL, *sum = NULL, *prod = NULL, *dp = NULL;
  EXPECT(jetvar_poly_parse("a[r=0;mu=1;D=()]*x[0] + 2/3", &p) == JETVAR_OK);
  EXPECT(jetvar_poly_parse("x[0]", &q) == JETVAR_OK);
  EXPECT(jetvar_poly_mul(p, q, &prod) == JETVAR_OK);
  EXPECT(jetvar_poly_add(p, q, &sum) == JETVAR_OK);
  EXPECT(jetvar_poly_partial(prod, "x[0]", &dp) == JETVAR_OK);
  char* s = jetvar_poly_to_string(dp);
  EXPECT(s && strcmp(s, "2/3 + 2/1*x[0]*a[r=0;mu=1;D=()]") == 0);
  if (s) printf("partial: %s\n", s);
  jetvar_string_free(s);
  jetvar_poly* bad = (jetvar_poly*)1;
  EXPECT(jetvar_poly_parse("x[0] +* 2", &bad) == JETVAR_INVALID_ARGUMENT);
  EXPECT(bad == NULL);
  EXPECT(strlen(jetvar_last_error()) > 0);
  EXPECT(jetvar_poly_mul(NULL, q, &bad) == JETVAR_INVALID_ARGUMENT);
  jetvar_poly_free(p);
  jetvar_poly_free(q);
  jetvar_poly_free(sum);
  jetvar_poly_free(prod);
  jetvar_poly_free(dp);
}

static void test_sessions(const char* configs) {
  jetvar_session* s = NULL;
  jetvar_result* r = NULL;
  char* path = join(configs, "u1_k2.json");
  EXPECT(jetvar_session_from_file(path, &s) == JETVAR_OK);
  free(path);
  EXPECT(jetvar_run(s, "transgression", 0, 1, &r) == JETVAR_OK);
  EXPECT(r && jetvar_result_passed(r));
  EXPECT(r && strstr(jetvar_result_text(r), "result PASS") != NULL);
  EXPECT(r && strlen(jetvar_result_dump(r)) >= strlen(jetvar_result_text(r)));
  jetvar_result_free(r);
  r = NULL;
  EXPECT(jetvar_run(s, "no-such-command", 0, 1, &r) == JETVAR_INVALID_ARGUMENT);
  EXPECT(r == NULL);
  jetvar_session_free(s);

  path = join(configs, "bad_jacobi.json");
  EXPECT(jetvar_session_from_file(path, &s) == JETVAR_OK);
  free(path);
  EXPECT(jetvar_run(s, "check-algebra", 0, 1, &r) == JETVAR_VERIFICATION_FAILED);
  EXPECT(r && !jetvar_result_passed(r));
  jetvar_result_free(r);
  jetvar_session_free(s);

  path = join(configs, "malformed.json");
  s = (jetvar_session*)1;
  EXPECT(jetvar_session_from_file(path, &s) == JETVAR_CONFIG_ERROR);
  EXPECT(s == NULL);
  EXPECT(strstr(jetvar_last_error(), "line") != NULL);
  free(path);

  EXPECT(jetvar_session_from_string("{\"algebra\": \"su2\", \"invariant\": \"killing\"}", &s) == JETVAR_OK);
  jetvar_set_max_terms(50);
  EXPECT(jetvar_max_terms() == 50);
  EXPECT(jetvar_run(s, "verify-conservation", 0, 1, &r) == JETVAR_TERM_LIMIT);
  jetvar_set_max_terms(0);
  EXPECT(jetvar_max_terms() > 50);
  EXPECT(jetvar_run(s, "euler-lagrange", JETVAR_FLAG_COMPARE_BACKGROUND, 1, &r) == JETVAR_OK);
  jetvar_result_free(r);
  jetvar_session_free(s);

  EXPECT(jetvar_session_new(&s) == JETVAR_OK);
  EXPECT(jetvar_run(s, "first-variational-selftest", 0, 5, &r) == JETVAR_OK);
  jetvar_result_free(r);
  EXPECT(jetvar_run(s, "transgression", 0, 5, &r) == JETVAR_CONFIG_ERROR);
  jetvar_session_free(s);
}

int main(int argc, char** argv) {
  if (argc < 2) {
    fprintf(stderr, "usage: %s <config-dir>\n", argv[0]);
    return 2;
  }
  printf("jetvar %s\n", jetvar_version());
  test_polynomials();
  test_sessions(argv[1]);
  printf("%s\n", failures ? "FAIL" : "PASS");
  return failures ? 1 : 0;
}
