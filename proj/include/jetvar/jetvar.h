/* jetvar: exact verification of Chern-Simons variational identities on
 * jet bundles of connection bundles.
 *
 * All handles are opaque. Functions returning jetvar_status leave a
 * human-readable message in jetvar_last_error() (per thread) when they do
 * not return JETVAR_OK or JETVAR_VERIFICATION_FAILED.
 */
#ifndef JETVAR_JETVAR_H
#define JETVAR_JETVAR_H

#include <stdint.h>

#if defined(_WIN32)
#define JETVAR_API __declspec(dllexport)
#else
#define JETVAR_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum jetvar_status {
  JETVAR_OK = 0,
  JETVAR_VERIFICATION_FAILED = 1,
  JETVAR_CONFIG_ERROR = 2,
  JETVAR_TERM_LIMIT = 3,
  JETVAR_INTERNAL = 4,
  /* NULL pointers, unknown commands, unparsable polynomials, jet order
   * overflow */
  JETVAR_INVALID_ARGUMENT = 5
} jetvar_status;

typedef struct jetvar_session jetvar_session;
typedef struct jetvar_result jetvar_result;
typedef struct jetvar_poly jetvar_poly;

/* Flags for jetvar_run. */
#define JETVAR_FLAG_COMPARE_BACKGROUND 1u

JETVAR_API const char* jetvar_version(void);
JETVAR_API const char* jetvar_last_error(void);

/* Monomial cap for every intermediate expression (0 restores the default). */
JETVAR_API void jetvar_set_max_terms(uint64_t cap);
JETVAR_API uint64_t jetvar_max_terms(void);

/* Sessions hold a parsed configuration (JSON). A session without
 * configuration only runs first-variational-selftest. */
JETVAR_API jetvar_status jetvar_session_new(jetvar_session** out);
JETVAR_API jetvar_status jetvar_session_from_file(const char* path, jetvar_session** out);
JETVAR_API jetvar_status jetvar_session_from_string(const char* json, jetvar_session** out);
JETVAR_API void jetvar_session_free(jetvar_session* session);

/* Runs a command: "check-algebra", "transgression", "euler-lagrange",
 * "noether", "verify-conservation" or "first-variational-selftest".
 * On JETVAR_OK or JETVAR_VERIFICATION_FAILED *out holds the result;
 * otherwise *out is NULL. */
JETVAR_API jetvar_status jetvar_run(jetvar_session* session, const char* command, unsigned flags,
                                    uint64_t seed, jetvar_result** out);

/* Screen text (long blocks truncated) and the full untruncated text. The
 * strings live as long as the result. */
JETVAR_API const char* jetvar_result_text(const jetvar_result* result);
JETVAR_API const char* jetvar_result_dump(const jetvar_result* result);
JETVAR_API int jetvar_result_passed(const jetvar_result* result);
JETVAR_API void jetvar_result_free(jetvar_result* result);

/* Polynomials in the canonical text form, e.g. "2/1*a[r=0;mu=1;D=(0)]*x[0] + -1/1". */
JETVAR_API jetvar_status jetvar_poly_parse(const char* text, jetvar_poly** out);
JETVAR_API jetvar_status jetvar_poly_mul(const jetvar_poly* a, const jetvar_poly* b, jetvar_poly** out);
JETVAR_API jetvar_status jetvar_poly_add(const jetvar_poly* a, const jetvar_poly* b, jetvar_poly** out);
/* Partial derivative with respect to an indeterminate given in text form. */
JETVAR_API jetvar_status jetvar_poly_partial(const jetvar_poly* p, const char* var, jetvar_poly** out);
/* Canonical text; the caller frees it with jetvar_string_free. */
JETVAR_API char* jetvar_poly_to_string(const jetvar_poly* p);
JETVAR_API void jetvar_poly_free(jetvar_poly* p);
JETVAR_API void jetvar_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif
