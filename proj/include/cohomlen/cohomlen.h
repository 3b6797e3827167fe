/*
 * cohomlen C API.
 *
 * All functions return a cohomlen_status. Objects are opaque handles owned by
 * the caller and released with the matching *_free function. Strings returned
 * by accessors stay valid until the owning handle is freed. On failure the
 * message of the most recent error on the calling thread is available from
 * cohomlen_last_error().
 */
#ifndef COHOMLEN_COHOMLEN_H
#define COHOMLEN_COHOMLEN_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(COHOMLEN_BUILDING)
#    define COHOMLEN_API __declspec(dllexport)
#  else
#    define COHOMLEN_API __declspec(dllimport)
#  endif
#else
#  define COHOMLEN_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

/* Values match the CLI exit statuses. */
typedef enum cohomlen_status {
  COHOMLEN_OK = 0,
  COHOMLEN_E_USAGE = 64,  /* malformed document, parameters or arguments */
  COHOMLEN_E_DATA = 65,   /* data validation, hypothesis or domain failure */
  COHOMLEN_E_SEARCH = 66  /* bounded oracle search exhausted or over budget */
} cohomlen_status;

typedef enum cohomlen_format { COHOMLEN_FORMAT_JSON = 0, COHOMLEN_FORMAT_TEXT = 1 } cohomlen_format;

typedef struct cohomlen_report cohomlen_report;
typedef struct cohomlen_rep_sphere cohomlen_rep_sphere;

COHOMLEN_API const char* cohomlen_version(void);
COHOMLEN_API const char* cohomlen_last_error(void);

/* ---- Document queries ------------------------------------------------- */

/*
 * Runs a query over a JSON document. `query` may be NULL to use the
 * document's "query" field. `param_keys`/`param_values` hold `nparams`
 * overrides for the document's "parameters". The report is produced even
 * when the returned status is not COHOMLEN_OK; it then carries the error.
 */
COHOMLEN_API cohomlen_status cohomlen_run(const char* document_json, const char* query,
                                          const char* const* param_keys,
                                          const char* const* param_values, size_t nparams,
                                          cohomlen_report** out);

/* Validates every space of a document. */
COHOMLEN_API cohomlen_status cohomlen_lint(const char* document_json, cohomlen_report** out);

COHOMLEN_API cohomlen_status cohomlen_report_status(const cohomlen_report* report);
COHOMLEN_API const char* cohomlen_report_render(cohomlen_report* report, cohomlen_format format);
/* Machine code of the report's error ("E_VALIDATION", ...); "" when none. */
COHOMLEN_API const char* cohomlen_report_error_code(const cohomlen_report* report);
COHOMLEN_API void cohomlen_report_free(cohomlen_report* report);

/* ---- Representation spheres ------------------------------------------- */

/*
 * Builds S(V) for G = (Z_p)^rank (p prime) or (S^1)^rank (p = 0) from
 * `nweights` weights stored row-major in `weights` (nweights * rank values).
 */
COHOMLEN_API cohomlen_status cohomlen_rep_sphere_create(int64_t p, size_t rank,
                                                        const int64_t* weights, size_t nweights,
                                                        cohomlen_rep_sphere** out);
COHOMLEN_API void cohomlen_rep_sphere_free(cohomlen_rep_sphere* sphere);

COHOMLEN_API cohomlen_status cohomlen_rep_sphere_dim(const cohomlen_rep_sphere* sphere,
                                                     int64_t* out);
/* Exact length of S(V). */
COHOMLEN_API cohomlen_status cohomlen_rep_sphere_length(const cohomlen_rep_sphere* sphere,
                                                        int64_t* out);
/* Canonical text of the Euler polynomial; valid until the sphere is freed. */
COHOMLEN_API cohomlen_status cohomlen_rep_sphere_euler(cohomlen_rep_sphere* sphere,
                                                       const char** out);
/* Brute-force length and its agreement with the closed formulas. */
COHOMLEN_API cohomlen_status cohomlen_rep_sphere_verify(const cohomlen_rep_sphere* sphere,
                                                        int64_t lambda_max, int64_t* lambda,
                                                        int* agrees);

#ifdef __cplusplus
}
#endif

#endif /* COHOMLEN_COHOMLEN_H */
