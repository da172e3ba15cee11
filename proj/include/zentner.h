/* C API of the zentner shared library.
 *
 * The library verifies integrability of chart-level principal-bundle data:
 * pairs (alpha, A) of a tensorial 1-form and a connection form on a
 * coordinate chart. Built-in scenarios cover the constant-curvature frame
 * bundles (flat / sphere / hyperbolic half-space) and the real-form slice
 * triples su(2), sl(2,R) inside sl(2,C).
 *
 * All functions return zt_status; ZT_OK is 0. On failure, zt_last_error()
 * returns a thread-local description of the most recent error. Strings
 * returned through char** are heap-allocated and must be released with
 * zt_string_free(). Handles are opaque and freed with their destroy call.
 */

#ifndef ZENTNER_H
#define ZENTNER_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum zt_status {
  ZT_OK = 0,
  ZT_ERR_INVALID_ARGUMENT = 1,
  ZT_ERR_UNKNOWN_SCENARIO = 2,
  ZT_ERR_DIMENSION = 3,
  ZT_ERR_BOUNDS = 4,
  ZT_ERR_MEMBERSHIP = 5,
  ZT_ERR_SINGULAR = 6,
  ZT_ERR_MISSING_INNER_PRODUCT = 7,
  ZT_ERR_EVALUATION = 8,
  ZT_ERR_JSON = 9,
  ZT_ERR_INTERNAL = 10
} zt_status;

typedef struct zt_triple zt_triple;
typedef struct zt_report zt_report;

/* Library version as "major.minor.patch". Static storage; do not free. */
const char* zt_version(void);

/* Thread-local message for the last failing call. Static storage. */
const char* zt_last_error(void);

void zt_string_free(char* s);

/* Alphabetical scenario listing with parameter schemas, as a JSON document.
 * Output is byte-identical across calls. */
zt_status zt_scenario_list(char** out_json);

/* Instantiates a built-in scenario. params_json may be NULL or "{}";
 * supported keys: "derivatives" ("closed-form" | "finite-difference"),
 * "fd_base" (number). */
zt_status zt_triple_create(const char* scenario, const char* params_json,
                           zt_triple** out);
void zt_triple_destroy(zt_triple* triple);

/* Serialized description of the triple (scenario, chart, algebra, params). */
zt_status zt_triple_info(const zt_triple* triple, char** out_json);

/* det(alpha) at a chart point (array of the chart dimension); admissible is
 * set to 1 when |det| exceeds the configured threshold. */
zt_status zt_triple_admissibility(const zt_triple* triple, const double* point,
                                  int point_len, double* out_det,
                                  int* out_admissible);

/* Runs verification checks. config_json may be NULL or "{}"; keys:
 *   "grid":   { "counts": [..], "lo": [..], "hi": [..] }
 *   "tol":    { "<check>": number, ... }
 *   "checks": [ "eq1", "eq2", "nijenhuis", "torsion", "curvature_match",
 *               "gauge_equivariance", "psi", "nomizu" ]
 *   "seed":   integer
 * Defaults come from the scenario registry. Failing checks do not abort the
 * run; they are reported in the result. */
zt_status zt_run(const zt_triple* triple, const char* config_json,
                 zt_report** out);

/* 1 when every executed check passed, else 0. */
int zt_report_passed(const zt_report* report);

/* Report as JSON: { scenario, grid, tolerances, seed, per_point, max_norms,
 * verdicts, checks, all_pass }. Byte-identical for equal seed and config. */
zt_status zt_report_json(const zt_report* report, char** out_json);

/* Text format: one line per check,
 * "CHECK <name>: PASS|FAIL max_residual=<v> tol=<t>". */
zt_status zt_report_text(const zt_report* report, char** out_text);

void zt_report_destroy(zt_report* report);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* ZENTNER_H */
