#ifndef TROPCLUSTER_H
#define TROPCLUSTER_H

/* C interface to the tropcluster library. Objects are opaque handles owned
 * by the caller and released with the matching *_free function. Every
 * fallible call returns a tc_status; on failure tc_last_error() describes the
 * error for the calling thread. */

#include <stddef.h>
#include <stdint.h>

#if defined(__GNUC__)
#define TC_API __attribute__((visibility("default")))
#else
#define TC_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum tc_status {
  TC_OK = 0,
  TC_ERR_SINGULAR_MATRIX,
  TC_ERR_FROZEN_DIRECTION,
  TC_ERR_AMBIGUOUS_MINIMUM,
  TC_ERR_ORACLE_MISMATCH,
  TC_ERR_ZERO_POLYNOMIAL,
  TC_ERR_RESOURCE_BUDGET,
  TC_ERR_NOT_A_CONE,
  TC_ERR_NOT_BINOMIAL,
  TC_ERR_NOT_CERTIFIED,
  TC_ERR_INDEX_CLASH,
  TC_ERR_UNSUPPORTED_N,
  TC_ERR_MISSING_WITNESS,
  TC_ERR_NOT_HOMOGENEOUS,
  TC_ERR_PARSE,
  TC_ERR_INVALID_ARGUMENT,
  TC_ERR_INTERNAL,
  TC_ERR_NULL_ARGUMENT
} tc_status;

typedef struct tc_seed tc_seed;
typedef struct tc_spec tc_spec;
typedef struct tc_ideal tc_ideal;
typedef struct tc_report tc_report;

TC_API const char* tc_status_name(tc_status status);
/* Message of the last failed call on this thread; never NULL. */
TC_API const char* tc_last_error(void);
TC_API const char* tc_version(void);

/* Caps Groebner reduction steps per computation; 0 removes the cap. */
TC_API void tc_set_budget(uint64_t steps);

/* Seeds: JSON text with n, m, B and optional d, labels. */
TC_API tc_status tc_seed_parse(const char* json, tc_seed** out);
TC_API void tc_seed_free(tc_seed* seed);
/* word: "1,2,1" or "121"; "" is the empty word. */
TC_API tc_status tc_seed_mutate(const tc_seed* seed, const char* word, tc_seed** out);
/* Canonical JSON, valid until the seed is freed. */
TC_API const char* tc_seed_json(const tc_seed* seed);

/* A seed together with a Khovanskii basis {"basis": [...]}. */
TC_API tc_status tc_spec_new(const tc_seed* seed, const char* basis_json, tc_spec** out);
TC_API void tc_spec_free(tc_spec* spec);

/* {"variables": [...], "degrees": [...], "generators": [...]} */
TC_API tc_status tc_ideal_parse(const char* json, tc_ideal** out);
TC_API void tc_ideal_free(tc_ideal* ideal);
TC_API size_t tc_ideal_nvars(const tc_ideal* ideal);

/* Pipelines. Each produces a report; *out is NULL on failure. */
TC_API tc_status tc_run_mutate(const tc_seed* seed, const char* word, tc_report** out);
TC_API tc_status tc_run_gvectors(const tc_spec* spec, const char* frame, tc_report** out);
TC_API tc_status tc_run_present(const tc_spec* spec, tc_report** out);
TC_API tc_status tc_run_rays(const tc_spec* spec, const char* frame, tc_report** out);
TC_API tc_status tc_run_verify(const tc_spec* spec, tc_report** out);
/* cone_json: {"rays": [...], "lineality": [...], "convention": "max"|"min"} */
TC_API tc_status tc_run_verify_cone(const tc_ideal* ideal, const char* cone_json, tc_report** out);
TC_API tc_status tc_run_flag3(tc_report** out);
TC_API tc_status tc_run_flag4(unsigned jobs, tc_report** out);
TC_API tc_status tc_run_flag4_extended(unsigned jobs, tc_report** out);
TC_API tc_status tc_run_fflv(unsigned n, tc_report** out);
TC_API tc_status tc_run_fflv_orbit(unsigned n, unsigned jobs, tc_report** out);

/* 1 if every verification clause of the report passed, else 0. */
TC_API int tc_report_passed(const tc_report* report);
/* Renderings owned by the report. */
TC_API const char* tc_report_json(const tc_report* report);
TC_API const char* tc_report_text(const tc_report* report);
TC_API void tc_report_free(tc_report* report);

#ifdef __cplusplus
}
#endif

#endif /* TROPCLUSTER_H */
