#ifndef ORJUHL_ORJUHL_H
#define ORJUHL_ORJUHL_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define ORJ_API __declspec(dllexport)
#else
#define ORJ_API __attribute__((visibility("default")))
#endif

typedef enum orj_status {
  ORJ_OK = 0,
  ORJ_ERR_INVALID_ARGUMENT = 1,
  ORJ_ERR_PARSE = 2,
  ORJ_ERR_POLE = 3,
  ORJ_ERR_VARIANT = 4,
  ORJ_ERR_BUDGET = 5,
  ORJ_ERR_SAMPLING = 6,
  ORJ_ERR_INTERNAL = 7
} orj_status;

typedef struct orj_params orj_params;
typedef struct orj_table orj_table;
typedef struct orj_config orj_config;
typedef struct orj_report orj_report;

ORJ_API const char *orj_version(void);
ORJ_API const char *orj_status_name(orj_status status);
/* Message of the most recent failing call on this thread; "" if none. */
ORJ_API const char *orj_last_error(void);

/* Strings returned through char** out-parameters are owned by the caller. */
ORJ_API void orj_string_free(char *s);

ORJ_API orj_status orj_params_create(orj_params **out);
ORJ_API void orj_params_destroy(orj_params *p);
/* value is "p" or "p/q" in base 10 */
ORJ_API orj_status orj_params_set_rational(orj_params *p, const char *label, const char *value);
ORJ_API orj_status orj_params_set_integer(orj_params *p, const char *label, long value);

/*
 * family: gjms (k), or (k, n), linear (k, ell), dml and dml-f (M, L, N),
 *         bilinear (U, V, L, K*, K⋄, N*, N⋄), linear-general (U, V, L, K, N)
 * source: oracle, closed-form, or printed (closed form without the factor
 *         L^2; differs from closed-form only for or and bilinear)
 */
ORJ_API orj_status orj_expand(const char *family, const char *source, const orj_params *params,
                              orj_table **out);
ORJ_API void orj_table_destroy(orj_table *t);
ORJ_API size_t orj_table_size(const orj_table *t);
ORJ_API orj_status orj_table_to_json(const orj_table *t, char **out);
ORJ_API orj_status orj_table_to_csv(const orj_table *t, char **out);
ORJ_API orj_status orj_table_to_latex(const orj_table *t, char **out);
ORJ_API orj_status orj_table_from_json(const char *json, orj_table **out);
/* *verdict receives "exact-match", "proportional" or "mismatch". */
ORJ_API orj_status orj_table_compare(const orj_table *a, const orj_table *b, char **verdict,
                                     char **ratio);

ORJ_API orj_status orj_config_create(orj_config **out);
ORJ_API void orj_config_destroy(orj_config *c);
/* keys: seed samples threads max-k max-u max-weight */
ORJ_API orj_status orj_config_set(orj_config *c, const char *key, unsigned long long value);

/* suite: juhl gen-juhl f-insertion linear bilinear selfadjoint appendix soundness all */
ORJ_API orj_status orj_verify(const char *suite, const orj_config *config, orj_report **out);
ORJ_API void orj_report_destroy(orj_report *r);
ORJ_API int orj_report_passed(const orj_report *r);
ORJ_API size_t orj_report_suite_count(const orj_report *r);
ORJ_API const char *orj_report_suite_name(const orj_report *r, size_t index);
ORJ_API orj_status orj_report_suite_json(const orj_report *r, size_t index, char **out);
ORJ_API orj_status orj_report_summary(const orj_report *r, char **out);

#ifdef __cplusplus
}
#endif

#endif
