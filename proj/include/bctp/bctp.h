/*
 * bctp — business-continuity testing points engine.
 *
 * C API over the scoring core: parse a portfolio and a method config, run
 * evaluations, validations, what-if sensitivity, scenario simulation and the
 * use-case-points baseline, and render the results as text or JSON.
 *
 * Conventions:
 *   - All handles are opaque; free them with the matching *_free function.
 *   - All functions returning bctp_status leave their outputs untouched on
 *     failure and set a thread-local message readable via bctp_last_error().
 *   - Strings returned through char** outputs are heap-allocated; release
 *     them with bctp_string_free().
 *   - format arguments accept "text" or "machine" (canonical JSON).
 */

#ifndef BCTP_H
#define BCTP_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(BCTP_BUILD_SHARED)
#    define BCTP_API __declspec(dllexport)
#  else
#    define BCTP_API __declspec(dllimport)
#  endif
#elif defined(__GNUC__) || defined(__clang__)
#  define BCTP_API __attribute__((visibility("default")))
#else
#  define BCTP_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum bctp_status {
    BCTP_OK = 0,
    BCTP_E_ARGUMENT = 1,   /* null or malformed argument to the API itself */
    BCTP_E_PARSE = 2,      /* malformed input document */
    BCTP_E_CONFIG = 3,     /* configuration violates an invariant */
    BCTP_E_VALIDATION = 4, /* input data violates a domain invariant */
    BCTP_E_NOT_FOUND = 5,  /* unknown function or factor reference */
    BCTP_E_EVALUATION = 6, /* pipeline reached a non-evaluable state */
    BCTP_E_INTERNAL = 7
} bctp_status;

typedef struct bctp_config bctp_config;       /* method constants + scenario ranges */
typedef struct bctp_portfolio bctp_portfolio; /* parsed portfolio file */
typedef struct bctp_report bctp_report;       /* evaluated BIA report */

BCTP_API const char* bctp_version(void);
BCTP_API const char* bctp_status_name(bctp_status status);

/* Message for the most recent failed call on this thread; empty after a
 * successful call. The pointer stays valid until the next API call. */
BCTP_API const char* bctp_last_error(void);

BCTP_API void bctp_string_free(char* text);

/* -- configuration -------------------------------------------------------- */

BCTP_API bctp_status bctp_config_create(bctp_config** out);
BCTP_API bctp_status bctp_config_parse(const char* json_text, bctp_config** out);
BCTP_API bctp_status bctp_config_apply_profile(bctp_config* cfg, const char* profile_name);
BCTP_API bctp_status bctp_config_set_full_evaluation(bctp_config* cfg, int enabled);
BCTP_API bctp_status bctp_config_fingerprint(const bctp_config* cfg, char** out_hex);
BCTP_API void bctp_config_free(bctp_config* cfg);

/* -- portfolio ------------------------------------------------------------ */

BCTP_API bctp_status bctp_portfolio_parse(const char* json_text, bctp_portfolio** out);

/* Copy of base with the portfolio's embedded config overrides applied. */
BCTP_API bctp_status bctp_portfolio_merge_config(const bctp_portfolio* portfolio,
                                                 const bctp_config* base, bctp_config** out);

BCTP_API size_t bctp_portfolio_function_count(const bctp_portfolio* portfolio);
BCTP_API void bctp_portfolio_free(bctp_portfolio* portfolio);

/* -- operations ----------------------------------------------------------- */

/* Renders the findings list (possibly empty) and reports its size. Returns
 * BCTP_OK even when findings exist; the count tells them apart. */
BCTP_API bctp_status bctp_validate(const bctp_portfolio* portfolio, const bctp_config* cfg,
                                   const char* format, char** out_doc, size_t* out_finding_count);

BCTP_API bctp_status bctp_evaluate(const bctp_portfolio* portfolio, const bctp_config* cfg,
                                   bctp_report** out);
BCTP_API bctp_status bctp_report_render(const bctp_report* report, const char* format,
                                        char** out_doc);
BCTP_API void bctp_report_free(bctp_report* report);

/* Single-factor sensitivity on one function; factor_id like "URF3". */
BCTP_API bctp_status bctp_whatif(const bctp_portfolio* portfolio, const bctp_config* cfg,
                                 const char* function_id, const char* factor_id, int delta,
                                 const char* format, char** out_doc);

/* Seeded Monte Carlo over unexpected-factor scenarios. Ranges come from the
 * config's urf_ranges section; without one the full 0..5 scale is explored.
 * Identical inputs produce byte-identical documents. */
BCTP_API bctp_status bctp_simulate(const bctp_portfolio* portfolio, const bctp_config* cfg,
                                   const char* function_id, uint32_t samples, uint64_t seed,
                                   const char* format, char** out_doc);

/* Classic use-case-points baseline over a project document. */
BCTP_API bctp_status bctp_ucp_evaluate(const char* project_json, const bctp_config* cfg,
                                       const char* format, char** out_doc);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* BCTP_H */
