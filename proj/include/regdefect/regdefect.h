/*
 * regdefect: exact computation of Castelnuovo-Mumford regularity and
 * regularity-defect sequences for m-primary monomial ideals.
 *
 * C interface of the shared library. All objects are opaque handles created
 * and destroyed through this API; every function that can fail returns an
 * rd_status and leaves a human-readable message in rd_last_error() (thread
 * local, valid until the next API call on the same thread).
 *
 * Ideal expressions use the grammar
 *
 *   expr   := term ('+' term)*
 *   term   := factor ('*' factor)*
 *   factor := atom ('^' INT)?
 *   atom   := '(' expr ')' | 'M(' INT ')' | 'MP(' INT (',' INT)* ')'
 *           | VAR ('^' INT)? | '1'
 *
 * with variables named x1..xn, M(q) the q-th power of the maximal ideal and
 * MP(a1,...,an) the ideal of pure powers.
 */

#ifndef REGDEFECT_H
#define REGDEFECT_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#ifndef RD_API
#define RD_API __attribute__((visibility("default")))
#endif

typedef enum rd_status {
  RD_OK = 0,
  RD_ERR_PARSE = 1,
  RD_ERR_DIMENSION = 2,
  RD_ERR_NOT_M_PRIMARY = 3,
  RD_ERR_NOT_SUBIDEAL = 4,
  RD_ERR_INVALID_ARGUMENT = 5,
  RD_ERR_OVERFLOW = 6,
  RD_ERR_BUDGET = 7,
  RD_ERR_UNDEFINED = 8,
  RD_ERR_INTERNAL = 9
} rd_status;

typedef struct rd_ideal rd_ideal;
typedef struct rd_report rd_report;

RD_API const char* rd_version(void);
RD_API const char* rd_last_error(void);

/* ---- ideals ---------------------------------------------------------- */

RD_API rd_status rd_ideal_parse(int vars, const char* text, rd_ideal** out);
RD_API rd_status rd_ideal_clone(const rd_ideal* ideal, rd_ideal** out);
RD_API void rd_ideal_free(rd_ideal* ideal);

RD_API int rd_ideal_vars(const rd_ideal* ideal);
RD_API int64_t rd_ideal_generator_count(const rd_ideal* ideal);
/* canonical generator list, re-parseable; free with rd_string_free */
RD_API rd_status rd_ideal_format(const rd_ideal* ideal, char** out);
RD_API rd_status rd_ideal_is_m_primary(const rd_ideal* ideal, int* out);

RD_API rd_status rd_ideal_sum(const rd_ideal* a, const rd_ideal* b, rd_ideal** out);
RD_API rd_status rd_ideal_product(const rd_ideal* a, const rd_ideal* b, rd_ideal** out);
RD_API rd_status rd_ideal_power(const rd_ideal* ideal, int m, rd_ideal** out);
/* does `ideal` contain `other` as a subideal? */
RD_API rd_status rd_ideal_contains(const rd_ideal* ideal, const rd_ideal* other, int* out);

/* ---- computations ----------------------------------------------------- */

/* strategy: "corner" (default when NULL) or "box" */
RD_API rd_status rd_regularity(const rd_ideal* ideal, const char* strategy, int64_t* out);
RD_API rd_status rd_socle(const rd_ideal* ideal, const char* strategy, rd_report** out);
RD_API rd_status rd_witness(const rd_ideal* ideal, const char* strategy, rd_report** out);

RD_API rd_status rd_defect_sequence(const rd_ideal* ideal, int m_max, rd_report** out);
/* max_power <= 0 selects the stabilization-theorem bound;
 * max_generators <= 0 selects the library default */
RD_API rd_status rd_stable_defect(const rd_ideal* ideal, int max_power,
                                  int64_t max_generators, rd_report** out);

/*
 * Named result checkers:
 *   first-difference     params: m (>=2), mode: "witness" | "regularity"
 *   difference-bound     params: m (>=2), refined: bool
 *   defect-monotone      params: m_max (>=2)
 *   strict-increase      params: m_max (>=2)
 *   defect-nonnegative   params: m_max (>=1)
 *   socle-descent        params: m (>=2)
 *   witness-comparison   needs `other`
 *   reduction-bounds     params: m (>=1), strict: bool
 *   increase-threshold   params: m (>=1)
 *   stabilization-bound  params: max_power, max_generators
 *   stable-defect-zero   params: max_power, max_generators
 * params_json may be NULL for defaults; two-ideal checkers take `other`.
 */
RD_API rd_status rd_run_checker(const char* name, const rd_ideal* ideal,
                                const rd_ideal* other, const char* params_json,
                                rd_report** out);

RD_API rd_status rd_binomial_inequality(int64_t n, int64_t d, rd_report** out);

/* ---- example families -------------------------------------------------- */

/* name: "fat-socle" | "increasing" | "slow-decreasing" | "mixed";
 * params_json: {"n":..,"d":..,"b":..,"z_power_d":bool} as applicable.
 * Returns the ideal and a report describing the predicted behavior. */
RD_API rd_status rd_example(const char* name, const char* params_json,
                            rd_ideal** ideal_out, rd_report** report_out);

/* ---- explorer ---------------------------------------------------------- */

/* config_json keys (all optional): seed, samples, n_min, n_max, pure_min,
 * pure_max, extra_max, extra_deg_min, extra_deg_max, m_max, max_power,
 * max_generators, threads, checkers (array of names).
 * cb receives one JSON record per sample, in index order. */
typedef void (*rd_explore_callback)(const char* record_json, void* user);
RD_API rd_status rd_explore(const char* config_json, rd_explore_callback cb,
                            void* user, rd_report** summary_out);

/* ---- reports ----------------------------------------------------------- */

/* 1 when the report carries no violated conclusion */
RD_API int rd_report_ok(const rd_report* report);
/* full JSON payload; free with rd_string_free */
RD_API rd_status rd_report_json(const rd_report* report, char** out);
RD_API void rd_report_free(rd_report* report);
RD_API void rd_string_free(char* text);

#ifdef __cplusplus
}
#endif

#endif /* REGDEFECT_H */
