/* pintz-forge C API.
 *
 * Certified lower bounds for the mean value of |M(x)| (Mertens function),
 * the explicit Landau-Pintz theorem engine behind them, and the inversion
 * that turns verified pointwise bounds on M(x) into zero-exclusion regions
 * for simple zeros of the Riemann zeta function.
 *
 * All functions return a pintz_status; outputs go through pointers.  A
 * human-readable detail message for the most recent failure on the calling
 * thread is available from pintz_last_error().  Handle types (pintz_params,
 * pintz_scan, pintz_lemma_report) are opaque and must be released with the
 * matching *_free function.
 */
#ifndef PINTZ_H
#define PINTZ_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define PINTZ_API __declspec(dllexport)
#else
#define PINTZ_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum pintz_status {
    PINTZ_OK = 0,
    PINTZ_ERR_USAGE = 1,            /* bad argument / malformed input */
    PINTZ_ERR_DOMAIN = 2,           /* input outside an operation's domain */
    PINTZ_ERR_INVALID_PARAMS = 3,   /* theorem parameter bundle inconsistent */
    PINTZ_ERR_Y_TOO_SMALL = 4,      /* Y <= e^(2C+4) */
    PINTZ_ERR_CANCELLATION = 5,     /* log-sum-exp cancellation uncertified */
    PINTZ_ERR_TAIL_DIVERGENCE = 6,  /* B_G + 2 - B_F <= 1 */
    PINTZ_ERR_QUADRATURE = 7,       /* tolerance unreachable in budget */
    PINTZ_ERR_CONVERGENCE = 8,      /* series acceleration did not stabilize */
    PINTZ_ERR_NO_EXCLUSION = 9,     /* region search: not even the base point */
    PINTZ_ERR_CHECKPOINT = 10,      /* checkpoint crc/invariant violation */
    PINTZ_ERR_INCOMPLETE_PRIMES = 11,
    PINTZ_ERR_CONFIG = 12,          /* config file parse error */
    PINTZ_ERR_IO = 13,
    PINTZ_ERR_BUFFER = 14,          /* caller buffer too small */
    PINTZ_ERR_INTERNAL = 15
} pintz_status;

/* Sign + double-double natural log of the absolute value.  sign == 0 means
 * exactly zero (ln_hi/ln_lo are ignored).  Value type; no cleanup needed. */
typedef struct pintz_extreal {
    int32_t sign;
    double ln_hi;
    double ln_lo;
} pintz_extreal;

/* Envelope |H(s)| <= c * max(1,|t|^exponent) * e^|sigma| valid for
 * sigma >= sigma_min. */
typedef struct pintz_growth_bound {
    double c;
    double exponent;
    double sigma_min;
} pintz_growth_bound;

typedef struct pintz_breakdown {
    pintz_extreal y_tilde;
    pintz_extreal main_term;
    pintz_extreal cal_e;
    pintz_extreal tail_term;
    pintz_extreal total;
    double quadrature_abs_error; /* abs error bound on the t-integral */
} pintz_breakdown;

typedef struct pintz_lemma_check {
    const char *label; /* owned by the report handle */
    double lhs;
    double rhs;
    double slack;
    int32_t pass;
} pintz_lemma_check;

typedef struct pintz_params pintz_params;
typedef struct pintz_scan pintz_scan;
typedef struct pintz_lemma_report pintz_lemma_report;

/* ---- library ---- */

PINTZ_API const char *pintz_version(void);
PINTZ_API const char *pintz_status_name(pintz_status st);
/* Detail for the most recent error on this thread; empty string if none. */
PINTZ_API const char *pintz_last_error(void);

/* ---- extended log-space reals ---- */

PINTZ_API pintz_extreal pintz_extreal_zero(void);
PINTZ_API pintz_status pintz_extreal_from_double(double v, pintz_extreal *out);
/* Accepts plain/scientific decimals ("1e20", "-3.5"), "exp:<LOGVALUE>" for
 * log-space input, and the canonical "s:+|ln:..." serialization. */
PINTZ_API pintz_status pintz_extreal_parse(const char *text, pintz_extreal *out);
/* Saturates to +-HUGE_VAL / 0 outside the double range. */
PINTZ_API pintz_status pintz_extreal_to_double(pintz_extreal x, double *out);
PINTZ_API pintz_status pintz_extreal_mul(pintz_extreal a, pintz_extreal b,
                                         pintz_extreal *out);
PINTZ_API pintz_status pintz_extreal_div(pintz_extreal a, pintz_extreal b,
                                         pintz_extreal *out);
/* PINTZ_ERR_CANCELLATION when opposite signs land within 1e-25 in lnmag
 * without cancelling exactly. */
PINTZ_API pintz_status pintz_extreal_add(pintz_extreal a, pintz_extreal b,
                                         pintz_extreal *out);
/* Exponent is a double-double (r_hi + r_lo). */
PINTZ_API pintz_status pintz_extreal_pow(pintz_extreal a, double r_hi,
                                         double r_lo, pintz_extreal *out);
/* *out is -1, 0 or +1. */
PINTZ_API pintz_status pintz_extreal_cmp(pintz_extreal a, pintz_extreal b,
                                         int32_t *out);
/* Canonical serialization "s:+|ln:<32 significant digits>"; "s:0" for zero. */
PINTZ_API pintz_status pintz_extreal_format(pintz_extreal x, char *buf,
                                            size_t buflen);

/* ---- Mobius / Mertens sieve ---- */

typedef struct pintz_mertens_opts {
    uint64_t limit;        /* >= 2 */
    uint64_t segment_size; /* 0 = default (1e6) */
    uint32_t threads;      /* 0 = hardware concurrency */
    int32_t has_verify_d;
    double verify_d;             /* pointwise bound |M(n)| <= d sqrt(n) */
    const char *checkpoint_path; /* NULL = no checkpointing */
} pintz_mertens_opts;

PINTZ_API pintz_status pintz_mertens_run(const pintz_mertens_opts *opts,
                                         pintz_scan **out);
PINTZ_API uint64_t pintz_scan_limit(const pintz_scan *s);
PINTZ_API uint64_t pintz_scan_cursor(const pintz_scan *s);
PINTZ_API int64_t pintz_scan_mertens(const pintz_scan *s);
/* Sum_{n=1}^{cursor-1} |M(n)| as a decimal string. */
PINTZ_API pintz_status pintz_scan_sum_abs(const pintz_scan *s, char *buf,
                                          size_t buflen);
PINTZ_API double pintz_scan_max_ratio(const pintz_scan *s);
PINTZ_API uint64_t pintz_scan_argmax(const pintz_scan *s);
PINTZ_API int32_t pintz_scan_has_violation(const pintz_scan *s);
PINTZ_API uint64_t pintz_scan_first_violation(const pintz_scan *s);
PINTZ_API pintz_status pintz_scan_mean_abs(const pintz_scan *s, double *out);
PINTZ_API void pintz_scan_free(pintz_scan *s);

/* Mean-value ceiling (2d/3) sqrt(Y) implied by |M(x)| <= d sqrt(x) on [1,Y]. */
PINTZ_API pintz_status pintz_pointwise_upper_mean(double d, pintz_extreal y,
                                                  pintz_extreal *out);

/* ---- zeta-side constants ---- */

PINTZ_API pintz_status pintz_growth_bound_f(pintz_growth_bound *out);
PINTZ_API pintz_status pintz_growth_bound_g(pintz_growth_bound *out);
PINTZ_API pintz_status pintz_lemma_report_run(pintz_lemma_report **out);
PINTZ_API size_t pintz_lemma_report_size(const pintz_lemma_report *r);
PINTZ_API pintz_status pintz_lemma_report_get(const pintz_lemma_report *r,
                                              size_t index,
                                              pintz_lemma_check *out);
PINTZ_API int32_t pintz_lemma_report_all_pass(const pintz_lemma_report *r);
PINTZ_API void pintz_lemma_report_free(pintz_lemma_report *r);
/* |rho0 - 1| for rho0 = beta0 + i*gamma0. */
PINTZ_API pintz_status pintz_f_at_zero(double beta0, pintz_extreal gamma0,
                                       pintz_extreal *out);
/* Heuristic zeta(s) for 0 < re <= 10, |im| <= 100, away from s = 1. */
PINTZ_API pintz_status pintz_zeta_spot(double re, double im, double *out_re,
                                       double *out_im);

/* ---- theorem engine ---- */

PINTZ_API pintz_status pintz_params_zeta_mertens(double beta0,
                                                 pintz_extreal gamma0,
                                                 double c0, pintz_params **out);
PINTZ_API pintz_status pintz_params_generic(double c_a, double cap_c,
                                            double c_f, double b_f, double c_g,
                                            double b_g, double beta0,
                                            pintz_extreal gamma0, double c0,
                                            pintz_extreal f_rho0_abs,
                                            pintz_params **out);
/* Sensitivity knob: multiply the tail term by an extra log(Y~) factor. */
PINTZ_API pintz_status pintz_params_set_tail_extra_log(pintz_params *p,
                                                       int32_t enable);
PINTZ_API void pintz_params_free(pintz_params *p);

PINTZ_API pintz_status pintz_theorem_d1(const pintz_params *p, double y,
                                        double *out);
PINTZ_API pintz_status pintz_theorem_d2(const pintz_params *p, double *out);
/* log_y is a double-double (hi + lo). */
PINTZ_API pintz_status pintz_theorem_cal_e(const pintz_params *p,
                                           double log_y_hi, double log_y_lo,
                                           pintz_extreal *value,
                                           double *integral_abs_error);
/* One-sided analytic tail bound T^(B_F-B_G-2)/(B_G+2-B_F). */
PINTZ_API pintz_status pintz_theorem_tail_bound(const pintz_params *p, double t,
                                                double *out);
PINTZ_API pintz_status pintz_theorem_lower_bound(const pintz_params *p,
                                                 pintz_extreal y,
                                                 pintz_breakdown *out);
PINTZ_API pintz_status pintz_theorem_mean_lower_constant(const pintz_params *p,
                                                         pintz_extreal y0,
                                                         double *c,
                                                         int32_t *grid_fallback);

/* ---- inference ---- */

typedef struct pintz_infer_query {
    pintz_extreal y;
    double d;
    double beta0;
    pintz_extreal gamma0;
    double c0;           /* 0 = default 0.1 */
    int32_t optimize_c0; /* grid-search c0 in (0.01, beta0-0.01) */
} pintz_infer_query;

typedef struct pintz_exclusion_result {
    int32_t excluded;
    pintz_extreal lower;
    pintz_extreal upper;
    pintz_breakdown breakdown;
    double c0_used;
} pintz_exclusion_result;

PINTZ_API pintz_status pintz_infer_check(const pintz_infer_query *q,
                                         pintz_exclusion_result *out);
/* Largest gamma* with exclusion certified for all gamma0 <= gamma*. */
PINTZ_API pintz_status pintz_infer_max_gamma(const pintz_infer_query *q,
                                             double tol_rel,
                                             pintz_extreal *gamma_star,
                                             int32_t *grid_fallback);
/* Smallest beta* with exclusion certified for all beta0 in [beta*, 1]. */
PINTZ_API pintz_status pintz_infer_min_beta(const pintz_infer_query *q,
                                            double tol_abs, double *beta_star,
                                            int32_t *grid_fallback);
/* Pintz 1987 comparison bound Y^beta0/gamma0^5; *present = 0 when Y < gamma0^5. */
PINTZ_API pintz_status pintz_infer_pintz87(pintz_extreal y, double beta0,
                                           pintz_extreal gamma0,
                                           int32_t *present,
                                           pintz_extreal *bound);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* PINTZ_H */
