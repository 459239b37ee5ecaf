/* Copyright (C) 2026 schwarz-lab contributors
 * SPDX-License-Identifier: Apache-2.0
 *
 * C interface to the schwarz-lab core: invariant pseudodistances on the
 * disk, symmetrized-polydisk fiber distances, quasi-balanced gauges,
 * spectral-ball maps, seeded holomorphic map families, and the suite
 * runner.  All functions return a status code; on failure a thread-local
 * message is available from schwarz_last_error().  Complex scalars pass as
 * (re, im) pairs and point arrays as flattened pairs pts[2*i], pts[2*i+1].
 */
#ifndef SCHWARZLAB_H
#define SCHWARZLAB_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define SCHWARZ_API __declspec(dllexport)
#else
#define SCHWARZ_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum schwarz_status {
    SCHWARZ_OK = 0,
    SCHWARZ_ERR_INVALID_ARGUMENT = 1,
    SCHWARZ_ERR_OUTSIDE_DOMAIN = 2,
    SCHWARZ_ERR_NO_CONVERGENCE = 3,
    SCHWARZ_ERR_ORIGIN_NOT_FIXED = 4,
    SCHWARZ_ERR_SINGULAR_FACTOR = 5,
    SCHWARZ_ERR_UNBOUNDED_GAUGE = 6,
    SCHWARZ_ERR_MONOTONICITY = 7,
    SCHWARZ_ERR_DEGENERATE_MAP = 8,
    SCHWARZ_ERR_IO = 9,
    SCHWARZ_ERR_INTERNAL = 10
} schwarz_status;

/* Message describing the last failure on the calling thread. */
SCHWARZ_API const char* schwarz_last_error(void);

SCHWARZ_API const char* schwarz_version(void);

/* Space-separated list of suite names understood by the runner. */
SCHWARZ_API const char* schwarz_suite_names(void);

/* ------------------------------------------------------------------ *
 * Metric and fiber operations                                         *
 * ------------------------------------------------------------------ */

/* Mobius pseudodistance |z-w| / |1 - conj(w) z|; both points in the
 * open unit disk. */
SCHWARZ_API schwarz_status schwarz_mobius_disk(double z_re, double z_im,
                                               double w_re, double w_im,
                                               double* out);

/* Inverse tanh relation; 0 <= m < 1. */
SCHWARZ_API schwarz_status schwarz_caratheodory_from_mobius(double m,
                                                            double* out);

/* Two-sided Hausdorff distance (Mobius metric) between finite subsets of
 * the disk; multiplicities collapse. */
SCHWARZ_API schwarz_status schwarz_hausdorff_mobius(const double* a,
                                                    size_t a_count,
                                                    const double* b,
                                                    size_t b_count,
                                                    double* out);

/* Elementary symmetric values of count points; sigma_out holds
 * 2*count doubles. */
SCHWARZ_API schwarz_status schwarz_symmetrize(const double* pts, size_t count,
                                              double* sigma_out);

/* Fiber of the symmetrization map over sigma (n coordinates): at most n
 * distinct roots with multiplicities.  roots_out holds 2*n doubles,
 * mults_out n ints; *distinct_out receives the distinct count. */
SCHWARZ_API schwarz_status schwarz_gn_roots(const double* sigma, size_t n,
                                            double* roots_out, int* mults_out,
                                            size_t* distinct_out);

/* Max root modulus: the gauge of the symmetrized polydisk. */
SCHWARZ_API schwarz_status schwarz_gn_minkowski(const double* sigma, size_t n,
                                                double* out);

/* Coordinates of the n-th root construction at x; sigma_out holds 2*n. */
SCHWARZ_API schwarz_status schwarz_nth_root_map(double x_re, double x_im,
                                                size_t n, double* sigma_out);

/* Hausdorff fiber distance between two points of G^n. */
SCHWARZ_API schwarz_status schwarz_fiber_distance_h(const double* sigma_a,
                                                    const double* sigma_b,
                                                    size_t n, double* out);

/* Product-form fiber proximity h1; collapse_multiplicities != 0 uses
 * distinct fiber points only. */
SCHWARZ_API schwarz_status schwarz_h1(const double* sigma_a,
                                      const double* sigma_b, size_t n,
                                      int collapse_multiplicities,
                                      double* out);

/* Spectral radius of an n-by-n matrix passed row-major (n*n entries). */
SCHWARZ_API schwarz_status schwarz_spectral_radius(const double* flat,
                                                   size_t n, double* out);

/* Minimal Blaschke product of matrix a evaluated at scalar t. */
SCHWARZ_API schwarz_status schwarz_minimal_blaschke_eval(const double* a,
                                                         size_t n, double t_re,
                                                         double t_im,
                                                         double* out_re,
                                                         double* out_im);

/* Matrix minimal Blaschke product of a applied to b; out_flat holds
 * 2*n*n doubles, row-major. */
SCHWARZ_API schwarz_status schwarz_tilde_map(const double* a, const double* b,
                                             size_t n, double* out_flat);

/* ------------------------------------------------------------------ *
 * Seeded holomorphic map families                                     *
 * ------------------------------------------------------------------ */

typedef struct schwarz_map schwarz_map;

/* kind: "poly-coords" | "lifted-blaschke" | "matrix-poly".  1 <= n <= 8,
 * 1 <= degree <= 12. */
SCHWARZ_API schwarz_status schwarz_map_generate(uint64_t seed, const char* kind,
                                                int n, int degree,
                                                int fix_origin,
                                                schwarz_map** out);

/* The n-th root construction packaged as a map handle. */
SCHWARZ_API schwarz_status schwarz_map_nth_root(int n, schwarz_map** out);

/* Output length of schwarz_map_eval in complex numbers. */
SCHWARZ_API schwarz_status schwarz_map_dimension(const schwarz_map* m,
                                                 size_t* out);

/* Value at x (|x| < 1); value_out holds 2*dimension doubles. */
SCHWARZ_API schwarz_status schwarz_map_eval(const schwarz_map* m, double x_re,
                                            double x_im, double* value_out);

/* Gauge of the value in the map's target domain. */
SCHWARZ_API schwarz_status schwarz_map_target_gauge(const schwarz_map* m,
                                                    double x_re, double x_im,
                                                    double* out);

/* Dense membership screen: *ok_out = 1 when the target gauge stays < 1 on
 * `points` seeded samples. */
SCHWARZ_API schwarz_status schwarz_map_audit(const schwarz_map* m, int points,
                                             uint64_t audit_seed, int* ok_out);

SCHWARZ_API void schwarz_map_free(schwarz_map* m);

/* ------------------------------------------------------------------ *
 * Suite runner                                                        *
 * ------------------------------------------------------------------ */

typedef struct schwarz_suite_config schwarz_suite_config;
typedef struct schwarz_report schwarz_report;

SCHWARZ_API schwarz_status schwarz_suite_config_new(schwarz_suite_config** out);

/* Keys: suite, seed, trials, n, degree, grid, tol, threads, out, format.
 * Values are strings; validation happens at run time.  Setting a key twice
 * overwrites. */
SCHWARZ_API schwarz_status schwarz_suite_config_set(schwarz_suite_config* cfg,
                                                    const char* key,
                                                    const char* value);

SCHWARZ_API void schwarz_suite_config_free(schwarz_suite_config* cfg);

/* Runs the configured suite and returns a report handle.  The "suite" key
 * is required. */
SCHWARZ_API schwarz_status schwarz_run_suite(const schwarz_suite_config* cfg,
                                             schwarz_report** out);

/* Summary as a JSON object string; pointer owned by the report. */
SCHWARZ_API schwarz_status schwarz_report_summary(const schwarz_report* rep,
                                                  const char** json_out);

SCHWARZ_API schwarz_status schwarz_report_counts(const schwarz_report* rep,
                                                 int* trials, int* passes,
                                                 int* failures, int* aborts);

/* *ok_out = 1 when the suite had no violations and no aborted trials. */
SCHWARZ_API schwarz_status schwarz_report_ok(const schwarz_report* rep,
                                             int* ok_out);

/* Serialize the per-trial records plus summary to the configured output
 * path ("" or "-" = stdout) in the configured format. */
SCHWARZ_API schwarz_status schwarz_report_write(const schwarz_report* rep);

SCHWARZ_API void schwarz_report_free(schwarz_report* rep);

#ifdef __cplusplus
}
#endif

#endif /* SCHWARZLAB_H */
