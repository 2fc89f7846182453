#ifndef PARADELTA_H
#define PARADELTA_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(PARADELTA_BUILDING)
#    define PD_API __declspec(dllexport)
#  else
#    define PD_API __declspec(dllimport)
#  endif
#else
#  define PD_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum pd_status {
  PD_OK = 0,
  PD_INVALID_ARGUMENT,
  PD_VARIABLE_MISMATCH,
  PD_NOT_DIVISIBLE,
  PD_NON_INTEGRAL_INTERPOLANT,
  PD_INCONSISTENT_RESIDUES,
  PD_NOT_A_PERFECT_POWER,
  PD_NOT_IN_4C_RING,
  PD_DEGREE_BOUND_VIOLATED,
  PD_UNSUPPORTED_PERIOD,
  PD_P_INVALID_DIVIDES_K,
  PD_CONVERGENCE_FAILURE,
  PD_PATH_TOO_COARSE,
  PD_ROOT_ON_PATH,
  PD_CACHE_CORRUPT,
  PD_IO,
  PD_INTERNAL
} pd_status;

typedef struct pd_context pd_context;
typedef struct pd_poly pd_poly;

/* Name of a status value, e.g. "UnsupportedPeriod". */
PD_API const char* pd_status_name(pd_status status);
/* Message of the last failure on the calling thread; empty after success. */
PD_API const char* pd_last_error(void);

/* cache_dir may be NULL or "" to disable the disk cache. */
PD_API pd_status pd_context_new(const char* cache_dir, int threads, pd_context** out);
PD_API void pd_context_free(pd_context* ctx);

PD_API pd_status pd_iterate(int n, pd_poly** out);
PD_API pd_status pd_dynatomic(int n, pd_poly** out);
PD_API pd_status pd_gamma(int k, pd_poly** out);
PD_API pd_status pd_multiplier(pd_context* ctx, int m, pd_poly** out);
/* degenerate may be NULL. */
PD_API pd_status pd_delta_factor(pd_context* ctx, int n, int m, pd_poly** out, int* degenerate);
PD_API void pd_poly_free(pd_poly* poly);

/* Strings returned here are released with pd_string_free. */
PD_API pd_status pd_poly_text(const pd_poly* poly, char** out);
PD_API pd_status pd_poly_json(const pd_poly* poly, char** out);
PD_API void pd_string_free(char* s);

/* Ascending primes; release with pd_u64_free. */
PD_API pd_status pd_table1_scan(pd_context* ctx, int m, int k, uint64_t pmax, uint64_t** primes,
                                size_t* count);
PD_API void pd_u64_free(uint64_t* values);

PD_API pd_status pd_congruence(pd_context* ctx, int m, int k, uint64_t p, int e, int* ok);

typedef void (*pd_check_fn)(void* user, int ok, const char* name, const char* detail);

/* suite is one of "identities", "regions", "constants", "all"; kmax <= 0 keeps the
   default census range (50). */
PD_API pd_status pd_verify(pd_context* ctx, const char* suite, int kmax, pd_check_fn fn, void* user,
                           int* all_ok);

typedef enum pd_region { PD_REGION_A = 0, PD_REGION_B = 1, PD_REGION_NEITHER = 2 } pd_region;

typedef struct pd_gamma_root {
  int k;
  int j;
  double re_t, im_t;
  double residual;
  pd_region region;
  double re_c, im_c;
} pd_gamma_root;

typedef struct pd_census {
  int k;
  int count_a, count_b, count_neither;
  int per_cubic_split;
  double max_abs_a, max_abs_b;
  double min_re_a, max_re_a;
  double min_re_b, max_re_b;
  double max_residual;
} pd_census;

typedef struct pd_point {
  int k;
  double re, im;
} pd_point;

PD_API const char* pd_region_name(pd_region region);
/* Release with pd_gamma_roots_free. */
PD_API pd_status pd_gamma_roots(int k, pd_gamma_root** out, size_t* count);
PD_API void pd_gamma_roots_free(pd_gamma_root* roots);
PD_API pd_status pd_region_census(int k, pd_census* out);
/* Release with pd_points_free. */
PD_API pd_status pd_parabolic_period3(int k_max, pd_point** out, size_t* count);
PD_API void pd_points_free(pd_point* points);
PD_API pd_status pd_mandelbrot(double re, double im, int max_iter, double escape_radius, int* inside,
                               int* iterations);

#ifdef __cplusplus
}
#endif

#endif /* PARADELTA_H */
