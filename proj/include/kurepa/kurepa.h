/*
 * C interface to the Kurepa left-factorial engine.
 *
 * Every fallible call returns a kurepa_status. Calls taking a context record
 * a human-readable message (and, for pole errors, the pole location) that
 * can be read back until the next call on the same context. A context must
 * not be used from two threads at once; distinct contexts are independent.
 */
#ifndef KUREPA_H
#define KUREPA_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(KUREPA_BUILDING_LIBRARY)
#    define KUREPA_API __declspec(dllexport)
#  else
#    define KUREPA_API __declspec(dllimport)
#  endif
#else
#  define KUREPA_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

#define KUREPA_ABI_VERSION 1u

typedef enum kurepa_status {
  KUREPA_OK = 0,
  KUREPA_ERR_INVALID_ARGUMENT = 1, /* null pointer, bad config value, short buffer */
  KUREPA_ERR_DOMAIN = 2,
  KUREPA_ERR_POLE = 3,
  KUREPA_ERR_NEAR_POLE = 4,
  KUREPA_ERR_CONVERGENCE = 5,
  KUREPA_ERR_INTERNAL = 6
} kurepa_status;

typedef enum kurepa_method {
  KUREPA_METHOD_AUTO = 0,
  KUREPA_METHOD_QUADRATURE = 1,
  KUREPA_METHOD_CLOSED_FORM = 2,
  KUREPA_METHOD_RECURRENCE_SHIFT = 3,
  KUREPA_METHOD_TAYLOR_PATCH = 4
} kurepa_method;

/* Bit flags in kurepa_result.warnings. */
#define KUREPA_WARN_NEAR_POLE 0x1u
#define KUREPA_WARN_LARGE_SHIFT 0x2u
#define KUREPA_WARN_CANCELLATION 0x4u

typedef struct kurepa_complex {
  double re;
  double im;
} kurepa_complex;

typedef struct kurepa_result {
  kurepa_complex value;
  kurepa_method method;
  double est_abs_error;
  uint32_t warnings;
} kurepa_result;

typedef struct kurepa_context kurepa_context;

KUREPA_API uint32_t kurepa_abi_version(void);
KUREPA_API const char* kurepa_status_string(kurepa_status status);
/* "auto", "quadrature", "closed_form", "recurrence_shift", "taylor_patch". */
KUREPA_API const char* kurepa_method_string(kurepa_method method);

/* Returns NULL on allocation failure. */
KUREPA_API kurepa_context* kurepa_context_create(void);
KUREPA_API void kurepa_context_destroy(kurepa_context* ctx);

KUREPA_API kurepa_status kurepa_context_set_method(kurepa_context* ctx, kurepa_method method);
KUREPA_API kurepa_status kurepa_context_set_rel_tol(kurepa_context* ctx, double rel_tol);
KUREPA_API kurepa_status kurepa_context_set_near_pole_radius(kurepa_context* ctx, double radius);
KUREPA_API kurepa_status kurepa_context_set_quadrature(kurepa_context* ctx, double rel_tol,
                                                       double abs_tol, double tail_cutoff,
                                                       int max_subdivisions);

/* Message of the last failed call on ctx; copies at most buffer_size - 1
 * bytes plus a terminator and returns the full length. */
KUREPA_API size_t kurepa_last_error(const kurepa_context* ctx, char* buffer, size_t buffer_size);
/* Pole location reported by the last KUREPA_ERR_POLE / KUREPA_ERR_NEAR_POLE. */
KUREPA_API int64_t kurepa_last_pole_location(const kurepa_context* ctx);

/* K_i(z); i = 1 is Kurepa's function itself. */
KUREPA_API kurepa_status kurepa_eval(kurepa_context* ctx, long i, kurepa_complex z,
                                     kurepa_result* out);

/* Direct closed-form route (exponential integral / incomplete gamma). */
KUREPA_API kurepa_status kurepa_closed_form(kurepa_context* ctx, long i, kurepa_complex z,
                                            kurepa_complex* out);

KUREPA_API kurepa_status kurepa_residue_numeric(kurepa_context* ctx, long i, int64_t location,
                                                double radius, kurepa_complex* out);
KUREPA_API kurepa_status kurepa_recurrence_residual(kurepa_context* ctx, long i,
                                                    kurepa_complex z, double* out);

/* Special functions. */
KUREPA_API kurepa_status kurepa_gamma(kurepa_complex z, kurepa_complex* out);
KUREPA_API kurepa_status kurepa_ln_gamma(kurepa_complex z, kurepa_complex* out);
KUREPA_API kurepa_status kurepa_upper_gamma_at_minus_one(kurepa_complex a, kurepa_complex* out);
KUREPA_API double kurepa_ei_one(void);

/* Decimal digits of !n into buffer. *required (if non-NULL) receives the
 * buffer size needed including the terminator; a short buffer yields
 * KUREPA_ERR_INVALID_ARGUMENT. */
KUREPA_API kurepa_status kurepa_left_factorial(uint64_t n, char* buffer, size_t buffer_size,
                                               size_t* required);

/* Pole catalog of K_i down to location -limit. */
typedef struct kurepa_pole_list kurepa_pole_list;

typedef struct kurepa_pole {
  int64_t location;
  int order;
  const char* residue_num; /* decimal, owned by the list */
  const char* residue_den; /* decimal, positive, owned by the list */
  double residue_float;
} kurepa_pole;

KUREPA_API kurepa_status kurepa_pole_catalog(long i, int64_t limit, kurepa_pole_list** out);
KUREPA_API size_t kurepa_pole_list_size(const kurepa_pole_list* list);
KUREPA_API kurepa_status kurepa_pole_list_get(const kurepa_pole_list* list, size_t index,
                                              kurepa_pole* out);
KUREPA_API void kurepa_pole_list_destroy(kurepa_pole_list* list);

/* Rectangular grid sampling. Steps are point counts per axis, endpoints
 * included; a single step samples the minimum. */
typedef struct kurepa_grid_spec {
  double re_min;
  double re_max;
  int64_t re_steps;
  double im_min;
  double im_max;
  int64_t im_steps;
} kurepa_grid_spec;

typedef struct kurepa_grid_point {
  kurepa_complex z;
  kurepa_status status; /* KUREPA_OK, or the error that replaced the value */
  kurepa_result result; /* valid when status == KUREPA_OK */
} kurepa_grid_point;

KUREPA_API kurepa_status kurepa_grid_size(const kurepa_grid_spec* spec, size_t* out);
/* Fills `out` row-major by (im index, re index). `threads` = 0 picks the
 * hardware concurrency. Per-point failures are recorded in the point, not
 * returned. */
KUREPA_API kurepa_status kurepa_eval_grid(kurepa_context* ctx, long i,
                                          const kurepa_grid_spec* spec, unsigned threads,
                                          kurepa_grid_point* out, size_t out_len);

/* Verification suite. */
typedef struct kurepa_report_list kurepa_report_list;

typedef struct kurepa_check_report {
  const char* name; /* owned by the list */
  int64_t samples;
  double max_residual;
  double tolerance;
  int passed;
} kurepa_check_report;

KUREPA_API kurepa_status kurepa_verify_run(uint64_t seed, kurepa_report_list** out);
KUREPA_API size_t kurepa_report_list_size(const kurepa_report_list* list);
KUREPA_API kurepa_status kurepa_report_list_get(const kurepa_report_list* list, size_t index,
                                                kurepa_check_report* out);
KUREPA_API void kurepa_report_list_destroy(kurepa_report_list* list);

#ifdef __cplusplus
}
#endif

#endif /* KUREPA_H */
