#ifndef CORNU_H
#define CORNU_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum CornuStatus {
  CORNU_STATUS_OK = 0,
  /*
   Argument outside the domain (non-finite input, z ≤ 0 for operators).
   */
  CORNU_STATUS_DOMAIN = 1,
  /*
   Evaluation point inside a pole guard band.
   */
  CORNU_STATUS_POLE = 2,
  /*
   Singular point of an equation (z = 0).
   */
  CORNU_STATUS_SINGULAR = 3,
  CORNU_STATUS_CONVERGENCE = 4,
  /*
   Curve speed vanishes.
   */
  CORNU_STATUS_DEGENERATE = 5,
  CORNU_STATUS_INVALID_ARGUMENT = 6,
  CORNU_STATUS_NULL_POINTER = 7,
  CORNU_STATUS_INDEX_OUT_OF_RANGE = 8,
  /*
   A Rust panic was caught at the boundary.
   */
  CORNU_STATUS_INTERNAL = 9,
} CornuStatus;

/*
 Opaque sampled spiral.
 */
typedef struct CornuCurve CornuCurve;

/*
 Opaque distortion profile.
 */
typedef struct CornuProfile CornuProfile;

/*
 `θ = a + ib` with amplitude `scale` (R).
 */
typedef struct CornuParameter {
  double a;
  double b;
  double scale;
} CornuParameter;

/*
 `re + i·im`.
 */
typedef struct CornuComplex {
  double re;
  double im;
} CornuComplex;

typedef struct CornuPoint {
  double arclength;
  double x;
  double y;
  double modulus_sq;
} CornuPoint;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/*
 Static description of a status code; never NULL, never freed.
 */
const char *cornu_status_message(enum CornuStatus status);

/*
 Message of the last failure on this thread, or NULL. The pointer stays
 valid until the next failing call on the same thread.
 */
const char *cornu_last_error_message(void);

/*
 `θ = a + ib` with the default amplitude `1/|θ|` (1 at `θ = 0`).
 */
struct CornuParameter cornu_parameter_new(double a, double b);

/*
 Fresnel integrals `C(z)`, `S(z)`.
 */
enum CornuStatus cornu_fresnel(double z, double *out_c, double *out_s);

/*
 `C̃(z; φ) = ∫₀ᶻ cos(πs² + 2φ) ds`.
 */
enum CornuStatus cornu_fresnel_shifted(double z, double phi, double *out);

/*
 General Riccati solution `y_g(z; θ)`.
 */
enum CornuStatus cornu_riccati_general(double z,
                                       struct CornuComplex theta,
                                       struct CornuComplex *out);

/*
 `|y' + y² − y/z + π²z²|` for `y = y_g(·; θ)`.
 */
enum CornuStatus cornu_riccati_residual(double z, struct CornuComplex theta, double *out);

/*
 `v_g(z) = R(e^{−iπz²/2} + θ e^{iπz²/2})`.
 */
enum CornuStatus cornu_v_general(double z,
                                 struct CornuComplex theta,
                                 double amplitude,
                                 struct CornuComplex *out);

enum CornuStatus cornu_deformed_point(double z,
                                      struct CornuParameter param,
                                      struct CornuPoint *out);

/*
 Signed curvature of the deformed spiral at `z`.
 */
enum CornuStatus cornu_curvature(struct CornuParameter param, double z, double *out);

/*
 Limit point for `z → +∞` (`positive = true`) or `z → −∞`.
 */
enum CornuStatus cornu_asymptotic_focus(struct CornuParameter param,
                                        bool positive,
                                        double *out_x,
                                        double *out_y);

/*
 Sample `count` points on `[z_min, z_max]`. On success `*out` owns a new
 handle to release with [`cornu_curve_free`].
 */
enum CornuStatus cornu_curve_sample(struct CornuParameter param,
                                    double z_min,
                                    double z_max,
                                    uintptr_t count,
                                    struct CornuCurve **out);

/*
 Number of points; 0 for NULL.
 */
uintptr_t cornu_curve_len(const struct CornuCurve *curve);

/*
 Borrowed pointer to the contiguous point array, valid until the handle is
 freed; NULL for a NULL handle.
 */
const struct CornuPoint *cornu_curve_points(const struct CornuCurve *curve);

enum CornuStatus cornu_curve_get(const struct CornuCurve *curve,
                                 uintptr_t index,
                                 struct CornuPoint *out);

void cornu_curve_free(struct CornuCurve *curve);

/*
 `Δ(z; φ)`.
 */
enum CornuStatus cornu_darboux_distortion(double z, double phi, double *out);

/*
 Partner solution `Ψ̃(z; φ)` with constants `b1`, `b2`.
 */
enum CornuStatus cornu_partner_psi(double z, double phi, double b1, double b2, double *out);

/*
 Sample `Δ(z; φ)`; pole guard bands are dropped. On success `*out` owns a
 new handle to release with [`cornu_profile_free`].
 */
enum CornuStatus cornu_profile_sample(double phi,
                                      double z_min,
                                      double z_max,
                                      uintptr_t count,
                                      struct CornuProfile **out);

uintptr_t cornu_profile_len(const struct CornuProfile *profile);

/*
 Sample `index`: `z`, `Δ`, and whether a pole separates it from the
 previous sample.
 */
enum CornuStatus cornu_profile_get(const struct CornuProfile *profile,
                                   uintptr_t index,
                                   double *out_z,
                                   double *out_delta,
                                   bool *out_break);

/*
 Number of excluded pole intervals inside the sampled range.
 */
uintptr_t cornu_profile_pole_count(const struct CornuProfile *profile);

enum CornuStatus cornu_profile_pole(const struct CornuProfile *profile,
                                    uintptr_t index,
                                    double *out_lo,
                                    double *out_hi);

void cornu_profile_free(struct CornuProfile *profile);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* CORNU_H */
