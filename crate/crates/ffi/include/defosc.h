#ifndef DEFOSC_H
#define DEFOSC_H

/* Generated by cbindgen from the defosc-ffi crate; do not edit by hand. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

// Status codes returned by every fallible entry point.
typedef enum DefoscStatus {
  DEFOSC_STATUS_OK = 0,
  DEFOSC_STATUS_DOMAIN = 1,
  DEFOSC_STATUS_BRANCH = 2,
  DEFOSC_STATUS_OVERFLOW = 3,
  DEFOSC_STATUS_TRUNCATION = 4,
  DEFOSC_STATUS_CONVERGENCE = 5,
  DEFOSC_STATUS_NULL_ARG = 6,
  DEFOSC_STATUS_INTERNAL = 7,
} DefoscStatus;

// Opaque 1-D problem handle.
typedef struct DefoscOsc1D DefoscOsc1D;

// Opaque radial problem handle.
typedef struct DefoscRadial DefoscRadial;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Message for the most recent failure on this thread. Never null;
// empty before the first failure.
const char *defosc_last_error(void);

// Library version as a static NUL-terminated string.
const char *defosc_version(void);

// Creates a 1-D problem. Requires finite parameters with
// `alpha, beta >= 0`; the evaluation branch is picked from the
// parameters (boundary branches when a deformation vanishes).
//
// # Safety
// `out` must be a valid pointer. The handle must be released with
// `defosc_osc1d_free`.
enum DefoscStatus defosc_osc1d_new(double alpha,
                                   double beta,
                                   double efield,
                                   struct DefoscOsc1D **out);

// Releases a 1-D handle. A null handle is ignored.
//
// # Safety
// `h` must come from `defosc_osc1d_new` and not be used afterwards.
void defosc_osc1d_free(struct DefoscOsc1D *h);

// Energy of level `n`, written to `energy`; the field-induced part
// of that energy is written to `correction` when non-null.
//
// # Safety
// `h` must be a live handle and `energy` a valid pointer.
enum DefoscStatus defosc_osc1d_energy(const struct DefoscOsc1D *h,
                                      uint32_t n,
                                      double *energy,
                                      double *correction);

// Derived base parameters (q, t, z, K) of the general branch.
// Fails with `DEFOSC_STATUS_BRANCH` on a boundary problem, where
// these quantities are not defined.
//
// # Safety
// `h` must be a live handle; out-pointers may be null to skip fields.
enum DefoscStatus defosc_osc1d_base_params(const struct DefoscOsc1D *h,
                                           double *q,
                                           double *t,
                                           double *z,
                                           double *bigk);

// Creates a radial problem for the D-dimensional oscillator.
// `gamma_weight` tunes the measure weight entering `R` (zero is the
// conventional choice; `chi` never depends on it).
//
// # Safety
// `out` must be a valid pointer. The handle must be released with
// `defosc_radial_free`.
enum DefoscStatus defosc_radial_new(uint32_t dim,
                                    uint32_t l,
                                    double beta,
                                    double beta_prime,
                                    double gamma_weight,
                                    struct DefoscRadial **out);

// Releases a radial handle. A null handle is ignored.
//
// # Safety
// `h` must come from `defosc_radial_new` and not be used afterwards.
void defosc_radial_free(struct DefoscRadial *h);

// Level energies at radial index `n` and angular momentum `l`:
// the transformed spectrum goes to `te`, the radial spectrum to `e`
// (either pointer may be null to skip it).
//
// # Safety
// `h` must be a live handle.
enum DefoscStatus defosc_radial_energy(const struct DefoscRadial *h,
                                       uint32_t n,
                                       uint32_t l,
                                       double *te,
                                       double *e);

// Samples the radial eigenfunctions at `len` momenta: `chi[i]` gets
// chi_n(p[i]) and, when `r` is non-null, `r[i]` gets R_nl(p[i]).
// States are cached per (n, l) on the handle, so repeated sampling
// of one level is cheap. Not thread-safe per handle.
//
// # Safety
// `h` must be a live handle; `p` and `chi` must point to `len`
// readable respectively writable doubles, and `r` likewise when
// non-null.
enum DefoscStatus defosc_radial_sample(const struct DefoscRadial *h,
                                       uint32_t n,
                                       uint32_t l,
                                       const double *p,
                                       double *chi,
                                       double *r,
                                       size_t len);

// Convenience entry: energy of the 1-D oscillator without a handle.
// `mode` selects the branch: 0 auto, 1 general, 2 alpha0, 3 beta0,
// 4 equal.
//
// # Safety
// `energy` must be a valid pointer.
enum DefoscStatus defosc_energy_1d(int mode,
                                   double alpha,
                                   double beta,
                                   double efield,
                                   uint32_t n,
                                   double *energy);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* DEFOSC_H */
