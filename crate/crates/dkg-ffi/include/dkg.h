/* C interface for the dkg solver library. */

#ifndef DKG_H
#define DKG_H

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Status code returned by every FFI entry point.
 */
typedef enum DkgStatus {
  DkgStatus_Ok = 0,
  /**
   * A parameter was outside its domain.
   */
  DkgStatus_Domain = 1,
  /**
   * The Coulomb coupling meets or exceeds the critical value.
   */
  DkgStatus_Supercritical = 2,
  /**
   * Sector labels or the angular quantum number are inconsistent.
   */
  DkgStatus_InvalidMode = 3,
  /**
   * Incompatible radial function families.
   */
  DkgStatus_FamilyMismatch = 4,
  /**
   * A numeric routine could not reach its accuracy target.
   */
  DkgStatus_Accuracy = 5,
  /**
   * A required pointer argument was null.
   */
  DkgStatus_NullPointer = 6,
} DkgStatus;

/**
 * Opaque handle for Coulomb-problem parameters.
 */
typedef struct DkgCoulomb DkgCoulomb;

/**
 * Opaque handle for oscillator-problem parameters.
 */
typedef struct DkgOscillator DkgOscillator;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Library version as a static NUL-terminated string.
 */
const char *dkg_version(void);

/**
 * Creates a Coulomb parameter handle. `gamma` is the dimensionless
 * coupling, `mu1`/`mu2` the deformation parameters (>= 0).
 */
enum DkgStatus dkg_coulomb_new(double gamma, double mu1, double mu2, struct DkgCoulomb **out);

/**
 * Releases a Coulomb handle. Passing null is a no-op.
 */
void dkg_coulomb_free(struct DkgCoulomb *handle);

/**
 * Bound-state energy in units of `mc^2` for the mode
 * `(e1, e2, twice_ell)` and quantum number `n`; `branch_sign` is +1/-1.
 */
enum DkgStatus dkg_coulomb_energy(const struct DkgCoulomb *handle,
                                  uint8_t e1,
                                  uint8_t e2,
                                  uint32_t twice_ell,
                                  uint32_t n,
                                  int32_t branch_sign,
                                  double *out);

/**
 * Bargmann index `k` of the mode; fails with `Supercritical` when the
 * coupling is too strong for this mode.
 */
enum DkgStatus dkg_coulomb_bargmann_k(const struct DkgCoulomb *handle,
                                      uint8_t e1,
                                      uint8_t e2,
                                      uint32_t twice_ell,
                                      double *out);

/**
 * Normalized physical radial function evaluated at `rho > 0`.
 */
enum DkgStatus dkg_coulomb_radial_eval(const struct DkgCoulomb *handle,
                                       uint8_t e1,
                                       uint8_t e2,
                                       uint32_t twice_ell,
                                       uint32_t n,
                                       double rho,
                                       double *out);

/**
 * Creates an oscillator parameter handle. `omega_ratio` is
 * `hbar omega / mc^2` (> 0).
 */
enum DkgStatus dkg_oscillator_new(double omega_ratio,
                                  double mu1,
                                  double mu2,
                                  struct DkgOscillator **out);

/**
 * Releases an oscillator handle. Passing null is a no-op.
 */
void dkg_oscillator_free(struct DkgOscillator *handle);

/**
 * Oscillator energy in units of `mc^2`.
 */
enum DkgStatus dkg_oscillator_energy(const struct DkgOscillator *handle,
                                     uint8_t e1,
                                     uint8_t e2,
                                     uint32_t twice_ell,
                                     uint32_t n,
                                     int32_t branch_sign,
                                     double *out);

/**
 * Normalized oscillator radial function evaluated at `r >= 0`.
 */
enum DkgStatus dkg_oscillator_radial_eval(const struct DkgOscillator *handle,
                                          uint8_t e1,
                                          uint8_t e2,
                                          uint32_t twice_ell,
                                          uint32_t n,
                                          double r,
                                          double *out);

/**
 * Normalized angular eigenfunction evaluated at `phi`.
 */
enum DkgStatus dkg_angular_eval(double mu1,
                                double mu2,
                                uint8_t e1,
                                uint8_t e2,
                                uint32_t twice_ell,
                                double phi,
                                double *out);

#ifdef __cplusplus
} // extern "C"
#endif // __cplusplus

#endif /* DKG_H */
