/* C API for the evsim shared library.
 *
 * All functions return an evsim status code (EVSIM_OK on success) unless
 * documented otherwise.  Functions that produce a string allocate it with
 * malloc-compatible storage; release it with evsim_string_free.  A NULL
 * out-parameter is allowed and simply skipped.
 */
#ifndef EVSIM_H
#define EVSIM_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

enum {
  EVSIM_OK = 0,
  EVSIM_ERR_CONFIG = 2, /* invalid configuration or arguments */
  EVSIM_ERR_DOMAIN = 3, /* numerical-domain violation */
  EVSIM_ERR_VERIFY = 4, /* verification failure */
};

/* Opaque dielectric-profile handle. */
typedef struct evsim_profile evsim_profile;

/* eps(x) = 1 + sum coeffs[i] x^{exponents[i]}; exponents must be even and
 * >= 2.  Returns NULL on invalid input; *err (if non-NULL) receives a
 * message to free with evsim_string_free. */
evsim_profile *evsim_profile_create_polynomial(const int *exponents,
                                               const double *coeffs, size_t n,
                                               double barrier_width,
                                               char **err);

/* sqrt(eps_c(x)) = 1 + sum coeffs[i] x^{exponents[i]} under continuation. */
evsim_profile *evsim_profile_create_sqrt_form(const int *exponents,
                                              const double *coeffs, size_t n,
                                              double barrier_width,
                                              char **err);

/* eps(x) = 1 everywhere. */
evsim_profile *evsim_profile_create_vacuum(double barrier_width);

void evsim_profile_free(evsim_profile *profile);

/* Samples the admissibility rules; *ok is 1 when all hold.  *report_json
 * (optional) receives the violation list. */
int evsim_profile_validate(const evsim_profile *profile, int *ok,
                           char **report_json);

int evsim_eval_eps(const evsim_profile *profile, double x, double *out);
int evsim_eval_eps_continued(const evsim_profile *profile, double x,
                             double *out);
int evsim_kappa(const evsim_profile *profile, double x, double omega, double c,
                double *out);

/* Phase/attenuation integrals of kappa over [x0, x1]. */
int evsim_attenuation_integral(const evsim_profile *profile, double x0,
                               double x1, double omega, double c, double *out);

/* Energy-transport traversal time tau = (1/c) int_0^d sqrt(eps_c) dx. */
int evsim_tunneling_time(const evsim_profile *profile, double c, double *tau,
                         double *tau_vacuum, int *superluminal);

/* Closed form tau = d/c - a d^3 / (3 c) for sqrt(eps_c) = 1 - a x^2.
 * Requires a * d^2 < 3 so the result stays positive. */
int evsim_analytic_tau(double a, double d, double c, double *tau);

/* Transit time of the Bohm trajectory dx/dt = c / sqrt(eps_c(x)). */
int evsim_bohm_transit_time(const evsim_profile *profile, double c,
                            double *out);

/* Runs the exact Kemmer algebra + bilinear verification.  Returns EVSIM_OK
 * or EVSIM_ERR_VERIFY; *summary_json (optional) receives the report. */
int evsim_kemmer_verify(unsigned long seed, char **summary_json);

/* Runs one experiment subcommand (tau, simulate, fdtd, spectrum,
 * kemmer-verify, wkb-check) against a config text.  `format` is "csv" or
 * "json".  Returns the process exit code (0, 2, 3, or 4); *message_json
 * (optional) receives the summary or error report. */
int evsim_run_experiment(const char *subcommand, const char *config_text,
                         const char *out_dir, const char *format, int svg,
                         int dump_matrices, char **message_json);

void evsim_string_free(char *s);

/* Library version, static storage (do not free). */
const char *evsim_version(void);

#ifdef __cplusplus
}
#endif

#endif /* EVSIM_H */
