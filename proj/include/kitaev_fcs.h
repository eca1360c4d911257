#ifndef KITAEV_FCS_H
#define KITAEV_FCS_H

/* C interface to the Kitaev-chain full counting statistics engine.
 *
 * Usage: create a system, set parameters by key, then query. Expensive
 * spectra are cached inside the handle and rebuilt lazily after a parameter
 * changes. All functions return KFCS_OK on success; on failure the return
 * code classifies the error and kfcs_last_error() holds a message. Handles
 * are not thread-safe; use one per thread.
 */

#ifdef __cplusplus
extern "C" {
#endif

typedef enum kfcs_status {
    KFCS_OK = 0,
    KFCS_ERR_CONFIG = 1,   /* invalid parameter value or combination */
    KFCS_ERR_TAIL = 2,     /* frequency window too small to converge */
    KFCS_ERR_BRANCH = 3,   /* log branch could not be tracked */
    KFCS_ERR_STEP = 4,     /* cumulant stencil failed to converge */
    KFCS_ERR_SUPPORT = 5,  /* too few resolved charges for a fit */
    KFCS_ERR_SINGULAR = 6, /* propagator singular at a grid frequency */
    KFCS_ERR_CASE = 7,     /* chain violates an analytic case's constraints */
    KFCS_ERR_PARITY = 8,   /* charge pair with odd total */
    KFCS_ERR_UNKNOWN = 9,
    KFCS_ERR_BADARG = 10   /* null handle or output pointer */
} kfcs_status;

typedef struct kfcs_system kfcs_system;

/* Library version string, e.g. "1.0.0". */
const char* kfcs_version(void);

/* Message of the last error raised on this thread; empty string if none. */
const char* kfcs_last_error(void);

/* Fresh system with default parameters: a three-site chain with mu = 0,
 * eta = 1, delta = 0, couplings 0.3, bias mu_l = 0.05 = -mu_r, beta = 10,
 * d_omega = 0.01 with an automatic window, workers = 1, n_xi = 1024. */
kfcs_system* kfcs_system_create(void);
void kfcs_system_destroy(kfcs_system* sys);

/* Set one parameter. Keys: n_sites, mu, eta, delta, gamma_l, gamma_r, mu_l,
 * mu_r, beta, d_omega, half_window (0 = automatic), n_xi, workers. Integer
 * keys reject non-integral values. Validation that spans several keys runs
 * when a computation is requested, not here. */
kfcs_status kfcs_system_set(kfcs_system* sys, const char* key, double value);

/* Read back a parameter by the same keys. */
kfcs_status kfcs_system_get(const kfcs_system* sys, const char* key,
                            double* out);

/* Observation time tau = 2*pi / d_omega. */
kfcs_status kfcs_tau(const kfcs_system* sys, double* out);

/* Per-frequency characteristic function Z(xi, omega). */
kfcs_status kfcs_cf_at(kfcs_system* sys, double xi_re, double xi_im,
                       double omega, double* out_re, double* out_im);

/* Cumulant generating function F(xi) for the left-reservoir counting field,
 * branch-continued from F(0) = 0. */
kfcs_status kfcs_cgf(kfcs_system* sys, double xi_re, double xi_im,
                     double* out_re, double* out_im);

/* Two-field F(xi_l, xi_r). */
kfcs_status kfcs_cgf_joint(kfcs_system* sys, double xi_l_re, double xi_l_im,
                           double xi_r_re, double xi_r_im, double* out_re,
                           double* out_im);

/* First four charge cumulant rates into out[0..3]. */
kfcs_status kfcs_cumulants(kfcs_system* sys, double out[4]);

/* Charge distribution over n_xi charges. Query the size by passing NULL for
 * q, p, and log_p with *n_inout of any value: *n_inout receives the count.
 * Otherwise *n_inout must be at least the count, the arrays are filled
 * (log_p is NaN where the probability sits below the noise floor), and
 * *n_inout is set to the count written. */
kfcs_status kfcs_distribution(kfcs_system* sys, long long* q, double* p,
                              double* log_p, int* n_inout);

/* Fluctuation-theorem report into out[0..5]: affinity_expected,
 * slope_fitted, slope_stderr, gc_residual, parity_odd_mass,
 * periodicity_residual. Pass NaN as affinity_override to use the affinity
 * implied by the chain parameters. */
kfcs_status kfcs_xft_report(kfcs_system* sys, double affinity_override,
                            double out[6]);

/* Worst relative deviation between the numeric determinant and the named
 * closed form ("trivial3", "pairing3", "pairing4", "majorana", "general3")
 * over n_samples random (xi, omega) draws. The system's chain must satisfy
 * the case's constraints. */
kfcs_status kfcs_oracle_check(kfcs_system* sys, const char* case_tag,
                              int n_samples, unsigned long long seed,
                              double* out_max_rel_err);

/* Mean current of the trivial case from its transmission integral. */
kfcs_status kfcs_landauer_current(kfcs_system* sys, double* out);

/* Zero-bias conductance of the end pair channel at inverse temperature
 * beta, using the system's couplings. */
kfcs_status kfcs_majorana_conductance(kfcs_system* sys, double beta,
                                      double* out);

#ifdef __cplusplus
}
#endif

#endif /* KITAEV_FCS_H */
