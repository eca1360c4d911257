#pragma once

#include <limits>

#include "kitaevfcs/fcs.hpp"

namespace kfcs {

// Thermodynamic affinity conjugate to the counted charge (electrons leaving
// the left reservoir). Which combination of potentials applies depends on the
// open transport channel: normal transmission pays beta*(mu_l - mu_r) per
// electron, crossed Andreev absorption pays beta*(mu_l + mu_r) per pair
// (counted as one left electron), and the local pair channel pays beta*mu_l
// per electron. Gapless even chains with eta = 0 carry no current; their
// distribution is symmetric, so the crossed-Andreev affinity is reported.
double affinity_for(const ChainSpec& chain, const ReservoirSpec& res);

// Max over a real-xi sample grid of |tau F(xi) - tau F(-xi + i*affinity)|,
// evaluated on the scaled per-frequency log sums so the residual is not
// diluted by the 1/tau normalization.
double gc_symmetry_residual(const Spectrum& spectrum, double affinity,
                            int n_samples = 16);
double gc_symmetry_residual(const ChainSpec& chain, const ReservoirSpec& res,
                            const FrequencyGrid& grid, double affinity);

struct SlopeFit {
    double slope = 0.0;
    double std_error = 0.0;
    int n_pairs = 0;
    // True when every charge pair entering the fit was even (pure pair
    // transport; the odd sector carries no weight).
    bool even_only = false;
};

// Weighted fit of ln P(q) - ln P(-q) = slope * q through the origin. Pairs
// enter only when both members are resolved and both rates -ln P stay below
// resolve_cap, keeping underflow noise out of the fit. Throws
// InsufficientSupport when fewer than three pairs survive.
SlopeFit xft_slope(const ChargeDistribution& dist, double resolve_cap = 30.0);

// Distribution-level counterpart: max over resolved charge pairs of
// |ln P(q) - ln P(-q) - affinity * q|. Sensitive to weak channel admixture
// that the summed CGF residual averages away, since deviations grow with q.
double distribution_gc_residual(const ChargeDistribution& dist, double affinity,
                                double resolve_cap = 25.0);

struct ParityPeriodicity {
    // Total probability mass on odd charges.
    double odd_mass = 0.0;
    // Max over sample xi of |tau F(xi + pi) - tau F(xi)|; zero when only even
    // charges are transferred.
    double periodicity_residual = 0.0;
};

ParityPeriodicity parity_and_periodicity(const Spectrum& spectrum,
                                         const ChargeDistribution& dist,
                                         int n_samples = 16);

// Two-field symmetry: max over real (xi_l, xi_r) samples of
// |tau F(xi_l, xi_r) - tau F(-xi_l + i*affinity_l, -xi_r + i*affinity_r)|.
double joint_xft_residual(const JointSpectrum& joint, double affinity_l,
                          double affinity_r, int n_samples = 8);

// Additivity check tau F(xi_l, xi_r) = tau F(xi_l, 0) + tau F(0, xi_r) on the
// branch-continued log, which holds when the two leads exchange charge with
// independent channels (decoupled end modes).
double factorization_residual(const JointSpectrum& joint, int n_samples = 8);

struct ComponentCharges {
    long long q_pair = 0;    // pairs absorbed by the condensate
    long long q_normal = 0;  // electrons passed straight through
};

// Splits a joint outcome (q_l electrons out of the left lead, q_r out of the
// right) into pair and direct components. Charge conservation forces q_l +
// q_r to be even; odd sums throw ParityError.
ComponentCharges decompose_components(long long q_l, long long q_r);

struct XftReport {
    double affinity_expected = 0.0;
    double slope_fitted = 0.0;
    double slope_stderr = 0.0;
    double gc_residual = 0.0;
    double parity_odd_mass = 0.0;
    double periodicity_residual = 0.0;
};

// Full single-field fluctuation-theorem check: builds the spectrum and charge
// distribution, fits the slope, and evaluates the symmetry residuals against
// affinity_override (NaN picks the case-appropriate affinity automatically).
XftReport xft_report(const ChainSpec& chain, const ReservoirSpec& res,
                     const FrequencyGrid& grid,
                     double affinity_override =
                         std::numeric_limits<double>::quiet_NaN(),
                     int n_xi = 1024, int workers = 1);

} // namespace kfcs
