#pragma once

#include <complex>
#include <string>
#include <string_view>

#include "kitaevfcs/fcs.hpp"

namespace kfcs {

// Chain shapes with a closed-form characteristic function.
enum class AnalyticCase {
    trivial3,  // three sites, delta = 0: normal transmission only
    pairing3,  // three sites, eta = 0: odd chain, normal-like channel
    pairing4,  // four sites, eta = 0: crossed Andreev channel
    majorana,  // mu = 0, eta = delta = 1: end-mode pair channel, any length
    general3,  // three sites, mu = eta = delta = 1: all channels active
};

AnalyticCase parse_case(std::string_view tag);
std::string_view case_tag(AnalyticCase c);

// Throws CaseMismatch unless the chain satisfies the case's constraints.
void validate_case(AnalyticCase c, const ChainSpec& chain);

// Closed-form Z(xi, omega) for the counting field on the left reservoir.
// Accepts complex xi (the symmetry checks shift xi into the complex plane).
std::complex<double> analytic_cf(AnalyticCase c, const ChainSpec& chain,
                                 const ReservoirSpec& res,
                                 std::complex<double> xi, double omega);

// Mean current of the trivial case from the transmission form, discretized on
// the same midpoint grid the cumulants use.
double landauer_current(const ChainSpec& chain, const ReservoirSpec& res,
                        const FrequencyGrid& grid);

// Zero-bias differential conductance of the end pair channel at inverse
// temperature beta, probed with a small symmetric bias. Quantized at 1/pi
// (2e^2/h) for any coupling once beta is large.
double majorana_conductance(const ReservoirSpec& res, double beta);

// Worst relative deviation between the numeric kernel determinant and the
// closed form over n_samples random (xi, omega) draws. The chain must satisfy
// the case's constraints.
double oracle_equivalence_error(AnalyticCase c, const ChainSpec& chain,
                                const ReservoirSpec& res, int n_samples,
                                unsigned long long seed);

// Coefficient families of the closed forms. sign = +1 selects the mu + omega
// branch, -1 the mu - omega branch. Exposed so frozen reference values can pin
// them directly.
namespace channel {

double normal_denominator(double mu, double eta, double gl, double gr,
                          double omega, int sign);
double normal_transmission(double mu, double eta, double gl, double gr,
                           double omega, int sign);

double car3_denominator(double mu, double delta, double gl, double gr,
                        double omega, int sign);
double car3_transmission(double mu, double delta, double gl, double gr,
                         double omega, int sign);

double car4_denominator(double mu, double delta, double gl, double gr,
                        double omega, int sign);
double car4_transmission(double mu, double delta, double gl, double gr,
                         double omega, int sign);

double lar_denominator(double gl, double omega);
double lar_transmission(double gl, double omega);

double mixed_denominator(double gl, double gr, double omega);
// which = 1..4 selects the single-charge transmission family; the pair
// variant is the two-charge (local Andreev) weight.
double mixed_transmission(double gl, double gr, double omega, int which);
double mixed_pair_transmission(double gl, double gr, double omega);

} // namespace channel

} // namespace kfcs
