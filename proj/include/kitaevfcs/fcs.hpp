#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <vector>

#include "kitaevfcs/keldysh.hpp"

namespace kfcs {

// Symmetric midpoint frequency grid: omega = +-(j + 1/2) * spacing for
// j = 0 .. n_positive-1. The midpoint offset keeps omega = 0, where the
// characteristic function can degenerate, off the grid. half_window = 0
// requests the automatic window.
struct FrequencyGrid {
    double spacing = 0.01;
    double half_window = 0.0;

    void validate() const;
    bool is_auto() const { return half_window == 0.0; }
    int n_positive() const;
    double point(int j) const { return (j + 0.5) * spacing; }
    // Observation time conjugate to the grid spacing.
    double tau() const;
};

// Window wide enough that transport shuts off at the grid edge: band edges,
// level broadening, bias, and thermal tails all land well inside.
double auto_half_window(const ChainSpec& chain, const ReservoirSpec& res,
                        double spacing);

// Returns the grid with half_window filled in (auto windows resolved, custom
// windows validated).
FrequencyGrid resolve_grid(const ChainSpec& chain, const ReservoirSpec& res,
                           FrequencyGrid requested);

// Per-frequency characteristic function with the counting field on the left
// reservoir; positive transferred charge means charge leaving it.
std::complex<double> cf_at_frequency(const ChainSpec& chain, const ReservoirSpec& res,
                                     const CountingField& xi, double omega);

// Cached Fourier (Laurent) coefficients of Z(xi, omega_k) on the positive half
// of the grid: Z(xi, omega_k) = sum_m z_m(k) e^{i m xi}, |m| <= 4. Z is even
// in omega, so negative frequencies reuse the positive-frequency data. All
// characteristic-function and cumulant-generating-function evaluations reduce
// to cheap polynomial sums once the cache is built.
class Spectrum {
public:
    static constexpr int kOrder = 4;               // highest retained harmonic
    static constexpr int kStencil = 2 * kOrder + 1;
    using Coefficients = std::array<std::complex<double>, kStencil>;

    Spectrum(const ChainSpec& chain, const ReservoirSpec& res,
             const FrequencyGrid& grid, int workers = 1);

    const ChainSpec& chain() const { return chain_; }
    const ReservoirSpec& reservoirs() const { return res_; }
    const FrequencyGrid& grid() const { return grid_; }
    double tau() const { return grid_.tau(); }
    int n_positive() const { return static_cast<int>(coeff_.size()); }

    const Coefficients& coefficients(int k) const { return coeff_[k]; }

    // Z(xi, omega_k) from the cache; valid for complex xi.
    std::complex<double> cf(std::complex<double> xi, int k) const;

    // tau * F(xi) with per-frequency principal logarithms.
    std::complex<double> scaled_cgf_principal(std::complex<double> xi) const;

    // tau * F(xi) with per-frequency logarithms branch-continued along the
    // straight path from 0 to xi.
    std::complex<double> scaled_cgf(std::complex<double> xi) const;

    // tau * F on the uniform circle xi_j = 2*pi*j/n, each frequency's
    // logarithm continued around the sweep.
    std::vector<std::complex<double>> circle_sweep(int n) const;

    // First cumulant straight from the coefficients; cross-checks the
    // finite-difference route.
    double analytic_mean_rate() const;

    // sum_{m != 0} |z_m| at the outermost grid frequency.
    double edge_tail() const;

private:
    ChainSpec chain_;
    ReservoirSpec res_;
    FrequencyGrid grid_;
    std::vector<Coefficients> coeff_;
};

// Two-field analogue with independent counting fields on both reservoirs:
// Z(xi_l, xi_r, omega_k) = sum_{m,n} z_mn(k) e^{i(m xi_l + n xi_r)}.
class JointSpectrum {
public:
    static constexpr int kOrder = Spectrum::kOrder;
    static constexpr int kStencil = Spectrum::kStencil;
    using Coefficients = std::array<std::complex<double>, kStencil * kStencil>;

    JointSpectrum(const ChainSpec& chain, const ReservoirSpec& res,
                  const FrequencyGrid& grid, int workers = 1);

    const ChainSpec& chain() const { return chain_; }
    const ReservoirSpec& reservoirs() const { return res_; }
    const FrequencyGrid& grid() const { return grid_; }
    double tau() const { return grid_.tau(); }
    int n_positive() const { return static_cast<int>(coeff_.size()); }

    // z_mn(k) at flat index (m + kOrder) * kStencil + (n + kOrder).
    const Coefficients& coefficients(int k) const { return coeff_[k]; }

    std::complex<double> cf(std::complex<double> xi_l, std::complex<double> xi_r,
                            int k) const;

    std::complex<double> scaled_cgf_principal(std::complex<double> xi_l,
                                              std::complex<double> xi_r) const;

    // Branch-continued along the straight two-field path from (0,0).
    std::complex<double> scaled_cgf(std::complex<double> xi_l,
                                    std::complex<double> xi_r) const;

private:
    ChainSpec chain_;
    ReservoirSpec res_;
    FrequencyGrid grid_;
    std::vector<Coefficients> coeff_;
};

// Cumulant rates of the transferred charge: c1 is the mean current, c2 the
// zero-frequency noise, and so on.
struct Cumulants {
    double c1 = 0.0;
    double c2 = 0.0;
    double c3 = 0.0;
    double c4 = 0.0;
};

// Central finite differences in the counting field with Richardson
// extrapolation; throws StepTooSmall when the extrapolation fails to settle.
// base_steps holds the stencil step for each cumulant order.
Cumulants cumulants(const Spectrum& spectrum,
                    const std::array<double, 4>& base_steps);
Cumulants cumulants(const Spectrum& spectrum);

// Probability distribution of the integer charge transferred during the
// observation time tau, recovered from the characteristic function on the
// counting-field circle.
struct ChargeDistribution {
    double tau = 0.0;
    std::vector<long long> q;      // integer charges, -n_xi/2 .. n_xi/2 - 1
    std::vector<double> p;         // inversion mass at each q (noisy when tiny)
    std::vector<double> log_p;     // ln p where resolved, NaN elsewhere
    double noise_floor = 1e-13;    // p at or below this is inversion noise
    double max_abs_imag = 0.0;     // largest imaginary residue of the inversion
    double total_mass = 0.0;       // sum of p over all q

    bool resolved(std::size_t i) const;
    // Rate function -ln P / tau at entry i (NaN when unresolved).
    double rate(std::size_t i) const;
};

// n_xi must be a power of two >= 256. The branch continuation runs on a finer
// circle when n_xi is small.
ChargeDistribution charge_distribution(const Spectrum& spectrum, int n_xi = 1024);

namespace detail {

// Continued argument of f at t1 given the continued argument theta0 at t0.
// Bisects whenever the endpoint jump is too large to identify the branch and
// throws BranchAmbiguity below the step floor.
template <typename F>
double continue_arg(const F& f, double t0, double t1,
                    std::complex<double> f0, std::complex<double> f1,
                    double theta0, double min_step) {
    const double a0 = std::abs(f0), a1 = std::abs(f1);
    if (a0 == 0.0 || a1 == 0.0 || !std::isfinite(a0) || !std::isfinite(a1))
        throw BranchAmbiguity("characteristic function vanished on the continuation path");
    const double jump = std::arg(f1 / f0);
    if (std::abs(jump) < 1.5707963267948966)
        return theta0 + jump;
    if (t1 - t0 < min_step)
        throw BranchAmbiguity("branch continuation step floor reached without resolving the phase");
    const double tm = 0.5 * (t0 + t1);
    const std::complex<double> fm = f(tm);
    const double theta_m = continue_arg(f, t0, tm, f0, fm, theta0, min_step);
    return continue_arg(f, tm, t1, fm, f1, theta_m, min_step);
}

} // namespace detail

} // namespace kfcs
