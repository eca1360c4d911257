#include "kitaevfcs/xft.hpp"

#include <cmath>
#include <complex>
#include <cstdlib>
#include <numbers>
#include <vector>

namespace kfcs {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr std::complex<double> kImag{0.0, 1.0};

// Real sample points in (0, 2*pi), offset so none lands on a symmetry point.
std::vector<double> sample_points(int n) {
    std::vector<double> xs(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j)
        xs[static_cast<std::size_t>(j)] = 2.0 * kPi * (j + 0.37) / n;
    return xs;
}

} // namespace

double affinity_for(const ChainSpec& chain, const ReservoirSpec& res) {
    chain.validate();
    res.validate();
    if (chain.delta == 0.0)
        return res.beta * (res.mu_l - res.mu_r);
    if (chain.eta == 0.0) {
        // Gapless chains alternate with length: odd chains keep a direct
        // channel, even chains only the crossed pair channel.
        if (chain.n_sites % 2 == 0)
            return res.beta * (res.mu_l + res.mu_r);
        return res.beta * (res.mu_l - res.mu_r);
    }
    return res.beta * res.mu_l;
}

double gc_symmetry_residual(const Spectrum& spectrum, double affinity,
                            int n_samples) {
    if (n_samples < 1)
        throw ConfigError("n_samples must be positive");
    double worst = 0.0;
    for (double x : sample_points(n_samples)) {
        const std::complex<double> lhs = spectrum.scaled_cgf_principal(x);
        const std::complex<double> rhs =
            spectrum.scaled_cgf_principal(-x + kImag * affinity);
        worst = std::max(worst, std::abs(lhs - rhs));
    }
    return worst;
}

double gc_symmetry_residual(const ChainSpec& chain, const ReservoirSpec& res,
                            const FrequencyGrid& grid, double affinity) {
    return gc_symmetry_residual(Spectrum(chain, res, grid), affinity);
}

SlopeFit xft_slope(const ChargeDistribution& dist, double resolve_cap) {
    if (!(resolve_cap > 0.0))
        throw ConfigError("resolve_cap must be positive");

    // The support is contiguous, so the mirror charge -q sits at a fixed
    // offset from the q = 0 entry.
    const std::size_t n = dist.q.size();
    std::size_t zero = n;
    for (std::size_t i = 0; i < n; ++i) {
        if (dist.q[i] == 0) {
            zero = i;
            break;
        }
    }
    if (zero == n)
        throw InsufficientSupport("distribution carries no q = 0 entry");

    double sum_wqy = 0.0, sum_wq2 = 0.0;
    std::vector<double> ys, qs, ws;
    bool even_only = true;
    for (std::size_t i = zero + 1; i < n; ++i) {
        const long long q = dist.q[i];
        if (static_cast<std::size_t>(q) > zero)
            break;
        const std::size_t j = zero - static_cast<std::size_t>(q);
        if (!dist.resolved(i) || !dist.resolved(j))
            continue;
        if (-dist.log_p[i] >= resolve_cap || -dist.log_p[j] >= resolve_cap)
            continue;
        const double y = dist.log_p[i] - dist.log_p[j];
        // Uniform absolute noise on P translates to 1/P^2 variance on ln P.
        const double w =
            1.0 / (std::exp(-2.0 * dist.log_p[i]) + std::exp(-2.0 * dist.log_p[j]));
        const double qd = static_cast<double>(q);
        sum_wqy += w * qd * y;
        sum_wq2 += w * qd * qd;
        ys.push_back(y);
        qs.push_back(qd);
        ws.push_back(w);
        if (q % 2 != 0)
            even_only = false;
    }

    const int n_pairs = static_cast<int>(qs.size());
    if (n_pairs < 3)
        throw InsufficientSupport(
            "slope fit needs at least three resolved charge pairs, found " +
            std::to_string(n_pairs));

    SlopeFit fit;
    fit.slope = sum_wqy / sum_wq2;
    double rss = 0.0;
    for (int i = 0; i < n_pairs; ++i) {
        const double r = ys[static_cast<std::size_t>(i)] -
                         fit.slope * qs[static_cast<std::size_t>(i)];
        rss += ws[static_cast<std::size_t>(i)] * r * r;
    }
    fit.std_error = std::sqrt(rss / (n_pairs - 1) / sum_wq2);
    fit.n_pairs = n_pairs;
    fit.even_only = even_only;
    return fit;
}

double distribution_gc_residual(const ChargeDistribution& dist, double affinity,
                                double resolve_cap) {
    if (!(resolve_cap > 0.0))
        throw ConfigError("resolve_cap must be positive");
    const std::size_t n = dist.q.size();
    std::size_t zero = n;
    for (std::size_t i = 0; i < n; ++i) {
        if (dist.q[i] == 0) {
            zero = i;
            break;
        }
    }
    if (zero == n)
        throw InsufficientSupport("distribution carries no q = 0 entry");

    double worst = 0.0;
    bool any = false;
    for (std::size_t q = 1; q <= zero && zero + q < n; ++q) {
        const std::size_t i = zero + q, j = zero - q;
        if (!dist.resolved(i) || !dist.resolved(j))
            continue;
        if (-dist.log_p[i] >= resolve_cap || -dist.log_p[j] >= resolve_cap)
            continue;
        any = true;
        const double dev = dist.log_p[i] - dist.log_p[j] -
                           affinity * static_cast<double>(q);
        worst = std::max(worst, std::abs(dev));
    }
    if (!any)
        throw InsufficientSupport("no resolved charge pairs below the rate cap");
    return worst;
}

ParityPeriodicity parity_and_periodicity(const Spectrum& spectrum,
                                         const ChargeDistribution& dist,
                                         int n_samples) {
    if (n_samples < 1)
        throw ConfigError("n_samples must be positive");
    ParityPeriodicity out;
    for (std::size_t i = 0; i < dist.q.size(); ++i) {
        if (std::llabs(dist.q[i]) % 2 == 1)
            out.odd_mass += std::abs(dist.p[i]);
    }
    for (double x : sample_points(n_samples)) {
        const std::complex<double> diff =
            spectrum.scaled_cgf_principal(x + kPi) -
            spectrum.scaled_cgf_principal(x);
        out.periodicity_residual = std::max(out.periodicity_residual, std::abs(diff));
    }
    return out;
}

double joint_xft_residual(const JointSpectrum& joint, double affinity_l,
                          double affinity_r, int n_samples) {
    if (n_samples < 1)
        throw ConfigError("n_samples must be positive");
    const auto xs = sample_points(n_samples);
    double worst = 0.0;
    for (double xl : xs) {
        for (double xr : xs) {
            const std::complex<double> lhs = joint.scaled_cgf_principal(xl, xr);
            const std::complex<double> rhs = joint.scaled_cgf_principal(
                -xl + kImag * affinity_l, -xr + kImag * affinity_r);
            worst = std::max(worst, std::abs(lhs - rhs));
        }
    }
    return worst;
}

double factorization_residual(const JointSpectrum& joint, int n_samples) {
    if (n_samples < 1)
        throw ConfigError("n_samples must be positive");
    const auto xs = sample_points(n_samples);
    double worst = 0.0;
    for (double xl : xs) {
        for (double xr : xs) {
            const std::complex<double> both = joint.scaled_cgf(xl, xr);
            const std::complex<double> left = joint.scaled_cgf(xl, 0.0);
            const std::complex<double> right = joint.scaled_cgf(0.0, xr);
            worst = std::max(worst, std::abs(both - left - right));
        }
    }
    return worst;
}

ComponentCharges decompose_components(long long q_l, long long q_r) {
    if ((q_l + q_r) % 2 != 0)
        throw ParityError("q_l + q_r must be even, got " + std::to_string(q_l) +
                          " + " + std::to_string(q_r));
    ComponentCharges out;
    out.q_pair = (q_l + q_r) / 2;
    out.q_normal = (q_l - q_r) / 2;
    return out;
}

XftReport xft_report(const ChainSpec& chain, const ReservoirSpec& res,
                     const FrequencyGrid& grid, double affinity_override,
                     int n_xi, int workers) {
    const Spectrum spectrum(chain, res, grid, workers);
    const ChargeDistribution dist = charge_distribution(spectrum, n_xi);
    const SlopeFit fit = xft_slope(dist);
    const ParityPeriodicity pp = parity_and_periodicity(spectrum, dist);

    XftReport report;
    report.affinity_expected =
        std::isnan(affinity_override) ? affinity_for(chain, res) : affinity_override;
    report.slope_fitted = fit.slope;
    report.slope_stderr = fit.std_error;
    report.gc_residual = gc_symmetry_residual(spectrum, report.affinity_expected);
    report.parity_odd_mass = pp.odd_mass;
    report.periodicity_residual = pp.periodicity_residual;
    return report;
}

} // namespace kfcs
