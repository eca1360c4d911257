#include "kitaevfcs/fcs.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <mutex>
#include <numbers>
#include <sstream>
#include <thread>

namespace kfcs {

namespace {

using std::complex;

constexpr double kPi = std::numbers::pi;
constexpr complex<double> kImag{0.0, 1.0};

// Smallest counting-field step the branch continuation is allowed to take.
constexpr double kBranchFloor = 2.0 * kPi / 65536.0;

// Transport at the outermost grid frequency must have died off to this level.
constexpr double kTailTolerance = 1e-12;

// Largest phase a single harmonic may sweep between continuation waypoints.
// The endpoint-jump test inside continue_arg cannot see a full winding that
// completes within one step, so steps are kept well under a quarter turn of
// the fastest harmonic and bisection only has to absorb near-zero passages.
constexpr double kArgStepBudget = 0.5;

// Continued argument of f along t in [0, 1] starting from arg f(0), with
// waypoints spaced so no harmonic outruns the step budget. sweep_radians is
// the largest phase any harmonic accumulates over the whole path.
template <typename F>
double walk_arg(const F& f, complex<double> f0, complex<double> f1,
                double sweep_radians, double min_step) {
    const int n_seg =
        std::max(1, static_cast<int>(std::ceil(sweep_radians / kArgStepBudget)));
    double theta = std::arg(f0);
    complex<double> prev = f0;
    double t_prev = 0.0;
    for (int s = 1; s <= n_seg; ++s) {
        const double t = s == n_seg ? 1.0 : static_cast<double>(s) / n_seg;
        const complex<double> cur = s == n_seg ? f1 : f(t);
        theta = detail::continue_arg(f, t_prev, t, prev, cur, theta, min_step);
        prev = cur;
        t_prev = t;
    }
    return theta;
}

// Pulls frequency indices in fixed-size chunks so the per-slot results are
// identical for any worker count. make_worker() builds per-worker state.
template <typename MakeWorker>
void run_chunked(int n_items, int workers, const MakeWorker& make_worker) {
    constexpr int kChunk = 64;
    const int n_chunks = (n_items + kChunk - 1) / kChunk;
    std::atomic<int> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;

    auto drive = [&]() {
        try {
            auto body = make_worker();
            for (;;) {
                const int c = next.fetch_add(1);
                if (c >= n_chunks)
                    break;
                const int lo = c * kChunk;
                const int hi = std::min(n_items, lo + kChunk);
                for (int k = lo; k < hi; ++k)
                    body(k);
            }
        } catch (...) {
            const std::lock_guard<std::mutex> lock(failure_mutex);
            if (!failure)
                failure = std::current_exception();
        }
    };

    if (workers <= 1) {
        drive();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(workers - 1);
        for (int t = 0; t < workers - 1; ++t)
            pool.emplace_back(drive);
        drive();
        for (auto& th : pool)
            th.join();
    }
    if (failure)
        std::rethrow_exception(failure);
}

// Fourier coefficients of Z(xi, omega) from the uniform stencil
// xi_p = 2*pi*p/kStencil; exact while the true harmonic content stays within
// |m| <= kOrder.
Spectrum::Coefficients laurent_single(const CfEvaluator& eval, double omega) {
    constexpr int s = Spectrum::kStencil;
    std::array<complex<double>, s> zp;
    const complex<double> l0 = eval.log_det_kernel(CountingField{}, omega);
    zp[0] = 1.0;
    for (int p = 1; p < s; ++p) {
        CountingField xi;
        xi.xi_l = 2.0 * kPi * p / s;
        zp[p] = std::exp(eval.log_det_kernel(xi, omega) - l0);
    }
    Spectrum::Coefficients z{};
    for (int m = -Spectrum::kOrder; m <= Spectrum::kOrder; ++m) {
        complex<double> acc = 0.0;
        for (int p = 0; p < s; ++p)
            acc += zp[p] * std::polar(1.0, -2.0 * kPi * m * p / s);
        z[m + Spectrum::kOrder] = acc / static_cast<double>(s);
    }
    return z;
}

JointSpectrum::Coefficients laurent_joint(const CfEvaluator& eval, double omega) {
    constexpr int s = JointSpectrum::kStencil;
    std::array<std::array<complex<double>, s>, s> zp;
    const complex<double> l0 = eval.log_det_kernel(CountingField{}, omega);
    for (int p = 0; p < s; ++p) {
        for (int q = 0; q < s; ++q) {
            if (p == 0 && q == 0) {
                zp[0][0] = 1.0;
                continue;
            }
            CountingField xi;
            xi.xi_l = 2.0 * kPi * p / s;
            xi.xi_r = 2.0 * kPi * q / s;
            zp[p][q] = std::exp(eval.log_det_kernel(xi, omega) - l0);
        }
    }
    JointSpectrum::Coefficients z{};
    for (int m = -JointSpectrum::kOrder; m <= JointSpectrum::kOrder; ++m) {
        for (int n = -JointSpectrum::kOrder; n <= JointSpectrum::kOrder; ++n) {
            complex<double> acc = 0.0;
            for (int p = 0; p < s; ++p)
                for (int q = 0; q < s; ++q)
                    acc += zp[p][q] * std::polar(1.0, -2.0 * kPi * (m * p + n * q) / s);
            z[(m + JointSpectrum::kOrder) * s + (n + JointSpectrum::kOrder)] =
                acc / static_cast<double>(s * s);
        }
    }
    return z;
}

struct KahanComplex {
    complex<double> sum{0.0, 0.0};
    complex<double> comp{0.0, 0.0};

    void add(complex<double> v) {
        const complex<double> y = v - comp;
        const complex<double> t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    }
};

} // namespace

void FrequencyGrid::validate() const {
    if (!(spacing > 0.0) || !std::isfinite(spacing))
        throw ConfigError("frequency spacing must be positive and finite");
    if (half_window < 0.0 || !std::isfinite(half_window))
        throw ConfigError("frequency window must be non-negative and finite");
}

int FrequencyGrid::n_positive() const {
    validate();
    if (is_auto())
        throw ConfigError("frequency window not resolved yet");
    return std::max(1, static_cast<int>(std::llround(half_window / spacing)));
}

double FrequencyGrid::tau() const {
    validate();
    return 2.0 * kPi / spacing;
}

double auto_half_window(const ChainSpec& chain, const ReservoirSpec& res,
                        double spacing) {
    chain.validate();
    res.validate();
    // Band edges plus broadening, bias, and ten thermal lengths of headroom.
    const double raw = std::abs(chain.mu) +
                       2.0 * (std::abs(chain.eta) + std::abs(chain.delta)) +
                       10.0 * std::max(res.gamma_l, res.gamma_r) +
                       std::max(std::abs(res.mu_l), std::abs(res.mu_r)) +
                       10.0 / res.beta;
    const int n = std::max(1, static_cast<int>(std::ceil(raw / spacing - 1e-9)));
    return n * spacing;
}

FrequencyGrid resolve_grid(const ChainSpec& chain, const ReservoirSpec& res,
                           FrequencyGrid requested) {
    requested.validate();
    if (requested.is_auto())
        requested.half_window = auto_half_window(chain, res, requested.spacing);
    else if (requested.half_window < 0.5 * requested.spacing)
        throw ConfigError("frequency window narrower than one grid step");
    return requested;
}

std::complex<double> cf_at_frequency(const ChainSpec& chain, const ReservoirSpec& res,
                                     const CountingField& xi, double omega) {
    return CfEvaluator(chain, res).cf(xi, omega);
}

Spectrum::Spectrum(const ChainSpec& chain, const ReservoirSpec& res,
                   const FrequencyGrid& grid, int workers)
    : chain_(chain), res_(res), grid_(resolve_grid(chain, res, grid)) {
    if (workers < 1)
        throw ConfigError("worker count must be >= 1");
    coeff_.resize(grid_.n_positive());
    run_chunked(n_positive(), workers, [this]() {
        return [this, eval = CfEvaluator(chain_, res_)](int k) {
            coeff_[k] = laurent_single(eval, grid_.point(k));
        };
    });
    const double tail = edge_tail();
    if (tail > kTailTolerance) {
        std::ostringstream msg;
        msg << "transport has not shut off at the grid edge (tail " << tail
            << ", half window " << grid_.half_window << "); enlarge the frequency window";
        throw TailNotConverged(msg.str());
    }
}

std::complex<double> Spectrum::cf(std::complex<double> xi, int k) const {
    const auto& z = coeff_[k];
    const complex<double> w = std::exp(kImag * xi);
    const complex<double> winv = 1.0 / w;
    complex<double> acc = z[kOrder];
    complex<double> wp = 1.0, wm = 1.0;
    for (int m = 1; m <= kOrder; ++m) {
        wp *= w;
        wm *= winv;
        acc += z[kOrder + m] * wp + z[kOrder - m] * wm;
    }
    return acc;
}

std::complex<double> Spectrum::scaled_cgf_principal(std::complex<double> xi) const {
    complex<double> acc = 0.0;
    for (int k = 0; k < n_positive(); ++k)
        acc += std::log(cf(xi, k));
    return acc;
}

std::complex<double> Spectrum::scaled_cgf(std::complex<double> xi) const {
    const double scale = std::abs(xi);
    const double min_step = scale > 0.0 ? std::min(1.0, kBranchFloor / scale) : 1.0;
    complex<double> acc = 0.0;
    for (int k = 0; k < n_positive(); ++k) {
        const complex<double> z0 = cf(0.0, k);
        const complex<double> z1 = cf(xi, k);
        const double theta = walk_arg([&](double t) { return cf(t * xi, k); },
                                      z0, z1, kOrder * scale, min_step);
        acc += complex<double>(std::log(std::abs(z1)), theta);
    }
    return acc;
}

std::vector<std::complex<double>> Spectrum::circle_sweep(int n) const {
    if (n < 4)
        throw ConfigError("circle sweep needs at least 4 points");
    std::vector<complex<double>> out(n, complex<double>(0.0, 0.0));
    const double step = 2.0 * kPi / n;
    // Coarse sweeps take hidden waypoints between output points so a fast
    // harmonic cannot slip a full winding past the endpoint-jump test.
    const int subs =
        std::max(1, static_cast<int>(std::ceil(kOrder * step / kArgStepBudget)));
    for (int k = 0; k < n_positive(); ++k) {
        complex<double> prev = cf(0.0, k);
        double theta = std::arg(prev);
        out[0] += complex<double>(std::log(std::abs(prev)), theta);
        for (int j = 1; j < n; ++j) {
            for (int s = 1; s <= subs; ++s) {
                const double x = step * (j - 1 + static_cast<double>(s) / subs);
                const complex<double> cur = cf(x, k);
                theta = detail::continue_arg([&](double t) { return cf(t, k); },
                                             x - step / subs, x, prev, cur, theta,
                                             kBranchFloor);
                prev = cur;
            }
            out[j] += complex<double>(std::log(std::abs(prev)), theta);
        }
    }
    return out;
}

double Spectrum::analytic_mean_rate() const {
    double acc = 0.0;
    for (int k = 0; k < n_positive(); ++k)
        for (int m = -kOrder; m <= kOrder; ++m)
            acc += m * coeff_[k][m + kOrder].real();
    return acc * grid_.spacing / (2.0 * kPi);
}

double Spectrum::edge_tail() const {
    const auto& z = coeff_.back();
    double tail = 0.0;
    for (int m = -kOrder; m <= kOrder; ++m)
        if (m != 0)
            tail += std::abs(z[m + kOrder]);
    return tail;
}

JointSpectrum::JointSpectrum(const ChainSpec& chain, const ReservoirSpec& res,
                             const FrequencyGrid& grid, int workers)
    : chain_(chain), res_(res), grid_(resolve_grid(chain, res, grid)) {
    if (workers < 1)
        throw ConfigError("worker count must be >= 1");
    coeff_.resize(grid_.n_positive());
    run_chunked(n_positive(), workers, [this]() {
        return [this, eval = CfEvaluator(chain_, res_)](int k) {
            coeff_[k] = laurent_joint(eval, grid_.point(k));
        };
    });
}

std::complex<double> JointSpectrum::cf(std::complex<double> xi_l,
                                       std::complex<double> xi_r, int k) const {
    const auto& z = coeff_[k];
    std::array<complex<double>, kStencil> wl, wr;
    wl[kOrder] = 1.0;
    wr[kOrder] = 1.0;
    const complex<double> el = std::exp(kImag * xi_l);
    const complex<double> er = std::exp(kImag * xi_r);
    for (int m = 1; m <= kOrder; ++m) {
        wl[kOrder + m] = wl[kOrder + m - 1] * el;
        wl[kOrder - m] = wl[kOrder - m + 1] / el;
        wr[kOrder + m] = wr[kOrder + m - 1] * er;
        wr[kOrder - m] = wr[kOrder - m + 1] / er;
    }
    complex<double> acc = 0.0;
    for (int a = 0; a < kStencil; ++a) {
        complex<double> row = 0.0;
        for (int b = 0; b < kStencil; ++b)
            row += z[a * kStencil + b] * wr[b];
        acc += wl[a] * row;
    }
    return acc;
}

std::complex<double> JointSpectrum::scaled_cgf_principal(std::complex<double> xi_l,
                                                         std::complex<double> xi_r) const {
    complex<double> acc = 0.0;
    for (int k = 0; k < n_positive(); ++k)
        acc += std::log(cf(xi_l, xi_r, k));
    return acc;
}

std::complex<double> JointSpectrum::scaled_cgf(std::complex<double> xi_l,
                                               std::complex<double> xi_r) const {
    const double scale = std::max(std::abs(xi_l), std::abs(xi_r));
    const double min_step = scale > 0.0 ? std::min(1.0, kBranchFloor / scale) : 1.0;
    const double sweep = kOrder * (std::abs(xi_l) + std::abs(xi_r));
    complex<double> acc = 0.0;
    for (int k = 0; k < n_positive(); ++k) {
        const complex<double> z0 = cf(0.0, 0.0, k);
        const complex<double> z1 = cf(xi_l, xi_r, k);
        const double theta =
            walk_arg([&](double t) { return cf(t * xi_l, t * xi_r, k); }, z0, z1,
                     sweep, min_step);
        acc += complex<double>(std::log(std::abs(z1)), theta);
    }
    return acc;
}

Cumulants cumulants(const Spectrum& spectrum, const std::array<double, 4>& base_steps) {
    for (double h : base_steps)
        if (!(h > 0.0) || !std::isfinite(h))
            throw ConfigError("cumulant stencil steps must be positive and finite");

    const double tau = spectrum.tau();
    const auto f = [&](double x) { return spectrum.scaled_cgf(complex<double>(x, 0.0)) / tau; };
    const complex<double> f0 = f(0.0);

    // Complex derivative estimate of order n at step h from the central stencil.
    const auto stencil = [&](int n, double h) -> complex<double> {
        const complex<double> fp = f(h), fm = f(-h);
        switch (n) {
        case 1:
            return (fp - fm) / (2.0 * h);
        case 2:
            return (fp - 2.0 * f0 + fm) / (h * h);
        case 3: {
            const complex<double> fp2 = f(2.0 * h), fm2 = f(-2.0 * h);
            return (fp2 - 2.0 * fp + 2.0 * fm - fm2) / (2.0 * h * h * h);
        }
        default: {
            const complex<double> fp2 = f(2.0 * h), fm2 = f(-2.0 * h);
            return (fp2 - 4.0 * fp + 6.0 * f0 - 4.0 * fm + fm2) / (h * h * h * h);
        }
        }
    };

    // (-i)^n projects the derivative onto the n-th cumulant.
    const complex<double> proj[4] = {{0.0, -1.0}, {-1.0, 0.0}, {0.0, 1.0}, {1.0, 0.0}};

    Cumulants out;
    double* slot[4] = {&out.c1, &out.c2, &out.c3, &out.c4};
    for (int n = 1; n <= 4; ++n) {
        const double h = base_steps[n - 1];
        const complex<double> d1 = stencil(n, h);
        const complex<double> d2 = stencil(n, h / 2.0);
        const complex<double> d3 = stencil(n, h / 4.0);
        // Central stencils carry an even error series, so two Richardson
        // levels remove h^2 and h^4.
        const complex<double> r1a = (4.0 * d2 - d1) / 3.0;
        const complex<double> r1b = (4.0 * d3 - d2) / 3.0;
        const complex<double> r2 = (16.0 * r1b - r1a) / 15.0;
        const double err = std::abs(r2 - r1b);
        if (err > std::max(1e-8, 1e-6 * std::abs(r2))) {
            std::ostringstream msg;
            msg << "cumulant " << n << " did not converge under extrapolation (residual "
                << err << " at base step " << h << ")";
            throw StepTooSmall(msg.str());
        }
        *slot[n - 1] = (proj[n - 1] * r2).real();
    }
    return out;
}

Cumulants cumulants(const Spectrum& spectrum) {
    return cumulants(spectrum, {1e-3, 1e-3, 1e-2, 3e-2});
}

bool ChargeDistribution::resolved(std::size_t i) const {
    return !std::isnan(log_p[i]);
}

double ChargeDistribution::rate(std::size_t i) const {
    return -log_p[i] / tau;
}

ChargeDistribution charge_distribution(const Spectrum& spectrum, int n_xi) {
    if (n_xi < 256 || (n_xi & (n_xi - 1)) != 0)
        throw ConfigError("n_xi must be a power of two >= 256");
    // The branch continuation walks a circle at least 1024 points fine; the
    // inversion then uses every stride-th point.
    const int stride = std::max(1, 1024 / n_xi);
    const int n_fine = n_xi * stride;
    const std::vector<complex<double>> sweep = spectrum.circle_sweep(n_fine);

    std::vector<complex<double>> weight(n_xi);
    for (int j = 0; j < n_xi; ++j)
        weight[j] = std::exp(sweep[j * stride]);

    // Root-of-unity table keeps the inversion phases exact: the phase of term
    // (q, j) is table[(q*j) mod n_xi].
    std::vector<complex<double>> table(n_xi);
    for (int r = 0; r < n_xi; ++r)
        table[r] = std::polar(1.0, -2.0 * kPi * r / n_xi);

    ChargeDistribution dist;
    dist.tau = spectrum.tau();
    dist.q.resize(n_xi);
    dist.p.resize(n_xi);
    dist.log_p.resize(n_xi);

    KahanComplex mass;
    double max_imag = 0.0;
    for (int i = 0; i < n_xi; ++i) {
        const long long q = i - n_xi / 2;
        const long long q_mod = ((q % n_xi) + n_xi) % n_xi;
        KahanComplex acc;
        for (int j = 0; j < n_xi; ++j)
            acc.add(weight[j] * table[static_cast<std::size_t>(q_mod * j % n_xi)]);
        const complex<double> val = acc.sum / static_cast<double>(n_xi);
        max_imag = std::max(max_imag, std::abs(val.imag()));
        dist.q[i] = q;
        dist.p[i] = val.real();
        mass.add(val);
    }
    dist.max_abs_imag = max_imag;
    dist.total_mass = mass.sum.real();

    for (int i = 0; i < n_xi; ++i) {
        const double p = dist.p[i];
        if (p > dist.noise_floor && -std::log(p) < 50.0)
            dist.log_p[i] = std::log(p);
        else
            dist.log_p[i] = std::numeric_limits<double>::quiet_NaN();
    }
    return dist;
}

} // namespace kfcs
