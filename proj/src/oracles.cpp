#include "kitaevfcs/oracles.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <random>
#include <utility>

namespace kfcs {

namespace {

using std::complex;

constexpr double kPi = std::numbers::pi;
constexpr complex<double> kImag{0.0, 1.0};

double sq(double x) { return x * x; }

struct LeadOccupations {
    double n1e, n1h, n2e, n2h;
};

LeadOccupations occ4(const ReservoirSpec& res, double omega) {
    return {occupation(omega, res.mu_l, res.beta, Species::electron),
            occupation(omega, res.mu_l, res.beta, Species::hole),
            occupation(omega, res.mu_r, res.beta, Species::electron),
            occupation(omega, res.mu_r, res.beta, Species::hole)};
}

// 20-point Gauss-Legendre rule on [-1, 1], nodes by Newton iteration.
const std::array<std::pair<double, double>, 20>& gauss_legendre_20() {
    static const auto table = [] {
        constexpr int n = 20;
        std::array<std::pair<double, double>, n> t{};
        for (int i = 0; i < n; ++i) {
            double x = std::cos(kPi * (i + 0.75) / (n + 0.5));
            double p1 = 0.0, dp = 0.0;
            for (int it = 0; it < 64; ++it) {
                double p0 = 1.0;
                p1 = x;
                for (int j = 2; j <= n; ++j) {
                    const double p2 = ((2 * j - 1) * x * p1 - (j - 1) * p0) / j;
                    p0 = p1;
                    p1 = p2;
                }
                dp = n * (x * p1 - p0) / (x * x - 1.0);
                const double dx = p1 / dp;
                x -= dx;
                if (std::abs(dx) < 1e-15)
                    break;
            }
            t[i] = {x, 2.0 / ((1.0 - x * x) * dp * dp)};
        }
        return t;
    }();
    return table;
}

} // namespace

namespace channel {

double normal_denominator(double mu, double eta, double gl, double gr,
                          double omega, int sign) {
    const double p = mu + sign * omega;
    const double e2 = eta * eta, e4 = e2 * e2, p2 = p * p;
    return gl * gl * (e4 - 2.0 * e2 * p2 + p2 * p2 + p2 * gr * gr) +
           gr * gr * sq(e2 - p2) + 2.0 * e4 * gl * gr + p2 * sq(p2 - 2.0 * e2);
}

double normal_transmission(double mu, double eta, double gl, double gr,
                           double omega, int sign) {
    const double e4 = sq(eta * eta);
    return 4.0 * e4 * gl * gr / normal_denominator(mu, eta, gl, gr, omega, sign);
}

double car3_denominator(double mu, double delta, double gl, double gr,
                        double omega, int sign) {
    const double pq = mu * mu - omega * omega;
    const double p2 = sq(mu + sign * omega);
    const double q2 = sq(mu - sign * omega);
    const double d2 = delta * delta, d4 = d2 * d2;
    return p2 * sq(2.0 * d2 + pq) + 2.0 * d4 * gl * gr +
           gl * gl * (sq(d2 + pq) + q2 * gr * gr) + gr * gr * sq(d2 + pq);
}

double car3_transmission(double mu, double delta, double gl, double gr,
                         double omega, int sign) {
    const double d4 = sq(delta * delta);
    return 4.0 * d4 * gl * gr / car3_denominator(mu, delta, gl, gr, omega, sign);
}

double car4_denominator(double mu, double delta, double gl, double gr,
                        double omega, int sign) {
    const double p = mu + sign * omega, q = mu - sign * omega;
    const double pq = mu * mu - omega * omega;
    const double d2 = delta * delta, d4 = d2 * d2, d6 = d4 * d2, d8 = d4 * d4;
    return q * q * p * p * p * p * (q * q + gr * gr) + 2.0 * d6 * gl * gr +
           gl * gl * (q * q * sq(2.0 * d2 + pq) + gr * gr * sq(d2 + pq)) +
           d4 * p * p * (11.0 * q * q + 4.0 * gr * gr) +
           2.0 * d2 * q * p * p * p * (3.0 * q * q + 2.0 * gr * gr) + d8 +
           6.0 * d6 * pq;
}

double car4_transmission(double mu, double delta, double gl, double gr,
                         double omega, int sign) {
    const double d6 = sq(delta * delta) * delta * delta;
    return 4.0 * d6 * gl * gr / car4_denominator(mu, delta, gl, gr, omega, sign);
}

double lar_denominator(double gl, double omega) {
    const double w2 = omega * omega;
    return sq(gl * gl) * w2 + 2.0 * gl * gl * (w2 * w2 - 4.0 * w2 + 8.0) +
           w2 * sq(w2 - 4.0);
}

double lar_transmission(double gl, double omega) {
    return 16.0 * gl * gl / lar_denominator(gl, omega);
}

double mixed_denominator(double gl, double gr, double omega) {
    const double w = omega, w2 = w * w;
    const double gl2 = gl * gl, gr2 = gr * gr;
    const double w4 = w2 * w2, w6 = w4 * w2, w8 = w4 * w4, w10 = w8 * w2;
    return sq(w6 - 11.0 * w4 + 27.0 * w2 - 1.0) +
           2.0 * (w10 - 15.0 * w8 + 78.0 * w6 - 178.0 * w4 + 209.0 * w2 + 1.0) *
               (gl2 + gr2) +
           gr2 * gr2 * (sq(w - 1.0) * gl2 + sq((w - 2.0) * w - 1.0)) *
               (sq(w + 1.0) * gl2 + sq(w * (w + 2.0) - 1.0)) +
           sq(w4 - 6.0 * w2 + 1.0) * gl2 * gl2 +
           32.0 * gl * gr * (gl2 + w2 + 1.0) * (gr2 + w2 + 1.0) +
           2.0 * gr2 * ((w6 - 5.0 * w4 + 11.0 * w2 + 1.0) * gl2 * gl2 +
                        2.0 * (w8 - 8.0 * w6 + 30.0 * w4 - 48.0 * w2 + 65.0) * gl2);
}

double mixed_transmission(double gl, double gr, double omega, int which) {
    const double w = omega;
    const double up = sq(w + 1.0), um = sq(w - 1.0);
    double left = 0.0, right = 0.0;
    switch (which) {
    case 1:
        left = up;
        right = up;
        break;
    case 2:
        left = um;
        right = um;
        break;
    case 3:
        left = up;
        right = um;
        break;
    case 4:
        left = um;
        right = up;
        break;
    default:
        throw ConfigError("mixed_transmission index must be 1..4");
    }
    return 16.0 * gl * gr * (gl * gl + left) * (gr * gr + right) /
           mixed_denominator(gl, gr, omega);
}

double mixed_pair_transmission(double gl, double gr, double omega) {
    const double w2 = omega * omega, gr2 = gr * gr;
    return 16.0 * gl * gl *
           (w2 * gr2 * gr2 + 2.0 * (w2 * w2 - 3.0 * w2 + 8.0) * gr2 +
            w2 * sq(w2 - 5.0)) /
           mixed_denominator(gl, gr, omega);
}

} // namespace channel

AnalyticCase parse_case(std::string_view tag) {
    if (tag == "trivial3")
        return AnalyticCase::trivial3;
    if (tag == "pairing3")
        return AnalyticCase::pairing3;
    if (tag == "pairing4")
        return AnalyticCase::pairing4;
    if (tag == "majorana")
        return AnalyticCase::majorana;
    if (tag == "general3")
        return AnalyticCase::general3;
    throw ConfigError("unknown analytic case tag: " + std::string(tag));
}

std::string_view case_tag(AnalyticCase c) {
    switch (c) {
    case AnalyticCase::trivial3:
        return "trivial3";
    case AnalyticCase::pairing3:
        return "pairing3";
    case AnalyticCase::pairing4:
        return "pairing4";
    case AnalyticCase::majorana:
        return "majorana";
    case AnalyticCase::general3:
        return "general3";
    }
    throw ConfigError("unknown analytic case value");
}

void validate_case(AnalyticCase c, const ChainSpec& chain) {
    chain.validate();
    switch (c) {
    case AnalyticCase::trivial3:
        if (chain.n_sites != 3 || chain.delta != 0.0)
            throw CaseMismatch("trivial3 needs a three-site chain with delta = 0");
        return;
    case AnalyticCase::pairing3:
        if (chain.n_sites != 3 || chain.eta != 0.0)
            throw CaseMismatch("pairing3 needs a three-site chain with eta = 0");
        return;
    case AnalyticCase::pairing4:
        if (chain.n_sites != 4 || chain.eta != 0.0)
            throw CaseMismatch("pairing4 needs a four-site chain with eta = 0");
        return;
    case AnalyticCase::majorana:
        if (chain.mu != 0.0 || chain.eta != 1.0 || chain.delta != 1.0)
            throw CaseMismatch("majorana needs mu = 0 and eta = delta = 1");
        return;
    case AnalyticCase::general3:
        if (chain.n_sites != 3 || chain.mu != 1.0 || chain.eta != 1.0 ||
            chain.delta != 1.0)
            throw CaseMismatch("general3 needs a three-site chain with mu = eta = delta = 1");
        return;
    }
    throw ConfigError("unknown analytic case value");
}

std::complex<double> analytic_cf(AnalyticCase c, const ChainSpec& chain,
                                 const ReservoirSpec& res,
                                 std::complex<double> xi, double omega) {
    validate_case(c, chain);
    res.validate();
    const auto [n1e, n1h, n2e, n2h] = occ4(res, omega);
    const complex<double> em = std::exp(-kImag * xi);
    const complex<double> ep = std::exp(kImag * xi);

    // Two-bracket product of an electron-like and a hole-like binomial channel.
    const auto two_bracket = [&](double cp, double cm, double a1, double a2,
                                 double b1, double b2) {
        // a*: occupations entering the electron-like bracket (paired with cp),
        // b*: the hole-like bracket (paired with cm).
        const complex<double> xe = (1.0 - a1) * a2 * em + a1 * (1.0 - a2) * ep;
        const complex<double> xh = b1 * (1.0 - b2) * em + (1.0 - b1) * b2 * ep;
        const double ae = 1.0 - cp * ((1.0 - a1) * a2 + a1 * (1.0 - a2));
        const double ah = 1.0 - cm * (b1 * (1.0 - b2) + (1.0 - b1) * b2);
        return (ae + cp * xe) * (ah + cm * xh);
    };

    switch (c) {
    case AnalyticCase::trivial3: {
        const double cp = channel::normal_transmission(chain.mu, chain.eta, res.gamma_l,
                                                       res.gamma_r, omega, +1);
        const double cm = channel::normal_transmission(chain.mu, chain.eta, res.gamma_l,
                                                       res.gamma_r, omega, -1);
        return two_bracket(cp, cm, n1e, n2e, n1h, n2h);
    }
    case AnalyticCase::pairing3: {
        const double cp = channel::car3_transmission(chain.mu, chain.delta, res.gamma_l,
                                                     res.gamma_r, omega, +1);
        const double cm = channel::car3_transmission(chain.mu, chain.delta, res.gamma_l,
                                                     res.gamma_r, omega, -1);
        return two_bracket(cp, cm, n1e, n2e, n1h, n2h);
    }
    case AnalyticCase::pairing4: {
        // Crossed Andreev: the brackets couple opposite species on the two
        // sides, (n1e, n2h) and (n1h, n2e).
        const double cp = channel::car4_transmission(chain.mu, chain.delta, res.gamma_l,
                                                     res.gamma_r, omega, +1);
        const double cm = channel::car4_transmission(chain.mu, chain.delta, res.gamma_l,
                                                     res.gamma_r, omega, -1);
        return two_bracket(cp, cm, n1e, n2h, n1h, n2e);
    }
    case AnalyticCase::majorana: {
        const double c3 = channel::lar_transmission(res.gamma_l, omega);
        const double a3 = 1.0 - c3 * (n1e * (1.0 - n1h) + (1.0 - n1e) * n1h);
        return a3 + c3 * ((1.0 - n1e) * n1h * std::exp(-2.0 * kImag * xi) +
                          n1e * (1.0 - n1h) * std::exp(2.0 * kImag * xi));
    }
    case AnalyticCase::general3: {
        const double c1 = channel::mixed_transmission(res.gamma_l, res.gamma_r, omega, 1);
        const double c2 = channel::mixed_transmission(res.gamma_l, res.gamma_r, omega, 2);
        const double c3 = channel::mixed_transmission(res.gamma_l, res.gamma_r, omega, 3);
        const double c4 = channel::mixed_transmission(res.gamma_l, res.gamma_r, omega, 4);
        const double b4 = channel::mixed_pair_transmission(res.gamma_l, res.gamma_r, omega);
        // Single-charge weights pair the (w-1)/(w+1) families across species.
        const double minus = c2 * (1.0 - n1e) * n2e + c1 * n1h * (1.0 - n2h) +
                             c4 * (1.0 - n1e) * n2h + c3 * n1h * (1.0 - n2e);
        const double plus = c2 * n1e * (1.0 - n2e) + c1 * (1.0 - n1h) * n2h +
                            c4 * n1e * (1.0 - n2h) + c3 * (1.0 - n1h) * n2e;
        const double b_plus = b4 * n1e * (1.0 - n1h);
        const double b_minus = b4 * n1h * (1.0 - n1e);
        const double a4 = 1.0 - minus - plus - b_plus - b_minus;
        return a4 + minus * em + plus * ep +
               b_plus * std::exp(2.0 * kImag * xi) +
               b_minus * std::exp(-2.0 * kImag * xi);
    }
    }
    throw ConfigError("unknown analytic case value");
}

double landauer_current(const ChainSpec& chain, const ReservoirSpec& res,
                        const FrequencyGrid& grid) {
    validate_case(AnalyticCase::trivial3, chain);
    res.validate();
    const FrequencyGrid g = resolve_grid(chain, res, grid);
    double acc = 0.0;
    for (int j = 0; j < g.n_positive(); ++j) {
        const double w = g.point(j);
        const auto [n1e, n1h, n2e, n2h] = occ4(res, w);
        const double cp = channel::normal_transmission(chain.mu, chain.eta, res.gamma_l,
                                                       res.gamma_r, w, +1);
        const double cm = channel::normal_transmission(chain.mu, chain.eta, res.gamma_l,
                                                       res.gamma_r, w, -1);
        acc += cp * (n1e * (1.0 - n2e) - (1.0 - n1e) * n2e) +
               cm * ((1.0 - n1h) * n2h - n1h * (1.0 - n2h));
    }
    return acc * g.spacing / (2.0 * kPi);
}

double oracle_equivalence_error(AnalyticCase c, const ChainSpec& chain,
                                const ReservoirSpec& res, int n_samples,
                                unsigned long long seed) {
    validate_case(c, chain);
    res.validate();
    if (n_samples < 1)
        throw ConfigError("n_samples must be positive");

    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> xi_draw(-kPi, kPi);
    std::uniform_real_distribution<double> omega_draw(-6.0, 6.0);
    const CfEvaluator eval(chain, res);
    double worst = 0.0;
    for (int i = 0; i < n_samples; ++i) {
        const double xi = xi_draw(rng);
        const double omega = omega_draw(rng);
        const std::complex<double> z_num = eval.cf({xi, 0.0}, omega);
        const std::complex<double> z_ref = analytic_cf(c, chain, res, xi, omega);
        const double rel =
            std::abs(z_num - z_ref) / std::max(std::abs(z_ref), 1e-300);
        worst = std::max(worst, rel);
    }
    return worst;
}

double majorana_conductance(const ReservoirSpec& res, double beta) {
    res.validate();
    if (!(beta > 0.0) || !std::isfinite(beta))
        throw ConfigError("beta must be positive and finite");
    const double gl = res.gamma_l;
    if (gl == 0.0)
        return 0.0;

    // Probe bias small enough that the pair channel stays linear.
    const double bias = 4e-3;
    // The occupation difference dies as exp(-beta*(omega - bias)) past the
    // edge; the integrand is even in omega.
    const double upper = bias + 200.0 / beta;
    const double width = std::min({4.0 / beta, 0.05 * std::max(gl, 0.05), upper});
    const int n_panels = std::min(20000, std::max(32, static_cast<int>(std::ceil(upper / width))));

    const auto& rule = gauss_legendre_20();
    double acc = 0.0;
    for (int p = 0; p < n_panels; ++p) {
        const double a = upper * p / n_panels;
        const double b = upper * (p + 1) / n_panels;
        const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
        for (const auto& [node, weight] : rule) {
            const double w = mid + half * node;
            const double diff = occupation(w, bias, beta, Species::electron) -
                                occupation(w, -bias, beta, Species::electron);
            acc += weight * half * channel::lar_transmission(gl, w) * diff;
        }
    }
    return acc / (kPi * bias);
}

} // namespace kfcs
