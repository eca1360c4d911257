#include <doctest.h>

#include <cmath>
#include <complex>

#include "kitaevfcs/fcs.hpp"
#include "kitaevfcs/oracles.hpp"

using namespace kfcs;
using std::complex;

namespace {

constexpr double kPi = 3.14159265358979323846;

const ChainSpec kTrivial{3, 1.0, 1.0, 0.0};
const ChainSpec kMajorana{3, 0.0, 1.0, 1.0};
const ReservoirSpec kBiased{0.3, 0.3, 0.05, -0.05, 10.0};

} // namespace

TEST_CASE("frequency grid lattice and validation") {
    FrequencyGrid grid{0.01, 2.0};
    CHECK(grid.n_positive() == 200);
    CHECK(grid.point(0) == doctest::Approx(0.005));
    CHECK(grid.point(199) == doctest::Approx(1.995));
    CHECK(grid.tau() == doctest::Approx(2.0 * kPi / 0.01));

    grid.spacing = 0.0;
    CHECK_THROWS_AS(grid.validate(), ConfigError);
    grid.spacing = 0.01;
    grid.half_window = -1.0;
    CHECK_THROWS_AS(grid.validate(), ConfigError);
}

TEST_CASE("automatic window is a grid multiple covering band and bias") {
    const FrequencyGrid resolved = resolve_grid(kTrivial, kBiased, {0.01, 0.0});
    CHECK(resolved.half_window > 0.0);
    const double steps = resolved.half_window / resolved.spacing;
    CHECK(steps == doctest::Approx(std::round(steps)).epsilon(1e-12));
    // Band edge |mu| + 2 eta plus coupling and thermal margins.
    CHECK(resolved.half_window >= 7.0);

    CHECK_THROWS_AS(resolve_grid(kTrivial, kBiased, {0.01, 0.004}), ConfigError);
}

TEST_CASE("characteristic function is one at zero field") {
    CHECK(cf_at_frequency(kTrivial, kBiased, {}, 0.7) == complex<double>(1.0, 0.0));
}

TEST_CASE("cached coefficients reproduce direct kernel evaluations") {
    const FrequencyGrid grid{0.05, 3.5};
    const Spectrum spectrum(kTrivial, kBiased, grid);
    const CfEvaluator eval(kTrivial, kBiased);
    for (int k : {0, 17, spectrum.n_positive() - 1}) {
        const double omega = grid.point(k);
        for (complex<double> xi : {complex<double>(0.6, 0.0), complex<double>(2.9, 0.0),
                                   complex<double>(-1.2, 0.45)}) {
            const complex<double> cached = spectrum.cf(xi, k);
            const complex<double> direct = eval.cf({xi, 0.0}, omega);
            CHECK(std::abs(cached - direct) < 1e-12);
        }
    }
}

TEST_CASE("transferred charge per cycle never exceeds two") {
    const Spectrum spectrum(ChainSpec{3, 1.0, 1.0, 1.0}, kBiased, {0.05, 3.5});
    for (int k : {0, 10, 40}) {
        const auto& z = spectrum.coefficients(k);
        CHECK(std::abs(z[0]) < 1e-12);  // m = -4
        CHECK(std::abs(z[1]) < 1e-12);  // m = -3
        CHECK(std::abs(z[7]) < 1e-12);  // m = +3
        CHECK(std::abs(z[8]) < 1e-12);  // m = +4
        // Coefficients of a probability-weighted sum are real.
        for (const auto& c : z)
            CHECK(std::abs(c.imag()) < 1e-13);
    }
}

TEST_CASE("generating function vanishes at zero field") {
    const Spectrum spectrum(kTrivial, kBiased, {0.01, 0.0});
    CHECK(std::abs(spectrum.scaled_cgf(0.0)) < 1e-12);
    CHECK(std::abs(spectrum.scaled_cgf_principal(0.0)) < 1e-12);
}

TEST_CASE("decoupled left lead makes the counting field inert") {
    ReservoirSpec res = kBiased;
    res.gamma_l = 0.0;
    const Spectrum spectrum(kTrivial, res, {0.01, 0.0});
    for (double xi : {0.7, 2.1, 5.5})
        CHECK(std::abs(spectrum.scaled_cgf(xi)) < 1e-12);
}

TEST_CASE("generating function obeys conjugation symmetry on the real axis") {
    const Spectrum spectrum(kTrivial, kBiased, {0.01, 0.0});
    for (double xi : {0.4, 1.9, 4.4}) {
        const complex<double> plus = spectrum.scaled_cgf_principal(xi);
        const complex<double> minus = spectrum.scaled_cgf_principal(-xi);
        CHECK(std::abs(minus - std::conj(plus)) < 1e-10);
    }
}

TEST_CASE("two counting fields reduce to their difference without pairing") {
    const FrequencyGrid grid{0.01, 0.0};
    const Spectrum single(kTrivial, kBiased, grid);
    const JointSpectrum joint(kTrivial, kBiased, grid);
    for (double xl : {0.9, 2.3}) {
        for (double xr : {0.0, -1.4}) {
            const complex<double> a = joint.scaled_cgf_principal(xl, xr);
            const complex<double> b = single.scaled_cgf_principal(xl - xr);
            CHECK(std::abs(a - b) < 1e-8);
        }
    }
}

TEST_CASE("distribution is a normalized real probability") {
    const Spectrum spectrum(kTrivial, kBiased, {0.01, 0.0});
    const ChargeDistribution dist = charge_distribution(spectrum, 512);
    REQUIRE(dist.q.size() == 512);
    CHECK(dist.q.front() == -256);
    CHECK(dist.q.back() == 255);
    CHECK(dist.tau == doctest::Approx(2.0 * kPi / 0.01));
    CHECK(dist.total_mass == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(dist.max_abs_imag < 1e-12);
    double mean = 0.0;
    for (std::size_t i = 0; i < dist.q.size(); ++i) {
        CHECK(dist.p[i] > -1e-12);
        mean += static_cast<double>(dist.q[i]) * dist.p[i];
    }
    // Positive bias on the left pushes charge out of it.
    CHECK(mean > 0.0);

    // Resolved entries expose the rate function, unresolved ones are NaN.
    bool saw_unresolved = false;
    for (std::size_t i = 0; i < dist.q.size(); ++i) {
        if (!dist.resolved(i)) {
            saw_unresolved = true;
            CHECK(std::isnan(dist.rate(i)));
        } else {
            CHECK(dist.rate(i) == doctest::Approx(-dist.log_p[i] / dist.tau));
        }
    }
    CHECK(saw_unresolved);

    CHECK_THROWS_AS(charge_distribution(spectrum, 100), ConfigError);
    CHECK_THROWS_AS(charge_distribution(spectrum, 300), ConfigError);
}

TEST_CASE("mean rate matches the coefficient-level expression and the cumulant") {
    const Spectrum spectrum(kTrivial, kBiased, {0.01, 0.0});
    const Cumulants c = cumulants(spectrum);
    CHECK(c.c1 == doctest::Approx(spectrum.analytic_mean_rate()).epsilon(1e-8));
    CHECK(c.c2 >= 0.0);
}

TEST_CASE("first cumulant vanishes in equilibrium") {
    ReservoirSpec res = kBiased;
    res.mu_l = 0.05;
    res.mu_r = 0.05;
    const Spectrum spectrum(kTrivial, res, {0.01, 0.0});
    const Cumulants c = cumulants(spectrum);
    CHECK(std::abs(c.c1) < 1e-10);
    CHECK(c.c2 >= 0.0);
}

TEST_CASE("pair transport spectrum is pi periodic") {
    const Spectrum spectrum(kMajorana, kBiased, {0.01, 0.0});
    for (double xi : {0.3, 1.7}) {
        const complex<double> diff =
            spectrum.scaled_cgf_principal(xi + kPi) - spectrum.scaled_cgf_principal(xi);
        CHECK(std::abs(diff) < 1e-10);
    }
}

TEST_CASE("narrow windows are rejected instead of silently truncating") {
    CHECK_THROWS_AS(Spectrum(kTrivial, kBiased, FrequencyGrid{0.01, 0.5}),
                    TailNotConverged);
}

TEST_CASE("sweep needs enough points to track the branch") {
    const Spectrum spectrum(kTrivial, kBiased, {0.05, 3.5});
    CHECK_THROWS_AS(spectrum.circle_sweep(2), ConfigError);
}

TEST_CASE("branch continuation rejects genuine discontinuities") {
    const auto step = [](double t) {
        return t < 0.5 ? complex<double>(1.0, 0.0) : complex<double>(-1.0, 0.0);
    };
    CHECK_THROWS_AS(detail::continue_arg(step, 0.0, 1.0, step(0.0), step(1.0), 0.0, 1e-4),
                    BranchAmbiguity);

    const auto vanishing = [](double t) { return complex<double>(t - 0.5, 0.0); };
    CHECK_THROWS_AS(
        detail::continue_arg(vanishing, 0.0, 1.0, vanishing(0.0), vanishing(1.0), 0.0, 1e-4),
        BranchAmbiguity);
}

TEST_CASE("branch continuation follows smooth windings") {
    // Two full turns, walked through waypoints fine enough that each step
    // stays identifiable; the accumulated argument keeps the windings the
    // endpoint values alone cannot see.
    const auto loop = [](double t) { return std::polar(1.0, 4.0 * kPi * t); };
    double theta = 0.0;
    for (int s = 0; s < 10; ++s) {
        theta = detail::continue_arg(loop, 0.1 * s, 0.1 * (s + 1), loop(0.1 * s),
                                     loop(0.1 * (s + 1)), theta, 1e-6);
    }
    CHECK(theta == doctest::Approx(4.0 * kPi).epsilon(1e-10));

    // A half turn in one call is past the jump threshold: the bisection has
    // to resolve it from the interior samples.
    const auto half = [](double t) { return std::polar(2.0, kPi * t); };
    const double resolved =
        detail::continue_arg(half, 0.0, 1.0, half(0.0), half(1.0), 0.0, 1e-6);
    CHECK(resolved == doctest::Approx(kPi).epsilon(1e-10));
}

TEST_CASE("full windings survive the scaled log sum") {
    // The end-mode chain transmits pairs resonantly, so some per-frequency
    // factors wind around zero as the field runs a full circle. Walking to
    // xi and to xi + 2*pi must differ by 2*pi*i per winding, consistently
    // with the sweep that visits every point in between.
    const Spectrum spectrum(kMajorana, kBiased, {0.01, 4.0});
    const int n = 64;
    const auto sweep = spectrum.circle_sweep(n);
    for (int j : {13, 31, 50}) {
        const complex<double> direct = spectrum.scaled_cgf(2.0 * kPi * j / n);
        CHECK(std::abs(direct - sweep[j]) < 1e-8);
    }
}

TEST_CASE("cumulant stencil reports unusable step sizes") {
    const Spectrum spectrum(kTrivial, kBiased, {0.05, 3.5});
    CHECK_THROWS_AS(cumulants(spectrum, {1e-12, 1e-12, 1e-12, 1e-12}), StepTooSmall);
}
