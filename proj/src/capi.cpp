#include "kitaev_fcs.h"

#include <cmath>
#include <complex>
#include <cstring>
#include <memory>
#include <string>

#include "kitaevfcs/fcs.hpp"
#include "kitaevfcs/oracles.hpp"
#include "kitaevfcs/xft.hpp"

struct kfcs_system {
    kfcs::ChainSpec chain;
    kfcs::ReservoirSpec res;
    kfcs::FrequencyGrid grid;
    int workers = 1;
    int n_xi = 1024;

    // Caches, invalidated whenever a parameter changes.
    std::shared_ptr<const kfcs::Spectrum> spectrum;
    std::shared_ptr<const kfcs::JointSpectrum> joint;

    const kfcs::Spectrum& ensure_spectrum() {
        if (!spectrum)
            spectrum = std::make_shared<kfcs::Spectrum>(chain, res, grid, workers);
        return *spectrum;
    }

    const kfcs::JointSpectrum& ensure_joint() {
        if (!joint)
            joint = std::make_shared<kfcs::JointSpectrum>(chain, res, grid, workers);
        return *joint;
    }

    void invalidate() {
        spectrum.reset();
        joint.reset();
    }
};

namespace {

thread_local std::string g_last_error;

kfcs_status fail(kfcs_status code, const char* what) {
    g_last_error = what;
    return code;
}

template <typename Fn>
kfcs_status guarded(Fn&& fn) {
    try {
        fn();
        g_last_error.clear();
        return KFCS_OK;
    } catch (const kfcs::ConfigError& e) {
        return fail(KFCS_ERR_CONFIG, e.what());
    } catch (const kfcs::TailNotConverged& e) {
        return fail(KFCS_ERR_TAIL, e.what());
    } catch (const kfcs::BranchAmbiguity& e) {
        return fail(KFCS_ERR_BRANCH, e.what());
    } catch (const kfcs::StepTooSmall& e) {
        return fail(KFCS_ERR_STEP, e.what());
    } catch (const kfcs::InsufficientSupport& e) {
        return fail(KFCS_ERR_SUPPORT, e.what());
    } catch (const kfcs::SingularPropagator& e) {
        return fail(KFCS_ERR_SINGULAR, e.what());
    } catch (const kfcs::CaseMismatch& e) {
        return fail(KFCS_ERR_CASE, e.what());
    } catch (const kfcs::ParityError& e) {
        return fail(KFCS_ERR_PARITY, e.what());
    } catch (const std::exception& e) {
        return fail(KFCS_ERR_UNKNOWN, e.what());
    } catch (...) {
        return fail(KFCS_ERR_UNKNOWN, "unknown error");
    }
}

kfcs_status bad_arg(const char* what) { return fail(KFCS_ERR_BADARG, what); }

// Parameter slots addressable by key. Integer slots round-trip through
// double, so they reject non-integral values on write.
struct KeyRef {
    double* real = nullptr;
    int* integer = nullptr;
};

KeyRef key_ref(kfcs_system& sys, const char* key) {
    const std::string k(key);
    if (k == "n_sites")
        return {nullptr, &sys.chain.n_sites};
    if (k == "mu")
        return {&sys.chain.mu, nullptr};
    if (k == "eta")
        return {&sys.chain.eta, nullptr};
    if (k == "delta")
        return {&sys.chain.delta, nullptr};
    if (k == "gamma_l")
        return {&sys.res.gamma_l, nullptr};
    if (k == "gamma_r")
        return {&sys.res.gamma_r, nullptr};
    if (k == "mu_l")
        return {&sys.res.mu_l, nullptr};
    if (k == "mu_r")
        return {&sys.res.mu_r, nullptr};
    if (k == "beta")
        return {&sys.res.beta, nullptr};
    if (k == "d_omega")
        return {&sys.grid.spacing, nullptr};
    if (k == "half_window")
        return {&sys.grid.half_window, nullptr};
    if (k == "n_xi")
        return {nullptr, &sys.n_xi};
    if (k == "workers")
        return {nullptr, &sys.workers};
    throw kfcs::ConfigError("unknown parameter key: " + k);
}

} // namespace

extern "C" {

const char* kfcs_version(void) { return "1.0.0"; }

const char* kfcs_last_error(void) { return g_last_error.c_str(); }

kfcs_system* kfcs_system_create(void) {
    try {
        return new kfcs_system();
    } catch (...) {
        return nullptr;
    }
}

void kfcs_system_destroy(kfcs_system* sys) { delete sys; }

kfcs_status kfcs_system_set(kfcs_system* sys, const char* key, double value) {
    if (!sys || !key)
        return bad_arg("null system or key");
    return guarded([&] {
        const KeyRef ref = key_ref(*sys, key);
        if (ref.integer) {
            if (!std::isfinite(value) || value != std::floor(value))
                throw kfcs::ConfigError(std::string(key) + " must be an integer");
            *ref.integer = static_cast<int>(value);
        } else {
            *ref.real = value;
        }
        sys->invalidate();
    });
}

kfcs_status kfcs_system_get(const kfcs_system* sys, const char* key,
                            double* out) {
    if (!sys || !key || !out)
        return bad_arg("null system, key, or output");
    return guarded([&] {
        const KeyRef ref = key_ref(const_cast<kfcs_system&>(*sys), key);
        *out = ref.integer ? static_cast<double>(*ref.integer) : *ref.real;
    });
}

kfcs_status kfcs_tau(const kfcs_system* sys, double* out) {
    if (!sys || !out)
        return bad_arg("null system or output");
    return guarded([&] {
        sys->grid.validate();
        *out = sys->grid.tau();
    });
}

kfcs_status kfcs_cf_at(kfcs_system* sys, double xi_re, double xi_im,
                       double omega, double* out_re, double* out_im) {
    if (!sys || !out_re || !out_im)
        return bad_arg("null system or output");
    return guarded([&] {
        const kfcs::CountingField xi{{xi_re, xi_im}, {0.0, 0.0}};
        const std::complex<double> z =
            kfcs::cf_at_frequency(sys->chain, sys->res, xi, omega);
        *out_re = z.real();
        *out_im = z.imag();
    });
}

kfcs_status kfcs_cgf(kfcs_system* sys, double xi_re, double xi_im,
                     double* out_re, double* out_im) {
    if (!sys || !out_re || !out_im)
        return bad_arg("null system or output");
    return guarded([&] {
        const auto& spectrum = sys->ensure_spectrum();
        const std::complex<double> f =
            spectrum.scaled_cgf({xi_re, xi_im}) / spectrum.tau();
        *out_re = f.real();
        *out_im = f.imag();
    });
}

kfcs_status kfcs_cgf_joint(kfcs_system* sys, double xi_l_re, double xi_l_im,
                           double xi_r_re, double xi_r_im, double* out_re,
                           double* out_im) {
    if (!sys || !out_re || !out_im)
        return bad_arg("null system or output");
    return guarded([&] {
        const auto& joint = sys->ensure_joint();
        const std::complex<double> f =
            joint.scaled_cgf({xi_l_re, xi_l_im}, {xi_r_re, xi_r_im}) / joint.tau();
        *out_re = f.real();
        *out_im = f.imag();
    });
}

kfcs_status kfcs_cumulants(kfcs_system* sys, double out[4]) {
    if (!sys || !out)
        return bad_arg("null system or output");
    return guarded([&] {
        const kfcs::Cumulants c = kfcs::cumulants(sys->ensure_spectrum());
        out[0] = c.c1;
        out[1] = c.c2;
        out[2] = c.c3;
        out[3] = c.c4;
    });
}

kfcs_status kfcs_distribution(kfcs_system* sys, long long* q, double* p,
                              double* log_p, int* n_inout) {
    if (!sys || !n_inout)
        return bad_arg("null system or count");
    const bool query = !q && !p && !log_p;
    if (!query && (!q || !p || !log_p))
        return bad_arg("pass all three arrays or none");
    return guarded([&] {
        if (query) {
            *n_inout = sys->n_xi;
            return;
        }
        const kfcs::ChargeDistribution dist =
            kfcs::charge_distribution(sys->ensure_spectrum(), sys->n_xi);
        const int n = static_cast<int>(dist.q.size());
        if (*n_inout < n)
            throw kfcs::ConfigError("output arrays hold " +
                                    std::to_string(*n_inout) + " entries, need " +
                                    std::to_string(n));
        for (int i = 0; i < n; ++i) {
            q[i] = dist.q[static_cast<std::size_t>(i)];
            p[i] = dist.p[static_cast<std::size_t>(i)];
            log_p[i] = dist.log_p[static_cast<std::size_t>(i)];
        }
        *n_inout = n;
    });
}

kfcs_status kfcs_xft_report(kfcs_system* sys, double affinity_override,
                            double out[6]) {
    if (!sys || !out)
        return bad_arg("null system or output");
    return guarded([&] {
        const kfcs::XftReport r = kfcs::xft_report(
            sys->chain, sys->res, sys->grid, affinity_override, sys->n_xi,
            sys->workers);
        out[0] = r.affinity_expected;
        out[1] = r.slope_fitted;
        out[2] = r.slope_stderr;
        out[3] = r.gc_residual;
        out[4] = r.parity_odd_mass;
        out[5] = r.periodicity_residual;
    });
}

kfcs_status kfcs_oracle_check(kfcs_system* sys, const char* case_tag,
                              int n_samples, unsigned long long seed,
                              double* out_max_rel_err) {
    if (!sys || !case_tag || !out_max_rel_err)
        return bad_arg("null system, tag, or output");
    return guarded([&] {
        const kfcs::AnalyticCase c = kfcs::parse_case(case_tag);
        *out_max_rel_err =
            kfcs::oracle_equivalence_error(c, sys->chain, sys->res, n_samples, seed);
    });
}

kfcs_status kfcs_landauer_current(kfcs_system* sys, double* out) {
    if (!sys || !out)
        return bad_arg("null system or output");
    return guarded([&] {
        *out = kfcs::landauer_current(sys->chain, sys->res, sys->grid);
    });
}

kfcs_status kfcs_majorana_conductance(kfcs_system* sys, double beta,
                                      double* out) {
    if (!sys || !out)
        return bad_arg("null system or output");
    return guarded([&] { *out = kfcs::majorana_conductance(sys->res, beta); });
}

} // extern "C"
