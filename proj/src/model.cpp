#include "kitaevfcs/model.hpp"

#include <cmath>
#include <string>

namespace kfcs {

void ChainSpec::validate() const {
    if (n_sites < 1)
        throw ConfigError("n_sites must be >= 1, got " + std::to_string(n_sites));
    if (!std::isfinite(mu) || !std::isfinite(eta) || !std::isfinite(delta))
        throw ConfigError("chain parameters must be finite");
}

void ReservoirSpec::validate() const {
    if (gamma_l < 0.0 || gamma_r < 0.0)
        throw ConfigError("reservoir couplings must be non-negative");
    if (!(beta > 0.0) || !std::isfinite(beta))
        throw ConfigError("beta must be positive and finite");
    if (!std::isfinite(mu_l) || !std::isfinite(mu_r) ||
        !std::isfinite(gamma_l) || !std::isfinite(gamma_r))
        throw ConfigError("reservoir parameters must be finite");
}

double occupation(double omega, double mu_res, double beta, Species species) {
    // Electrons see omega - mu_res, holes omega + mu_res.
    const double x = beta * (species == Species::electron ? omega - mu_res
                                                          : omega + mu_res);
    // Branch-stable logistic: never exponentiates a large positive argument.
    if (x >= 0.0) {
        const double e = std::exp(-x);
        return e / (1.0 + e);
    }
    return 1.0 / (1.0 + std::exp(x));
}

OccupationSet occupations(double omega, double mu_res, double beta) {
    const double n_e = occupation(omega, mu_res, beta, Species::electron);
    const double n_h = occupation(omega, mu_res, beta, Species::hole);
    return {n_e, n_h, 1.0 - n_e, 1.0 - n_h};
}

Eigen::MatrixXd build_bdg_matrix(const ChainSpec& chain) {
    chain.validate();
    const int n = chain.n_sites;
    Eigen::MatrixXd k = Eigen::MatrixXd::Zero(2 * n, 2 * n);

    for (int j = 0; j < n; ++j) {
        k(2 * j, 2 * j) = -chain.mu;
        k(2 * j + 1, 2 * j + 1) = chain.mu;
    }
    // Bond block D = [[eta, delta], [-delta, -eta]]; upper bond carries -D,
    // lower bond -D^T, keeping the matrix symmetric.
    for (int j = 0; j + 1 < n; ++j) {
        const int a = 2 * j, b = 2 * (j + 1);
        k(a, b) = -chain.eta;
        k(a, b + 1) = -chain.delta;
        k(a + 1, b) = chain.delta;
        k(a + 1, b + 1) = chain.eta;
        k(b, a) = -chain.eta;
        k(b, a + 1) = chain.delta;
        k(b + 1, a) = -chain.delta;
        k(b + 1, a + 1) = chain.eta;
    }
    return k;
}

} // namespace kfcs
