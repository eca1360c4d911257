#pragma once

#include <Eigen/Dense>

#include "kitaevfcs/errors.hpp"

namespace kfcs {

// Finite Kitaev chain: N sites, chemical potential mu, hopping eta, pairing delta.
struct ChainSpec {
    int n_sites = 3;
    double mu = 0.0;
    double eta = 1.0;
    double delta = 0.0;

    void validate() const;
};

// Two wide-band normal reservoirs attached to the end sites.
struct ReservoirSpec {
    double gamma_l = 0.3;
    double gamma_r = 0.3;
    double mu_l = 0.05;
    double mu_r = -0.05;
    double beta = 10.0;

    void validate() const;
};

enum class Species { electron, hole };

// Fermi factor for one species: electrons at (omega - mu_res), holes at (omega + mu_res).
// Stable for |beta*(omega -+ mu_res)| up to 1e4 and beyond.
double occupation(double omega, double mu_res, double beta, Species species);

struct OccupationSet {
    double n_e, n_h, nbar_e, nbar_h;
};

OccupationSet occupations(double omega, double mu_res, double beta);

// Bogoliubov-de Gennes matrix of the chain in Nambu space, 2N x 2N, real symmetric.
// Site-major, Nambu-minor ordering: row 2j is the electron and row 2j+1 the hole
// component of site j. Diagonal blocks -mu*sigma3, bond blocks -D / -D^T with
// D = eta*sigma3 + i*delta*sigma2 = [[eta, delta], [-delta, -eta]].
Eigen::MatrixXd build_bdg_matrix(const ChainSpec& chain);

} // namespace kfcs
