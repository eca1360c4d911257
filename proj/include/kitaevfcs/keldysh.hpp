#pragma once

#include <complex>

#include <Eigen/Dense>

#include "kitaevfcs/model.hpp"

namespace kfcs {

// Counting fields attached to the two reservoirs. Complex values are allowed;
// the imaginary direction is the analytic continuation used by the symmetry
// checks.
struct CountingField {
    std::complex<double> xi_l{0.0, 0.0};
    std::complex<double> xi_r{0.0, 0.0};
};

enum class Side { left, right };

// Pair of 4x4 rotation matrices (m_dag, m) that dress a lead self-energy block
// with a counting field: Sigma(xi) = m_dag * Sigma(0) * m. For real xi, m_dag
// is the conjugate transpose of m.
struct CountingMatrices {
    Eigen::Matrix4cd m_dag;
    Eigen::Matrix4cd m;
};

CountingMatrices counting_matrix(std::complex<double> xi);

// Wide-band self-energy block of one reservoir, 4x4 in the contour-major
// ordering (c1 electron, c1 hole, c2 electron, c2 hole), evaluated at
// frequency omega and dressed with the side's counting field. Exactly
// 2*pi periodic in Re(xi).
Eigen::Matrix4cd lead_self_energy(Side side, std::complex<double> xi, double omega,
                                  const ReservoirSpec& res);

// Promote the 2N x 2N BdG matrix to contour space: 4N x 4N, identity in the
// contour index, global index 4*site + 2*contour + nambu.
Eigen::MatrixXd promote_keldysh(const Eigen::MatrixXd& bdg);

// Scattering kernel I - G(omega) Sigma(xi) with the bare chain propagator
// G = (omega - K)^{-1}. The self-energy touches only the end sites, so G is
// applied to at most eight columns. Throws SingularPropagator when omega sits
// on an undamped chain level and the bare propagator cannot be inverted.
Eigen::MatrixXcd assemble_kernel(const ChainSpec& chain, const ReservoirSpec& res,
                                 const CountingField& xi, double omega);

// Evaluates the per-frequency characteristic function
//   Z(xi, omega) = det A(xi, omega) / det A(0, omega),
// where A = omega*I - K_contour - Sigma_contour. Determinants are taken
// through LU log-determinants so chain length never overflows.
class CfEvaluator {
public:
    CfEvaluator(const ChainSpec& chain, const ReservoirSpec& res);

    // Full 4N x 4N kernel A(xi, omega). Exposed for inspection and tests.
    Eigen::MatrixXcd dense_kernel(const CountingField& xi, double omega) const;

    // Principal-branch log det A(xi, omega).
    std::complex<double> log_det_kernel(const CountingField& xi, double omega) const;

    std::complex<double> cf(const CountingField& xi, double omega) const;

    const ChainSpec& chain() const { return chain_; }
    const ReservoirSpec& reservoirs() const { return res_; }

private:
    ChainSpec chain_;
    ReservoirSpec res_;
    Eigen::MatrixXd kbreve_;
};

} // namespace kfcs
