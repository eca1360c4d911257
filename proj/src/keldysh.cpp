#include "kitaevfcs/keldysh.hpp"

#include <cmath>
#include <numbers>

namespace kfcs {

namespace {

using std::complex;

constexpr complex<double> kImag{0.0, 1.0};

// e^{s*i*xi} with Re(xi) folded into (-pi, pi] first, so the block is exactly
// 2*pi periodic in the real part of the counting field.
complex<double> phase_factor(complex<double> xi, double s) {
    const double arg = s * std::remainder(xi.real(), 2.0 * std::numbers::pi);
    const double mag = std::exp(-s * xi.imag());
    return std::polar(mag, arg);
}

// 2x2 contour-space block for one species: coupling gamma, occupation n,
// counting factor u. At u = 1 this reduces to [[-i*g, -2i*g*(1-2n)], [0, i*g]].
Eigen::Matrix2cd species_block(double gamma, double n, complex<double> u) {
    const complex<double> a = (1.0 - n) * u + n / u;
    const complex<double> b = 1.0 - 2.0 * n;
    const complex<double> c = (1.0 - n) * u - n / u;
    Eigen::Matrix2cd blk;
    blk << -kImag * gamma * a, -kImag * gamma * (b + c),
           -kImag * gamma * (b - c), kImag * gamma * a;
    return blk;
}

std::complex<double> log_det_lu(const Eigen::MatrixXcd& a) {
    Eigen::PartialPivLU<Eigen::MatrixXcd> lu(a);
    complex<double> acc = 0.0;
    const auto diag = lu.matrixLU().diagonal();
    for (Eigen::Index i = 0; i < diag.size(); ++i) {
        if (diag(i) == 0.0 || !std::isfinite(std::abs(diag(i))))
            throw SingularPropagator("kernel determinant vanished during LU");
        acc += std::log(diag(i));
    }
    if (lu.permutationP().determinant() < 0)
        acc += kImag * std::numbers::pi;
    return acc;
}

} // namespace

CountingMatrices counting_matrix(std::complex<double> xi) {
    const complex<double> em = std::exp(-kImag * xi / 2.0);
    const complex<double> ep = std::exp(kImag * xi / 2.0);

    Eigen::Vector4cd d, d_tilde;
    d << em, -ep, ep, -em;       // contour 1 (e, h), contour 2 (e, h)
    d_tilde << ep, -em, em, -ep; // same at -xi

    Eigen::Matrix2cd lambda1, lambda2;
    const double r = 1.0 / std::sqrt(2.0);
    lambda1 << r, r, r, -r;
    lambda2 << r, r, -r, r;

    auto promote = [](const Eigen::Matrix2cd& lam) {
        Eigen::Matrix4cd full = Eigen::Matrix4cd::Zero();
        for (int k = 0; k < 2; ++k)
            for (int kp = 0; kp < 2; ++kp)
                for (int n = 0; n < 2; ++n)
                    full(2 * k + n, 2 * kp + n) = lam(k, kp);
        return full;
    };

    const Eigen::Matrix4cd l1 = promote(lambda1);
    const Eigen::Matrix4cd l2 = promote(lambda2);

    CountingMatrices out;
    out.m = l1 * d.asDiagonal() * l1;
    out.m_dag = l2.transpose() * d_tilde.asDiagonal() * l2;
    return out;
}

Eigen::Matrix4cd lead_self_energy(Side side, std::complex<double> xi, double omega,
                                  const ReservoirSpec& res) {
    const double gamma = side == Side::left ? res.gamma_l : res.gamma_r;
    const double mu_res = side == Side::left ? res.mu_l : res.mu_r;

    const double n_e = occupation(omega, mu_res, res.beta, Species::electron);
    const double n_h = occupation(omega, mu_res, res.beta, Species::hole);

    // Electrons carry e^{-i xi}, holes the opposite phase.
    const Eigen::Matrix2cd blk_e = species_block(gamma, n_e, phase_factor(xi, -1.0));
    const Eigen::Matrix2cd blk_h = species_block(gamma, n_h, phase_factor(xi, +1.0));

    Eigen::Matrix4cd sigma = Eigen::Matrix4cd::Zero();
    for (int k = 0; k < 2; ++k) {
        for (int kp = 0; kp < 2; ++kp) {
            sigma(2 * k, 2 * kp) = blk_e(k, kp);
            sigma(2 * k + 1, 2 * kp + 1) = blk_h(k, kp);
        }
    }
    return sigma;
}

Eigen::MatrixXd promote_keldysh(const Eigen::MatrixXd& bdg) {
    const Eigen::Index two_n = bdg.rows();
    Eigen::MatrixXd full = Eigen::MatrixXd::Zero(2 * two_n, 2 * two_n);
    for (Eigen::Index s = 0; s < two_n / 2; ++s) {
        for (Eigen::Index sp = 0; sp < two_n / 2; ++sp) {
            for (int n = 0; n < 2; ++n) {
                for (int np = 0; np < 2; ++np) {
                    const double v = bdg(2 * s + n, 2 * sp + np);
                    if (v == 0.0)
                        continue;
                    for (int k = 0; k < 2; ++k)
                        full(4 * s + 2 * k + n, 4 * sp + 2 * k + np) = v;
                }
            }
        }
    }
    return full;
}

Eigen::MatrixXcd assemble_kernel(const ChainSpec& chain, const ReservoirSpec& res,
                                 const CountingField& xi, double omega) {
    chain.validate();
    res.validate();
    const int dim = 4 * chain.n_sites;

    Eigen::MatrixXcd bare = (-promote_keldysh(build_bdg_matrix(chain))).cast<complex<double>>();
    bare.diagonal().array() += omega;

    Eigen::PartialPivLU<Eigen::MatrixXcd> lu(bare);
    const auto diag = lu.matrixLU().diagonal();
    const double scale = diag.cwiseAbs().maxCoeff();
    for (Eigen::Index i = 0; i < diag.size(); ++i) {
        if (std::abs(diag(i)) < 1e-12 * std::max(scale, 1.0))
            throw SingularPropagator(
                "bare propagator singular: omega coincides with an undamped chain level");
    }

    const Eigen::Matrix4cd lead_l = lead_self_energy(Side::left, xi.xi_l, omega, res);
    const Eigen::Matrix4cd lead_r = lead_self_energy(Side::right, xi.xi_r, omega, res);

    Eigen::MatrixXcd kernel = Eigen::MatrixXcd::Identity(dim, dim);
    if (chain.n_sites == 1) {
        // Single site: both reservoirs couple to it and the blocks add.
        Eigen::MatrixXcd cols = Eigen::MatrixXcd::Zero(dim, 4);
        cols.topRows<4>() = lead_l + lead_r;
        kernel.leftCols<4>() -= lu.solve(cols);
    } else {
        Eigen::MatrixXcd cols = Eigen::MatrixXcd::Zero(dim, 8);
        cols.topLeftCorner<4, 4>() = lead_l;
        cols.bottomRightCorner<4, 4>() = lead_r;
        const Eigen::MatrixXcd solved = lu.solve(cols);
        kernel.leftCols<4>() -= solved.leftCols<4>();
        kernel.rightCols<4>() -= solved.rightCols<4>();
    }
    return kernel;
}

CfEvaluator::CfEvaluator(const ChainSpec& chain, const ReservoirSpec& res)
    : chain_(chain), res_(res) {
    chain_.validate();
    res_.validate();
    kbreve_ = promote_keldysh(build_bdg_matrix(chain_));
}

Eigen::MatrixXcd CfEvaluator::dense_kernel(const CountingField& xi, double omega) const {
    Eigen::MatrixXcd a = (-kbreve_).cast<complex<double>>();
    a.diagonal().array() += omega;
    // For a single-site chain the two corners coincide and the blocks add.
    a.topLeftCorner<4, 4>() -= lead_self_energy(Side::left, xi.xi_l, omega, res_);
    a.bottomRightCorner<4, 4>() -= lead_self_energy(Side::right, xi.xi_r, omega, res_);
    return a;
}

std::complex<double> CfEvaluator::log_det_kernel(const CountingField& xi, double omega) const {
    return log_det_lu(dense_kernel(xi, omega));
}

std::complex<double> CfEvaluator::cf(const CountingField& xi, double omega) const {
    return std::exp(log_det_kernel(xi, omega) - log_det_kernel(CountingField{}, omega));
}

} // namespace kfcs
