#pragma once

#include <Eigen/Dense>
#include <vector>

namespace holoqi::cv {

/// Gaussian state of 1 or 2 bosonic modes, hbar = 1 convention with vacuum
/// quadrature variance 1/2. Quadratures ordered (x1, p1, x2, p2).
struct GaussianState {
  int n_modes = 1;
  Eigen::VectorXd mean;  ///< length 2*n_modes
  Eigen::MatrixXd cov;   ///< 2n x 2n, symmetric, bona fide

  static GaussianState vacuum(int n_modes);
  /// Single-mode thermal state with quadrature variance `variance` (= nbar + 1/2).
  static GaussianState thermal(double variance);
  /// Two-mode squeezed vacuum with quadrature variance mu >= 1/2.
  static GaussianState tmsv(double mu);
};

/// Symplectic spectrum of the covariance matrix (moduli of eig(i Omega V)),
/// one value per mode, ascending. A bona fide state has all values >= 1/2.
std::vector<double> symplectic_eigenvalues(const Eigen::MatrixXd& cov);

/// Throws DomainError if cov is asymmetric beyond 1e-12 or any symplectic
/// eigenvalue is below 1/2 - 1e-9.
void validate(const GaussianState& state);

}  // namespace holoqi::cv
