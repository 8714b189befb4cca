#include "holoqi/gaussian.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>

#include "holoqi/errors.hpp"

namespace holoqi::cv {

GaussianState GaussianState::vacuum(int n_modes) {
  if (n_modes != 1 && n_modes != 2) throw DomainError("GaussianState: n_modes must be 1 or 2");
  GaussianState s;
  s.n_modes = n_modes;
  s.mean = Eigen::VectorXd::Zero(2 * n_modes);
  s.cov = 0.5 * Eigen::MatrixXd::Identity(2 * n_modes, 2 * n_modes);
  return s;
}

GaussianState GaussianState::thermal(double variance) {
  if (!(variance >= 0.5)) throw DomainError("thermal: variance must be >= 1/2");
  GaussianState s = vacuum(1);
  s.cov = variance * Eigen::MatrixXd::Identity(2, 2);
  return s;
}

GaussianState GaussianState::tmsv(double mu) {
  if (!(mu >= 0.5)) throw DomainError("tmsv: mu must be >= 1/2");
  GaussianState s = vacuum(2);
  const double c = std::sqrt(mu * mu - 0.25);
  s.cov.setZero();
  s.cov.diagonal() << mu, mu, mu, mu;
  s.cov(0, 2) = s.cov(2, 0) = c;
  s.cov(1, 3) = s.cov(3, 1) = -c;
  return s;
}

namespace {
Eigen::MatrixXd symplectic_form(int n_modes) {
  Eigen::MatrixXd omega = Eigen::MatrixXd::Zero(2 * n_modes, 2 * n_modes);
  for (int k = 0; k < n_modes; ++k) {
    omega(2 * k, 2 * k + 1) = 1.0;
    omega(2 * k + 1, 2 * k) = -1.0;
  }
  return omega;
}
}  // namespace

std::vector<double> symplectic_eigenvalues(const Eigen::MatrixXd& cov) {
  const int n_modes = static_cast<int>(cov.rows()) / 2;
  const Eigen::MatrixXd m = symplectic_form(n_modes) * cov;
  Eigen::EigenSolver<Eigen::MatrixXd> solver(m, /*computeEigenvectors=*/false);
  std::vector<double> moduli(m.rows());
  for (int i = 0; i < m.rows(); ++i) moduli[i] = std::abs(solver.eigenvalues()[i]);
  std::sort(moduli.begin(), moduli.end());
  // eigenvalues of Omega*V come in +-i nu pairs; keep one per pair
  std::vector<double> nus(n_modes);
  for (int k = 0; k < n_modes; ++k) nus[k] = 0.5 * (moduli[2 * k] + moduli[2 * k + 1]);
  return nus;
}

void validate(const GaussianState& state) {
  if (state.n_modes != 1 && state.n_modes != 2) {
    throw DomainError("GaussianState: n_modes must be 1 or 2");
  }
  if (state.mean.size() != 2 * state.n_modes || state.cov.rows() != 2 * state.n_modes ||
      state.cov.cols() != 2 * state.n_modes) {
    throw DomainError("GaussianState: mean/cov dimensions do not match n_modes");
  }
  if ((state.cov - state.cov.transpose()).cwiseAbs().maxCoeff() > 1e-12) {
    throw DomainError("GaussianState: covariance not symmetric");
  }
  for (double nu : symplectic_eigenvalues(state.cov)) {
    if (nu < 0.5 - 1e-9) {
      throw DomainError("GaussianState: symplectic eigenvalue below vacuum (not bona fide)");
    }
  }
}

}  // namespace holoqi::cv
