#include "holoqi/fock.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <vector>

#include "holoqi/errors.hpp"

namespace holoqi::fock {

namespace {
using Eigen::MatrixXcd;
using Eigen::VectorXd;
using cplx = std::complex<double>;

void require_dim(int dim) {
  if (dim < 2) throw DomainError("fock: dim must be >= 2");
}

void require_same_shape(const DensityOperator& a, const DensityOperator& b) {
  if (a.dim != b.dim || a.n_modes != b.n_modes) {
    throw DomainError("fock: operands have mismatched dim or mode count");
  }
}

void require_mode(const DensityOperator& s, int mode) {
  if (mode < 0 || mode >= s.n_modes) throw DomainError("fock: mode index out of range");
}

double hermiticity_defect(const MatrixXcd& m) {
  return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

// Exchange the two modes: out[(a i),(b j)] = in[(i a),(j b)].
MatrixXcd swap_modes(const MatrixXcd& m, int dim) {
  MatrixXcd out(m.rows(), m.cols());
  for (int i = 0; i < dim; ++i)
    for (int a = 0; a < dim; ++a)
      for (int j = 0; j < dim; ++j)
        for (int b = 0; b < dim; ++b) out(a * dim + i, b * dim + j) = m(i * dim + a, j * dim + b);
  return out;
}

// sum_k w_k (I (x) K_k) rho (I (x) K_k)^dag on the minor mode of a two-mode
// operator, or K rho K^dag directly for one mode. Weights may be empty (all 1).
MatrixXcd kraus_sum_minor_mode(const MatrixXcd& rho, const std::vector<MatrixXcd>& kraus,
                               const std::vector<double>& weights, int dim, int n_modes) {
  MatrixXcd out = MatrixXcd::Zero(rho.rows(), rho.cols());
  MatrixXcd tmp(rho.rows(), rho.cols());
  for (std::size_t k = 0; k < kraus.size(); ++k) {
    const double w = weights.empty() ? 1.0 : weights[k];
    if (n_modes == 1) {
      out.noalias() += w * (kraus[k] * rho * kraus[k].adjoint());
      continue;
    }
    const int blocks = dim;
    for (int i = 0; i < blocks; ++i) {
      tmp.middleRows(i * dim, dim).noalias() = kraus[k] * rho.middleRows(i * dim, dim);
    }
    for (int j = 0; j < blocks; ++j) {
      out.middleCols(j * dim, dim).noalias() += w * (tmp.middleCols(j * dim, dim) * kraus[k].adjoint());
    }
  }
  return out;
}

MatrixXcd kraus_sum_on_mode(const MatrixXcd& rho, const std::vector<MatrixXcd>& kraus,
                            const std::vector<double>& weights, int dim, int n_modes, int mode) {
  if (n_modes == 1 || mode == 1) {
    return kraus_sum_minor_mode(rho, kraus, weights, dim, n_modes);
  }
  // route mode 0 through a mode swap
  MatrixXcd swapped = swap_modes(rho, dim);
  MatrixXcd result = kraus_sum_minor_mode(swapped, kraus, weights, dim, n_modes);
  return swap_modes(result, dim);
}

DensityOperator renormalized(const DensityOperator& in, MatrixXcd&& matrix) {
  DensityOperator out;
  out.dim = in.dim;
  out.n_modes = in.n_modes;
  const double trace = matrix.trace().real();
  if (!(trace > 0.0)) throw ConsistencyError("fock: channel output has non-positive trace");
  out.matrix = std::move(matrix);
  out.matrix /= trace;
  out.tail_mass = in.tail_mass + (1.0 - trace);
  out.clamped_mass = in.clamped_mass;
  return out;
}
}  // namespace

int default_dim(double nbar) {
  return std::max(20, static_cast<int>(std::ceil(10.0 * (nbar + 1.0))));
}

DensityOperator vacuum_state(int dim, int n_modes) {
  require_dim(dim);
  if (n_modes != 1 && n_modes != 2) throw DomainError("fock: n_modes must be 1 or 2");
  DensityOperator s;
  s.dim = dim;
  s.n_modes = n_modes;
  s.matrix = MatrixXcd::Zero(s.size(), s.size());
  s.matrix(0, 0) = 1.0;
  return s;
}

DensityOperator number_state(int n, int dim) {
  require_dim(dim);
  if (n < 0 || n >= dim) throw DomainError("fock: number state index out of range");
  DensityOperator s = vacuum_state(dim, 1);
  s.matrix(0, 0) = 0.0;
  s.matrix(n, n) = 1.0;
  return s;
}

DensityOperator thermal_state(double nbar, int dim) {
  require_dim(dim);
  if (!(nbar >= 0.0)) throw DomainError("fock: nbar must be >= 0");
  DensityOperator s = vacuum_state(dim, 1);
  VectorXd p(dim);
  for (int n = 0; n < dim; ++n) {
    p[n] = std::exp(n * std::log(nbar + 1e-300) - (n + 1) * std::log1p(nbar));
  }
  if (nbar == 0.0) {
    p.setZero();
    p[0] = 1.0;
  }
  const double kept = p.sum();
  s.matrix.setZero();
  s.matrix.diagonal() = (p / kept).cast<cplx>();
  s.tail_mass = 1.0 - kept;
  return s;
}

DensityOperator tmsv_state(double mu, int dim) {
  require_dim(dim);
  if (!(mu >= 0.5)) throw DomainError("tmsv_state: mu must be >= 1/2");
  DensityOperator s;
  s.dim = dim;
  s.n_modes = 2;
  const double lambda2 = (mu - 0.5) / (mu + 0.5);
  const double lambda = std::sqrt(lambda2);
  Eigen::VectorXcd psi = Eigen::VectorXcd::Zero(dim * dim);
  double coeff = std::sqrt(1.0 - lambda2);
  for (int n = 0; n < dim; ++n) {
    psi[n * dim + n] = coeff;
    coeff *= lambda;
  }
  const double kept = psi.squaredNorm();
  psi /= std::sqrt(kept);
  s.matrix = psi * psi.adjoint();
  s.tail_mass = 1.0 - kept;  // = lambda^(2 dim)
  return s;
}

Eigen::MatrixXcd displacement_operator(std::complex<double> alpha, int dim) {
  require_dim(dim);
  if (alpha == cplx(0.0, 0.0)) return MatrixXcd::Identity(dim, dim);
  const double mag = std::abs(alpha);
  const cplx phase_up = alpha / mag;
  const cplx phase_dn = -std::conj(alpha) / mag;
  MatrixXcd raise = MatrixXcd::Zero(dim, dim);  // e^{alpha adag}
  MatrixXcd lower = MatrixXcd::Zero(dim, dim);  // e^{-conj(alpha) a}
  for (int m = 0; m < dim; ++m) {
    for (int n = 0; n <= m; ++n) {
      const int k = m - n;
      const double ln_mag = k * std::log(mag) +
                            0.5 * (std::lgamma(m + 1.0) - std::lgamma(n + 1.0)) -
                            std::lgamma(k + 1.0);
      const double entry = std::exp(ln_mag);
      raise(m, n) = entry * std::pow(phase_up, k);
      lower(n, m) = entry * std::pow(phase_dn, k);
    }
  }
  return std::exp(-0.5 * mag * mag) * (raise * lower);
}

DensityOperator apply_pure_loss(const DensityOperator& state, double eta, int mode) {
  if (!(eta > 0.0 && eta <= 1.0)) throw DomainError("apply_pure_loss: eta must be in (0, 1]");
  require_mode(state, mode);
  if (eta == 1.0) return state;
  const int dim = state.dim;
  std::vector<MatrixXcd> kraus(dim);
  const double ln_eta = std::log(eta);
  const double ln_omega = std::log1p(-eta);
  for (int l = 0; l < dim; ++l) {
    kraus[l] = MatrixXcd::Zero(dim, dim);
    for (int n = l; n < dim; ++n) {
      const double ln_c = 0.5 * (std::lgamma(n + 1.0) - std::lgamma(l + 1.0) -
                                 std::lgamma(n - l + 1.0) + (n - l) * ln_eta + l * ln_omega);
      kraus[l](n - l, n) = std::exp(ln_c);
    }
  }
  MatrixXcd out = kraus_sum_on_mode(state.matrix, kraus, {}, dim, state.n_modes, mode);
  return renormalized(state, std::move(out));
}

GaussQuadrature gauss_hermite_probabilists(int order) {
  if (order < 1) throw DomainError("gauss_hermite: order must be >= 1");
  // Golub-Welsch on the Hermite Jacobi matrix, then rescale nodes by sqrt(2)
  // so the weight is the standard normal density.
  Eigen::MatrixXd jacobi = Eigen::MatrixXd::Zero(order, order);
  for (int k = 1; k < order; ++k) {
    const double b = std::sqrt(k / 2.0);
    jacobi(k, k - 1) = b;
    jacobi(k - 1, k) = b;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(jacobi);
  GaussQuadrature q;
  q.nodes = std::sqrt(2.0) * solver.eigenvalues();
  q.weights.resize(order);
  for (int k = 0; k < order; ++k) {
    const double v0 = solver.eigenvectors()(0, k);
    q.weights[k] = v0 * v0;
  }
  return q;
}

DensityOperator apply_additive_noise(const DensityOperator& state, double xi, int mode,
                                     int quad_order) {
  if (!(xi > 0.0)) throw DomainError("apply_additive_noise: xi must be positive");
  if (quad_order < 10) throw DomainError("apply_additive_noise: quad_order must be >= 10");
  require_mode(state, mode);
  const int dim = state.dim;
  const GaussQuadrature q = gauss_hermite_probabilists(quad_order);
  const double sigma = std::sqrt(xi);

  // x displacements: alpha = dx / sqrt(2) with dx ~ N(0, xi)
  std::vector<MatrixXcd> kraus(quad_order);
  std::vector<double> weights(quad_order);
  for (int k = 0; k < quad_order; ++k) {
    kraus[k] = displacement_operator(cplx(sigma * q.nodes[k] / std::sqrt(2.0), 0.0), dim);
    weights[k] = q.weights[k];
  }
  MatrixXcd stage1 = kraus_sum_on_mode(state.matrix, kraus, weights, dim, state.n_modes, mode);

  // p displacements: alpha = i dp / sqrt(2)
  for (int k = 0; k < quad_order; ++k) {
    kraus[k] = displacement_operator(cplx(0.0, sigma * q.nodes[k] / std::sqrt(2.0)), dim);
  }
  MatrixXcd stage2 = kraus_sum_on_mode(stage1, kraus, weights, dim, state.n_modes, mode);

  const double trace_error = std::abs(1.0 - stage2.trace().real());
  if (trace_error > 1e-6) {
    throw TruncationError("apply_additive_noise: trace error " + std::to_string(trace_error) +
                              " exceeds 1e-6; increase dim",
                          dim + (dim + 1) / 2);
  }
  return renormalized(state, std::move(stage2));
}

namespace {
// Eigendecomposition with negatives clamped to zero; adds clamped weight.
void clamped_spectrum(const MatrixXcd& m, Eigen::VectorXd& evals, MatrixXcd& evecs,
                      double& clamped) {
  Eigen::SelfAdjointEigenSolver<MatrixXcd> solver((m + m.adjoint()) / 2.0);
  evals = solver.eigenvalues();
  evecs = solver.eigenvectors();
  clamped = 0.0;
  for (int i = 0; i < evals.size(); ++i) {
    if (evals[i] < 0.0) {
      clamped += -evals[i];
      evals[i] = 0.0;
    }
  }
}
}  // namespace

double uhlmann_fidelity(const DensityOperator& rho, const DensityOperator& sigma) {
  require_same_shape(rho, sigma);
  Eigen::VectorXd evals;
  MatrixXcd evecs;
  double clamped = 0.0;
  clamped_spectrum(rho.matrix, evals, evecs, clamped);
  const MatrixXcd sqrt_rho =
      evecs * evals.cwiseSqrt().asDiagonal() * evecs.adjoint();
  const MatrixXcd inner = sqrt_rho * sigma.matrix * sqrt_rho;
  Eigen::VectorXd inner_evals;
  MatrixXcd inner_evecs;
  clamped_spectrum(inner, inner_evals, inner_evecs, clamped);
  return inner_evals.cwiseSqrt().sum();
}

double trace_distance(const DensityOperator& rho, const DensityOperator& sigma) {
  require_same_shape(rho, sigma);
  const MatrixXcd diff = (rho.matrix - sigma.matrix);
  Eigen::SelfAdjointEigenSolver<MatrixXcd> solver((diff + diff.adjoint()) / 2.0,
                                                  Eigen::EigenvaluesOnly);
  return solver.eigenvalues().cwiseAbs().sum();
}

double chernoff_pure(const DensityOperator& phi, const DensityOperator& sigma) {
  require_same_shape(phi, sigma);
  Eigen::SelfAdjointEigenSolver<MatrixXcd> solver((phi.matrix + phi.matrix.adjoint()) / 2.0);
  const int top = static_cast<int>(solver.eigenvalues().size()) - 1;
  if (solver.eigenvalues()[top] < 1.0 - 1e-8) {
    throw DomainError("chernoff_pure: phi is not pure");
  }
  const Eigen::VectorXcd vec = solver.eigenvectors().col(top);
  return (vec.adjoint() * sigma.matrix * vec)(0, 0).real();
}

DensityOperator partial_trace(const DensityOperator& state, int keep_mode) {
  if (state.n_modes != 2) throw DomainError("partial_trace: state must have 2 modes");
  require_mode(state, keep_mode);
  const int dim = state.dim;
  DensityOperator out;
  out.dim = dim;
  out.n_modes = 1;
  out.tail_mass = state.tail_mass;
  out.clamped_mass = state.clamped_mass;
  out.matrix = MatrixXcd::Zero(dim, dim);
  for (int a = 0; a < dim; ++a) {
    for (int b = 0; b < dim; ++b) {
      cplx sum = 0.0;
      for (int t = 0; t < dim; ++t) {
        sum += keep_mode == 0 ? state.matrix(a * dim + t, b * dim + t)
                              : state.matrix(t * dim + a, t * dim + b);
      }
      out.matrix(a, b) = sum;
    }
  }
  return out;
}

DensityOperator clamp_spectrum(const DensityOperator& state) {
  Eigen::VectorXd evals;
  MatrixXcd evecs;
  Eigen::SelfAdjointEigenSolver<MatrixXcd> solver((state.matrix + state.matrix.adjoint()) / 2.0);
  evals = solver.eigenvalues();
  evecs = solver.eigenvectors();
  double clamped = 0.0;
  for (int i = 0; i < evals.size(); ++i) {
    if (evals[i] < -1e-9) {
      throw ConsistencyError("clamp_spectrum: eigenvalue below -1e-9, state is not repairable");
    }
    if (evals[i] < 0.0) {
      clamped += -evals[i];
      evals[i] = 0.0;
    }
  }
  DensityOperator out = state;
  out.matrix = evecs * evals.asDiagonal() * evecs.adjoint();
  out.matrix /= out.matrix.trace().real();
  out.clamped_mass = state.clamped_mass + clamped;
  return out;
}

void validate(const DensityOperator& state) {
  if (state.dim < 2 || (state.n_modes != 1 && state.n_modes != 2) ||
      state.matrix.rows() != state.size() || state.matrix.cols() != state.size()) {
    throw ConsistencyError("DensityOperator: inconsistent shape");
  }
  if (hermiticity_defect(state.matrix) > 1e-10) {
    throw ConsistencyError("DensityOperator: not Hermitian within 1e-10");
  }
  if (std::abs(state.matrix.trace().real() - 1.0) > 1e-8) {
    throw ConsistencyError("DensityOperator: trace deviates from 1 beyond 1e-8");
  }
  Eigen::SelfAdjointEigenSolver<MatrixXcd> solver(state.matrix, Eigen::EigenvaluesOnly);
  if (solver.eigenvalues().minCoeff() < -1e-9) {
    throw ConsistencyError("DensityOperator: eigenvalue below -1e-9");
  }
  if (state.clamped_mass > 1e-6) {
    throw ConsistencyError("DensityOperator: clamped spectral mass exceeds 1e-6");
  }
}

}  // namespace holoqi::fock
