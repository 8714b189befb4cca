#pragma once

#include <Eigen/Dense>
#include <complex>

namespace holoqi::fock {

/// Density operator in a truncated Fock basis, dim levels per mode. Two-mode
/// indices are mode-0 major: |n0 n1> sits at row n0*dim + n1. Truncation
/// losses are never hidden: tail_mass accumulates the trace shed by channel
/// action (and state preparation), clamped_mass the negative spectral weight
/// clamped to zero.
struct DensityOperator {
  int dim = 0;
  int n_modes = 1;
  Eigen::MatrixXcd matrix;
  double tail_mass = 0.0;
  double clamped_mass = 0.0;

  int size() const { return n_modes == 2 ? dim * dim : dim; }
};

/// max(20, ceil(10*(nbar+1))): default truncation for states with mean photon
/// number nbar per mode.
int default_dim(double nbar);

DensityOperator vacuum_state(int dim, int n_modes = 1);
DensityOperator number_state(int n, int dim);
/// Diagonal thermal state p_n = nbar^n / (1+nbar)^{n+1}, renormalized within
/// the truncation with the tail recorded.
DensityOperator thermal_state(double nbar, int dim);
/// Two-mode squeezed vacuum with quadrature variance mu >= 1/2; Schmidt
/// coefficients ~ lambda^n with lambda^2 = (mu-1/2)/(mu+1/2).
DensityOperator tmsv_state(double mu, int dim);

/// Truncated displacement operator e^{-|a|^2/2} e^{alpha adag} e^{-conj(alpha) a}.
/// The lowering factor is exact in the truncated space; raising leakage above
/// the top level is the truncation error surfaced by trace checks.
Eigen::MatrixXcd displacement_operator(std::complex<double> alpha, int dim);

/// Beam splitter with transmissivity eta against a vacuum environment,
/// realized as the photon-loss Kraus sum (trace preserving within truncation).
DensityOperator apply_pure_loss(const DensityOperator& state, double eta, int mode = 0);

/// Additive Gaussian noise of variance xi per quadrature, realized as two
/// 1-D Gauss-Hermite averages over x and p displacements. Throws
/// TruncationError when more than 1e-6 of the trace leaks out.
DensityOperator apply_additive_noise(const DensityOperator& state, double xi, int mode = 0,
                                     int quad_order = 20);

/// ||sqrt(rho) sqrt(sigma)||_1 via spectral decomposition.
double uhlmann_fidelity(const DensityOperator& rho, const DensityOperator& sigma);

/// ||rho - sigma||_1, in [0, 2].
double trace_distance(const DensityOperator& rho, const DensityOperator& sigma);

/// Chernoff quantity for pure phi: <phi|sigma|phi>. Throws DomainError when
/// phi's largest eigenvalue is below 1 - 1e-8.
double chernoff_pure(const DensityOperator& phi, const DensityOperator& sigma);

/// Reduce a two-mode operator to `keep_mode`.
DensityOperator partial_trace(const DensityOperator& state, int keep_mode);

/// Clamp spectral noise in [-1e-9, 0) to zero, renormalize, and record the
/// removed weight in clamped_mass. Eigenvalues below -1e-9 throw.
DensityOperator clamp_spectrum(const DensityOperator& state);

/// Re-checks the type invariants: hermiticity to 1e-10, spectrum >= -1e-9,
/// trace within 1e-8 of 1, clamped_mass <= 1e-6. Throws ConsistencyError.
void validate(const DensityOperator& state);

/// Nodes/weights for averaging f against a standard normal:
/// E[f] ~ sum_k weight_k f(node_k * sigma). Weights sum to 1.
struct GaussQuadrature {
  Eigen::VectorXd nodes;    ///< scaled for unit variance: sqrt(2) * Hermite nodes
  Eigen::VectorXd weights;
};
GaussQuadrature gauss_hermite_probabilists(int order);

}  // namespace holoqi::fock
