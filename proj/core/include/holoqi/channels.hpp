#pragma once

#include <optional>

#include "holoqi/gaussian.hpp"

namespace holoqi::channel {

enum class ChannelKind { pure_loss, additive_noise, composed };

/// Tagged Gaussian-channel description. `composed` is loss after noise,
/// i.e. the teleportation-simulated loss channel E_eta o I^xi.
struct ChannelSpec {
  ChannelKind kind;
  std::optional<double> eta;  ///< transmissivity, (0, 1]
  std::optional<double> xi;   ///< added noise per quadrature, > 0

  static ChannelSpec pure_loss(double eta);
  static ChannelSpec additive_noise(double xi);
  static ChannelSpec composed(double eta, double xi);
};

/// Closed-form diamond-distance bracket between E_eta and its finite-mu
/// simulation. Linear fields may underflow to 0 at large radius; the ln
/// fields stay finite.
struct DiamondBounds {
  double lower;             ///< 2 eta xi / (1 + eta xi), in [0, 2]
  double upper;             ///< 2 sqrt(eta xi / (eta xi + 1 - eta)), in [0, 2]
  double xi_used;
  bool asymptotic_branch;   ///< true when mu_max(R_p) was log-domain only
  double ln_lower;
  double ln_upper;
  double ln_xi_used;
};

/// Apply the channel to one mode of a Gaussian state. Loss: block variance
/// eta V + (1-eta)/2, means scaled by sqrt(eta). Noise: block variance V + xi,
/// means unchanged.
cv::GaussianState covariance_out(const ChannelSpec& channel, const cv::GaussianState& state,
                                 int mode = 0);

/// <0| (E_eta o I^xi)(|0><0|) |0> = 1/(1 + eta xi).
double vacuum_output_fidelity(double eta, double xi);

/// Chernoff-chain lower bound 2 eta xi / (1 + eta xi); finite at eta = 1.
double diamond_lower_bound(double eta, double xi);

/// Upper bound 2 sqrt(eta xi / (eta xi + 1 - eta)); diverges structurally at
/// eta = 1 (domain error). For small xi it behaves as sqrt(eta/((1-eta) mu)).
double diamond_upper_bound(double eta, double xi);

/// Both bounds at the smallest noise a radius admits, xi_min(R_p) evaluated at
/// mu_max(R_p). Once pi R_p^2 exceeds the linear range the leading-order forms
/// are used: xi_min ~ (1/4) e^{1 - pi R_p^2}, lower ~ 2 eta xi_min,
/// upper ~ 2 sqrt(eta xi_min / (1 - eta)).
DiamondBounds diamond_bounds_at_radius(double eta, double radius_planck);

}  // namespace holoqi::channel
