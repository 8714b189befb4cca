#pragma once

#include <optional>
#include <string>

namespace holoqi::plob {

/// Parameters of an (N, R, eps)-protocol for entanglement distribution over a
/// pure-loss channel, with both labs inside radius R_p Planck lengths.
struct ProtocolParams {
  int n_uses = 1;              ///< N >= 1
  double epsilon = 0.0;        ///< in [0, 1)
  double eta = 0.5;            ///< in (0, 1)
  double radius_planck = 1.0;  ///< > 0
};

void validate(const ProtocolParams& params);

/// All rate bounds for one parameter set, with per-field validity capture:
/// rate_general is empty when its regime check failed, and
/// rate_general_error carries the error code ("fannes_regime"/"vacuous_bound").
struct RateBoundReport {
  double rate_spherical_cap;            ///< pi R_p^2 / (N ln2)
  std::optional<double> rate_general;   ///< Fannes-chain bound at er = plob_classic
  std::string rate_general_error;       ///< empty when rate_general is set
  double rate_modified_plob;
  double plob_classic;                  ///< -log2(1 - eta)
  double eps_tilde;
  double xi_min;                        ///< may underflow to 0 at large radius
  double ln_xi_min;                     ///< always finite
  bool asymptotic_branch;
  static constexpr bool er_leading_order = true;  ///< O(1/mu) term of E_R dropped
};

/// Binary Shannon entropy in bits; endpoints map to 0.
double binary_entropy(double p);

/// Two-way assisted capacity of the pure-loss channel: -log2(1 - eta).
double plob_capacity(double eta);

/// Spherical-bound cap on the rate, pi R_p^2 / (N ln2).
double rate_cap_spherical(const ProtocolParams& params);

/// eps + N * delta(eta, xi_min(R_p)): the trace-distance budget after
/// replacing N channel uses with their best finite-mu simulation.
double eps_tilde_min(const ProtocolParams& params);

/// General rate bound [er_choi + 2 H2(eps_tilde)/N] / (1 - 8 eps_tilde) at
/// eps_tilde = eps_tilde_min(params). Throws FannesRegimeError when
/// eps_tilde > 1/2 and VacuousBoundError when 1 - 8 eps_tilde <= 0.
double rate_bound_general(const ProtocolParams& params, double er_choi);

/// Radius-corrected PLOB bound
/// (1 + 8 eps + 8 N sqrt(eta/(1-eta)) e^{-(pi/2) R_p^2}) * (-log2(1-eta));
/// the exponential term is assembled in log domain so huge R_p underflows
/// cleanly to the classic bound.
double modified_plob(const ProtocolParams& params);

RateBoundReport build_report(const ProtocolParams& params);

}  // namespace holoqi::plob
