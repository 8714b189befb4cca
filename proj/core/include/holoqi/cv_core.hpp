#pragma once

#include "holoqi/log_scalar.hpp"

namespace holoqi::cv {

/// Entropy ceiling for a lab of radius R_p Planck lengths: the largest mean
/// photon number and TMSV variance its spherical entropy bound admits.
/// nbar_max = e^{pi R_p^2 - 1}, mu_max = nbar_max + 1/2. Both are log-domain;
/// the linear values overflow for pi R_p^2 > ~709.
struct CvCeiling {
  double radius_planck;
  LogScalar nbar_max;
  LogScalar mu_max;
};

/// Fidelity of teleporting a TMSV(mu_tilde) with a finite-mu resource, plus a
/// log-domain 1-F so "strictly below 1" survives rounding at large radius.
struct FidelityResult {
  double fidelity;                ///< rounds to 1.0 once 1-F < ~1e-17
  double ln_one_minus_fidelity;   ///< always finite; > -inf iff F < 1
  bool asymptotic_branch;         ///< true when mu_max was log-domain only
};

/// Beyond this value of pi*R_p^2, mu_max is handled in log domain only.
inline constexpr double kLinearMuMaxLnLimit = 690.0;

/// Thermal-state entropy h(nbar) = (nbar+1)log2(nbar+1) - nbar log2 nbar, in bits.
double thermal_entropy_bits(double nbar);

/// nbar_max(R_p) = e^{pi R_p^2 - 1}; ln field is exactly pi*R_p^2 - 1.
LogScalar max_mean_photons(double radius_planck);

/// mu_max(R_p) = e^{pi R_p^2 - 1} + 1/2 via stable log-sum.
LogScalar mu_max(double radius_planck);

CvCeiling cv_ceiling(double radius_planck);

/// Added noise of CV teleportation with a TMSV(mu) resource:
/// xi = 2mu - sqrt(4mu^2-1), evaluated as 1/(2mu + sqrt(4mu^2-1)) so no
/// cancellation occurs at large mu. Range (0, 1], decreasing in mu.
double added_noise(double mu);

/// Teleportation fidelity F(mu, mu_tilde) for input TMSV(mu_tilde) and
/// resource TMSV(mu). The closed-form bracket
///   1 - 4 mu_tilde [sqrt(4mu^2-1) + mu_tilde - 2mu(1 + 2 mu_tilde xi)]
/// reduces, via xi^2 = 4 mu xi - 1, to (1 + 2 mu_tilde xi)^2, which is the
/// cancellation-free form used here; at mu_tilde = 1/2 the equivalent
/// 2 xi (1 + 2 mu) identity is used. F = bracket^{-1/4}.
double tele_fidelity(double mu, double mu_tilde);

/// F(mu_max(R_p), mu_tilde); strictly below 1 at any finite radius, which the
/// ln(1-F) field witnesses even when the double fidelity rounds to 1.
FidelityResult max_fidelity_at_radius(double radius_planck, double mu_tilde);

}  // namespace holoqi::cv
