#include "holoqi/cv_core.hpp"

#include <cmath>
#include <numbers>

#include "holoqi/errors.hpp"

namespace holoqi::cv {

namespace {
constexpr double kPi = std::numbers::pi;
}

double thermal_entropy_bits(double nbar) {
  if (!(nbar >= 0.0)) throw DomainError("thermal_entropy_bits: nbar must be >= 0");
  if (nbar == 0.0) return 0.0;
  return (nbar + 1.0) * std::log2(nbar + 1.0) - nbar * std::log2(nbar);
}

LogScalar max_mean_photons(double radius_planck) {
  if (!(radius_planck > 0.0)) throw DomainError("max_mean_photons: radius must be positive");
  return LogScalar::from_ln(kPi * radius_planck * radius_planck - 1.0);
}

LogScalar mu_max(double radius_planck) {
  return max_mean_photons(radius_planck) + LogScalar::from_linear(0.5);
}

CvCeiling cv_ceiling(double radius_planck) {
  return CvCeiling{
      .radius_planck = radius_planck,
      .nbar_max = max_mean_photons(radius_planck),
      .mu_max = mu_max(radius_planck),
  };
}

double added_noise(double mu) {
  if (!(mu >= 0.5)) throw DomainError("added_noise: mu must be >= 1/2");
  return 1.0 / (2.0 * mu + std::sqrt(4.0 * mu * mu - 1.0));
}

namespace {
// bracket of the fidelity closed form; >= 1 for all valid (mu, mu_tilde)
double fidelity_bracket(double mu, double mu_tilde) {
  const double xi = added_noise(mu);
  if (std::abs(mu_tilde - 0.5) < 1e-12) {
    return 2.0 * xi * (1.0 + 2.0 * mu);
  }
  const double t = 2.0 * mu_tilde * xi;
  return (1.0 + t) * (1.0 + t);
}
}  // namespace

double tele_fidelity(double mu, double mu_tilde) {
  if (!(mu >= 0.5)) throw DomainError("tele_fidelity: mu must be >= 1/2");
  if (!(mu_tilde >= 0.5)) throw DomainError("tele_fidelity: mu_tilde must be >= 1/2");
  const double bracket = fidelity_bracket(mu, mu_tilde);
  if (!(bracket >= 1.0 - 1e-12)) {
    throw ConsistencyError("tele_fidelity: bracket fell below 1, numeric fault");
  }
  return std::pow(bracket, -0.25);
}

FidelityResult max_fidelity_at_radius(double radius_planck, double mu_tilde) {
  if (!(mu_tilde >= 0.5)) throw DomainError("max_fidelity_at_radius: mu_tilde must be >= 1/2");
  const LogScalar mu = cv::mu_max(radius_planck);
  if (mu.ln() <= kLinearMuMaxLnLimit) {
    const double mu_lin = mu.linear();
    const double t = 2.0 * mu_tilde * added_noise(mu_lin);
    // 1 - F = -expm1(-log1p(t)/2), accurate down to t ~ 1e-300
    const double one_minus_f = -std::expm1(-0.5 * std::log1p(t));
    return FidelityResult{
        .fidelity = tele_fidelity(mu_lin, mu_tilde),
        .ln_one_minus_fidelity = std::log(one_minus_f),
        .asymptotic_branch = false,
    };
  }
  // xi_min ~ 1/(4 mu_max), 1 - F ~ mu_tilde * xi_min
  const double ln_xi = -(std::log(4.0) + mu.ln());
  return FidelityResult{
      .fidelity = 1.0,
      .ln_one_minus_fidelity = std::log(mu_tilde) + ln_xi,
      .asymptotic_branch = true,
  };
}

}  // namespace holoqi::cv
