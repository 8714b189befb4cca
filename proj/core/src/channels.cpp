#include "holoqi/channels.hpp"

#include <cmath>
#include <numbers>

#include "holoqi/cv_core.hpp"
#include "holoqi/errors.hpp"

namespace holoqi::channel {

namespace {
constexpr double kPi = std::numbers::pi;

void require_eta_open(double eta) {
  if (!(eta > 0.0 && eta < 1.0)) throw DomainError("eta must be in (0, 1)");
}

void require_eta_closed(double eta) {
  if (!(eta > 0.0 && eta <= 1.0)) throw DomainError("eta must be in (0, 1]");
}

void require_xi(double xi) {
  if (!(xi > 0.0)) throw DomainError("xi must be positive");
}
}  // namespace

ChannelSpec ChannelSpec::pure_loss(double eta) {
  require_eta_closed(eta);
  return ChannelSpec{ChannelKind::pure_loss, eta, std::nullopt};
}

ChannelSpec ChannelSpec::additive_noise(double xi) {
  require_xi(xi);
  return ChannelSpec{ChannelKind::additive_noise, std::nullopt, xi};
}

ChannelSpec ChannelSpec::composed(double eta, double xi) {
  require_eta_closed(eta);
  require_xi(xi);
  return ChannelSpec{ChannelKind::composed, eta, xi};
}

namespace {
void loss_on_mode(cv::GaussianState& s, double eta, int mode) {
  const int b = 2 * mode;
  const double root_eta = std::sqrt(eta);
  // cross blocks scale by sqrt(eta), diagonal block by eta plus vacuum refill
  s.cov.block(b, 0, 2, s.cov.cols()) *= root_eta;
  s.cov.block(0, b, s.cov.rows(), 2) *= root_eta;
  s.cov.block(b, b, 2, 2).diagonal().array() += (1.0 - eta) * 0.5;
  s.mean.segment(b, 2) *= root_eta;
}

void noise_on_mode(cv::GaussianState& s, double xi, int mode) {
  const int b = 2 * mode;
  s.cov.block(b, b, 2, 2).diagonal().array() += xi;
}
}  // namespace

cv::GaussianState covariance_out(const ChannelSpec& channel, const cv::GaussianState& state,
                                 int mode) {
  cv::validate(state);
  if (mode < 0 || mode >= state.n_modes) {
    throw DomainError("covariance_out: mode index out of range for this state");
  }
  cv::GaussianState out = state;
  switch (channel.kind) {
    case ChannelKind::pure_loss:
      if (!channel.eta) throw DomainError("pure_loss channel missing eta");
      loss_on_mode(out, *channel.eta, mode);
      break;
    case ChannelKind::additive_noise:
      if (!channel.xi) throw DomainError("additive_noise channel missing xi");
      noise_on_mode(out, *channel.xi, mode);
      break;
    case ChannelKind::composed:
      if (!channel.eta || !channel.xi) throw DomainError("composed channel missing eta or xi");
      noise_on_mode(out, *channel.xi, mode);
      loss_on_mode(out, *channel.eta, mode);
      break;
  }
  return out;
}

double vacuum_output_fidelity(double eta, double xi) {
  require_eta_closed(eta);
  if (!(xi >= 0.0)) throw DomainError("xi must be >= 0");
  return 1.0 / (1.0 + eta * xi);
}

double diamond_lower_bound(double eta, double xi) {
  require_eta_closed(eta);
  require_xi(xi);
  const double ex = eta * xi;
  return 2.0 * ex / (1.0 + ex);
}

double diamond_upper_bound(double eta, double xi) {
  require_eta_open(eta);
  require_xi(xi);
  const double ex = eta * xi;
  return 2.0 * std::sqrt(ex / (ex + 1.0 - eta));
}

DiamondBounds diamond_bounds_at_radius(double eta, double radius_planck) {
  require_eta_open(eta);
  const LogScalar mu = cv::mu_max(radius_planck);
  if (mu.ln() <= cv::kLinearMuMaxLnLimit) {
    const double xi = cv::added_noise(mu.linear());
    const double lower = diamond_lower_bound(eta, xi);
    const double upper = diamond_upper_bound(eta, xi);
    return DiamondBounds{
        .lower = lower,
        .upper = upper,
        .xi_used = xi,
        .asymptotic_branch = false,
        .ln_lower = std::log(lower),
        .ln_upper = std::log(upper),
        .ln_xi_used = std::log(xi),
    };
  }
  const double ln_xi = -(std::log(4.0) + mu.ln());
  const double ln_lower = std::log(2.0 * eta) + ln_xi;  // 1 + eta xi = 1 to double precision
  const double ln_upper = std::log(2.0) + 0.5 * (std::log(eta) - std::log1p(-eta) + ln_xi);
  return DiamondBounds{
      .lower = std::exp(ln_lower),
      .upper = std::exp(ln_upper),
      .xi_used = std::exp(ln_xi),
      .asymptotic_branch = true,
      .ln_lower = ln_lower,
      .ln_upper = ln_upper,
      .ln_xi_used = ln_xi,
  };
}

}  // namespace holoqi::channel
