#include "holoqi/plob_bounds.hpp"

#include <cmath>
#include <numbers>

#include "holoqi/channels.hpp"
#include "holoqi/errors.hpp"
#include "holoqi/holo_bounds.hpp"

namespace holoqi::plob {

namespace {
constexpr double kPi = std::numbers::pi;
}

void validate(const ProtocolParams& params) {
  if (params.n_uses < 1) throw DomainError("n_uses must be >= 1");
  if (!(params.epsilon >= 0.0 && params.epsilon < 1.0)) {
    throw DomainError("epsilon must be in [0, 1)");
  }
  if (!(params.eta > 0.0 && params.eta < 1.0)) throw DomainError("eta must be in (0, 1)");
  if (!(params.radius_planck > 0.0)) throw DomainError("radius_planck must be positive");
}

double binary_entropy(double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw DomainError("binary_entropy: p must be in [0, 1]");
  if (p == 0.0 || p == 1.0) return 0.0;
  return -p * std::log2(p) - (1.0 - p) * std::log2(1.0 - p);
}

double plob_capacity(double eta) {
  if (!(eta > 0.0 && eta < 1.0)) throw DomainError("plob_capacity: eta must be in (0, 1)");
  return -std::log2(1.0 - eta);
}

double rate_cap_spherical(const ProtocolParams& params) {
  validate(params);
  return holo::spherical_max_qubits(params.radius_planck) / params.n_uses;
}

double eps_tilde_min(const ProtocolParams& params) {
  validate(params);
  const auto bounds = channel::diamond_bounds_at_radius(params.eta, params.radius_planck);
  return params.epsilon + params.n_uses * bounds.upper;
}

double rate_bound_general(const ProtocolParams& params, double er_choi) {
  if (!(er_choi >= 0.0)) throw DomainError("rate_bound_general: er_choi must be >= 0");
  const double et = eps_tilde_min(params);
  if (et > 0.5) {
    throw FannesRegimeError("rate_bound_general: eps_tilde > 1/2, Fannes-type step invalid");
  }
  const double denom = 1.0 - 8.0 * et;
  if (denom <= 0.0) {
    throw VacuousBoundError("rate_bound_general: 1 - 8*eps_tilde <= 0, bound is vacuous");
  }
  return (er_choi + 2.0 * binary_entropy(et) / params.n_uses) / denom;
}

double modified_plob(const ProtocolParams& params) {
  validate(params);
  const double ln_corr = std::log(8.0) + std::log(static_cast<double>(params.n_uses)) +
                         0.5 * (std::log(params.eta) - std::log1p(-params.eta)) -
                         0.5 * kPi * params.radius_planck * params.radius_planck;
  return (1.0 + 8.0 * params.epsilon + std::exp(ln_corr)) * plob_capacity(params.eta);
}

RateBoundReport build_report(const ProtocolParams& params) {
  validate(params);
  const auto bounds = channel::diamond_bounds_at_radius(params.eta, params.radius_planck);
  RateBoundReport report{};
  report.rate_spherical_cap = rate_cap_spherical(params);
  report.plob_classic = plob_capacity(params.eta);
  report.rate_modified_plob = modified_plob(params);
  report.eps_tilde = params.epsilon + params.n_uses * bounds.upper;
  report.xi_min = bounds.xi_used;
  report.ln_xi_min = bounds.ln_xi_used;
  report.asymptotic_branch = bounds.asymptotic_branch;
  try {
    report.rate_general = rate_bound_general(params, report.plob_classic);
  } catch (const Error& e) {
    report.rate_general = std::nullopt;
    report.rate_general_error = e.code();
  }
  return report;
}

}  // namespace holoqi::plob
