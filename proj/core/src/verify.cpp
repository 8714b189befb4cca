#include "holoqi/verify.hpp"

#include <cmath>
#include <random>

#include "holoqi/channels.hpp"
#include "holoqi/cv_core.hpp"
#include "holoqi/fock.hpp"

namespace holoqi::verify {

namespace {

CheckResult against(const std::string& name, double value, double expected, double tol,
                    std::string note = "") {
  const double delta = std::abs(value - expected);
  return CheckResult{name, delta <= tol, value, expected, delta, tol, std::move(note)};
}

CheckResult at_least(const std::string& name, double value, double floor, double slack,
                     std::string note = "") {
  const double margin = value - floor;
  return CheckResult{name, margin >= -slack, value, floor, margin, slack, std::move(note)};
}

// Simulate teleportation of TMSV(mu_tilde) with a TMSV(mu) resource: additive
// noise xi(mu) on the teleported arm, then Uhlmann fidelity against the input.
double simulated_tele_fidelity(double mu, double mu_tilde, int dim, int quad_order) {
  const double xi = cv::added_noise(mu);
  const fock::DensityOperator input = fock::tmsv_state(mu_tilde, dim);
  const fock::DensityOperator output = fock::apply_additive_noise(input, xi, 1, quad_order);
  return fock::uhlmann_fidelity(input, output);
}

fock::DensityOperator random_pure(int dim, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Eigen::VectorXcd psi(dim);
  for (int i = 0; i < dim; ++i) psi[i] = std::complex<double>(gauss(rng), gauss(rng));
  psi.normalize();
  fock::DensityOperator s = fock::vacuum_state(dim, 1);
  s.matrix = psi * psi.adjoint();
  return s;
}

fock::DensityOperator random_mixed(int dim, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Eigen::MatrixXcd a(dim, dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) a(i, j) = std::complex<double>(gauss(rng), gauss(rng));
  Eigen::MatrixXcd rho = a * a.adjoint();
  rho /= rho.trace().real();
  fock::DensityOperator s = fock::vacuum_state(dim, 1);
  s.matrix = rho;
  return s;
}

void tele_fidelity_checks(std::vector<CheckResult>& out, Level level, int quad_order) {
  struct Pair {
    double mu, mu_tilde;
    int dim;
    bool full_only;
  };
  const Pair pairs[] = {
      {1.0, 1.0, 20, false},
      {5.0, 0.5, 20, false},
      {2.0, 1.0, 20, true},
      {50.0, 1.0, 40, true},
  };
  for (const auto& p : pairs) {
    if (p.full_only && level != Level::full) continue;
    const double closed = cv::tele_fidelity(p.mu, p.mu_tilde);
    const double oracle = simulated_tele_fidelity(p.mu, p.mu_tilde, p.dim, quad_order);
    out.push_back(against("tele_fidelity oracle mu=" + std::to_string(p.mu) +
                              " mu_tilde=" + std::to_string(p.mu_tilde),
                          oracle, closed, 1e-3, "dim=" + std::to_string(p.dim)));
    if (level == Level::full) {
      // convergence: the half-dim result must sit within 10x the tolerance
      const int half = std::max(10, p.dim / 2);
      const double coarse = simulated_tele_fidelity(p.mu, p.mu_tilde, half, quad_order);
      out.push_back(against("tele_fidelity convergence mu=" + std::to_string(p.mu) +
                                " mu_tilde=" + std::to_string(p.mu_tilde),
                            coarse, oracle, 1e-2,
                            "dims " + std::to_string(half) + " vs " + std::to_string(p.dim)));
    }
  }
}

void vacuum_chain_checks(std::vector<CheckResult>& out, Level level, int quad_order) {
  struct Case {
    double eta, xi;
  };
  std::vector<Case> cases = {{0.5, 0.5}};
  if (level == Level::full) cases.push_back({0.8, 0.2});
  for (const auto& c : cases) {
    const int dim = 40;
    const auto vac = fock::vacuum_state(dim, 1);
    const auto noisy = fock::apply_additive_noise(vac, c.xi, 0, quad_order);
    const auto sigma = fock::apply_pure_loss(noisy, c.eta, 0);
    const double chern = fock::chernoff_pure(vac, sigma);
    const double closed = channel::vacuum_output_fidelity(c.eta, c.xi);
    out.push_back(against("vacuum output fidelity eta=" + std::to_string(c.eta) +
                              " xi=" + std::to_string(c.xi),
                          chern, closed, 1e-6));

    const auto thermal = fock::thermal_state(c.eta * c.xi, dim);
    out.push_back(against("composed channel thermal form eta=" + std::to_string(c.eta) +
                              " xi=" + std::to_string(c.xi),
                          fock::trace_distance(sigma, thermal), 0.0, 1e-6));

    if (level == Level::full) {
      const double td = fock::trace_distance(vac, sigma);
      const double lower = channel::diamond_lower_bound(c.eta, c.xi);
      out.push_back(at_least("trace distance above diamond lower bound eta=" +
                                 std::to_string(c.eta) + " xi=" + std::to_string(c.xi),
                             td, lower, 1e-9));
      out.push_back(at_least("trace distance above Chernoff step eta=" + std::to_string(c.eta) +
                                 " xi=" + std::to_string(c.xi),
                             td, 2.0 * (1.0 - chern), 1e-6));
      out.push_back(against("trace distance within [0,2]", td <= 2.0 ? 1.0 : 0.0, 1.0, 0.0));
    }
  }
}

void loss_checks(std::vector<CheckResult>& out) {
  const auto vac = fock::vacuum_state(20, 1);
  const auto vac_out = fock::apply_pure_loss(vac, 0.3, 0);
  out.push_back(against("pure loss fixes the vacuum", fock::trace_distance(vac, vac_out), 0.0,
                        1e-12));

  const auto one = fock::number_state(1, 20);
  const auto one_out = fock::apply_pure_loss(one, 0.5, 0);
  out.push_back(against("single photon binomial loss p0", one_out.matrix(0, 0).real(), 0.5,
                        1e-12));
  out.push_back(against("single photon binomial loss p1", one_out.matrix(1, 1).real(), 0.5,
                        1e-12));

  const auto same = fock::apply_pure_loss(one, 1.0, 0);
  out.push_back(against("transparent beam splitter", fock::trace_distance(one, same), 0.0,
                        1e-12));
}

void reduction_checks(std::vector<CheckResult>& out) {
  const auto tmsv = fock::tmsv_state(1.0, 30);
  const auto reduced = fock::partial_trace(tmsv, 0);
  const auto thermal = fock::thermal_state(0.5, 30);
  out.push_back(against("TMSV reduced state is thermal",
                        fock::trace_distance(reduced, thermal), 0.0, 1e-10));
  double entropy = 0.0;
  for (int n = 0; n < 30; ++n) {
    const double p = reduced.matrix(n, n).real();
    if (p > 1e-300) entropy -= p * std::log2(p);
  }
  out.push_back(against("TMSV entanglement entropy equals h(nbar)", entropy,
                        cv::thermal_entropy_bits(0.5), 1e-8));
}

void random_pair_checks(std::vector<CheckResult>& out) {
  std::mt19937_64 rng(42);
  const int dim = 8;
  double worst_fvdg = 2.0;
  double worst_chern = 2.0;
  for (int trial = 0; trial < 100; ++trial) {
    const auto phi = random_pure(dim, rng);
    const auto sigma = random_mixed(dim, rng);
    const double td = fock::trace_distance(phi, sigma);
    const double f = fock::uhlmann_fidelity(phi, sigma);
    worst_fvdg = std::min(worst_fvdg, td - 2.0 * (1.0 - f));
    worst_chern = std::min(worst_chern, td - 2.0 * (1.0 - fock::chernoff_pure(phi, sigma)));
  }
  out.push_back(at_least("||rho-sigma||_1 >= 2[1-F] on 100 random pairs", worst_fvdg, 0.0,
                         1e-10));
  out.push_back(at_least("||rho-sigma||_1 >= 2[1-C] on 100 random pairs", worst_chern, 0.0,
                         1e-10));
}

}  // namespace

std::vector<CheckResult> run_checks(Level level, int quad_order) {
  std::vector<CheckResult> results;
  tele_fidelity_checks(results, level, quad_order);
  vacuum_chain_checks(results, level, quad_order);
  loss_checks(results);
  reduction_checks(results);
  if (level == Level::full) random_pair_checks(results);
  return results;
}

bool all_passed(const std::vector<CheckResult>& results) {
  for (const auto& r : results) {
    if (!r.passed) return false;
  }
  return true;
}

}  // namespace holoqi::verify
