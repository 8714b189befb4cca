#include "holoqi/holo_bounds.hpp"

#include <cmath>
#include <numbers>

#include "holoqi/errors.hpp"

namespace holoqi::holo {

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kLn2 = std::numbers::ln2;

void require_positive(double v, const char* what) {
  if (!(v > 0.0)) throw DomainError(std::string(what) + " must be positive");
}

void require_nonnegative(double v, const char* what) {
  if (!(v >= 0.0)) throw DomainError(std::string(what) + " must be non-negative");
}
}  // namespace

void validate(const HoloScenario& s) {
  require_positive(s.n_qubits, "n_qubits");
  require_positive(s.radius_R, "radius_R");
  require_positive(s.distance_D, "distance_D");
  if (s.local_energy_E) require_positive(*s.local_energy_E, "local_energy_E");
  if (s.local_mass_M) require_positive(*s.local_mass_M, "local_mass_M");
  if (s.distance_D < 2.0 * s.radius_R) {
    throw DomainError("distance_D must be at least 2*radius_R");
  }
}

double bekenstein_max_qubits(double radius_m, double energy_J, const PhysicalConstants& pc) {
  require_positive(radius_m, "radius");
  require_positive(energy_J, "energy");
  return 2.0 * kPi * radius_m * energy_J / (pc.hbar * pc.c * kLn2);
}

double min_energy_distance_product(double n_qubits, const PhysicalConstants& pc) {
  require_nonnegative(n_qubits, "n_qubits");
  return pc.hbar * pc.c * kLn2 / kPi * n_qubits;
}

double min_mass_distance_product(double n_qubits, const PhysicalConstants& pc) {
  require_nonnegative(n_qubits, "n_qubits");
  return pc.hbar * kLn2 / (kPi * pc.c) * n_qubits;
}

double spherical_max_qubits(double radius_planck) {
  require_positive(radius_planck, "radius_planck");
  return kPi / kLn2 * radius_planck * radius_planck;
}

double spherical_min_distance(double n_qubits) {
  require_nonnegative(n_qubits, "n_qubits");
  return std::sqrt(4.0 * kLn2 * n_qubits / kPi);
}

ThooftLimits thooft_limits(double radius_planck, double n_qubits) {
  require_positive(radius_planck, "radius_planck");
  require_positive(n_qubits, "n_qubits");
  return ThooftLimits{
      .n_max = std::pow(radius_planck, 1.5),
      .d_min_planck = std::pow(n_qubits, 2.0 / 3.0),
  };
}

double schwarzschild_radius(double mass_kg, const PhysicalConstants& pc) {
  require_positive(mass_kg, "mass");
  return 2.0 * pc.G * mass_kg / (pc.c * pc.c);
}

double bh_entropy_over_k(double schwarzschild_radius_m, const PhysicalConstants& pc) {
  require_positive(schwarzschild_radius_m, "schwarzschild_radius");
  const double rp = schwarzschild_radius_m / pc.l_planck;
  return kPi * rp * rp;
}

double bh_entropy_over_k_via_mass(double schwarzschild_radius_m, const PhysicalConstants& pc) {
  require_positive(schwarzschild_radius_m, "schwarzschild_radius");
  const double mass = pc.c * pc.c * schwarzschild_radius_m / (2.0 * pc.G);
  return 2.0 * kPi * pc.c * schwarzschild_radius_m * mass / pc.hbar;
}

CriticalPoint critical_point(double n_qubits, const PhysicalConstants& pc) {
  require_positive(n_qubits, "n_qubits");
  const double mass_ratio = std::sqrt(n_qubits * kLn2 / (4.0 * kPi));
  return CriticalPoint{
      .mass_over_planck = mass_ratio,
      .d_min_over_planck = std::sqrt(4.0 * n_qubits * kLn2 / kPi),
      .schwarzschild_radius = schwarzschild_radius(mass_ratio * pc.m_planck, pc),
  };
}

}  // namespace holoqi::holo
