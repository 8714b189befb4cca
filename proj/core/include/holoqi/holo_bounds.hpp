#pragma once

#include <optional>

#include "holoqi/constants.hpp"

namespace holoqi::holo {

/// Double-sphere entanglement-distribution geometry: a source midway between
/// two labs of radius R separated by D >= 2R, sharing n qubit pairs.
struct HoloScenario {
  double n_qubits = 0.0;   ///< accepted as a real so sweeps/inversions are smooth
  double radius_R = 0.0;   ///< [m]
  double distance_D = 0.0; ///< [m], must satisfy D >= 2R
  std::optional<double> local_energy_E;  ///< [J]
  std::optional<double> local_mass_M;    ///< [kg]
};

/// Throws DomainError unless all set fields are positive and D >= 2R.
void validate(const HoloScenario& s);

/// Configuration at which the two labs collapse into tangent black holes:
/// shrinking the mass-distance tradeoff until D_min = 2 R_S.
struct CriticalPoint {
  double mass_over_planck;      ///< M / m_p
  double d_min_over_planck;     ///< D_min / l_p, saturates the spherical bound
  double schwarzschild_radius;  ///< R_S [m] for that mass
};

/// Scaling-law outputs carry no O(1) prefactor; flagged so reports can say so.
struct ThooftLimits {
  double n_max;         ///< R_p^{3/2}
  double d_min_planck;  ///< n^{2/3}
  static constexpr bool approximate_scaling = true;
};

/// Max qubits compressible in a sphere of radius R with energy E:
/// 2 pi R E / (hbar c ln 2).
double bekenstein_max_qubits(double radius_m, double energy_J, const PhysicalConstants& pc);

/// Minimum D*E product for sharing n ebits: (hbar c ln2 / pi) * n  [J m].
double min_energy_distance_product(double n_qubits, const PhysicalConstants& pc);

/// Minimum D*M product for n massive qubits: (hbar ln2 / (pi c)) * n  [m kg / s].
double min_mass_distance_product(double n_qubits, const PhysicalConstants& pc);

/// Spherical-bound qubit ceiling (pi/ln2) R_p^2 for a lab of radius R_p Planck lengths.
double spherical_max_qubits(double radius_planck);

/// Universal minimum distance sqrt(4 ln2 n / pi) in Planck lengths; inverse of
/// spherical_max_qubits composed with D = 2R.
double spherical_min_distance(double n_qubits);

/// Ordinary-matter scaling limits n <= R_p^{3/2}, D_p >= n^{2/3}.
ThooftLimits thooft_limits(double radius_planck, double n_qubits);

/// R_S = 2 G M / c^2.
double schwarzschild_radius(double mass_kg, const PhysicalConstants& pc);

/// Black-hole entropy over k: pi (R_S/l_p)^2. The equivalent closed form
/// 2 pi c R_S M / hbar (with M = c^2 R_S / 2G) is exposed for the identity test.
double bh_entropy_over_k(double schwarzschild_radius_m, const PhysicalConstants& pc);
double bh_entropy_over_k_via_mass(double schwarzschild_radius_m, const PhysicalConstants& pc);

/// Tangent-horizon critical point for n shared qubits:
/// M/m_p = sqrt(n ln2 / 4pi), D_min/l_p = sqrt(4 n ln2 / pi).
CriticalPoint critical_point(double n_qubits, const PhysicalConstants& pc);

}  // namespace holoqi::holo
