#pragma once

namespace holoqi {

/// SI physical constants (CODATA 2018) plus the derived Planck scales.
/// Single source of truth for units: everything downstream takes SI inputs
/// and converts through these values.
struct PhysicalConstants {
  double hbar;         ///< reduced Planck constant [J s]
  double c;            ///< speed of light in vacuum [m/s]
  double k_boltzmann;  ///< Boltzmann constant [J/K]
  double G;            ///< Newtonian gravitational constant [m^3 kg^-1 s^-2]
  double l_planck;     ///< sqrt(G hbar / c^3) [m]
  double m_planck;     ///< sqrt(hbar c / G) [kg]
};

/// CODATA 2018 constant set; l_planck and m_planck computed from G, hbar, c.
const PhysicalConstants& codata_constants();

/// length_m / l_planck. Throws DomainError for non-positive input.
double to_planck_length(double length_m, const PhysicalConstants& consts);

}  // namespace holoqi
