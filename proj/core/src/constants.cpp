#include "holoqi/constants.hpp"

#include <cmath>

#include "holoqi/errors.hpp"

namespace holoqi {

const PhysicalConstants& codata_constants() {
  static const PhysicalConstants kConsts = [] {
    PhysicalConstants pc{};
    pc.hbar = 1.054571817e-34;  // h / 2pi with h = 6.62607015e-34 (exact)
    pc.c = 299792458.0;         // exact
    pc.k_boltzmann = 1.380649e-23;  // exact
    pc.G = 6.67430e-11;
    pc.l_planck = std::sqrt(pc.G * pc.hbar / (pc.c * pc.c * pc.c));
    pc.m_planck = std::sqrt(pc.hbar * pc.c / pc.G);
    return pc;
  }();
  return kConsts;
}

double to_planck_length(double length_m, const PhysicalConstants& consts) {
  if (!(length_m > 0.0)) {
    throw DomainError("to_planck_length: length must be positive");
  }
  return length_m / consts.l_planck;
}

}  // namespace holoqi
