#pragma once

#include <vector>

#include "caslab/quadrature.hpp"
#include "caslab/stack.hpp"

namespace caslab {

/// 1D result: total force on the (unit) normalization area, in N,
/// not a force per unit area.
struct OneDForceResult {
  double force_per_area_unit = 0.0;  // N, for A = 1 m^2
  double f_over_f0_1d = 0.0;         // vs the ideal-mirror 1D value
  double rel_err_estimate = 0.0;
};

/// 1D reflection coefficients: identical to the 3D s-coefficients at
/// normal incidence (q = 0).
ReflectionPair reflect_1d(const Stack& stack, double xi);

/// Single-channel 1D force at zero temperature (one polarization).
OneDForceResult force_1d_zero_temperature(const Stack& stack, const QuadratureSettings& settings = {});

/// Two identical plates: the wall description (ordered from the gap
/// outward, ending semi-infinite) is mirrored to both sides and both
/// polarization channels are counted.
OneDForceResult force_1d_identical_plates(const std::vector<Layer>& plate_wall, double d,
                                          const QuadratureSettings& settings = {});

/// Ideal-mirror 1D force pi hbar c / (24 d^2) per channel.
double ideal_1d_force(double d, int channels = 1);

}  // namespace caslab
