#pragma once

namespace caslab {

// CODATA 2018 values, SI units throughout.
inline constexpr double hbar = 1.054571817e-34;        // J s
inline constexpr double c_light = 2.99792458e8;        // m / s
inline constexpr double k_boltzmann = 1.380649e-23;    // J / K

}  // namespace caslab
