#include "caslab/oned.hpp"

#include <cmath>
#include <stdexcept>

#include "caslab/constants.hpp"

namespace caslab {

ReflectionPair reflect_1d(const Stack& stack, double xi) {
  if (!(xi > 0.0)) throw std::domain_error("reflect_1d: xi must be > 0");
  return reflection_pair(stack, Polarization::s, xi, 0.0);
}

double ideal_1d_force(double d, int channels) {
  if (!(d > 0.0)) throw std::domain_error("ideal_1d_force: d must be > 0");
  return channels * M_PI * hbar * c_light / (24.0 * d * d);
}

namespace {

// Imaginary-axis counterpart of the real-frequency 1D integral:
// F A = (hbar/pi) int dxi (xi/c) x e^{-2 xi d/c} / (1 - x e^{-2 xi d/c}),
// evaluated with Laguerre nodes in t = 2 xi d / c.
double one_channel(const Stack& stack, int order) {
  const double d = stack.gap_thickness();
  const QuadRule rt = gauss_laguerre_nodes(order);
  double acc = 0.0;
  for (int i = 0; i < rt.nodes.size(); ++i) {
    const double t = rt.nodes[i];
    const double xi = t * c_light / (2.0 * d);
    const ReflectionPair rp = reflect_1d(stack, xi);
    const double x = rp.r_plus * rp.r_minus;
    acc += rt.weights[i] * t * x / (1.0 - x * std::exp(-t));
  }
  return hbar * c_light / (4.0 * M_PI * d * d) * acc;
}

}  // namespace

OneDForceResult force_1d_zero_temperature(const Stack& stack, const QuadratureSettings& settings) {
  validate(settings);
  const double full = one_channel(stack, settings.radial_order);
  const double half = one_channel(stack, settings.radial_order / 2);
  OneDForceResult res;
  res.force_per_area_unit = full;
  res.f_over_f0_1d = full / ideal_1d_force(stack.gap_thickness(), 1);
  res.rel_err_estimate = (full == 0.0) ? std::abs(half) : std::abs(full - half) / std::abs(full);
  return res;
}

OneDForceResult force_1d_identical_plates(const std::vector<Layer>& plate_wall, double d,
                                          const QuadratureSettings& settings) {
  if (plate_wall.empty() || !plate_wall.back().semi_infinite()) {
    throw std::invalid_argument("force_1d_identical_plates: wall must end in a semi-infinite layer");
  }
  std::vector<Layer> layers(plate_wall.rbegin(), plate_wall.rend());
  layers.push_back(Layer::finite(d, PermittivityModel::vacuum()));
  layers.insert(layers.end(), plate_wall.begin(), plate_wall.end());
  const Stack stack(std::move(layers), static_cast<int>(plate_wall.size()));

  OneDForceResult res = force_1d_zero_temperature(stack, settings);
  res.force_per_area_unit *= 2.0;  // both polarization channels
  res.f_over_f0_1d = res.force_per_area_unit / ideal_1d_force(d, 2);
  return res;
}

}  // namespace caslab
