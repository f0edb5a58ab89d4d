#pragma once

#include <cmath>
#include <limits>
#include <vector>

#include "caslab/materials.hpp"

namespace caslab {

enum class Polarization { s, p };

/// One layer of the planar structure. The two outermost layers are
/// semi-infinite (thickness = infinity); all interior layers are finite.
struct Layer {
  double thickness = std::numeric_limits<double>::infinity();  // meters
  PermittivityModel material = PermittivityModel::vacuum();

  bool semi_infinite() const { return !std::isfinite(thickness); }

  static Layer semi_infinite_layer(PermittivityModel m) {
    return Layer{std::numeric_limits<double>::infinity(), std::move(m)};
  }
  static Layer finite(double d, PermittivityModel m) { return Layer{d, std::move(m)}; }
};

/// Generalized reflection coefficients of the upper (+) and lower (-) wall
/// at fixed (xi, q) and polarization. Both are real and lie in [-1, 1].
struct ReflectionPair {
  double r_plus = 0.0;
  double r_minus = 0.0;
};

/// The multilayer geometry: layers 0..n with a vacuum gap at gap_index.
/// Immutable after construction.
class Stack {
 public:
  Stack(std::vector<Layer> layers, int gap_index);

  const std::vector<Layer>& layers() const { return layers_; }
  int gap_index() const { return gap_index_; }
  double gap_thickness() const { return layers_[gap_index_].thickness; }

  Stack with_gap_thickness(double d) const;
  Stack reversed() const;

 private:
  std::vector<Layer> layers_;
  int gap_index_;
};

/// Imaginary-axis propagation constant sqrt(xi^2 eps(i xi)/c^2 + q^2), in 1/m.
double kappa(const PermittivityModel& material, double xi, double q);

/// Fresnel coefficient of a single interface from medium a into medium b.
double single_interface(Polarization sigma, double kappa_a, double kappa_b,
                        double eps_a, double eps_b);

/// r_{j+}: reflection off the whole upper wall.
double reflect_up(const Stack& stack, Polarization sigma, double xi, double q);

/// r_{j-}: reflection off the whole lower wall.
double reflect_down(const Stack& stack, Polarization sigma, double xi, double q);

/// Both coefficients with a single pass over the layer kappas.
ReflectionPair reflection_pair(const Stack& stack, Polarization sigma, double xi, double q);

}  // namespace caslab
