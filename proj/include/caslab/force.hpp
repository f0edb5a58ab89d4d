#pragma once

#include <optional>
#include <string>
#include <vector>

#include "caslab/quadrature.hpp"
#include "caslab/stack.hpp"

namespace caslab {

/// Casimir pressure between the walls. Attractive pressure is reported
/// positive, so F/F0 matches the relative-force convention of the plots.
struct ForceResult {
  double pressure = 0.0;          // N/m^2
  double f_over_f0 = 0.0;         // pressure / casimir_ideal(d)
  double rel_err_estimate = 0.0;  // self-convergence (order-halving) delta
  long evaluations = 0;           // reflection-pair grid points
  std::string scheme_used;
};

/// Ideal-mirror pressure hbar c pi^2 / (240 d^4).
double casimir_ideal(double d);

/// sum_sigma x / (1 - x e^{-2 kappa d}) with x = r_{j-} r_{j+} at the
/// polar point xi = c kappa cos(phi), q = kappa sin(phi).
double gap_integrand(const Stack& stack, double kappa, double phi);

ForceResult force_zero_temperature(const Stack& stack, const QuadratureSettings& settings = {});

ForceResult force_finite_temperature(const Stack& stack, double temperature,
                                     const MatsubaraSettings& msettings = {},
                                     const QuadratureSettings& qsettings = {});

struct DistancePoint {
  double d = 0.0;
  std::optional<ForceResult> result;
  std::string error;  // set when the point failed
};

/// Batch evaluation over a strictly increasing grid of gap thicknesses.
/// Per-point failures are recorded and the batch continues.
std::vector<DistancePoint> force_vs_distance(const Stack& stack_template,
                                             const std::vector<double>& d_grid,
                                             const QuadratureSettings& settings = {});

}  // namespace caslab
