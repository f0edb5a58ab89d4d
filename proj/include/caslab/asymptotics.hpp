#pragma once

#include <array>
#include <utility>
#include <vector>

#include "caslab/quadrature.hpp"
#include "caslab/stack.hpp"

namespace caslab {

/// kappa -> 0 limits of the angular integrals of (r_+ r_-)^m, per
/// polarization, for m = 1..M. Used by the standard long-distance law.
struct StaticAverages {
  std::array<std::vector<double>, 2> values;  // [s, p], index m-1
  double err_estimate = 0.0;
};

/// R-bar coefficients of the d^-6 law for single-slab walls, units m^2.
struct SlabCoefficients {
  double r_bar_s = 0.0;
  double r_bar_p = 0.0;
  double err_estimate = 0.0;
};

struct ValidityScales {
  double d_min_freq = 0.0;  // max_l c / xi_l
  double d_min_geom = 0.0;  // max_l sqrt(eps_l(i xi_l)) d_l
};

/// Decreasing kappa ladder kappa_k = 1e-2/d_ref * 2^-k, 8 rungs.
std::vector<double> default_kappa_ladder(double d_ref);

/// Richardson-extrapolated kappa -> 0 limit of the angular integral of
/// (r_+ r_-)^m. The ladder must be strictly decreasing.
double static_average(const Stack& stack, Polarization sigma, int m,
                      const std::vector<double>& kappa_ladder, double* err_estimate = nullptr);

StaticAverages compute_static_averages(const Stack& stack, int max_power,
                                       const std::vector<double>& kappa_ladder);

/// Standard d^-4 asymptotic pressure (termwise Li4 of the static averages).
/// Requires classify_distance_law(stack) == -4.
double long_distance_standard(const Stack& stack, double d, int max_terms = 30);

/// Requires classify_distance_law(stack) == -6.
SlabCoefficients slab_coefficients(const Stack& stack, const std::vector<double>& kappa_ladder);

/// Leading d^-6 pressure (15 hbar c / 16 pi^2) d^-6 sum_sigma R-bar_sigma.
double long_distance_slab(const Stack& stack, double d);
double long_distance_slab(const SlabCoefficients& coeffs, double d);

/// -6 if both walls are a single finite dielectric slab backed by vacuum,
/// -5 if exactly one is, -4 otherwise.
int classify_distance_law(const Stack& stack);

ValidityScales validity_scales(const Stack& stack);

/// Lifshitz short-distance double integral (numeric), valid for gap-adjacent
/// layers thick compared to d.
double short_distance_numeric(const Stack& stack, double d, const QuadratureSettings& settings = {});

/// Residue-series closed form for identical semi-infinite Drude-Lorentz
/// walls at small gamma0.
double short_distance_closed_form(const DrudeLorentzParams& params, double d);

/// Relative-error bound (gamma0/Omega) f(alpha^2 + 1/2) on the closed form.
double short_distance_error_bound(const DrudeLorentzParams& params);

/// Centered log-log slope magnitude of a pressure curve at an interior index.
double local_exponent(const std::vector<std::pair<double, double>>& pressure_curve, int at_index);

}  // namespace caslab
