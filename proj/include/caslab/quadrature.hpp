#pragma once

#include <Eigen/Core>
#include <functional>
#include <stdexcept>

namespace caslab {

enum class Scheme { Laguerre, FiniteDomain };

struct QuadratureSettings {
  int radial_order = 80;
  int angular_order = 40;
  Scheme scheme = Scheme::Laguerre;
  double target_rel_err = 1e-8;
};

struct MatsubaraSettings {
  double xi0_fraction = 1e-3;  // xi_0 = xi0_fraction * xi_1
  double tail_rel_tol = 1e-9;
  int max_terms = 100000;
};

void validate(const QuadratureSettings& s);
void validate(const MatsubaraSettings& s);

/// Numerical failure carrying partial diagnostics.
struct NumericError : std::runtime_error {
  double partial_result = 0.0;
  double error_estimate = 0.0;
  NumericError(const std::string& msg, double partial, double err)
      : std::runtime_error(msg), partial_result(partial), error_estimate(err) {}
};

struct QuadRule {
  Eigen::ArrayXd nodes;
  Eigen::ArrayXd weights;
};

/// Nodes/weights for the weight function e^{-t} on [0, inf).
QuadRule gauss_laguerre_nodes(int order);

/// Gauss-Legendre nodes mapped to [a, b].
QuadRule gauss_legendre_nodes(int order, double a, double b);

/// sum_{m>=0} (1 - delta_{m0}/2) term(m, xi_m) with xi_m = 2 pi m k_B T / hbar
/// for m >= 1 and xi_0 = xi0_fraction * xi_1. Truncates when a geometric tail
/// estimate over the last terms drops below tail_rel_tol times the partial sum.
double matsubara_sum(const std::function<double(int, double)>& term,
                     const MatsubaraSettings& settings, double temperature);

/// Richardson (Neville) extrapolation to h -> 0 of values sampled at
/// h_k = h_0 * ratio^{-k}, assuming an expansion in integer powers of h.
/// values[0] corresponds to the largest h. Throws NumericError when the
/// differences fail to settle.
double richardson_limit(const std::vector<double>& values, double ratio, double* err_estimate);

}  // namespace caslab
