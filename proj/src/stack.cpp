#include "caslab/stack.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "caslab/constants.hpp"

namespace caslab {

Stack::Stack(std::vector<Layer> layers, int gap_index)
    : layers_(std::move(layers)), gap_index_(gap_index) {
  const int n = static_cast<int>(layers_.size()) - 1;
  if (n < 2) throw std::invalid_argument("Stack: need at least three layers");
  if (gap_index_ <= 0 || gap_index_ >= n) {
    throw std::invalid_argument("Stack: gap_index must satisfy 0 < gap_index < n");
  }
  if (!layers_.front().semi_infinite() || !layers_.back().semi_infinite()) {
    throw std::invalid_argument("Stack: outermost layers must be semi-infinite");
  }
  for (int l = 1; l < n; ++l) {
    if (layers_[l].semi_infinite() || !(layers_[l].thickness > 0.0)) {
      throw std::invalid_argument("Stack: interior layer " + std::to_string(l) +
                                  " must have finite thickness > 0");
    }
  }
  if (!layers_[gap_index_].material.is_vacuum()) {
    throw std::invalid_argument("Stack: gap layer must be vacuum");
  }
}

Stack Stack::with_gap_thickness(double d) const {
  if (!(d > 0.0) || !std::isfinite(d)) {
    throw std::invalid_argument("with_gap_thickness: d must be finite and > 0");
  }
  std::vector<Layer> ls = layers_;
  ls[gap_index_].thickness = d;
  return Stack(std::move(ls), gap_index_);
}

Stack Stack::reversed() const {
  std::vector<Layer> ls(layers_.rbegin(), layers_.rend());
  int gap = static_cast<int>(layers_.size()) - 1 - gap_index_;
  return Stack(std::move(ls), gap);
}

double kappa(const PermittivityModel& material, double xi, double q) {
  if (!(xi >= 0.0) || !(q >= 0.0)) {
    throw std::domain_error("kappa: xi and q must be >= 0");
  }
  const double a = xi / c_light;
  if (xi == 0.0) return q;  // avoids evaluating eps where only eps*xi^2 enters
  const double eps = material.epsilon_imag_axis(xi);
  return std::hypot(a * std::sqrt(eps), q);
}

double single_interface(Polarization sigma, double kappa_a, double kappa_b,
                        double eps_a, double eps_b) {
  if (sigma == Polarization::s) {
    return (kappa_a - kappa_b) / (kappa_a + kappa_b);
  }
  const double kr = kappa_a / kappa_b;
  const double er = eps_a / eps_b;
  return (kr - er) / (kr + er);
}

namespace {

// Shared state for one (xi, q) point: lazily evaluated kappa/eps per layer.
struct PointEval {
  const Stack& stack;
  double xi, q;
  std::vector<double> kap, eps;
  std::vector<char> have_kap, have_eps;

  PointEval(const Stack& s, double xi_, double q_)
      : stack(s), xi(xi_), q(q_), kap(s.layers().size()), eps(s.layers().size()),
        have_kap(s.layers().size(), 0), have_eps(s.layers().size(), 0) {}

  double get_eps(int l) {
    if (!have_eps[l]) {
      eps[l] = stack.layers()[l].material.epsilon_imag_axis(xi);
      have_eps[l] = 1;
    }
    return eps[l];
  }

  // kappa at xi = 0 equals q and needs no permittivity
  double get_kappa(int l) {
    if (!have_kap[l]) {
      kap[l] = (xi == 0.0) ? q : std::hypot(xi / c_light * std::sqrt(get_eps(l)), q);
      have_kap[l] = 1;
    }
    return kap[l];
  }
};

// exp(-2 kappa d); treated as exactly 0 past the double underflow threshold.
double damping(double kap, double d) {
  const double x = 2.0 * kap * d;
  return x > 745.0 ? 0.0 : std::exp(-x);
}

// Recursion over the wall on one side of the gap. `step` is +1 for the
// upper wall, -1 for the lower one; the neighbor index is l + step.
double reflect_wall(PointEval& pe, Polarization sigma, int step) {
  const auto& layers = pe.stack.layers();
  const int n = static_cast<int>(layers.size()) - 1;
  const int j = pe.stack.gap_index();
  const int outer = (step > 0) ? n : 0;

  double r = 0.0;  // r_{outer +-} = 0
  // walk from the outer interface back toward the gap
  for (int l = outer - step; (step > 0) ? (l >= j) : (l <= j); l -= step) {
    const int nb = l + step;
    if (layers[nb].material.is_mirror()) {
      r = (sigma == Polarization::s) ? -1.0 : 1.0;
      continue;
    }
    const double ka = pe.get_kappa(l), kb = pe.get_kappa(nb);
    const double rho = (sigma == Polarization::s)
                           ? single_interface(sigma, ka, kb, 1.0, 1.0)
                           : single_interface(sigma, ka, kb, pe.get_eps(l), pe.get_eps(nb));
    const double e = layers[nb].semi_infinite() ? 0.0 : damping(kb, layers[nb].thickness);
    r = (rho + e * r) / (1.0 + rho * e * r);
  }
  return r;
}

}  // namespace

double reflect_up(const Stack& stack, Polarization sigma, double xi, double q) {
  if (!(xi >= 0.0) || !(q >= 0.0)) throw std::domain_error("reflect_up: xi, q must be >= 0");
  PointEval pe(stack, xi, q);
  return reflect_wall(pe, sigma, +1);
}

double reflect_down(const Stack& stack, Polarization sigma, double xi, double q) {
  if (!(xi >= 0.0) || !(q >= 0.0)) throw std::domain_error("reflect_down: xi, q must be >= 0");
  PointEval pe(stack, xi, q);
  return reflect_wall(pe, sigma, -1);
}

ReflectionPair reflection_pair(const Stack& stack, Polarization sigma, double xi, double q) {
  if (!(xi >= 0.0) || !(q >= 0.0)) throw std::domain_error("reflection_pair: xi, q must be >= 0");
  PointEval pe(stack, xi, q);
  return ReflectionPair{reflect_wall(pe, sigma, +1), reflect_wall(pe, sigma, -1)};
}

}  // namespace caslab
