#include "caslab/materials.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace caslab {

PermittivityModel PermittivityModel::vacuum() {
  PermittivityModel m;
  m.kind_ = Kind::Vacuum;
  return m;
}

PermittivityModel PermittivityModel::perfect_mirror() {
  PermittivityModel m;
  m.kind_ = Kind::PerfectMirror;
  return m;
}

PermittivityModel PermittivityModel::drude_lorentz(const DrudeLorentzParams& p) {
  if (!(std::isfinite(p.omega0) && std::isfinite(p.omega_p) && std::isfinite(p.gamma0)) ||
      p.omega0 < 0.0 || p.omega_p < 0.0 || p.gamma0 < 0.0) {
    throw std::invalid_argument("drude_lorentz: parameters must be finite and >= 0");
  }
  PermittivityModel m;
  m.kind_ = Kind::DrudeLorentz;
  m.dl_ = p;
  return m;
}

PermittivityModel PermittivityModel::tabulated(std::vector<std::pair<double, double>> points) {
  if (points.size() < 2) {
    throw std::invalid_argument("tabulated: need at least two (xi, eps) points");
  }
  double prev_xi = -1.0;
  for (std::size_t i = 0; i < points.size(); ++i) {
    auto [xi, eps] = points[i];
    if (!std::isfinite(xi) || xi < 0.0 || xi <= prev_xi) {
      throw std::invalid_argument("tabulated: xi nodes must be finite, >= 0 and strictly increasing (node " +
                                  std::to_string(i) + ")");
    }
    if (!std::isfinite(eps) || eps < 1.0) {
      throw std::invalid_argument("tabulated: eps must be finite and >= 1 (node " + std::to_string(i) + ")");
    }
    prev_xi = xi;
  }
  PermittivityModel m;
  m.kind_ = Kind::Tabulated;
  m.table_ = std::move(points);
  return m;
}

const DrudeLorentzParams& PermittivityModel::drude() const {
  if (kind_ != Kind::DrudeLorentz) {
    throw std::logic_error("PermittivityModel::drude: not a Drude-Lorentz material");
  }
  return dl_;
}

namespace {

double interp_table(const std::vector<std::pair<double, double>>& tab, double xi) {
  if (xi <= tab.front().first) return tab.front().second;
  if (xi >= tab.back().first) {
    // eps = 1 + C/xi^2 matched at the last node
    auto [xl, el] = tab.back();
    if (el <= 1.0) return 1.0;
    return 1.0 + (el - 1.0) * (xl / xi) * (xl / xi);
  }
  std::size_t hi = 1;
  while (tab[hi].first < xi) ++hi;
  auto [xa, ea] = tab[hi - 1];
  auto [xb, eb] = tab[hi];
  // linear in (log xi, log(eps-1)); fall back to linear interpolation when
  // a node sits at xi = 0 or at eps = 1, where the logs are undefined
  if (xa > 0.0 && ea > 1.0 && eb > 1.0) {
    double w = (std::log(xi) - std::log(xa)) / (std::log(xb) - std::log(xa));
    return 1.0 + std::exp((1.0 - w) * std::log(ea - 1.0) + w * std::log(eb - 1.0));
  }
  double w = (xi - xa) / (xb - xa);
  return (1.0 - w) * ea + w * eb;
}

}  // namespace

double PermittivityModel::epsilon_imag_axis(double xi) const {
  if (!std::isfinite(xi) || xi < 0.0) {
    throw std::domain_error("epsilon_imag_axis: xi must be finite and >= 0");
  }
  switch (kind_) {
    case Kind::Vacuum:
      return 1.0;
    case Kind::PerfectMirror:
      throw std::logic_error("epsilon_imag_axis: permittivity of a perfect mirror requested "
                             "(stack construction bug)");
    case Kind::DrudeLorentz: {
      double denom = xi * xi + dl_.gamma0 * xi + dl_.omega0 * dl_.omega0;
      if (denom <= 0.0) {
        throw std::domain_error("epsilon_imag_axis: eps(i0) diverges for omega0 = 0");
      }
      return 1.0 + dl_.omega_p * dl_.omega_p / denom;
    }
    case Kind::Tabulated:
      return interp_table(table_, xi);
  }
  throw std::logic_error("epsilon_imag_axis: unreachable");
}

double epsilon_imag_axis(const PermittivityModel& model, double xi) {
  return model.epsilon_imag_axis(xi);
}

double epsilon_static(const PermittivityModel& model) { return model.epsilon_static(); }

}  // namespace caslab
