#include "caslab/asymptotics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "caslab/constants.hpp"
#include "caslab/specialfn.hpp"

namespace caslab {

namespace {

constexpr int kAngularOrder = 64;

void check_ladder(const std::vector<double>& ladder) {
  if (ladder.size() < 3) throw std::invalid_argument("kappa ladder needs at least 3 rungs");
  for (std::size_t k = 0; k < ladder.size(); ++k) {
    if (!(ladder[k] > 0.0) || (k > 0 && !(ladder[k] < ladder[k - 1]))) {
      throw std::invalid_argument("kappa ladder must be positive and strictly decreasing");
    }
  }
}

// phi-samples of r_+ r_- at fixed kappa
std::vector<double> product_samples(const Stack& stack, Polarization sigma, double kap,
                                    const QuadRule& rphi) {
  std::vector<double> x(rphi.nodes.size());
  for (int j = 0; j < rphi.nodes.size(); ++j) {
    const double xi = c_light * kap * std::cos(rphi.nodes[j]);
    const double q = kap * std::sin(rphi.nodes[j]);
    const ReflectionPair rp = reflection_pair(stack, sigma, xi, q);
    x[j] = rp.r_plus * rp.r_minus;
  }
  return x;
}

// Layers of one wall, ordered from the gap outward.
std::vector<Layer> wall_layers(const Stack& stack, int step) {
  std::vector<Layer> out;
  const int n = static_cast<int>(stack.layers().size()) - 1;
  for (int l = stack.gap_index() + step; l >= 0 && l <= n; l += step) {
    out.push_back(stack.layers()[l]);
  }
  return out;
}

bool is_single_slab_wall(const std::vector<Layer>& wall) {
  return wall.size() == 2 && !wall[0].semi_infinite() && !wall[0].material.is_vacuum() &&
         !wall[0].material.is_mirror() && wall[1].semi_infinite() && wall[1].material.is_vacuum();
}

// Characteristic frequency scale of a material's dispersion, or 0 when it
// has none (vacuum, perfect mirror).
double material_xi_scale(const PermittivityModel& m) {
  switch (m.kind()) {
    case PermittivityModel::Kind::Vacuum:
    case PermittivityModel::Kind::PerfectMirror:
      return 0.0;
    case PermittivityModel::Kind::DrudeLorentz: {
      const auto& p = m.drude();
      if (p.omega_p == 0.0) return 0.0;
      return p.omega0 > 0.0 ? p.omega0 : p.omega_p;
    }
    case PermittivityModel::Kind::Tabulated: {
      // first grid node where eps - 1 has dropped to half its static value
      const auto& tab = m.table();
      const double half = 0.5 * (tab.front().second - 1.0);
      if (half <= 0.0) return 0.0;
      for (const auto& [xi, eps] : tab) {
        if (eps - 1.0 <= half && xi > 0.0) return xi;
      }
      return tab.back().first;
    }
  }
  return 0.0;
}

}  // namespace

std::vector<double> default_kappa_ladder(double d_ref) {
  if (!(d_ref > 0.0)) throw std::invalid_argument("default_kappa_ladder: d_ref must be > 0");
  std::vector<double> ladder(8);
  double kap = 1e-2 / d_ref;
  for (auto& v : ladder) {
    v = kap;
    kap /= 2.0;
  }
  return ladder;
}

double static_average(const Stack& stack, Polarization sigma, int m,
                      const std::vector<double>& kappa_ladder, double* err_estimate) {
  if (m < 1) throw std::invalid_argument("static_average: m must be >= 1");
  check_ladder(kappa_ladder);
  const QuadRule rphi = gauss_legendre_nodes(kAngularOrder, 0.0, M_PI / 2.0);
  std::vector<double> values;
  values.reserve(kappa_ladder.size());
  for (double kap : kappa_ladder) {
    const auto x = product_samples(stack, sigma, kap, rphi);
    double acc = 0.0;
    for (int j = 0; j < rphi.nodes.size(); ++j) {
      acc += rphi.weights[j] * std::sin(rphi.nodes[j]) * std::pow(x[j], m);
    }
    values.push_back(acc);
  }
  return richardson_limit(values, 2.0, err_estimate);
}

StaticAverages compute_static_averages(const Stack& stack, int max_power,
                                       const std::vector<double>& kappa_ladder) {
  check_ladder(kappa_ladder);
  const QuadRule rphi = gauss_legendre_nodes(kAngularOrder, 0.0, M_PI / 2.0);
  StaticAverages out;
  for (int p = 0; p < 2; ++p) {
    const Polarization sigma = (p == 0) ? Polarization::s : Polarization::p;
    // one reflection pass per (kappa, phi) serves all powers
    std::vector<std::vector<double>> ladder_values(max_power);
    for (double kap : kappa_ladder) {
      const auto x = product_samples(stack, sigma, kap, rphi);
      std::vector<double> xm(x.size(), 1.0);
      for (int m = 1; m <= max_power; ++m) {
        double acc = 0.0;
        for (int j = 0; j < rphi.nodes.size(); ++j) {
          xm[j] *= x[j];
          acc += rphi.weights[j] * std::sin(rphi.nodes[j]) * xm[j];
        }
        ladder_values[m - 1].push_back(acc);
      }
    }
    out.values[p].resize(max_power);
    for (int m = 1; m <= max_power; ++m) {
      double err = 0.0;
      out.values[p][m - 1] = richardson_limit(ladder_values[m - 1], 2.0, &err);
      out.err_estimate = std::max(out.err_estimate, err);
    }
  }
  return out;
}

double long_distance_standard(const Stack& stack, double d, int max_terms) {
  if (classify_distance_law(stack) != -4) {
    throw std::logic_error("long_distance_standard: stack has a single-slab wall");
  }
  const auto avgs = compute_static_averages(stack, max_terms, default_kappa_ladder(d));
  double sum = 0.0;
  for (int p = 0; p < 2; ++p) {
    for (int m = 1; m <= max_terms; ++m) sum += avgs.values[p][m - 1] / std::pow(m, 4);
  }
  const double f0 = hbar * c_light * M_PI * M_PI / (240.0 * std::pow(d, 4));
  return f0 / (2.0 * zeta4()) * sum;
}

SlabCoefficients slab_coefficients(const Stack& stack, const std::vector<double>& kappa_ladder) {
  if (classify_distance_law(stack) != -6) {
    throw std::logic_error("slab_coefficients: both walls must be single slabs");
  }
  check_ladder(kappa_ladder);
  const QuadRule rphi = gauss_legendre_nodes(kAngularOrder, 0.0, M_PI / 2.0);
  SlabCoefficients out;
  for (int p = 0; p < 2; ++p) {
    const Polarization sigma = (p == 0) ? Polarization::s : Polarization::p;
    std::vector<double> values;
    for (double kap : kappa_ladder) {
      const auto x = product_samples(stack, sigma, kap, rphi);
      double acc = 0.0;
      for (int j = 0; j < rphi.nodes.size(); ++j) {
        acc += rphi.weights[j] * std::sin(rphi.nodes[j]) * x[j];
      }
      values.push_back(acc / (kap * kap));
    }
    double err = 0.0;
    const double lim = richardson_limit(values, 2.0, &err);
    (p == 0 ? out.r_bar_s : out.r_bar_p) = lim;
    out.err_estimate = std::max(out.err_estimate, err);
  }
  return out;
}

double long_distance_slab(const SlabCoefficients& coeffs, double d) {
  return 15.0 * hbar * c_light / (16.0 * M_PI * M_PI * std::pow(d, 6)) *
         (coeffs.r_bar_s + coeffs.r_bar_p);
}

double long_distance_slab(const Stack& stack, double d) {
  return long_distance_slab(slab_coefficients(stack, default_kappa_ladder(d)), d);
}

int classify_distance_law(const Stack& stack) {
  const int slabs = static_cast<int>(is_single_slab_wall(wall_layers(stack, +1))) +
                    static_cast<int>(is_single_slab_wall(wall_layers(stack, -1)));
  return -4 - slabs;
}

ValidityScales validity_scales(const Stack& stack) {
  ValidityScales out;
  for (int step : {+1, -1}) {
    for (const Layer& layer : wall_layers(stack, step)) {
      const double xi_l = material_xi_scale(layer.material);
      if (xi_l > 0.0) out.d_min_freq = std::max(out.d_min_freq, c_light / xi_l);
      if (!layer.semi_infinite() && !layer.material.is_mirror()) {
        const double eps = layer.material.epsilon_imag_axis(xi_l > 0.0 ? xi_l : 0.0);
        out.d_min_geom = std::max(out.d_min_geom, std::sqrt(eps) * layer.thickness);
      }
    }
  }
  return out;
}

double short_distance_numeric(const Stack& stack, double d, const QuadratureSettings& settings) {
  validate(settings);
  if (!(d > 0.0)) throw std::domain_error("short_distance_numeric: d must be > 0");
  const Layer& above = stack.layers()[stack.gap_index() + 1];
  const Layer& below = stack.layers()[stack.gap_index() - 1];
  for (const Layer* l : {&above, &below}) {
    if (l->material.is_mirror()) {
      throw std::domain_error("short_distance_numeric: gap-adjacent perfect mirror has no "
                              "short-distance dispersion scale");
    }
    if (!l->semi_infinite() && l->thickness < 10.0 * d) {
      throw std::domain_error("short_distance_numeric: gap-adjacent layer must be thick "
                              "compared to d");
    }
  }
  if (above.material.is_vacuum() || below.material.is_vacuum()) return 0.0;

  const double s_above = material_xi_scale(above.material);
  const double s_below = material_xi_scale(below.material);
  const double scale = std::max({s_above, s_below, 1.0});

  const QuadRule rv = gauss_laguerre_nodes(settings.radial_order);
  // B = 1/A; the v-integral is sum w v^2 B / (1 - B e^{-v})
  const auto inner = [&](double xi) {
    const double ea = above.material.epsilon_imag_axis(xi);
    const double eb = below.material.epsilon_imag_axis(xi);
    if (ea <= 1.0 || eb <= 1.0) return 0.0;
    const double big_b = (ea - 1.0) * (eb - 1.0) / ((ea + 1.0) * (eb + 1.0));
    double acc = 0.0;
    for (int i = 0; i < rv.nodes.size(); ++i) {
      const double v = rv.nodes[i];
      acc += rv.weights[i] * v * v * big_b / (1.0 - big_b * std::exp(-v));
    }
    return acc;
  };

  // xi = scale * u / (1 - u), composite panels graded toward u = 1
  const double edges[] = {0.0, 0.5, 0.8, 0.95, 0.995, 1.0};
  double total = 0.0;
  for (int p = 0; p + 1 < 6; ++p) {
    const QuadRule ru = gauss_legendre_nodes(32, edges[p], edges[p + 1]);
    for (int i = 0; i < ru.nodes.size(); ++i) {
      const double u = ru.nodes[i];
      const double xi = scale * u / (1.0 - u);
      const double jac = scale / ((1.0 - u) * (1.0 - u));
      total += ru.weights[i] * jac * inner(xi);
    }
  }
  return hbar / (16.0 * M_PI * M_PI * std::pow(d, 3)) * total;
}

namespace {

void check_small_damping(const DrudeLorentzParams& p) {
  if (p.gamma0 == 0.0) return;
  if (!(p.gamma0 < 2.0 * p.omega_p)) {
    throw std::domain_error("short-distance closed form requires gamma0 << 2 Omega "
                            "(gamma0 < 2 omega_p violated)");
  }
  if (!(p.gamma0 * p.gamma0 / 4.0 < p.omega0 * p.omega0)) {
    throw std::domain_error("short-distance closed form requires gamma0^2/4 < omega0^2");
  }
}

}  // namespace

double short_distance_closed_form(const DrudeLorentzParams& params, double d) {
  if (!(d > 0.0)) throw std::domain_error("short_distance_closed_form: d must be > 0");
  if (params.omega_p == 0.0) return 0.0;
  check_small_damping(params);
  const double w2 = params.omega0 * params.omega0 + params.omega_p * params.omega_p / 2.0;
  const double z = std::pow(params.omega_p, 4) / (64.0 * w2 * w2);
  return hbar / (2.0 * M_PI * std::pow(d, 3)) * std::sqrt(w2) * tilde_li2(z);
}

double short_distance_error_bound(const DrudeLorentzParams& params) {
  if (params.gamma0 == 0.0) return 0.0;
  if (!(params.omega_p > 0.0)) {
    throw std::domain_error("short_distance_error_bound: omega_p must be > 0");
  }
  check_small_damping(params);
  const double alpha_sq =
      (params.omega0 * params.omega0 - params.gamma0 * params.gamma0 / 4.0) /
      (params.omega_p * params.omega_p);
  const double x = alpha_sq + 0.5;
  const double f = polylog(3, 1.0 / (4.0 * x * x)) /
                   (8.0 * M_PI * std::sqrt(x) * tilde_li2(1.0 / (64.0 * x * x)));
  return params.gamma0 / params.omega_p * f;
}

double local_exponent(const std::vector<std::pair<double, double>>& pressure_curve, int at_index) {
  const int n = static_cast<int>(pressure_curve.size());
  if (at_index <= 0 || at_index >= n - 1) {
    throw std::logic_error("local_exponent: index must be interior");
  }
  const auto& [dm, fm] = pressure_curve[at_index - 1];
  const auto& [dp, fp] = pressure_curve[at_index + 1];
  if (!(fm > 0.0 && fp > 0.0 && dm > 0.0 && dp > 0.0)) {
    throw std::domain_error("local_exponent: curve values must be positive");
  }
  return -(std::log(fp) - std::log(fm)) / (std::log(dp) - std::log(dm));
}

}  // namespace caslab
