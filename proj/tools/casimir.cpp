#include <cstdio>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "caslab/asymptotics.hpp"
#include "caslab/config.hpp"
#include "caslab/oned.hpp"
#include "caslab/sweep.hpp"

namespace {

constexpr int kExitConfig = 2;
constexpr int kExitNumeric = 3;

std::ostream* open_output(const std::string& path, std::ofstream& file) {
  if (path.empty()) return &std::cout;
  file.open(path);
  if (!file) {
    std::cerr << "cannot open output file: " << path << "\n";
    return nullptr;
  }
  return &file;
}

int cmd_force(const caslab::RunConfig& cfg, double distance, const std::string& out_path,
              const std::string& format) {
  caslab::Stack stack = distance > 0.0 ? cfg.stack.with_gap_thickness(distance) : cfg.stack;
  caslab::ForceResult res;
  try {
    res = cfg.finite_temperature
              ? caslab::force_finite_temperature(stack, cfg.temperature, cfg.matsubara, cfg.quadrature)
              : caslab::force_zero_temperature(stack, cfg.quadrature);
  } catch (const std::exception& e) {
    std::cerr << "numeric failure: " << e.what() << "\n";
    return kExitNumeric;
  }
  std::printf("d              = %.9g m\n", stack.gap_thickness());
  std::printf("pressure       = %.9g N/m^2\n", res.pressure);
  std::printf("F0             = %.9g N/m^2\n", caslab::casimir_ideal(stack.gap_thickness()));
  std::printf("F/F0           = %.9g\n", res.f_over_f0);
  std::printf("rel_err (est.) = %.3g\n", res.rel_err_estimate);
  std::printf("scheme         = %s (%ld evaluations)\n", res.scheme_used.c_str(), res.evaluations);
  if (!out_path.empty() && format == "json") {
    std::ofstream f;
    std::ostream* os = open_output(out_path, f);
    if (!os) return kExitConfig;
    nlohmann::json j{{"d", stack.gap_thickness()},
                     {"pressure_N_per_m2", res.pressure},
                     {"f0_N_per_m2", caslab::casimir_ideal(stack.gap_thickness())},
                     {"f_over_f0", res.f_over_f0},
                     {"rel_err", res.rel_err_estimate},
                     {"scheme", res.scheme_used}};
    *os << j.dump(2) << "\n";
  }
  return 0;
}

int cmd_sweep(const caslab::RunConfig& cfg, int threads, std::string out_path, std::string format,
              bool oned) {
  if (!cfg.sweep) {
    std::cerr << "config has no sweep section\n";
    return kExitConfig;
  }
  if (out_path.empty()) out_path = cfg.sweep->output.path;
  if (format.empty()) format = cfg.sweep->output.format;

  std::vector<caslab::SweepRow> rows;
  try {
    rows = caslab::run_sweep(cfg, threads, oned);
  } catch (const std::exception& e) {
    std::cerr << "numeric failure: " << e.what() << "\n";
    return kExitNumeric;
  }
  bool any_ok = false;
  for (const auto& r : rows) any_ok = any_ok || r.status == "ok";
  std::ofstream f;
  std::ostream* os = open_output(out_path, f);
  if (!os) return kExitConfig;
  const int naxes = static_cast<int>(cfg.sweep->axes.size());
  if (format == "json") {
    caslab::write_rows_json(*os, rows, naxes);
  } else {
    caslab::write_rows_csv(*os, rows, naxes);
  }
  if (!any_ok) {
    std::cerr << "every sweep point failed\n";
    return kExitNumeric;
  }
  return 0;
}

int cmd_asymptote(const caslab::RunConfig& cfg, double margin) {
  try {
    const int law = caslab::classify_distance_law(cfg.stack);
    const auto scales = caslab::validity_scales(cfg.stack);
    const double d_scale = std::max({scales.d_min_freq, scales.d_min_geom, cfg.stack.gap_thickness()});
    const double d_large = margin * d_scale;

    std::printf("distance-law class     = d^%d\n", law);
    std::printf("validity scales        = %.6g m (frequency), %.6g m (geometry)\n",
                scales.d_min_freq, scales.d_min_geom);
    std::printf("comparison distance    = %.6g m (margin %g)\n", d_large, margin);

    double prediction = 0.0;
    if (law == -4) {
      prediction = caslab::long_distance_standard(cfg.stack, d_large);
    } else if (law == -6) {
      prediction = caslab::long_distance_slab(cfg.stack, d_large);
    }
    const caslab::ForceResult full =
        caslab::force_zero_temperature(cfg.stack.with_gap_thickness(d_large), cfg.quadrature);
    if (law != -5) {
      std::printf("asymptotic prediction  = %.9g N/m^2\n", prediction);
    }
    std::printf("full integral          = %.9g N/m^2\n", full.pressure);
    if (law != -5 && full.pressure != 0.0) {
      std::printf("prediction / full      = %.6g\n", prediction / full.pressure);
    }

    // measured exponent from a short log-spaced curve around d_large
    std::vector<std::pair<double, double>> curve;
    for (int k = -1; k <= 1; ++k) {
      const double d = d_large * std::pow(1.3, k);
      curve.emplace_back(
          d, caslab::force_zero_temperature(cfg.stack.with_gap_thickness(d), cfg.quadrature).pressure);
    }
    std::printf("measured local exponent= %.4f\n", caslab::local_exponent(curve, 1));
  } catch (const std::exception& e) {
    std::cerr << "numeric failure: " << e.what() << "\n";
    return kExitNumeric;
  }
  return 0;
}

int cmd_oned(const caslab::RunConfig& cfg, double distance, int threads, const std::string& out_path,
             const std::string& format) {
  if (cfg.sweep) return cmd_sweep(cfg, threads, out_path, format, /*oned=*/true);
  caslab::Stack stack = distance > 0.0 ? cfg.stack.with_gap_thickness(distance) : cfg.stack;
  try {
    const caslab::OneDForceResult r = caslab::force_1d_zero_temperature(stack, cfg.quadrature);
    const double force = 2.0 * r.force_per_area_unit;  // both polarization channels
    std::printf("d                 = %.9g m\n", stack.gap_thickness());
    std::printf("force (A = 1 m^2) = %.9g N\n", force);
    std::printf("F0_1D (A = 1 m^2) = %.9g N\n", caslab::ideal_1d_force(stack.gap_thickness(), 2));
    std::printf("F/F0 (1D)         = %.9g\n",
                force / caslab::ideal_1d_force(stack.gap_thickness(), 2));
    std::printf("rel_err (est.)    = %.3g\n", r.rel_err_estimate);
  } catch (const std::exception& e) {
    std::cerr << "numeric failure: " << e.what() << "\n";
    return kExitNumeric;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Casimir pressure between multilayer dielectric walls"};
  app.require_subcommand(1);

  std::string config_path, out_path, format;
  int threads = 0;
  app.add_option("--config", config_path, "JSON run configuration")->required();
  app.add_option("--out", out_path, "output file (default: stdout)");
  app.add_option("--format", format, "output format: csv | json");
  app.add_option("--threads", threads, "worker threads for sweeps (0 = auto)");

  double distance = 0.0;
  double margin = 100.0;
  auto* force = app.add_subcommand("force", "single-point pressure evaluation");
  force->add_option("--distance", distance, "override the gap thickness (m)");
  auto* sweep = app.add_subcommand("sweep", "parameter sweep to CSV/JSON");
  auto* asymptote = app.add_subcommand("asymptote", "distance-law classification and asymptotics");
  asymptote->add_option("--margin", margin, "multiple of the validity scale for comparisons");
  auto* oned = app.add_subcommand("oned", "1D force evaluation / sweep");
  oned->add_option("--distance", distance, "override the gap thickness (m)");
  auto* validate_cmd = app.add_subcommand("validate", "parse and validate the configuration");

  CLI11_PARSE(app, argc, argv);

  caslab::RunConfig* cfg = nullptr;
  std::optional<caslab::RunConfig> parsed;
  try {
    parsed = caslab::parse_config(config_path);
    cfg = &*parsed;
  } catch (const caslab::ConfigError& e) {
    std::cerr << e.what() << "\n";
    return kExitConfig;
  }
  for (const auto& w : cfg->warnings) std::cerr << "warning: " << w << "\n";

  if (validate_cmd->parsed()) {
    std::printf("configuration ok (%zu layers, gap at index %d)\n", cfg->stack.layers().size(),
                cfg->stack.gap_index());
    return 0;
  }
  if (force->parsed()) return cmd_force(*cfg, distance, out_path, format);
  if (sweep->parsed()) return cmd_sweep(*cfg, threads, out_path, format, false);
  if (asymptote->parsed()) return cmd_asymptote(*cfg, margin);
  if (oned->parsed()) return cmd_oned(*cfg, distance, threads, out_path, format);
  return 0;
}
