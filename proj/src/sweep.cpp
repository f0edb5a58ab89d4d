#include "caslab/sweep.hpp"

#include <cstdio>
#include <ostream>
#include <thread>

#include "caslab/oned.hpp"

namespace caslab {

namespace {

SweepRow evaluate_point(const RunConfig& cfg, const std::vector<SweepAxis>& axes,
                        double v1, double v2, bool oned) {
  SweepRow row;
  row.axis1 = v1;
  row.axis2 = v2;
  try {
    Stack stack = apply_parameter(cfg.stack, axes[0].parameter, v1);
    if (axes.size() == 2) stack = apply_parameter(stack, axes[1].parameter, v2);

    if (oned) {
      OneDForceResult r = force_1d_zero_temperature(stack, cfg.quadrature);
      row.pressure = 2.0 * r.force_per_area_unit;
      row.f0 = ideal_1d_force(stack.gap_thickness(), 2);
      row.f_over_f0 = row.pressure / row.f0;
      row.rel_err = r.rel_err_estimate;
    } else {
      ForceResult r = cfg.finite_temperature
                          ? force_finite_temperature(stack, cfg.temperature, cfg.matsubara, cfg.quadrature)
                          : force_zero_temperature(stack, cfg.quadrature);
      row.pressure = r.pressure;
      row.f0 = casimir_ideal(stack.gap_thickness());
      row.f_over_f0 = r.f_over_f0;
      row.rel_err = r.rel_err_estimate;
    }
  } catch (const std::exception& e) {
    row.status = "error";
    std::fprintf(stderr, "sweep point (%.17g, %.17g) failed: %s\n", v1, v2, e.what());
  }
  return row;
}

}  // namespace

std::vector<SweepRow> run_sweep(const RunConfig& cfg, int threads, bool oned) {
  if (!cfg.sweep) throw std::logic_error("run_sweep: config has no sweep section");
  const auto& axes = cfg.sweep->axes;
  const std::vector<double> g1 = axis_grid(axes[0]);
  const std::vector<double> g2 =
      axes.size() == 2 ? axis_grid(axes[1]) : std::vector<double>{0.0};

  const std::size_t total = g1.size() * g2.size();
  std::vector<SweepRow> rows(total);

  unsigned nthreads = threads > 0 ? static_cast<unsigned>(threads)
                                  : std::max(1u, std::thread::hardware_concurrency());
  nthreads = std::min<unsigned>(nthreads, total);

  auto worker = [&](unsigned tid) {
    for (std::size_t k = tid; k < total; k += nthreads) {
      const std::size_t i = k / g2.size(), j = k % g2.size();
      rows[k] = evaluate_point(cfg, axes, g1[i], g2[j], oned);
    }
  };
  if (nthreads <= 1) {
    worker(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < nthreads; ++t) pool.emplace_back(worker, t);
    for (auto& t : pool) t.join();
  }
  return rows;
}

namespace {

void append_g17(std::string& out, double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  out += buf;
}

}  // namespace

void write_rows_csv(std::ostream& os, const std::vector<SweepRow>& rows, int naxes) {
  os << (naxes == 2 ? "axis1,axis2," : "axis1,")
     << "pressure_N_per_m2,f0_N_per_m2,f_over_f0,rel_err,status\n";
  std::string line;
  for (const SweepRow& r : rows) {
    line.clear();
    append_g17(line, r.axis1);
    if (naxes == 2) {
      line += ',';
      append_g17(line, r.axis2);
    }
    for (double v : {r.pressure, r.f0, r.f_over_f0, r.rel_err}) {
      line += ',';
      append_g17(line, v);
    }
    line += ',';
    line += r.status;
    line += '\n';
    os << line;
  }
}

void write_rows_json(std::ostream& os, const std::vector<SweepRow>& rows, int naxes) {
  nlohmann::json arr = nlohmann::json::array();
  for (const SweepRow& r : rows) {
    nlohmann::json row;
    row["axis1"] = r.axis1;
    if (naxes == 2) row["axis2"] = r.axis2;
    row["pressure_N_per_m2"] = r.pressure;
    row["f0_N_per_m2"] = r.f0;
    row["f_over_f0"] = r.f_over_f0;
    row["rel_err"] = r.rel_err;
    row["status"] = r.status;
    arr.push_back(std::move(row));
  }
  os << arr.dump(2) << "\n";
}

}  // namespace caslab
