#pragma once

#include <iosfwd>
#include <vector>

#include "caslab/config.hpp"

namespace caslab {

struct SweepRow {
  double axis1 = 0.0;
  double axis2 = 0.0;  // unused for 1-axis sweeps
  double pressure = 0.0;
  double f0 = 0.0;
  double f_over_f0 = 0.0;
  double rel_err = 0.0;
  std::string status = "ok";
};

/// Row-major grid over the sweep axes; per-point failures are recorded with
/// status != "ok" and the run continues. Deterministic for any thread count.
/// `oned` switches the kernel to the two-channel 1D force (pressure column
/// then holds the force in N on a 1 m^2 normalization area).
std::vector<SweepRow> run_sweep(const RunConfig& cfg, int threads = 0, bool oned = false);

void write_rows_csv(std::ostream& os, const std::vector<SweepRow>& rows, int naxes);
void write_rows_json(std::ostream& os, const std::vector<SweepRow>& rows, int naxes);

}  // namespace caslab
