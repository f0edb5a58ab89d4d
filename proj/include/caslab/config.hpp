#pragma once

#include <optional>
#include <string>
#include <vector>

#include "caslab/force.hpp"
#include "caslab/stack.hpp"

// vendored single-header nlohmann/json
#include "json.hpp"

namespace caslab {

struct ConfigError : std::runtime_error {
  std::vector<std::string> violations;
  explicit ConfigError(std::vector<std::string> v)
      : std::runtime_error(join(v)), violations(std::move(v)) {}
  static std::string join(const std::vector<std::string>& v);
};

struct SweepAxis {
  std::string parameter;  // "d", "wall_thickness", "omega0", ..., "layers.<i>.<field>"
  bool log_scale = false;
  double min = 0.0;
  double max = 0.0;
  int count = 0;
};

struct SweepOutput {
  std::string path;            // empty = stdout
  std::string format = "csv";  // csv | json
};

struct SweepConfig {
  std::vector<SweepAxis> axes;  // 1 or 2
  SweepOutput output;
};

struct RunConfig {
  Stack stack;
  bool finite_temperature = false;
  double temperature = 0.0;
  QuadratureSettings quadrature;
  MatsubaraSettings matsubara;
  std::optional<SweepConfig> sweep;
  std::vector<std::string> warnings;
};

/// Built-in Drude-Lorentz presets matching the standard parameter sets.
DrudeLorentzParams preset_params(const std::string& name);  // "si_like" | "mg_like"
PermittivityModel preset_material(const std::string& name);

/// Parse and validate; throws ConfigError listing every violation.
RunConfig parse_config(const std::string& path);
RunConfig parse_config_json(const nlohmann::json& j);

nlohmann::json to_json(const RunConfig& cfg);

/// Grid of axis values (linear or log spacing, inclusive endpoints).
std::vector<double> axis_grid(const SweepAxis& axis);

/// Apply a sweep parameter to a stack, returning the modified stack.
Stack apply_parameter(const Stack& stack, const std::string& parameter, double value);

}  // namespace caslab
