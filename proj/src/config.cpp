#include "caslab/config.hpp"

#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

namespace caslab {

using nlohmann::json;

std::string ConfigError::join(const std::vector<std::string>& v) {
  std::ostringstream os;
  os << "configuration invalid:";
  for (const auto& s : v) os << "\n  - " << s;
  return os.str();
}

DrudeLorentzParams preset_params(const std::string& name) {
  if (name == "si_like") return DrudeLorentzParams{2.0e15, 6.536e15, 9.859e12};
  if (name == "mg_like") return DrudeLorentzParams{1.0e9, 1.6176e16, 9.7e14};
  throw std::invalid_argument("unknown material preset: " + name);
}

PermittivityModel preset_material(const std::string& name) {
  if (name == "vacuum") return PermittivityModel::vacuum();
  if (name == "perfect_mirror") return PermittivityModel::perfect_mirror();
  return PermittivityModel::drude_lorentz(preset_params(name));
}

namespace {

struct Collector {
  std::vector<std::string> errors;
  void add(const std::string& path, const std::string& msg) { errors.push_back(path + ": " + msg); }
};

double require_number(const json& j, const std::string& path, Collector& errs, double fallback = 0.0) {
  if (!j.is_number()) {
    errs.add(path, "expected a number");
    return fallback;
  }
  return j.get<double>();
}

PermittivityModel parse_material(const json& j, const std::string& path, Collector& errs) {
  try {
    if (j.is_string()) return preset_material(j.get<std::string>());
    if (!j.is_object() || !j.contains("kind")) {
      errs.add(path, "material must be an object with a \"kind\" field or a preset name");
      return PermittivityModel::vacuum();
    }
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "vacuum") return PermittivityModel::vacuum();
    if (kind == "perfect_mirror") return PermittivityModel::perfect_mirror();
    if (kind == "preset") return preset_material(j.at("name").get<std::string>());
    if (kind == "drude_lorentz") {
      DrudeLorentzParams p;
      p.omega0 = require_number(j.at("omega0"), path + ".omega0", errs);
      p.omega_p = require_number(j.at("omega_p"), path + ".omega_p", errs);
      p.gamma0 = require_number(j.at("gamma0"), path + ".gamma0", errs);
      return PermittivityModel::drude_lorentz(p);
    }
    if (kind == "tabulated") {
      std::vector<std::pair<double, double>> pts;
      for (const auto& row : j.at("points")) {
        pts.emplace_back(row.at(0).get<double>(), row.at(1).get<double>());
      }
      return PermittivityModel::tabulated(std::move(pts));
    }
    errs.add(path, "unknown material kind \"" + kind + "\"");
  } catch (const std::exception& e) {
    errs.add(path, e.what());
  }
  return PermittivityModel::vacuum();
}

double parse_thickness(const json& j, const std::string& path, Collector& errs) {
  if (j.is_string()) {
    if (j.get<std::string>() == "semi_infinite") return std::numeric_limits<double>::infinity();
    errs.add(path, "thickness must be a positive number or \"semi_infinite\"");
    return 1.0;
  }
  const double d = require_number(j, path, errs, 1.0);
  if (!(d > 0.0)) {
    errs.add(path, "thickness must be > 0");
    return 1.0;
  }
  return d;
}

json material_to_json(const PermittivityModel& m) {
  switch (m.kind()) {
    case PermittivityModel::Kind::Vacuum:
      return json{{"kind", "vacuum"}};
    case PermittivityModel::Kind::PerfectMirror:
      return json{{"kind", "perfect_mirror"}};
    case PermittivityModel::Kind::DrudeLorentz: {
      const auto& p = m.drude();
      return json{{"kind", "drude_lorentz"}, {"omega0", p.omega0}, {"omega_p", p.omega_p},
                  {"gamma0", p.gamma0}};
    }
    case PermittivityModel::Kind::Tabulated: {
      json pts = json::array();
      for (const auto& [xi, eps] : m.table()) pts.push_back(json::array({xi, eps}));
      return json{{"kind", "tabulated"}, {"points", pts}};
    }
  }
  return json{};
}

}  // namespace

RunConfig parse_config_json(const json& root) {
  Collector errs;
  std::vector<std::string> warnings;

  std::vector<Layer> layers;
  int gap_index = -1;
  if (!root.contains("stack") || !root["stack"].is_object()) {
    errs.add("stack", "missing stack section");
  } else {
    const json& s = root["stack"];
    if (!s.contains("layers") || !s["layers"].is_array() || s["layers"].size() < 3) {
      errs.add("stack.layers", "need an array of at least three layers");
    } else {
      int i = 0;
      for (const auto& lj : s["layers"]) {
        const std::string path = "stack.layers[" + std::to_string(i) + "]";
        Layer layer;
        layer.thickness = parse_thickness(lj.contains("thickness") ? lj["thickness"] : json(),
                                          path + ".thickness", errs);
        layer.material = parse_material(lj.contains("material") ? lj["material"] : json(),
                                        path + ".material", errs);
        layers.push_back(std::move(layer));
        ++i;
      }
    }
    gap_index = s.value("gap_index", -1);
    if (gap_index < 0) errs.add("stack.gap_index", "missing or negative");
  }

  // gap permittivity is fixed at unity; coerce with a warning
  if (gap_index >= 0 && gap_index < static_cast<int>(layers.size()) &&
      !layers[gap_index].material.is_vacuum()) {
    warnings.push_back("stack.layers[" + std::to_string(gap_index) +
                       "].material: gap permittivity set equal to unity");
    layers[gap_index].material = PermittivityModel::vacuum();
  }

  QuadratureSettings qs;
  if (root.contains("quadrature")) {
    const json& q = root["quadrature"];
    qs.radial_order = q.value("radial_order", qs.radial_order);
    qs.angular_order = q.value("angular_order", qs.angular_order);
    qs.target_rel_err = q.value("target_rel_err", qs.target_rel_err);
    const std::string scheme = q.value("scheme", std::string("laguerre"));
    if (scheme == "laguerre") {
      qs.scheme = Scheme::Laguerre;
    } else if (scheme == "finite_domain") {
      qs.scheme = Scheme::FiniteDomain;
    } else {
      errs.add("quadrature.scheme", "must be \"laguerre\" or \"finite_domain\"");
    }
    try {
      validate(qs);
    } catch (const std::exception& e) {
      errs.add("quadrature", e.what());
    }
  }

  MatsubaraSettings ms;
  if (root.contains("matsubara")) {
    const json& m = root["matsubara"];
    ms.xi0_fraction = m.value("xi0_fraction", ms.xi0_fraction);
    ms.tail_rel_tol = m.value("tail_rel_tol", ms.tail_rel_tol);
    ms.max_terms = m.value("max_terms", ms.max_terms);
    try {
      validate(ms);
    } catch (const std::exception& e) {
      errs.add("matsubara", e.what());
    }
  }

  bool finite_t = false;
  double temperature = 0.0;
  const std::string mode = root.value("mode", std::string("zero_T"));
  if (mode == "finite_T") {
    finite_t = true;
    temperature = root.value("temperature", 0.0);
    if (!(temperature > 0.0)) errs.add("temperature", "finite_T mode requires temperature > 0");
  } else if (mode != "zero_T") {
    errs.add("mode", "must be \"zero_T\" or \"finite_T\"");
  }

  std::optional<SweepConfig> sweep;
  if (root.contains("sweep")) {
    SweepConfig sc;
    const json& sw = root["sweep"];
    if (!sw.contains("axes") || !sw["axes"].is_array() || sw["axes"].empty() ||
        sw["axes"].size() > 2) {
      errs.add("sweep.axes", "need 1 or 2 axes");
    } else {
      int i = 0;
      for (const auto& aj : sw["axes"]) {
        const std::string path = "sweep.axes[" + std::to_string(i) + "]";
        SweepAxis ax;
        ax.parameter = aj.value("parameter", std::string());
        if (ax.parameter.empty()) errs.add(path + ".parameter", "missing");
        const std::string scale = aj.value("scale", std::string("linear"));
        if (scale == "log") {
          ax.log_scale = true;
        } else if (scale != "linear") {
          errs.add(path + ".scale", "must be \"linear\" or \"log\"");
        }
        ax.min = aj.value("min", 0.0);
        ax.max = aj.value("max", 0.0);
        ax.count = aj.value("count", 0);
        if (ax.count < 2) errs.add(path + ".count", "must be >= 2");
        if (!(ax.min < ax.max)) errs.add(path, "min must be < max");
        if (ax.log_scale && !(ax.min > 0.0)) errs.add(path, "log scale requires min > 0");
        sc.axes.push_back(std::move(ax));
        ++i;
      }
    }
    if (sw.contains("output")) {
      sc.output.path = sw["output"].value("path", std::string());
      sc.output.format = sw["output"].value("format", std::string("csv"));
      if (sc.output.format != "csv" && sc.output.format != "json") {
        errs.add("sweep.output.format", "must be \"csv\" or \"json\"");
      }
    }
    sweep = std::move(sc);
  }

  if (!errs.errors.empty()) throw ConfigError(std::move(errs.errors));

  try {
    RunConfig cfg{Stack(std::move(layers), gap_index), finite_t, temperature,
                  qs, ms, std::move(sweep), std::move(warnings)};
    return cfg;
  } catch (const std::exception& e) {
    throw ConfigError({std::string("stack: ") + e.what()});
  }
}

RunConfig parse_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError({"cannot open config file: " + path});
  json root;
  try {
    in >> root;
  } catch (const std::exception& e) {
    throw ConfigError({std::string("JSON parse error: ") + e.what()});
  }
  return parse_config_json(root);
}

json to_json(const RunConfig& cfg) {
  json layers = json::array();
  for (const Layer& l : cfg.stack.layers()) {
    json lj;
    lj["thickness"] = l.semi_infinite() ? json("semi_infinite") : json(l.thickness);
    lj["material"] = material_to_json(l.material);
    layers.push_back(std::move(lj));
  }
  json root;
  root["stack"] = {{"layers", layers}, {"gap_index", cfg.stack.gap_index()}};
  root["mode"] = cfg.finite_temperature ? "finite_T" : "zero_T";
  if (cfg.finite_temperature) root["temperature"] = cfg.temperature;
  root["quadrature"] = {
      {"radial_order", cfg.quadrature.radial_order},
      {"angular_order", cfg.quadrature.angular_order},
      {"scheme", cfg.quadrature.scheme == Scheme::Laguerre ? "laguerre" : "finite_domain"},
      {"target_rel_err", cfg.quadrature.target_rel_err}};
  root["matsubara"] = {{"xi0_fraction", cfg.matsubara.xi0_fraction},
                       {"tail_rel_tol", cfg.matsubara.tail_rel_tol},
                       {"max_terms", cfg.matsubara.max_terms}};
  if (cfg.sweep) {
    json axes = json::array();
    for (const SweepAxis& ax : cfg.sweep->axes) {
      axes.push_back({{"parameter", ax.parameter},
                      {"scale", ax.log_scale ? "log" : "linear"},
                      {"min", ax.min},
                      {"max", ax.max},
                      {"count", ax.count}});
    }
    root["sweep"] = {{"axes", axes},
                     {"output", {{"path", cfg.sweep->output.path}, {"format", cfg.sweep->output.format}}}};
  }
  return root;
}

std::vector<double> axis_grid(const SweepAxis& axis) {
  std::vector<double> grid(axis.count);
  for (int i = 0; i < axis.count; ++i) {
    const double w = static_cast<double>(i) / (axis.count - 1);
    grid[i] = axis.log_scale ? axis.min * std::pow(axis.max / axis.min, w)
                             : axis.min + (axis.max - axis.min) * w;
  }
  return grid;
}

namespace {

PermittivityModel with_drude_field(const PermittivityModel& m, const std::string& field, double value) {
  DrudeLorentzParams p = m.drude();
  if (field == "omega0") {
    p.omega0 = value;
  } else if (field == "omega_p") {
    p.omega_p = value;
  } else if (field == "gamma0") {
    p.gamma0 = value;
  } else {
    throw std::invalid_argument("unknown material field: " + field);
  }
  return PermittivityModel::drude_lorentz(p);
}

}  // namespace

Stack apply_parameter(const Stack& stack, const std::string& parameter, double value) {
  if (parameter == "d" || parameter == "gap_thickness") {
    return stack.with_gap_thickness(value);
  }
  std::vector<Layer> layers = stack.layers();
  const int gap = stack.gap_index();

  if (parameter == "wall_thickness") {
    for (int l = 0; l < static_cast<int>(layers.size()); ++l) {
      if (l != gap && !layers[l].semi_infinite()) layers[l].thickness = value;
    }
    return Stack(std::move(layers), gap);
  }
  if (parameter == "omega0" || parameter == "omega_p" || parameter == "gamma0") {
    for (Layer& l : layers) {
      if (l.material.kind() == PermittivityModel::Kind::DrudeLorentz) {
        l.material = with_drude_field(l.material, parameter, value);
      }
    }
    return Stack(std::move(layers), gap);
  }
  if (parameter.rfind("layers.", 0) == 0) {
    const std::size_t dot = parameter.find('.', 7);
    if (dot != std::string::npos) {
      const int idx = std::stoi(parameter.substr(7, dot - 7));
      const std::string field = parameter.substr(dot + 1);
      if (idx < 0 || idx >= static_cast<int>(layers.size())) {
        throw std::invalid_argument("sweep parameter layer index out of range: " + parameter);
      }
      if (field == "thickness") {
        if (idx == gap) return stack.with_gap_thickness(value);
        layers[idx].thickness = value;
      } else {
        layers[idx].material = with_drude_field(layers[idx].material, field, value);
      }
      return Stack(std::move(layers), gap);
    }
  }
  throw std::invalid_argument("unknown sweep parameter: " + parameter);
}

}  // namespace caslab
