#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "locwave/experiment.hpp"
#include "locwave/lattice_operators.hpp"

namespace locwave::cli {

namespace {

using nlohmann::json;

std::string join_issues(const std::vector<std::string>& issues) {
  std::string text = "invalid config:";
  for (const std::string& issue : issues) text += "\n  - " + issue;
  return text;
}

// Strict object reader: every key must be consumed by a typed getter, and
// every problem is collected rather than thrown, so a bad config reports all
// of its mistakes at once.
class SchemaReader {
 public:
  SchemaReader(json node, std::string path, std::vector<std::string>& issues)
      : node_(std::move(node)), path_(std::move(path)), issues_(issues) {
    if (!node_.is_object()) {
      issues_.push_back(path_ + " must be a JSON object");
      valid_ = false;
    }
  }

  ~SchemaReader() {
    if (!valid_) return;
    for (const auto& item : node_.items()) {
      if (!consumed_.count(item.key())) {
        issues_.push_back("unknown key '" + item.key() + "' at " + path_);
      }
    }
  }

  bool has(const char* key) const { return valid_ && node_.contains(key); }

  double number(const char* key, std::optional<double> fallback = {}) {
    const json* value = fetch(key, fallback.has_value());
    if (!value) return fallback.value_or(0.0);
    if (!value->is_number()) {
      complain(key, "must be a number");
      return fallback.value_or(0.0);
    }
    return value->get<double>();
  }

  long long integer(const char* key, std::optional<long long> fallback = {}) {
    const json* value = fetch(key, fallback.has_value());
    if (!value) return fallback.value_or(0);
    if (!value->is_number_integer() && !value->is_number_unsigned()) {
      complain(key, "must be an integer");
      return fallback.value_or(0);
    }
    return value->get<long long>();
  }

  std::uint64_t unsigned_integer(const char* key, std::uint64_t fallback) {
    const json* value = fetch(key, true);
    if (!value) return fallback;
    if (!value->is_number_unsigned() &&
        !(value->is_number_integer() && value->get<long long>() >= 0)) {
      complain(key, "must be a non-negative integer");
      return fallback;
    }
    return value->get<std::uint64_t>();
  }

  bool boolean(const char* key, bool fallback) {
    const json* value = fetch(key, true);
    if (!value) return fallback;
    if (!value->is_boolean()) {
      complain(key, "must be true or false");
      return fallback;
    }
    return value->get<bool>();
  }

  std::string text(const char* key, std::optional<std::string> fallback = {}) {
    const json* value = fetch(key, fallback.has_value());
    if (!value) return fallback.value_or("");
    if (!value->is_string()) {
      complain(key, "must be a string");
      return fallback.value_or("");
    }
    return value->get<std::string>();
  }

  std::vector<double> number_list(const char* key, bool required) {
    const json* value = fetch(key, !required);
    std::vector<double> result;
    if (!value) return result;
    if (!value->is_array()) {
      complain(key, "must be an array of numbers");
      return result;
    }
    for (const json& item : *value) {
      if (!item.is_number()) {
        complain(key, "must contain only numbers");
        return {};
      }
      result.push_back(item.get<double>());
    }
    return result;
  }

  std::vector<int> integer_list(const char* key, bool required) {
    const json* value = fetch(key, !required);
    std::vector<int> result;
    if (!value) return result;
    if (!value->is_array()) {
      complain(key, "must be an array of integers");
      return result;
    }
    for (const json& item : *value) {
      if (!item.is_number_integer()) {
        complain(key, "must contain only integers");
        return {};
      }
      result.push_back(item.get<int>());
    }
    return result;
  }

  // Nested object; an empty object when the key is absent.
  json object(const char* key) {
    const json* value = fetch(key, true);
    if (!value) return json::object();
    if (!value->is_object()) {
      complain(key, "must be a JSON object");
      return json::object();
    }
    return *value;
  }

  void issue(const std::string& message) {
    issues_.push_back(message + " at " + path_);
  }

 private:
  const json* fetch(const char* key, bool optional) {
    if (!valid_) return nullptr;
    consumed_.insert(key);
    if (!node_.contains(key)) {
      if (!optional) {
        issues_.push_back("missing required key '" + std::string(key) +
                          "' at " + path_);
      }
      return nullptr;
    }
    return &node_.at(key);
  }

  void complain(const char* key, const char* what) {
    issues_.push_back("key '" + std::string(key) + "' at " + path_ + " " +
                      what);
  }

  json node_;
  std::string path_;
  std::vector<std::string>& issues_;
  std::set<std::string> consumed_;
  bool valid_ = true;
};

JumpSpec parse_jumps(const json& node, std::vector<std::string>& issues) {
  JumpSpec jumps;
  SchemaReader reader(node, "/params/jumps", issues);
  const std::string type = reader.text("type", std::string("site"));
  if (type == "site") {
    jumps.type = JumpSpec::Type::site;
  } else if (type == "kernel") {
    jumps.type = JumpSpec::Type::kernel;
    jumps.kernel_offsets = reader.integer_list("offsets", true);
    const std::vector<double> re = reader.number_list("amplitudes_re", true);
    std::vector<double> im;
    if (reader.has("amplitudes_im")) {
      im = reader.number_list("amplitudes_im", true);
    } else {
      im.assign(re.size(), 0.0);
    }
    if (re.size() != jumps.kernel_offsets.size() || im.size() != re.size()) {
      reader.issue("kernel offsets and amplitudes must have matching sizes");
    } else {
      for (std::size_t i = 0; i < re.size(); ++i) {
        jumps.kernel_amplitudes.emplace_back(re[i], im[i]);
      }
    }
  } else if (type == "momentum") {
    jumps.type = JumpSpec::Type::momentum;
    jumps.momentum_weights = reader.number_list("weights", true);
  } else if (type == "noise") {
    jumps.type = JumpSpec::Type::noise;
    jumps.noise_spectrum = reader.number_list("spectrum", true);
    jumps.noise_correlation_time = reader.number("correlation_time", 1.0);
  } else {
    reader.issue("jump type must be site, kernel, momentum or noise (got '" +
                 type + "')");
  }
  return jumps;
}

InitialStateSpec parse_initial(const json& node,
                               std::vector<std::string>& issues) {
  InitialStateSpec initial;
  SchemaReader reader(node, "/params/initial", issues);
  const std::string type = reader.text("type", std::string("bloch"));
  if (type == "bloch") {
    initial.type = InitialStateSpec::Type::bloch;
    initial.quasimomentum = static_cast<int>(reader.integer("q", 0));
  } else if (type == "fock") {
    initial.type = InitialStateSpec::Type::fock;
    initial.occupations = reader.integer_list("occupations", true);
  } else if (type == "uniform-superposition") {
    initial.type = InitialStateSpec::Type::uniform_superposition;
  } else {
    reader.issue("initial state type must be bloch, fock or "
                 "uniform-superposition (got '" + type + "')");
  }
  return initial;
}

MasterParams parse_master(const json& node, bool trajectories,
                          std::vector<std::string>& issues) {
  MasterParams params;
  SchemaReader reader(node, "/params", issues);
  params.sites = static_cast<int>(reader.integer("sites"));
  params.particles = static_cast<int>(reader.integer("particles"));
  params.hopping = reader.number("hopping", 1.0);
  params.periodic = reader.boolean("periodic", true);
  params.potential = reader.number_list("potential", false);
  params.rate = reader.number("rate", 0.0);
  if (reader.has("jumps")) {
    params.jumps = parse_jumps(reader.object("jumps"), issues);
  } else {
    reader.object("jumps");  // mark consumed for symmetry; defaults to site
  }
  if (reader.has("initial")) {
    params.initial = parse_initial(reader.object("initial"), issues);
  } else {
    reader.object("initial");
  }
  params.total_time = reader.number("total_time", 1.0);
  if (reader.has("time_step")) params.time_step = reader.number("time_step");
  params.snapshots = static_cast<int>(reader.integer("snapshots", 51));
  if (reader.has("track_coherence")) {
    SchemaReader pair(reader.object("track_coherence"),
                      "/params/track_coherence", issues);
    params.track_coherence = std::make_pair(pair.integer_list("ket", true),
                                            pair.integer_list("bra", true));
  }
  if (trajectories) {
    params.trajectories =
        static_cast<int>(reader.integer("trajectories", 2000));
  }
  params.dimension_cap = static_cast<std::size_t>(
      reader.integer("dimension_cap", 1000));

  if (params.sites < 1) reader.issue("sites must be >= 1");
  if (params.particles < 0) reader.issue("particles must be >= 0");
  if (params.rate < 0.0) reader.issue("rate must be >= 0");
  if (params.jumps.type == JumpSpec::Type::noise && params.rate != 0.0) {
    reader.issue("rate is fixed by the noise model (tau_c / M scaled by the "
                 "kernel norm); leave it unset for noise jumps");
  }
  if (params.total_time < 0.0) reader.issue("total_time must be >= 0");
  if (params.time_step && *params.time_step <= 0.0) {
    reader.issue("time_step must be > 0");
  }
  if (trajectories && params.trajectories < 1) {
    reader.issue("trajectories must be >= 1");
  }
  return params;
}

SpdmParams parse_spdm(const json& node, std::vector<std::string>& issues) {
  SpdmParams params;
  SchemaReader reader(node, "/params", issues);
  params.window = static_cast<int>(reader.integer("window", 41));
  params.hopping = reader.number("hopping", 1.0);
  params.trap_curvature = reader.number("trap_curvature", 0.0);
  params.potential = reader.number_list("potential", false);
  params.rate = reader.number("rate", 0.0);
  params.particles = reader.number("particles", 1.0);
  const std::string boundary =
      reader.text("boundary", std::string("hard-wall"));
  if (boundary == "ring") {
    params.ring = true;
  } else if (boundary != "hard-wall") {
    reader.issue("boundary must be hard-wall or ring (got '" + boundary +
                 "')");
  }
  params.total_time = reader.number("total_time", 4.0);
  if (reader.has("time_step")) params.time_step = reader.number("time_step");
  params.snapshots = static_cast<int>(reader.integer("snapshots", 51));
  if (reader.has("initial_trap_curvature")) {
    params.initial_trap_curvature = reader.number("initial_trap_curvature");
  }

  if (params.rate < 0.0) reader.issue("rate must be >= 0");
  if (params.particles <= 0.0) reader.issue("particles must be > 0");
  if (params.total_time < 0.0) reader.issue("total_time must be >= 0");
  return params;
}

GridParams parse_grid(const json& node, std::vector<std::string>& issues,
                      const char* path) {
  GridParams grid;
  SchemaReader reader(node, path, issues);
  grid.points = static_cast<int>(reader.integer("points", 1024));
  if (reader.has("halfwidth")) grid.halfwidth = reader.number("halfwidth");
  if (grid.points < 2) reader.issue("grid points must be >= 2");
  return grid;
}

CollapseParams parse_collapse(const json& node,
                              std::vector<std::string>& issues) {
  CollapseParams params;
  SchemaReader reader(node, "/params", issues);
  params.sigma0 = reader.number("sigma0", 1.0);
  params.width = reader.number("l", 1.0);
  params.psi_csv = reader.text("psi_csv", std::string());
  params.shape_csv = reader.text("shape_csv", std::string());
  if (reader.has("grid")) {
    params.grid = parse_grid(reader.object("grid"), issues, "/params/grid");
  }
  if (params.sigma0 <= 0.0) reader.issue("sigma0 must be > 0");
  if (params.width <= 0.0) reader.issue("l must be > 0");
  return params;
}

KickParams parse_kick(const json& node, std::vector<std::string>& issues) {
  KickParams params;
  SchemaReader reader(node, "/params", issues);
  params.sigma0 = reader.number("sigma0", 1.0);
  params.psi_csv = reader.text("psi_csv", std::string());
  if (reader.has("spectrum")) {
    SchemaReader spectrum(reader.object("spectrum"), "/params/spectrum",
                          issues);
    const std::string type =
        spectrum.text("type", std::string("gaussian"));
    if (type == "gaussian") {
      params.spectrum.type = KickSpectrumParams::Type::gaussian;
    } else if (type == "uniform") {
      params.spectrum.type = KickSpectrumParams::Type::uniform;
    } else if (type == "csv") {
      params.spectrum.type = KickSpectrumParams::Type::csv;
      params.spectrum.csv = spectrum.text("path");
    } else {
      spectrum.issue("spectrum type must be gaussian, uniform or csv");
    }
    params.spectrum.width = spectrum.number("width", 1.0);
    params.spectrum.points =
        static_cast<int>(spectrum.integer("points", 257));
  } else {
    reader.object("spectrum");
  }
  if (reader.has("grid")) {
    params.grid = parse_grid(reader.object("grid"), issues, "/params/grid");
  }
  params.emit_kernel = reader.boolean("emit_kernel", true);
  if (params.sigma0 <= 0.0) reader.issue("sigma0 must be > 0");
  if (params.spectrum.width <= 0.0) reader.issue("spectrum width must be > 0");
  return params;
}

RatesParams parse_rates(const json& node, std::vector<std::string>& issues) {
  RatesParams params;
  SchemaReader reader(node, "/params", issues);
  const std::string repr =
      reader.text("representation", std::string("spectrum"));
  if (repr == "correlations") {
    params.representation = RatesParams::Representation::correlations;
  } else if (repr != "spectrum") {
    reader.issue("representation must be spectrum or correlations");
  }
  params.values = reader.number_list("values", false);
  params.csv = reader.text("csv", std::string());
  params.correlation_time = reader.number("correlation_time", 1.0);
  if (params.values.empty() && params.csv.empty()) {
    reader.issue("either values or csv must supply the noise model");
  }
  if (params.correlation_time <= 0.0) {
    reader.issue("correlation_time must be > 0");
  }
  return params;
}

SweepParams parse_sweep(const json& node, std::vector<std::string>& issues) {
  SweepParams params;
  SchemaReader reader(node, "/params", issues);
  params.depth_min = reader.number("depth_min", 1.0);
  params.depth_max = reader.number("depth_max", 12.0);
  params.depth_steps = static_cast<int>(reader.integer("depth_steps", 23));
  const std::vector<double> fit = reader.number_list("n_high_fit", false);
  if (!fit.empty()) {
    if (fit.size() != 3) {
      reader.issue("n_high_fit must contain exactly 3 coefficients");
    } else {
      params.fit = rates::NHighFit{fit[0], fit[1], fit[2]};
    }
  }
  params.atoms = static_cast<int>(reader.integer("atoms", 80));
  params.sites = static_cast<int>(reader.integer("sites", 60));
  if (reader.has("mapping")) {
    SchemaReader mapping(reader.object("mapping"), "/params/mapping", issues);
    const std::string type =
        mapping.text("type", std::string("deep-lattice"));
    if (type == "deep-lattice") {
      params.deep_lattice = true;
      params.mapping.u_scale = mapping.number("u_scale", 0.15);
      params.mapping.u_exponent = mapping.number("u_exponent", 0.75);
    } else if (type == "fixed") {
      params.deep_lattice = false;
      params.interaction = mapping.number("interaction", 1.0);
      params.hopping = mapping.number("hopping", 1.0);
    } else {
      mapping.issue("mapping type must be deep-lattice or fixed");
    }
  } else {
    reader.object("mapping");
  }
  if (params.depth_min < 0.0) reader.issue("depth_min must be >= 0");
  if (params.depth_max < params.depth_min) {
    reader.issue("depth_max must be >= depth_min");
  }
  if (params.depth_steps < 1) reader.issue("depth_steps must be >= 1");
  if (!params.deep_lattice && params.hopping <= 0.0) {
    reader.issue("fixed mapping needs hopping > 0");
  }
  return params;
}

// ---- canonical serialization (defaults made explicit) ----

json serialize_jumps(const JumpSpec& jumps) {
  json node;
  switch (jumps.type) {
    case JumpSpec::Type::site:
      node["type"] = "site";
      break;
    case JumpSpec::Type::kernel: {
      node["type"] = "kernel";
      node["offsets"] = jumps.kernel_offsets;
      json re = json::array(), im = json::array();
      for (const lattice::Complex& a : jumps.kernel_amplitudes) {
        re.push_back(a.real());
        im.push_back(a.imag());
      }
      node["amplitudes_re"] = re;
      node["amplitudes_im"] = im;
      break;
    }
    case JumpSpec::Type::momentum:
      node["type"] = "momentum";
      node["weights"] = jumps.momentum_weights;
      break;
    case JumpSpec::Type::noise:
      node["type"] = "noise";
      node["spectrum"] = jumps.noise_spectrum;
      node["correlation_time"] = jumps.noise_correlation_time;
      break;
  }
  return node;
}

json serialize_initial(const InitialStateSpec& initial) {
  json node;
  switch (initial.type) {
    case InitialStateSpec::Type::bloch:
      node["type"] = "bloch";
      node["q"] = initial.quasimomentum;
      break;
    case InitialStateSpec::Type::fock:
      node["type"] = "fock";
      node["occupations"] = initial.occupations;
      break;
    case InitialStateSpec::Type::uniform_superposition:
      node["type"] = "uniform-superposition";
      break;
  }
  return node;
}

json serialize_params(const ExperimentConfig& config) {
  json node;
  switch (config.kind) {
    case ExperimentKind::master:
    case ExperimentKind::trajectories: {
      const MasterParams& p = config.master;
      node["sites"] = p.sites;
      node["particles"] = p.particles;
      node["hopping"] = p.hopping;
      node["periodic"] = p.periodic;
      if (!p.potential.empty()) node["potential"] = p.potential;
      node["rate"] = p.rate;
      node["jumps"] = serialize_jumps(p.jumps);
      node["initial"] = serialize_initial(p.initial);
      node["total_time"] = p.total_time;
      if (p.time_step) node["time_step"] = *p.time_step;
      node["snapshots"] = p.snapshots;
      if (p.track_coherence) {
        node["track_coherence"] =
            json{{"ket", p.track_coherence->first},
                 {"bra", p.track_coherence->second}};
      }
      if (config.kind == ExperimentKind::trajectories) {
        node["trajectories"] = p.trajectories;
      }
      node["dimension_cap"] = p.dimension_cap;
      break;
    }
    case ExperimentKind::spdm: {
      const SpdmParams& p = config.spdm;
      node["window"] = p.window;
      node["hopping"] = p.hopping;
      if (!p.potential.empty()) {
        node["potential"] = p.potential;
      } else {
        node["trap_curvature"] = p.trap_curvature;
      }
      node["rate"] = p.rate;
      node["particles"] = p.particles;
      node["boundary"] = p.ring ? "ring" : "hard-wall";
      node["total_time"] = p.total_time;
      if (p.time_step) node["time_step"] = *p.time_step;
      node["snapshots"] = p.snapshots;
      if (p.initial_trap_curvature) {
        node["initial_trap_curvature"] = *p.initial_trap_curvature;
      }
      break;
    }
    case ExperimentKind::collapse: {
      const CollapseParams& p = config.collapse;
      node["sigma0"] = p.sigma0;
      node["l"] = p.width;
      if (!p.psi_csv.empty()) node["psi_csv"] = p.psi_csv;
      if (!p.shape_csv.empty()) node["shape_csv"] = p.shape_csv;
      node["grid"] = json{{"points", p.grid.points}};
      if (p.grid.halfwidth) node["grid"]["halfwidth"] = *p.grid.halfwidth;
      break;
    }
    case ExperimentKind::kick: {
      const KickParams& p = config.kick;
      node["sigma0"] = p.sigma0;
      if (!p.psi_csv.empty()) node["psi_csv"] = p.psi_csv;
      json spectrum;
      switch (p.spectrum.type) {
        case KickSpectrumParams::Type::gaussian:
          spectrum["type"] = "gaussian";
          break;
        case KickSpectrumParams::Type::uniform:
          spectrum["type"] = "uniform";
          break;
        case KickSpectrumParams::Type::csv:
          spectrum["type"] = "csv";
          spectrum["path"] = p.spectrum.csv;
          break;
      }
      spectrum["width"] = p.spectrum.width;
      spectrum["points"] = p.spectrum.points;
      node["spectrum"] = spectrum;
      node["grid"] = json{{"points", p.grid.points}};
      if (p.grid.halfwidth) node["grid"]["halfwidth"] = *p.grid.halfwidth;
      node["emit_kernel"] = p.emit_kernel;
      break;
    }
    case ExperimentKind::rates: {
      const RatesParams& p = config.rates;
      node["representation"] =
          p.representation == RatesParams::Representation::spectrum
              ? "spectrum"
              : "correlations";
      if (!p.values.empty()) node["values"] = p.values;
      if (!p.csv.empty()) node["csv"] = p.csv;
      node["correlation_time"] = p.correlation_time;
      break;
    }
    case ExperimentKind::rates_sweep: {
      const SweepParams& p = config.sweep;
      node["depth_min"] = p.depth_min;
      node["depth_max"] = p.depth_max;
      node["depth_steps"] = p.depth_steps;
      node["n_high_fit"] = json::array({p.fit.c0, p.fit.c1, p.fit.c2});
      node["atoms"] = p.atoms;
      node["sites"] = p.sites;
      if (p.deep_lattice) {
        node["mapping"] = json{{"type", "deep-lattice"},
                               {"u_scale", p.mapping.u_scale},
                               {"u_exponent", p.mapping.u_exponent}};
      } else {
        node["mapping"] = json{{"type", "fixed"},
                               {"interaction", p.interaction},
                               {"hopping", p.hopping}};
      }
      break;
    }
  }
  return node;
}

}  // namespace

ConfigError::ConfigError(std::vector<std::string> issues)
    : Error(ErrorCategory::config, join_issues(issues)),
      issues_(std::move(issues)) {}

std::string kind_name(ExperimentKind kind) {
  switch (kind) {
    case ExperimentKind::collapse: return "collapse";
    case ExperimentKind::kick: return "kick";
    case ExperimentKind::master: return "master";
    case ExperimentKind::trajectories: return "trajectories";
    case ExperimentKind::spdm: return "spdm";
    case ExperimentKind::rates: return "rates";
    case ExperimentKind::rates_sweep: return "rates-sweep";
  }
  return "unknown";
}

std::string fnv1a64_hex(const std::string& text) {
  std::uint64_t hash = 1469598103934665603ull;
  for (unsigned char c : text) {
    hash ^= c;
    hash *= 1099511628211ull;
  }
  char buffer[17];
  std::snprintf(buffer, sizeof(buffer), "%016llx",
                static_cast<unsigned long long>(hash));
  return buffer;
}

ExperimentConfig parse_config(const std::string& text) {
  json document;
  try {
    document = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ConfigError({std::string("not well-formed JSON: ") + e.what()});
  }

  std::vector<std::string> issues;
  ExperimentConfig config;
  {
    SchemaReader reader(document, "/", issues);
    const long long version = reader.integer("schema_version", 1);
    if (version != 1) {
      reader.issue("schema_version must be 1");
    }
    const std::string kind = reader.text("kind");
    config.seed = reader.unsigned_integer("seed", 0);
    config.output = reader.text("output", std::string());

    if (reader.has("tolerances")) {
      SchemaReader tolerances(reader.object("tolerances"), "/tolerances",
                              issues);
      config.tolerances.trace = tolerances.number("trace", 1e-9);
      config.tolerances.hermiticity =
          tolerances.number("hermiticity", 1e-12);
      config.tolerances.positivity = tolerances.number("positivity", -1e-8);
      config.tolerances.max_jump_probability =
          tolerances.number("max_jump_probability", 0.1);
    } else {
      reader.object("tolerances");
    }

    const json params = reader.object("params");
    if (kind == "master") {
      config.kind = ExperimentKind::master;
      config.master = parse_master(params, false, issues);
    } else if (kind == "trajectories") {
      config.kind = ExperimentKind::trajectories;
      config.master = parse_master(params, true, issues);
    } else if (kind == "spdm") {
      config.kind = ExperimentKind::spdm;
      config.spdm = parse_spdm(params, issues);
    } else if (kind == "collapse") {
      config.kind = ExperimentKind::collapse;
      config.collapse = parse_collapse(params, issues);
    } else if (kind == "kick") {
      config.kind = ExperimentKind::kick;
      config.kick = parse_kick(params, issues);
    } else if (kind == "rates") {
      config.kind = ExperimentKind::rates;
      config.rates = parse_rates(params, issues);
    } else if (kind == "rates-sweep") {
      config.kind = ExperimentKind::rates_sweep;
      config.sweep = parse_sweep(params, issues);
    } else if (!kind.empty()) {
      reader.issue("kind must be one of collapse, kick, master, "
                   "trajectories, spdm, rates, rates-sweep (got '" +
                   kind + "')");
    }
  }
  if (!issues.empty()) throw ConfigError(std::move(issues));

  json resolved;
  resolved["schema_version"] = 1;
  resolved["kind"] = kind_name(config.kind);
  resolved["seed"] = config.seed;
  if (!config.output.empty()) resolved["output"] = config.output;
  resolved["tolerances"] = json{
      {"trace", config.tolerances.trace},
      {"hermiticity", config.tolerances.hermiticity},
      {"positivity", config.tolerances.positivity},
      {"max_jump_probability", config.tolerances.max_jump_probability}};
  resolved["params"] = serialize_params(config);
  config.resolved = resolved.dump();
  config.config_hash = fnv1a64_hex(config.resolved);
  return config;
}

ExperimentConfig load_config_file(const std::string& path) {
  std::ifstream stream(path);
  if (!stream) {
    throw ConfigError({"cannot open config file " + path});
  }
  std::stringstream buffer;
  buffer << stream.rdbuf();
  return parse_config(buffer.str());
}

}  // namespace locwave::cli
