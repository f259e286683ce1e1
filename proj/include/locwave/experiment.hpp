#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "locwave/errors.hpp"
#include "locwave/fock_basis.hpp"
#include "locwave/rates.hpp"
#include "locwave/sparse_operator.hpp"

namespace locwave::cli {

// Config-level failure carrying every issue found, not just the first.
class ConfigError : public Error {
 public:
  explicit ConfigError(std::vector<std::string> issues);
  const std::vector<std::string>& issues() const { return issues_; }

 private:
  std::vector<std::string> issues_;
};

struct Tolerances {
  double trace = 1e-9;
  double hermiticity = 1e-12;
  double positivity = -1e-8;
  double max_jump_probability = 0.1;
};

enum class ExperimentKind {
  collapse,
  kick,
  master,
  trajectories,
  spdm,
  rates,
  rates_sweep,
};

std::string kind_name(ExperimentKind kind);

struct JumpSpec {
  enum class Type { site, kernel, momentum, noise };
  Type type = Type::site;
  std::vector<int> kernel_offsets;
  std::vector<lattice::Complex> kernel_amplitudes;
  std::vector<double> momentum_weights;      // g(p) from bz_min upward
  std::vector<double> noise_spectrum;        // <|V_k|^2>
  double noise_correlation_time = 1.0;
};

struct InitialStateSpec {
  enum class Type { bloch, fock, uniform_superposition };
  Type type = Type::bloch;
  int quasimomentum = 0;
  lattice::Occupation occupations;
};

struct MasterParams {
  int sites = 2;
  int particles = 1;
  double hopping = 1.0;
  bool periodic = true;
  std::vector<double> potential;
  double rate = 0.0;
  JumpSpec jumps;
  InitialStateSpec initial;
  double total_time = 1.0;
  std::optional<double> time_step;
  int snapshots = 51;
  std::optional<std::pair<lattice::Occupation, lattice::Occupation>>
      track_coherence;
  int trajectories = 2000;         // trajectories kind only
  std::size_t dimension_cap = 1000;  // density matrices get dim^2 memory
};

struct SpdmParams {
  int window = 41;
  double hopping = 1.0;
  double trap_curvature = 0.0;     // parabolic trap, ignored when potential set
  std::vector<double> potential;
  double rate = 0.0;
  double particles = 1.0;
  bool ring = false;
  double total_time = 4.0;
  std::optional<double> time_step;
  int snapshots = 51;
  // When set, the run starts from the hard-wall ground state of a parabolic
  // trap with this curvature instead of the ground state of the evolving
  // setup (used for relaxation runs on rings with no trap).
  std::optional<double> initial_trap_curvature;
};

struct GridParams {
  int points = 1024;
  std::optional<double> halfwidth;  // defaults to 8 max(sigma0, l)
};

struct CollapseParams {
  double sigma0 = 1.0;
  double width = 1.0;              // l
  std::string psi_csv;             // overrides sigma0 when set (x, re, im)
  std::string shape_csv;           // overrides width when set
  GridParams grid;
};

struct KickSpectrumParams {
  enum class Type { gaussian, uniform, csv };
  Type type = Type::gaussian;
  double width = 1.0;   // gaussian width or uniform kmax
  int points = 257;
  std::string csv;      // (k, weight) rows
};

struct KickParams {
  double sigma0 = 1.0;
  std::string psi_csv;
  KickSpectrumParams spectrum;
  GridParams grid;
  bool emit_kernel = true;
};

struct RatesParams {
  enum class Representation { spectrum, correlations };
  Representation representation = Representation::spectrum;
  std::vector<double> values;
  std::string csv;  // (index, value) rows, overrides inline values
  double correlation_time = 1.0;
};

struct SweepParams {
  double depth_min = 1.0;
  double depth_max = 12.0;
  int depth_steps = 23;
  rates::NHighFit fit;
  int atoms = 80;
  int sites = 60;
  bool deep_lattice = true;  // otherwise fixed interaction/hopping below
  rates::DeepLatticeMapping mapping;
  double interaction = 1.0;
  double hopping = 1.0;
};

struct ExperimentConfig {
  ExperimentKind kind = ExperimentKind::master;
  std::uint64_t seed = 0;
  std::string output;  // empty = print summary only
  Tolerances tolerances;

  MasterParams master;
  SpdmParams spdm;
  CollapseParams collapse;
  KickParams kick;
  RatesParams rates;
  SweepParams sweep;

  // Canonical serialized form (defaults filled in) and its FNV-1a hash;
  // identical resolved configs hash identically.
  std::string resolved;
  std::string config_hash;
};

// Strict parse: unknown keys, type mismatches and constraint violations are
// all collected and reported together.
ExperimentConfig parse_config(const std::string& text);
ExperimentConfig load_config_file(const std::string& path);

struct InvariantCheck {
  std::string name;
  double value = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

struct RunRecord {
  std::string kind;
  std::string config_hash;
  std::uint64_t seed = 0;
  double duration_ms = 0.0;
  std::vector<InvariantCheck> invariant_checks;
  std::vector<std::string> outputs;
};

// Executes one experiment, writing CSV output (and a JSON run record next to
// it) when the config names an output path. Throws on numerical failure.
RunRecord run_experiment(const ExperimentConfig& config, int threads = 1);

// Built-in demos with golden values: eq12, fbar, eq28-identity,
// flat-noise-gamma. Returns the record; throws a numerical error if a demo
// misses its golden value.
RunRecord run_demo(const std::string& name,
                   const std::optional<std::string>& output);

std::string fnv1a64_hex(const std::string& text);

}  // namespace locwave::cli
