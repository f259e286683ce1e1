#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "locwave/master_equation.hpp"

namespace locwave::dynamics {

struct TrajectoryConfig {
  int count = 1;
  std::uint64_t seed = 0;
  double time_step = 0.01;
  int threads = 1;

  void validate() const;
};

struct TrackedObservable {
  std::string label;
  lattice::SparseOperator op;
};

struct ObservableSeries {
  std::string label;
  std::vector<Complex> mean;          // per snapshot
  std::vector<double> stderr_re;      // standard error of the real part
  std::vector<double> stderr_im;
};

struct McwfResult {
  std::vector<double> times;
  std::vector<ObservableSeries> series;
  double max_jump_probability = 0.0;  // largest per-step total, over all runs
};

// Jump / no-jump unraveling of the master equation: drift under
// H_eff = H - i sum_c r_c L^dag L, per-step jump probability
// 2 r_c dt <L^dag L>, post-jump state L|psi>/|L|psi>|. Trajectory streams
// derive deterministically from (seed, trajectory index), and means reduce
// in trajectory order, so results are bitwise reproducible for any thread
// count. Throws if any step's total jump probability exceeds 0.1.
McwfResult mcwf_sample(const Eigen::VectorXcd& initial,
                       const EvolutionSpec& spec,
                       const TrajectoryConfig& config,
                       const std::vector<TrackedObservable>& observables,
                       int snapshot_count = 51);

}  // namespace locwave::dynamics
