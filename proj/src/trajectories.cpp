#include "locwave/trajectories.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <mutex>
#include <random>
#include <thread>

#include "locwave/errors.hpp"

namespace locwave::dynamics {

namespace {

using SparseMatrix = Eigen::SparseMatrix<Complex>;

struct JumpChannel {
  double rate;
  SparseMatrix jump;
};

std::mt19937_64 trajectory_stream(std::uint64_t seed, int trajectory) {
  std::seed_seq sequence{
      static_cast<std::uint32_t>(seed & 0xffffffffu),
      static_cast<std::uint32_t>(seed >> 32),
      static_cast<std::uint32_t>(trajectory),
  };
  return std::mt19937_64(sequence);
}

}  // namespace

void TrajectoryConfig::validate() const {
  if (count < 1) throw_invalid("TrajectoryConfig: count must be >= 1");
  if (time_step <= 0.0) throw_invalid("TrajectoryConfig: time step must be > 0");
  if (threads < 1) throw_invalid("TrajectoryConfig: threads must be >= 1");
}

McwfResult mcwf_sample(const Eigen::VectorXcd& initial,
                       const EvolutionSpec& spec,
                       const TrajectoryConfig& config,
                       const std::vector<TrackedObservable>& observables,
                       int snapshot_count) {
  spec.validate();
  config.validate();
  if (std::abs(initial.norm() - 1.0) > 1e-9) {
    throw_invalid("mcwf_sample: initial state must be normalized");
  }
  if (initial.size() != spec.hamiltonian.rows()) {
    throw_invalid("mcwf_sample: state dimension mismatch");
  }
  if (snapshot_count < 2) snapshot_count = 2;

  const long n_steps =
      std::max(1L, std::lround(spec.total_time / config.time_step));
  const double dt = spec.total_time / static_cast<double>(n_steps);

  std::vector<long> snapshot_steps;
  for (int i = 0; i < snapshot_count; ++i) {
    const long step = std::lround(static_cast<double>(i) * n_steps /
                                  (snapshot_count - 1));
    if (snapshot_steps.empty() || snapshot_steps.back() != step) {
      snapshot_steps.push_back(step);
    }
  }

  // Non-Hermitian drift H_eff = H - i sum_c r_c L^dag L.
  SparseMatrix drift = spec.hamiltonian.matrix();
  std::vector<JumpChannel> channels;
  for (const Dissipator& d : spec.dissipators) {
    if (d.rate == 0.0) continue;
    channels.push_back(JumpChannel{d.rate, d.op.matrix()});
    const SparseMatrix jump_sq =
        SparseMatrix(d.op.matrix().adjoint()) * d.op.matrix();
    drift = drift + Complex(0.0, -d.rate) * jump_sq;
  }

  const std::size_t n_snap = snapshot_steps.size();
  const std::size_t n_obs = observables.size();
  std::vector<Complex> samples(
      static_cast<std::size_t>(config.count) * n_snap * n_obs);
  std::vector<double> worst_jump_probability(
      static_cast<std::size_t>(config.threads), 0.0);
  std::atomic<bool> failed{false};
  std::string failure_message;
  std::mutex failure_mutex;

  const auto run_range = [&](int first, int last, int thread_index) {
    Eigen::VectorXcd psi(initial.size());
    Eigen::VectorXcd k1(initial.size()), k2(initial.size()),
        k3(initial.size()), k4(initial.size());
    const Complex minus_i(0.0, -1.0);
    std::vector<double> probabilities(channels.size());

    for (int traj = first; traj < last && !failed.load(); ++traj) {
      std::mt19937_64 rng = trajectory_stream(config.seed, traj);
      std::uniform_real_distribution<double> uniform(0.0, 1.0);
      psi = initial;
      psi.normalize();

      std::size_t next_snapshot = 0;
      for (long step = 0; step <= n_steps; ++step) {
        if (next_snapshot < n_snap && snapshot_steps[next_snapshot] == step) {
          for (std::size_t o = 0; o < n_obs; ++o) {
            samples[(static_cast<std::size_t>(traj) * n_snap +
                     next_snapshot) * n_obs + o] =
                expectation(observables[o].op, psi);
          }
          ++next_snapshot;
        }
        if (step == n_steps) break;

        double total_probability = 0.0;
        for (std::size_t c = 0; c < channels.size(); ++c) {
          probabilities[c] = 2.0 * channels[c].rate * dt *
                             (channels[c].jump * psi).squaredNorm();
          total_probability += probabilities[c];
        }
        worst_jump_probability[static_cast<std::size_t>(thread_index)] =
            std::max(worst_jump_probability[static_cast<std::size_t>(
                         thread_index)],
                     total_probability);
        if (total_probability > 0.1) {
          std::lock_guard<std::mutex> lock(failure_mutex);
          failed.store(true);
          failure_message =
              "mcwf_sample: jump probability " +
              std::to_string(total_probability) + " exceeds 0.1 at step " +
              std::to_string(step) + "; reduce the time step";
          return;
        }

        const double draw = uniform(rng);
        if (draw < total_probability) {
          double cumulative = 0.0;
          std::size_t chosen = channels.size() - 1;
          for (std::size_t c = 0; c < channels.size(); ++c) {
            cumulative += probabilities[c];
            if (draw < cumulative) {
              chosen = c;
              break;
            }
          }
          psi = channels[chosen].jump * psi;
          psi.normalize();
        } else {
          k1.noalias() = drift * psi;
          k1 *= minus_i;
          k2.noalias() = drift * (psi + (0.5 * dt) * k1);
          k2 *= minus_i;
          k3.noalias() = drift * (psi + (0.5 * dt) * k2);
          k3 *= minus_i;
          k4.noalias() = drift * (psi + dt * k3);
          k4 *= minus_i;
          psi += (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
          psi.normalize();
        }
      }
    }
  };

  const int threads = std::min(config.threads, config.count);
  if (threads <= 1) {
    run_range(0, config.count, 0);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(threads));
    const int chunk = (config.count + threads - 1) / threads;
    for (int t = 0; t < threads; ++t) {
      const int first = t * chunk;
      const int last = std::min(config.count, first + chunk);
      if (first >= last) break;
      pool.emplace_back(run_range, first, last, t);
    }
    for (std::thread& worker : pool) worker.join();
  }
  if (failed.load()) throw_numerical(failure_message);

  McwfResult result;
  result.times.reserve(n_snap);
  for (long step : snapshot_steps) result.times.push_back(step * dt);
  result.max_jump_probability = *std::max_element(
      worst_jump_probability.begin(), worst_jump_probability.end());

  const double n = static_cast<double>(config.count);
  result.series.resize(n_obs);
  for (std::size_t o = 0; o < n_obs; ++o) {
    ObservableSeries& series = result.series[o];
    series.label = observables[o].label;
    series.mean.resize(n_snap);
    series.stderr_re.assign(n_snap, 0.0);
    series.stderr_im.assign(n_snap, 0.0);
    for (std::size_t s = 0; s < n_snap; ++s) {
      Complex sum = 0.0;
      for (int traj = 0; traj < config.count; ++traj) {
        sum += samples[(static_cast<std::size_t>(traj) * n_snap + s) * n_obs +
                       o];
      }
      const Complex mean = sum / n;
      series.mean[s] = mean;
      if (config.count > 1) {
        double var_re = 0.0, var_im = 0.0;
        for (int traj = 0; traj < config.count; ++traj) {
          const Complex value =
              samples[(static_cast<std::size_t>(traj) * n_snap + s) * n_obs +
                      o];
          var_re += (value.real() - mean.real()) * (value.real() - mean.real());
          var_im += (value.imag() - mean.imag()) * (value.imag() - mean.imag());
        }
        series.stderr_re[s] = std::sqrt(var_re / (n * (n - 1.0)));
        series.stderr_im[s] = std::sqrt(var_im / (n * (n - 1.0)));
      }
    }
  }
  return result;
}

}  // namespace locwave::dynamics
