#include "locwave/spdm.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "locwave/errors.hpp"

namespace locwave::spdm {

namespace {

// Neighbor index under the trap's boundary rule; -1 means "outside".
int neighbor(int site, int delta, int window, lattice::Boundary boundary) {
  int target = site + delta;
  if (boundary == lattice::Boundary::periodic) {
    target %= window;
    if (target < 0) target += window;
    return target;
  }
  return (target >= 0 && target < window) ? target : -1;
}

}  // namespace

double TrapSpec::potential_at(int site) const {
  if (potential.empty()) return 0.0;
  return potential.at(static_cast<std::size_t>(site));
}

void TrapSpec::validate() const {
  if (window < 1) throw_invalid("TrapSpec: window must hold at least one site");
  if (window % 2 == 0) {
    throw_invalid("TrapSpec: window size must be odd so the trap is centered");
  }
  if (!potential.empty() &&
      potential.size() != static_cast<std::size_t>(window)) {
    throw_invalid("TrapSpec: potential list size mismatch");
  }
  if (rate < 0.0) throw_invalid("TrapSpec: localization rate must be >= 0");
}

std::vector<double> parabolic_potential(int window, double curvature) {
  if (window < 1 || window % 2 == 0) {
    throw_invalid("parabolic_potential: window must be odd and positive");
  }
  if (curvature < 0.0) {
    throw_invalid("parabolic_potential: curvature must be >= 0");
  }
  const int center = window / 2;
  std::vector<double> values(static_cast<std::size_t>(window));
  for (int j = 0; j < window; ++j) {
    const double offset = j - center;
    values[static_cast<std::size_t>(j)] = curvature * offset * offset;
  }
  return values;
}

SPDMatrix::SPDMatrix(Eigen::MatrixXcd matrix, double particles)
    : matrix_(std::move(matrix)), particles_(particles) {
  if (matrix_.rows() != matrix_.cols() || matrix_.rows() == 0) {
    throw_invalid("SPDMatrix: matrix must be square and non-empty");
  }
  if (particles_ <= 0.0) throw_invalid("SPDMatrix: particle number must be > 0");
  check_invariants();
}

double SPDMatrix::trace_error() const {
  return std::abs(matrix_.trace() - Complex(particles_, 0.0));
}

double SPDMatrix::hermiticity_error() const {
  return (matrix_ - matrix_.adjoint()).cwiseAbs().maxCoeff();
}

double SPDMatrix::min_diagonal() const {
  return matrix_.diagonal().real().minCoeff();
}

void SPDMatrix::check_invariants(double trace_tol, double hermiticity_tol,
                                 double diagonal_floor) const {
  const double herm = hermiticity_error();
  if (herm > hermiticity_tol) {
    throw_numerical("SPDMatrix: hermiticity violated by " +
                    std::to_string(herm));
  }
  const double trace_err = trace_error();
  if (trace_err > trace_tol * std::max(1.0, particles_)) {
    throw_numerical("SPDMatrix: trace deviates from N by " +
                    std::to_string(trace_err));
  }
  if (min_diagonal() < diagonal_floor) {
    throw_numerical("SPDMatrix: negative site density " +
                    std::to_string(min_diagonal()));
  }
}

Eigen::MatrixXcd spdm_rhs(const Eigen::MatrixXcd& state,
                          const TrapSpec& trap) {
  trap.validate();
  if (state.rows() != trap.window || state.cols() != trap.window) {
    throw_invalid("spdm_rhs: state dimension mismatch");
  }

  const int window = trap.window;
  const Complex i_unit(0.0, 1.0);
  Eigen::MatrixXcd derivative =
      Eigen::MatrixXcd::Zero(window, window);
  for (int i = 0; i < window; ++i) {
    for (int j = 0; j < window; ++j) {
      Complex value = 0.0;
      if (i != j) value -= 2.0 * trap.rate * state(i, j);
      value += i_unit * (trap.potential_at(i) - trap.potential_at(j)) *
               state(i, j);
      Complex hop = 0.0;
      const int up_i = neighbor(i, +1, window, trap.boundary);
      const int down_i = neighbor(i, -1, window, trap.boundary);
      const int up_j = neighbor(j, +1, window, trap.boundary);
      const int down_j = neighbor(j, -1, window, trap.boundary);
      if (up_i >= 0) hop += state(up_i, j);
      if (down_i >= 0) hop += state(down_i, j);
      if (up_j >= 0) hop -= state(i, up_j);
      if (down_j >= 0) hop -= state(i, down_j);
      value += i_unit * trap.hopping * hop;
      derivative(i, j) = value;
    }
  }
  return derivative;
}

Eigen::MatrixXcd spdm_rhs(const SPDMatrix& state, const TrapSpec& trap) {
  return spdm_rhs(state.matrix(), trap);
}

SPDMatrix ground_state_spdm(const TrapSpec& trap, double particles) {
  trap.validate();
  const int window = trap.window;

  Eigen::MatrixXd hamiltonian = Eigen::MatrixXd::Zero(window, window);
  for (int j = 0; j < window; ++j) {
    hamiltonian(j, j) = trap.potential_at(j);
    const int up = neighbor(j, +1, window, trap.boundary);
    if (up >= 0 && up != j) {
      hamiltonian(j, up) -= trap.hopping;
      hamiltonian(up, j) -= trap.hopping;
    }
  }

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(hamiltonian);
  const Eigen::VectorXd orbital = solver.eigenvectors().col(0);

  const double peak_density = orbital.cwiseAbs2().maxCoeff();
  const double boundary_density =
      std::max(orbital[0] * orbital[0],
               orbital[window - 1] * orbital[window - 1]);
  if (trap.boundary == lattice::Boundary::hard_wall &&
      boundary_density > 1e-8 * peak_density) {
    throw_invalid("ground_state_spdm: window too small, boundary density " +
                  std::to_string(boundary_density / peak_density) +
                  " of peak exceeds 1e-8");
  }

  Eigen::MatrixXcd matrix =
      particles * (orbital * orbital.transpose()).cast<Complex>();
  return SPDMatrix(std::move(matrix), particles);
}

SpdmEvolution evolve_spdm(const SPDMatrix& initial, const TrapSpec& trap,
                          double total_time, double time_step,
                          int snapshot_count) {
  trap.validate();
  if (initial.window() != trap.window) {
    throw_invalid("evolve_spdm: state/window size mismatch");
  }
  if (time_step <= 0.0) throw_invalid("evolve_spdm: time step must be > 0");
  if (total_time < 0.0) throw_invalid("evolve_spdm: total time must be >= 0");
  if (snapshot_count < 2) snapshot_count = 2;

  const long n_steps = std::max(1L, std::lround(total_time / time_step));
  const double dt = total_time / static_cast<double>(n_steps);

  std::vector<long> snapshot_steps;
  for (int i = 0; i < snapshot_count; ++i) {
    const long step = std::lround(static_cast<double>(i) * n_steps /
                                  (snapshot_count - 1));
    if (snapshot_steps.empty() || snapshot_steps.back() != step) {
      snapshot_steps.push_back(step);
    }
  }

  SpdmEvolution result;
  result.snapshots.reserve(snapshot_steps.size());

  Eigen::MatrixXcd state = initial.matrix();
  const double particles = initial.particles();
  std::size_t next_snapshot = 0;
  for (long step = 0; step <= n_steps; ++step) {
    if (next_snapshot < snapshot_steps.size() &&
        snapshot_steps[next_snapshot] == step) {
      try {
        result.snapshots.push_back(
            SpdmSnapshot{step * dt, SPDMatrix(state, particles)});
      } catch (const Error& e) {
        throw_numerical("evolve_spdm: invariant violated at step " +
                        std::to_string(step) + ": " + e.what());
      }
      ++next_snapshot;
    }
    if (step == n_steps) break;

    const Eigen::MatrixXcd k1 = spdm_rhs(state, trap);
    const Eigen::MatrixXcd k2 =
        spdm_rhs(Eigen::MatrixXcd(state + (0.5 * dt) * k1), trap);
    const Eigen::MatrixXcd k3 =
        spdm_rhs(Eigen::MatrixXcd(state + (0.5 * dt) * k2), trap);
    const Eigen::MatrixXcd k4 =
        spdm_rhs(Eigen::MatrixXcd(state + dt * k3), trap);
    state += (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);

    const Eigen::MatrixXcd symmetrized = 0.5 * (state + state.adjoint());
    result.max_hermitization_correction =
        std::max(result.max_hermitization_correction,
                 (state - symmetrized).cwiseAbs().maxCoeff());
    state = symmetrized;
  }
  return result;
}

std::vector<double> density_profile(const SPDMatrix& state) {
  const Eigen::VectorXd diagonal = state.matrix().diagonal().real();
  return std::vector<double>(diagonal.data(), diagonal.data() + diagonal.size());
}

FlatnessReport flatness_report(std::span<const double> profile,
                               double central_fraction) {
  if (profile.size() < 3) {
    throw_invalid("flatness_report: need at least 3 sites");
  }
  const std::size_t peak_index = static_cast<std::size_t>(
      std::max_element(profile.begin(), profile.end()) - profile.begin());
  if (peak_index == 0 || peak_index + 1 == profile.size()) {
    throw_invalid("flatness_report: profile has no interior maximum");
  }

  double total = 0.0, mean = 0.0;
  for (std::size_t j = 0; j < profile.size(); ++j) {
    if (profile[j] < 0.0) {
      throw_invalid("flatness_report: negative density");
    }
    total += profile[j];
    mean += static_cast<double>(j) * profile[j];
  }
  if (total <= 0.0) throw_invalid("flatness_report: empty profile");
  mean /= total;

  double m2 = 0.0, m4 = 0.0;
  for (std::size_t j = 0; j < profile.size(); ++j) {
    const double d = static_cast<double>(j) - mean;
    m2 += d * d * profile[j];
    m4 += d * d * d * d * profile[j];
  }
  m2 /= total;
  m4 /= total;

  FlatnessReport report;
  report.variance = m2;
  report.kurtosis = m4 / (m2 * m2);

  // Quadratic fit of log density over the central sites (>= the stated
  // fraction of the peak): log n = a + b x + c x^2, matched variance -1/2c.
  const double peak = profile[peak_index];
  double s0 = 0, s1 = 0, s2 = 0, s3 = 0, s4 = 0, y0 = 0, y1 = 0, y2 = 0;
  for (std::size_t j = 0; j < profile.size(); ++j) {
    if (profile[j] < central_fraction * peak) continue;
    const double x = static_cast<double>(j) - static_cast<double>(peak_index);
    const double y = std::log(profile[j]);
    s0 += 1;
    s1 += x;
    s2 += x * x;
    s3 += x * x * x;
    s4 += x * x * x * x;
    y0 += y;
    y1 += x * y;
    y2 += x * x * y;
  }
  Eigen::Matrix3d normal;
  normal << s0, s1, s2, s1, s2, s3, s2, s3, s4;
  const Eigen::Vector3d moments(y0, y1, y2);
  const Eigen::Vector3d coeffs = normal.fullPivLu().solve(moments);
  const double curvature = coeffs[2];
  report.matched_gaussian_variance =
      curvature < -1e-300 ? -0.5 / curvature
                          : std::numeric_limits<double>::infinity();
  return report;
}

}  // namespace locwave::spdm
