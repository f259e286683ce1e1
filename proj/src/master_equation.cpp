#include "locwave/master_equation.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "locwave/errors.hpp"

namespace locwave::dynamics {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

using SparseMatrix = Eigen::SparseMatrix<Complex>;

// Precompiled dissipation channel: L, L^dagger and L^dagger L.
struct Channel {
  double rate;
  SparseMatrix jump;
  SparseMatrix jump_adj;
  SparseMatrix jump_sq;  // L^dagger L
};

std::vector<Channel> compile_channels(const EvolutionSpec& spec) {
  std::vector<Channel> channels;
  channels.reserve(spec.dissipators.size());
  for (const Dissipator& d : spec.dissipators) {
    if (d.rate == 0.0) continue;
    Channel c;
    c.rate = d.rate;
    c.jump = d.op.matrix();
    c.jump_adj = d.op.matrix().adjoint();
    c.jump_sq = c.jump_adj * c.jump;
    channels.push_back(std::move(c));
  }
  return channels;
}

Eigen::MatrixXcd rhs_with_channels(const SparseMatrix& hamiltonian,
                                   const std::vector<Channel>& channels,
                                   const Eigen::MatrixXcd& rho) {
  const Complex minus_i(0.0, -1.0);
  Eigen::MatrixXcd result = minus_i * (hamiltonian * rho - rho * hamiltonian);
  for (const Channel& c : channels) {
    result.noalias() -= c.rate * (c.jump_sq * rho);
    result.noalias() -= c.rate * (rho * c.jump_sq);
    result.noalias() += (2.0 * c.rate) * ((c.jump * rho) * c.jump_adj);
  }
  return result;
}

}  // namespace

void EvolutionSpec::validate() const {
  if (!hamiltonian.is_square()) {
    throw_invalid("EvolutionSpec: Hamiltonian must be square");
  }
  for (const Dissipator& d : dissipators) {
    if (d.rate < 0.0) throw_invalid("EvolutionSpec: negative dissipation rate");
    if (d.op.rows() != hamiltonian.rows() ||
        d.op.cols() != hamiltonian.cols()) {
      throw_invalid("EvolutionSpec: jump operator dimension mismatch");
    }
  }
  if (time_step <= 0.0) throw_invalid("EvolutionSpec: time step must be > 0");
  if (total_time < 0.0) throw_invalid("EvolutionSpec: total time must be >= 0");
}

double default_time_step(double hamiltonian_scale, double rate,
                         int particles) {
  double step = 0.01;
  if (hamiltonian_scale > 0.0) step = std::min(step, 0.01 / hamiltonian_scale);
  const double dephasing = rate * particles * particles;
  if (dephasing > 0.0) step = std::min(step, 0.01 / dephasing);
  return step;
}

Eigen::MatrixXcd lindblad_rhs(const EvolutionSpec& spec,
                              const Eigen::MatrixXcd& rho) {
  spec.validate();
  if (rho.rows() != spec.hamiltonian.rows() || rho.rows() != rho.cols()) {
    throw_invalid("lindblad_rhs: state dimension mismatch");
  }
  return rhs_with_channels(spec.hamiltonian.matrix(), compile_channels(spec),
                           rho);
}

std::vector<MasterSnapshot> evolve_master(const DensityMatrix& initial,
                                          const EvolutionSpec& spec,
                                          int snapshot_count,
                                          const StateTolerances& tol) {
  spec.validate();
  if (initial.dimension() != spec.hamiltonian.rows()) {
    throw_invalid("evolve_master: state dimension mismatch");
  }
  if (snapshot_count < 2) snapshot_count = 2;

  const long n_steps =
      std::max(1L, std::lround(spec.total_time / spec.time_step));
  const double dt = spec.total_time / static_cast<double>(n_steps);

  const SparseMatrix& hamiltonian = spec.hamiltonian.matrix();
  const std::vector<Channel> channels = compile_channels(spec);

  std::vector<long> snapshot_steps;
  snapshot_steps.reserve(static_cast<std::size_t>(snapshot_count));
  for (int i = 0; i < snapshot_count; ++i) {
    const long step = std::lround(static_cast<double>(i) * n_steps /
                                  (snapshot_count - 1));
    if (snapshot_steps.empty() || snapshot_steps.back() != step) {
      snapshot_steps.push_back(step);
    }
  }

  std::vector<MasterSnapshot> snapshots;
  snapshots.reserve(snapshot_steps.size());

  Eigen::MatrixXcd rho = initial.matrix();
  std::size_t next_snapshot = 0;
  for (long step = 0; step <= n_steps; ++step) {
    if (next_snapshot < snapshot_steps.size() &&
        snapshot_steps[next_snapshot] == step) {
      try {
        snapshots.push_back(
            MasterSnapshot{step * dt, DensityMatrix(rho, tol)});
      } catch (const Error& e) {
        throw_numerical("evolve_master: invariant violated at step " +
                        std::to_string(step) + " (t=" +
                        std::to_string(step * dt) + "): " + e.what());
      }
      ++next_snapshot;
    }
    if (step == n_steps) break;

    const Eigen::MatrixXcd k1 = rhs_with_channels(hamiltonian, channels, rho);
    const Eigen::MatrixXcd k2 =
        rhs_with_channels(hamiltonian, channels, rho + (0.5 * dt) * k1);
    const Eigen::MatrixXcd k3 =
        rhs_with_channels(hamiltonian, channels, rho + (0.5 * dt) * k2);
    const Eigen::MatrixXcd k4 =
        rhs_with_channels(hamiltonian, channels, rho + dt * k3);
    rho += (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
  }
  return snapshots;
}

DensityMatrix apply_localizing_event(
    const Eigen::VectorXcd& state,
    const std::vector<lattice::SparseOperator>& jump_family) {
  if (jump_family.empty()) {
    throw_invalid("apply_localizing_event: empty jump family");
  }
  if (std::abs(state.norm() - 1.0) > 1e-9) {
    throw_invalid("apply_localizing_event: state must be normalized");
  }

  // sum_i p_i (L_i psi)(L_i psi)^dag / <L_i^dag L_i> collapses to
  // sum_i (L_i psi)(L_i psi)^dag / sum_j <L_j^dag L_j>.
  Eigen::MatrixXcd accumulated =
      Eigen::MatrixXcd::Zero(state.size(), state.size());
  double total_weight = 0.0;
  for (const lattice::SparseOperator& jump : jump_family) {
    if (jump.rows() != state.size() || jump.cols() != state.size()) {
      throw_invalid("apply_localizing_event: jump operator dimension mismatch");
    }
    const Eigen::VectorXcd jumped = jump.matrix() * state;
    total_weight += jumped.squaredNorm();
    accumulated.noalias() += jumped * jumped.adjoint();
  }
  if (total_weight <= 0.0) {
    throw_invalid("apply_localizing_event: all jump amplitudes vanish");
  }
  return DensityMatrix(accumulated / total_weight);
}

double coherence_decay_factor(const lattice::Occupation& n,
                              const lattice::Occupation& nprime, double rate,
                              double time) {
  if (n.size() != nprime.size()) {
    throw_invalid("coherence_decay_factor: occupation vectors differ in size");
  }
  double exponent = 0.0;
  for (std::size_t i = 0; i < n.size(); ++i) {
    const double diff = static_cast<double>(n[i]) - nprime[i];
    exponent += diff * diff;
  }
  return std::exp(-rate * time * exponent);
}

Complex expectation(const lattice::SparseOperator& op,
                    const Eigen::MatrixXcd& rho) {
  if (op.rows() != rho.cols() || op.cols() != rho.rows()) {
    throw_invalid("expectation: dimension mismatch");
  }
  // Tr(O rho) = sum_{ab} O_ab rho_ba without forming the product.
  Complex trace = 0.0;
  const auto& m = op.matrix();
  for (int col = 0; col < m.outerSize(); ++col) {
    for (Eigen::SparseMatrix<Complex>::InnerIterator it(m, col); it; ++it) {
      trace += it.value() * rho(col, it.row());
    }
  }
  return trace;
}

Complex expectation(const lattice::SparseOperator& op,
                    const DensityMatrix& rho) {
  return expectation(op, rho.matrix());
}

Complex expectation(const lattice::SparseOperator& op,
                    const Eigen::VectorXcd& state) {
  if (op.rows() != state.size() || op.cols() != state.size()) {
    throw_invalid("expectation: dimension mismatch");
  }
  // Tr(O |psi><psi|) = sum_{ab} O_ab psi_b conj(psi_a)
  Complex value = 0.0;
  const auto& m = op.matrix();
  for (int col = 0; col < m.outerSize(); ++col) {
    for (Eigen::SparseMatrix<Complex>::InnerIterator it(m, col); it; ++it) {
      value += it.value() * state[col] * std::conj(state[it.row()]);
    }
  }
  return value;
}

Eigen::VectorXcd prepare_bloch_condensate(const lattice::FockBasis& basis,
                                          int q) {
  if (basis.particles() < 1) {
    throw_invalid("prepare_bloch_condensate: requires N >= 1");
  }
  if (!lattice::in_brillouin_zone(basis.sites(), q)) {
    throw_invalid("prepare_bloch_condensate: q outside the first Brillouin "
                  "zone");
  }

  const int sites = basis.sites();
  const int particles = basis.particles();
  // <n_1..n_M | (b_q^dag)^N |vac> / sqrt(N!) gives the multinomial amplitude
  // sqrt(N! / prod n_j!) M^{-N/2} exp(2 pi i q sum_j j n_j / M).
  Eigen::VectorXcd state(static_cast<Eigen::Index>(basis.dim()));
  const double log_n_factorial = std::lgamma(particles + 1.0);
  for (std::size_t s = 0; s < basis.dim(); ++s) {
    const lattice::Occupation& occ = basis.state(s);
    double log_weight = log_n_factorial;
    double phase_sum = 0.0;
    for (int j = 0; j < sites; ++j) {
      log_weight -= std::lgamma(occ[static_cast<std::size_t>(j)] + 1.0);
      phase_sum += static_cast<double>(j) * occ[static_cast<std::size_t>(j)];
    }
    const double magnitude =
        std::exp(0.5 * log_weight -
                 0.5 * particles * std::log(static_cast<double>(sites)));
    const double angle = kTwoPi * q * phase_sum / sites;
    state[static_cast<Eigen::Index>(s)] =
        magnitude * Complex(std::cos(angle), std::sin(angle));
  }
  state.normalize();
  return state;
}

lattice::SparseOperator coherence_observable(const lattice::FockBasis& basis,
                                             const lattice::Occupation& ket,
                                             const lattice::Occupation& bra) {
  // Tr(|bra><ket| rho) = <ket| rho |bra> = rho_{ket,bra}
  std::vector<lattice::Triplet> entries;
  entries.emplace_back(static_cast<Eigen::Index>(basis.index_of(bra)),
                       static_cast<Eigen::Index>(basis.index_of(ket)),
                       Complex(1.0, 0.0));
  return lattice::SparseOperator::from_triplets(
      static_cast<Eigen::Index>(basis.dim()),
      static_cast<Eigen::Index>(basis.dim()), entries);
}

}  // namespace locwave::dynamics
