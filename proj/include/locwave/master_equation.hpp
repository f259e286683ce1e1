#pragma once

#include <vector>

#include <Eigen/Dense>

#include "locwave/density_matrix.hpp"
#include "locwave/fock_basis.hpp"
#include "locwave/lattice_operators.hpp"
#include "locwave/sparse_operator.hpp"

namespace locwave::dynamics {

struct Dissipator {
  double rate = 0.0;            // r >= 0
  lattice::SparseOperator op;   // jump operator L
};

// drho/dt = -i [H, rho] - sum_c r_c (L^dag L rho + rho L^dag L - 2 L rho L^dag)
struct EvolutionSpec {
  lattice::SparseOperator hamiltonian;
  std::vector<Dissipator> dissipators;
  double time_step = 0.01;
  double total_time = 1.0;

  void validate() const;
};

// Default fixed step: 0.01 divided by the larger of the Hamiltonian energy
// scale and r N^2 (the fastest dephasing exponent grows like N^2).
double default_time_step(double hamiltonian_scale, double rate, int particles);

Eigen::MatrixXcd lindblad_rhs(const EvolutionSpec& spec,
                              const Eigen::MatrixXcd& rho);

struct MasterSnapshot {
  double time = 0.0;
  DensityMatrix state;
};

// Classical RK4 with a fixed step; the step is nudged so an integer number of
// steps lands exactly on total_time. State invariants are checked at every
// stored snapshot (positivity via a full eigenvalue sweep happens only
// there). Throws a numerical error naming the step index on violation.
std::vector<MasterSnapshot> evolve_master(
    const DensityMatrix& initial, const EvolutionSpec& spec,
    int snapshot_count = 51, const StateTolerances& tol = StateTolerances{});

// Mixed state after one unobserved localizing event drawn from a jump
// family: outcomes L_i |psi> weighted by p_i = <L_i^dag L_i> / sum_j <...>.
DensityMatrix apply_localizing_event(
    const Eigen::VectorXcd& state,
    const std::vector<lattice::SparseOperator>& jump_family);

// exp(-r t sum_i (n_i - n'_i)^2): closed-form decay of the (n, n') coherence
// under site-local dephasing with H = 0.
double coherence_decay_factor(const lattice::Occupation& n,
                              const lattice::Occupation& nprime, double rate,
                              double time);

Complex expectation(const lattice::SparseOperator& op,
                    const DensityMatrix& rho);
Complex expectation(const lattice::SparseOperator& op,
                    const Eigen::MatrixXcd& rho);
Complex expectation(const lattice::SparseOperator& op,
                    const Eigen::VectorXcd& state);

// All N particles condensed into the quasimomentum-q Bloch mode
// b_q^dag = M^{-1/2} sum_j e^{2 pi i q j / M} a_j^dag.
Eigen::VectorXcd prepare_bloch_condensate(const lattice::FockBasis& basis,
                                          int q);

// Matrix element projector |ket><bra| as a sparse operator; its expectation
// value is the density-matrix element rho_{ket,bra} = <ket| rho |bra>.
lattice::SparseOperator coherence_observable(const lattice::FockBasis& basis,
                                             const lattice::Occupation& ket,
                                             const lattice::Occupation& bra);

}  // namespace locwave::dynamics
