#pragma once

#include <span>
#include <vector>

#include <Eigen/Dense>

#include "locwave/lattice_operators.hpp"

namespace locwave::spdm {

using lattice::Complex;

// Trapped-lattice setup for the single-particle density matrix flow:
// a window of M_w sites, hopping J, on-site potential V(j) and a
// site-localization event rate r.
struct TrapSpec {
  int window = 41;                // M_w, odd so the trap is centered
  double hopping = 1.0;           // J
  std::vector<double> potential;  // V(j) on the window, empty = zero
  double rate = 0.0;              // r
  lattice::Boundary boundary = lattice::Boundary::hard_wall;

  double potential_at(int site) const;
  void validate() const;
};

// Parabolic potential V(j) = curvature * (j - center)^2 over an odd window.
std::vector<double> parabolic_potential(int window, double curvature);

// Matrix of <a_i^dag a_j>; Hermitian with trace N.
class SPDMatrix {
 public:
  SPDMatrix(Eigen::MatrixXcd matrix, double particles);

  int window() const { return static_cast<int>(matrix_.rows()); }
  double particles() const { return particles_; }
  const Eigen::MatrixXcd& matrix() const { return matrix_; }

  double trace_error() const;        // |tr - N|
  double hermiticity_error() const;  // max entry deviation
  double min_diagonal() const;

  void check_invariants(double trace_tol = 1e-9,
                        double hermiticity_tol = 1e-12,
                        double diagonal_floor = -1e-10) const;

 private:
  Eigen::MatrixXcd matrix_;
  double particles_;
};

// d<a_i^dag a_j>/dt = -2r(1-delta_ij)<a_i^dag a_j>
//                     + i(V(i)-V(j))<a_i^dag a_j>
//                     + iJ(<a_{i+1}^dag a_j> + <a_{i-1}^dag a_j>
//                          - <a_i^dag a_{j+1}> - <a_i^dag a_{j-1}>)
// Hard walls drop the out-of-window neighbors; rings wrap them.
Eigen::MatrixXcd spdm_rhs(const Eigen::MatrixXcd& state, const TrapSpec& trap);
Eigen::MatrixXcd spdm_rhs(const SPDMatrix& state, const TrapSpec& trap);

// N particles condensed into the lowest single-particle orbital of the
// window Hamiltonian: <a_i^dag a_j> = N conj(C_i) C_j. Errors out when the
// boundary density exceeds 1e-8 of the peak (window too small).
SPDMatrix ground_state_spdm(const TrapSpec& trap, double particles);

struct SpdmSnapshot {
  double time = 0.0;
  SPDMatrix state;
};

struct SpdmEvolution {
  std::vector<SpdmSnapshot> snapshots;
  // Largest entry moved by the per-step re-symmetrization (S + S^dag)/2.
  double max_hermitization_correction = 0.0;
};

SpdmEvolution evolve_spdm(const SPDMatrix& initial, const TrapSpec& trap,
                          double total_time, double time_step,
                          int snapshot_count = 51);

// Diagonal <n_j> of the single-particle density matrix.
std::vector<double> density_profile(const SPDMatrix& state);

struct FlatnessReport {
  double variance = 0.0;
  double kurtosis = 0.0;  // m4 / m2^2, Gaussian = 3
  // Variance of the Gaussian matched to the central curvature: quadratic fit
  // of log density over the sites within 50% of the peak. Infinite when the
  // fitted curvature is non-negative (profile flat at the top).
  double matched_gaussian_variance = 0.0;
};

// Treats the profile as a distribution over site positions. Requires an
// interior maximum.
FlatnessReport flatness_report(std::span<const double> profile,
                               double central_fraction = 0.5);

}  // namespace locwave::spdm
