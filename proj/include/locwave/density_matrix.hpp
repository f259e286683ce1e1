#pragma once

#include <Eigen/Dense>

#include "locwave/fock_basis.hpp"
#include "locwave/sparse_operator.hpp"

namespace locwave::dynamics {

using lattice::Complex;

struct StateTolerances {
  double trace = 1e-9;        // |tr(rho) - 1|
  double hermiticity = 1e-12; // max entry of rho - rho^dagger
  double positivity = -1e-8;  // smallest admissible eigenvalue
};

// Hermitian, trace-one state in a Fock (or any orthonormal) basis.
class DensityMatrix {
 public:
  explicit DensityMatrix(Eigen::MatrixXcd matrix,
                         const StateTolerances& tol = StateTolerances{});

  static DensityMatrix pure(const Eigen::VectorXcd& state);
  static DensityMatrix fock_projector(const lattice::FockBasis& basis,
                                      const lattice::Occupation& occupation);

  Eigen::Index dimension() const { return matrix_.rows(); }
  const Eigen::MatrixXcd& matrix() const { return matrix_; }

  double trace_error() const;
  double hermiticity_error() const;
  double min_eigenvalue() const;  // full self-adjoint eigenvalue sweep

  // Throws a numerical error naming the failed invariant.
  void check_invariants(const StateTolerances& tol = StateTolerances{},
                        bool check_positivity = true) const;

 private:
  Eigen::MatrixXcd matrix_;
};

}  // namespace locwave::dynamics
