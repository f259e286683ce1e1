#include "locwave/density_matrix.hpp"

#include <cmath>
#include <string>

#include "locwave/errors.hpp"

namespace locwave::dynamics {

DensityMatrix::DensityMatrix(Eigen::MatrixXcd matrix,
                             const StateTolerances& tol)
    : matrix_(std::move(matrix)) {
  if (matrix_.rows() != matrix_.cols() || matrix_.rows() == 0) {
    throw_invalid("DensityMatrix: matrix must be square and non-empty");
  }
  check_invariants(tol, /*check_positivity=*/true);
}

DensityMatrix DensityMatrix::pure(const Eigen::VectorXcd& state) {
  const double norm = state.norm();
  if (norm == 0.0) throw_invalid("DensityMatrix: zero state vector");
  const Eigen::VectorXcd normalized = state / norm;
  return DensityMatrix(normalized * normalized.adjoint());
}

DensityMatrix DensityMatrix::fock_projector(
    const lattice::FockBasis& basis, const lattice::Occupation& occupation) {
  Eigen::VectorXcd state =
      Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(basis.dim()));
  state[static_cast<Eigen::Index>(basis.index_of(occupation))] = 1.0;
  return pure(state);
}

double DensityMatrix::trace_error() const {
  return std::abs(matrix_.trace() - Complex(1.0, 0.0));
}

double DensityMatrix::hermiticity_error() const {
  return (matrix_ - matrix_.adjoint()).cwiseAbs().maxCoeff();
}

double DensityMatrix::min_eigenvalue() const {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(
      0.5 * (matrix_ + matrix_.adjoint()), Eigen::EigenvaluesOnly);
  return solver.eigenvalues().minCoeff();
}

void DensityMatrix::check_invariants(const StateTolerances& tol,
                                     bool check_positivity) const {
  const double trace_err = trace_error();
  if (trace_err > tol.trace) {
    throw_numerical("DensityMatrix: trace deviates from 1 by " +
                    std::to_string(trace_err));
  }
  const double herm_err = hermiticity_error();
  if (herm_err > tol.hermiticity) {
    throw_numerical("DensityMatrix: hermiticity violated by " +
                    std::to_string(herm_err));
  }
  if (check_positivity) {
    const double min_ev = min_eigenvalue();
    if (min_ev < tol.positivity) {
      throw_numerical("DensityMatrix: negative eigenvalue " +
                      std::to_string(min_ev));
    }
  }
}

}  // namespace locwave::dynamics
