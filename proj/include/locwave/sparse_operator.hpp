#pragma once

#include <complex>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/SparseCore>

namespace locwave::lattice {

using Complex = std::complex<double>;
using Triplet = Eigen::Triplet<Complex>;

// Sparse complex operator, possibly rectangular (maps between different
// particle-number sectors). Duplicate (row, col) triplets are summed on
// construction, which is also how periodic kernels fold.
class SparseOperator {
 public:
  SparseOperator() = default;
  explicit SparseOperator(Eigen::SparseMatrix<Complex> matrix);

  static SparseOperator zero(Eigen::Index rows, Eigen::Index cols);
  static SparseOperator from_triplets(Eigen::Index rows, Eigen::Index cols,
                                      const std::vector<Triplet>& entries);
  static SparseOperator diagonal(const Eigen::VectorXcd& values);
  static SparseOperator identity(Eigen::Index dim);

  Eigen::Index rows() const { return matrix_.rows(); }
  Eigen::Index cols() const { return matrix_.cols(); }
  bool is_square() const { return matrix_.rows() == matrix_.cols(); }
  // Dimension of a square operator; throws on rectangular ones.
  Eigen::Index dimension() const;

  const Eigen::SparseMatrix<Complex>& matrix() const { return matrix_; }
  Eigen::MatrixXcd dense() const { return Eigen::MatrixXcd(matrix_); }

  SparseOperator adjoint() const;

  // Largest entry magnitude of the dense difference/identity checks below.
  double max_abs() const;
  double hermiticity_error() const;  // max |A - A^dagger|
  double normality_error() const;    // max |A A^dagger - A^dagger A|

  SparseOperator& operator+=(const SparseOperator& other);
  SparseOperator& operator-=(const SparseOperator& other);

  friend SparseOperator operator+(SparseOperator a, const SparseOperator& b) {
    a += b;
    return a;
  }
  friend SparseOperator operator-(SparseOperator a, const SparseOperator& b) {
    a -= b;
    return a;
  }
  friend SparseOperator operator*(const SparseOperator& a,
                                  const SparseOperator& b);
  friend SparseOperator operator*(Complex scale, const SparseOperator& a);

 private:
  Eigen::SparseMatrix<Complex> matrix_;
};

}  // namespace locwave::lattice
