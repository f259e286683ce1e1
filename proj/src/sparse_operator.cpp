#include "locwave/sparse_operator.hpp"

#include <algorithm>
#include <string>

#include "locwave/errors.hpp"

namespace locwave::lattice {

namespace {

double max_abs_of(const Eigen::SparseMatrix<Complex>& m) {
  double result = 0.0;
  for (int col = 0; col < m.outerSize(); ++col) {
    for (Eigen::SparseMatrix<Complex>::InnerIterator it(m, col); it; ++it) {
      result = std::max(result, std::abs(it.value()));
    }
  }
  return result;
}

}  // namespace

SparseOperator::SparseOperator(Eigen::SparseMatrix<Complex> matrix)
    : matrix_(std::move(matrix)) {
  matrix_.makeCompressed();
}

SparseOperator SparseOperator::zero(Eigen::Index rows, Eigen::Index cols) {
  return SparseOperator(Eigen::SparseMatrix<Complex>(rows, cols));
}

SparseOperator SparseOperator::from_triplets(
    Eigen::Index rows, Eigen::Index cols,
    const std::vector<Triplet>& entries) {
  for (const auto& t : entries) {
    if (t.row() < 0 || t.row() >= rows || t.col() < 0 || t.col() >= cols) {
      throw_invalid("SparseOperator: triplet index out of range");
    }
  }
  Eigen::SparseMatrix<Complex> m(rows, cols);
  m.setFromTriplets(entries.begin(), entries.end());
  return SparseOperator(std::move(m));
}

SparseOperator SparseOperator::diagonal(const Eigen::VectorXcd& values) {
  std::vector<Triplet> entries;
  entries.reserve(static_cast<std::size_t>(values.size()));
  for (Eigen::Index i = 0; i < values.size(); ++i) {
    if (values[i] != Complex(0.0, 0.0)) {
      entries.emplace_back(i, i, values[i]);
    }
  }
  return from_triplets(values.size(), values.size(), entries);
}

SparseOperator SparseOperator::identity(Eigen::Index dim) {
  return diagonal(Eigen::VectorXcd::Ones(dim));
}

Eigen::Index SparseOperator::dimension() const {
  if (!is_square()) {
    throw_invalid("SparseOperator: dimension() requires a square operator (" +
                  std::to_string(rows()) + "x" + std::to_string(cols()) + ")");
  }
  return rows();
}

SparseOperator SparseOperator::adjoint() const {
  return SparseOperator(
      Eigen::SparseMatrix<Complex>(matrix_.adjoint()));
}

double SparseOperator::max_abs() const { return max_abs_of(matrix_); }

double SparseOperator::hermiticity_error() const {
  Eigen::SparseMatrix<Complex> diff =
      matrix_ - Eigen::SparseMatrix<Complex>(matrix_.adjoint());
  return max_abs_of(diff);
}

double SparseOperator::normality_error() const {
  const Eigen::SparseMatrix<Complex> adj = matrix_.adjoint();
  Eigen::SparseMatrix<Complex> diff = matrix_ * adj - adj * matrix_;
  return max_abs_of(diff);
}

SparseOperator& SparseOperator::operator+=(const SparseOperator& other) {
  if (rows() != other.rows() || cols() != other.cols()) {
    throw_invalid("SparseOperator: size mismatch in +=");
  }
  matrix_ = matrix_ + other.matrix_;
  matrix_.makeCompressed();
  return *this;
}

SparseOperator& SparseOperator::operator-=(const SparseOperator& other) {
  if (rows() != other.rows() || cols() != other.cols()) {
    throw_invalid("SparseOperator: size mismatch in -=");
  }
  matrix_ = matrix_ - other.matrix_;
  matrix_.makeCompressed();
  return *this;
}

SparseOperator operator*(const SparseOperator& a, const SparseOperator& b) {
  if (a.cols() != b.rows()) {
    throw_invalid("SparseOperator: size mismatch in product");
  }
  return SparseOperator(
      Eigen::SparseMatrix<Complex>(a.matrix_ * b.matrix_));
}

SparseOperator operator*(Complex scale, const SparseOperator& a) {
  return SparseOperator(Eigen::SparseMatrix<Complex>(scale * a.matrix_));
}

}  // namespace locwave::lattice
