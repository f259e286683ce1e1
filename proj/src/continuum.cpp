#include "locwave/continuum.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "locwave/errors.hpp"

namespace locwave::continuum {

namespace {

constexpr double kPi = std::numbers::pi;

double quadrature_norm_squared(const Grid& grid,
                               const Eigen::VectorXcd& values) {
  double total = 0.0;
  for (int i = 0; i < grid.points; ++i) {
    total += grid.weight(i) * std::norm(values[i]);
  }
  return total;
}

// Unchecked overlap integral |int f*(x - x0) psi(x) dx|^2.
double overlap_probability(const WavefunctionGrid& psi,
                           const CollapseShape& shape, double x0) {
  const Grid& grid = psi.grid();
  Complex overlap = 0.0;
  for (int i = 0; i < grid.points; ++i) {
    overlap += grid.weight(i) * std::conj(shape.value(grid.x(i) - x0)) *
               psi.values()[i];
  }
  return std::norm(overlap);
}

}  // namespace

Grid Grid::symmetric(double halfwidth, int points) {
  Grid grid{-halfwidth, halfwidth, points};
  grid.validate();
  return grid;
}

void Grid::validate() const {
  if (points < 2) throw_invalid("Grid: need at least two points");
  if (!(max > min)) throw_invalid("Grid: max must exceed min");
}

WavefunctionGrid::WavefunctionGrid(Grid grid, Eigen::VectorXcd values)
    : grid_(grid), values_(std::move(values)) {
  grid_.validate();
  if (values_.size() != grid_.points) {
    throw_invalid("WavefunctionGrid: value count does not match grid");
  }
  const double norm_err = norm_error();
  if (norm_err > 1e-8) {
    throw_invalid("WavefunctionGrid: norm deviates from 1 by " +
                  std::to_string(norm_err));
  }
  const double peak = values_.cwiseAbs().maxCoeff();
  const double edge = std::max(std::abs(values_[0]),
                               std::abs(values_[grid_.points - 1]));
  if (edge > 1e-8 * peak) {
    throw_invalid("WavefunctionGrid: amplitude at the grid edge is " +
                  std::to_string(edge / peak) +
                  " of the peak; widen the grid");
  }
}

double WavefunctionGrid::norm_error() const {
  return std::abs(quadrature_norm_squared(grid_, values_) - 1.0);
}

WavefunctionGrid gaussian_wavepacket(const Grid& grid, double sigma0,
                                     double center) {
  if (sigma0 <= 0.0) throw_invalid("gaussian_wavepacket: width must be > 0");
  Eigen::VectorXcd values(grid.points);
  const double prefactor =
      std::pow(2.0 * kPi, -0.25) / std::sqrt(sigma0);
  for (int i = 0; i < grid.points; ++i) {
    const double dx = grid.x(i) - center;
    values[i] = prefactor * std::exp(-dx * dx / (4.0 * sigma0 * sigma0));
  }
  return WavefunctionGrid(grid, std::move(values));
}

Grid default_grid(double sigma0, double l, int points) {
  return Grid::symmetric(8.0 * std::max(sigma0, l), points);
}

CollapseShape CollapseShape::gaussian(double width) {
  if (width <= 0.0) throw_invalid("CollapseShape: width must be > 0");
  CollapseShape shape;
  shape.analytic_ = true;
  shape.width_ = width;
  return shape;
}

CollapseShape CollapseShape::gridded(Grid grid, Eigen::VectorXcd values,
                                     double normalization_tol) {
  grid.validate();
  if (values.size() != grid.points) {
    throw_invalid("CollapseShape: value count does not match grid");
  }
  const double norm_sq = quadrature_norm_squared(grid, values);
  if (std::abs(norm_sq - 1.0) > normalization_tol) {
    throw_invalid("CollapseShape: |f|^2 integrates to " +
                  std::to_string(norm_sq) + ", expected 1");
  }

  CollapseShape shape;
  shape.analytic_ = false;
  shape.grid_ = grid;
  shape.values_ = std::move(values);

  // RMS width of |f|^2 around its mean position.
  double mean = 0.0;
  for (int i = 0; i < grid.points; ++i) {
    mean += grid.weight(i) * grid.x(i) * std::norm(shape.values_[i]);
  }
  mean /= norm_sq;
  double second = 0.0;
  for (int i = 0; i < grid.points; ++i) {
    const double dx = grid.x(i) - mean;
    second += grid.weight(i) * dx * dx * std::norm(shape.values_[i]);
  }
  shape.width_ = std::sqrt(second / norm_sq);
  return shape;
}

Complex CollapseShape::value(double x) const {
  if (analytic_) {
    const double prefactor = std::pow(2.0 * kPi, -0.25) / std::sqrt(width_);
    return prefactor * std::exp(-x * x / (4.0 * width_ * width_));
  }
  if (x < grid_.min || x > grid_.max) return {0.0, 0.0};
  const double position = (x - grid_.min) / grid_.dx();
  const int low = std::min(grid_.points - 2, static_cast<int>(position));
  const double frac = position - low;
  return (1.0 - frac) * values_[low] + frac * values_[low + 1];
}

double CollapseShape::support_radius(double relative) const {
  if (analytic_) {
    // |f(x)| / |f(0)| = exp(-x^2 / 4 l^2)
    return 2.0 * width_ * std::sqrt(-std::log(relative));
  }
  const double peak = values_.cwiseAbs().maxCoeff();
  double radius = 0.0;
  for (int i = 0; i < grid_.points; ++i) {
    if (std::abs(values_[i]) >= relative * peak) {
      radius = std::max(radius, std::abs(grid_.x(i)));
    }
  }
  return radius;
}

double CollapseShape::norm_squared() const {
  if (analytic_) return 1.0;
  return quadrature_norm_squared(grid_, values_);
}

const Grid& CollapseShape::grid() const {
  if (analytic_) throw_invalid("CollapseShape: analytic shape has no grid");
  return grid_;
}

const Eigen::VectorXcd& CollapseShape::grid_values() const {
  if (analytic_) throw_invalid("CollapseShape: analytic shape has no grid");
  return values_;
}

KickDistribution::KickDistribution(Grid kgrid, Eigen::VectorXd weights)
    : grid_(kgrid), weights_(std::move(weights)) {
  grid_.validate();
  if (weights_.size() != grid_.points) {
    throw_invalid("KickDistribution: weight count does not match grid");
  }
  double total = 0.0;
  for (int i = 0; i < grid_.points; ++i) {
    if (weights_[i] < 0.0) {
      throw_invalid("KickDistribution: negative probability weight");
    }
    total += grid_.weight(i) * weights_[i];
  }
  if (std::abs(total - 1.0) > 1e-8) {
    throw_invalid("KickDistribution: p(k) integrates to " +
                  std::to_string(total) + ", expected 1");
  }
}

KickDistribution KickDistribution::gaussian(double width, int points,
                                            double halfwidth_widths) {
  if (width <= 0.0) throw_invalid("KickDistribution: width must be > 0");
  const Grid grid = Grid::symmetric(halfwidth_widths * width, points);
  Eigen::VectorXd weights(points);
  const double prefactor = 1.0 / (width * std::sqrt(2.0 * kPi));
  for (int i = 0; i < points; ++i) {
    const double k = grid.x(i);
    weights[i] = prefactor * std::exp(-k * k / (2.0 * width * width));
  }
  return KickDistribution(grid, std::move(weights));
}

KickDistribution KickDistribution::uniform(double kmax, int points) {
  if (kmax <= 0.0) throw_invalid("KickDistribution: kmax must be > 0");
  const Grid grid = Grid::symmetric(kmax, points);
  return KickDistribution(grid,
                          Eigen::VectorXd::Constant(points, 1.0 / (2.0 * kmax)));
}

double KickDistribution::max_abs_k() const {
  return std::max(std::abs(grid_.min), std::abs(grid_.max));
}

Complex KickDistribution::characteristic_function(double separation) const {
  Complex value = 0.0;
  for (int i = 0; i < grid_.points; ++i) {
    const double k = grid_.x(i);
    value += grid_.weight(i) * weights_[i] *
             Complex(std::cos(k * separation), -std::sin(k * separation));
  }
  return value;
}

ContinuumDensityOperator::ContinuumDensityOperator(Grid grid,
                                                   Eigen::MatrixXcd matrix)
    : grid_(grid), matrix_(std::move(matrix)) {
  grid_.validate();
  if (matrix_.rows() != grid_.points || matrix_.cols() != grid_.points) {
    throw_invalid("ContinuumDensityOperator: matrix does not match grid");
  }
  double trace = 0.0;
  for (int i = 0; i < grid_.points; ++i) {
    trace += grid_.weight(i) * matrix_(i, i).real();
  }
  pre_normalization_trace_ = trace;
  if (trace <= 0.0) {
    throw_invalid("ContinuumDensityOperator: non-positive trace");
  }
  matrix_ /= trace;

  if (hermiticity_error() > 1e-10 * matrix_.cwiseAbs().maxCoeff()) {
    throw_numerical("ContinuumDensityOperator: not Hermitian");
  }
  if (min_diagonal() < -1e-12 * matrix_.cwiseAbs().maxCoeff()) {
    throw_numerical("ContinuumDensityOperator: negative diagonal");
  }
}

double ContinuumDensityOperator::trace_error() const {
  double trace = 0.0;
  for (int i = 0; i < grid_.points; ++i) {
    trace += grid_.weight(i) * matrix_(i, i).real();
  }
  return std::abs(trace - 1.0);
}

double ContinuumDensityOperator::hermiticity_error() const {
  return (matrix_ - matrix_.adjoint()).cwiseAbs().maxCoeff();
}

double ContinuumDensityOperator::min_diagonal() const {
  return matrix_.diagonal().real().minCoeff();
}

double collapse_probability(const WavefunctionGrid& psi,
                            const CollapseShape& shape, double x0) {
  const Grid& grid = psi.grid();
  if (!shape.analytic()) {
    // A gridded shape is only known on its own window. Shifted by x0 it must
    // sit inside the state's grid, or miss it entirely (zero overlap);
    // straddling the boundary would silently truncate the shape.
    const double low = x0 + shape.grid().min;
    const double high = x0 + shape.grid().max;
    const double slack = 1e-9 * grid.dx();
    const bool inside = low >= grid.min - slack && high <= grid.max + slack;
    const bool disjoint = high < grid.min || low > grid.max;
    if (!inside && !disjoint) {
      throw_invalid("collapse_probability: shifted shape at x0=" +
                    std::to_string(x0) + " leaks past the grid boundary");
    }
    if (disjoint) return 0.0;
  }
  return overlap_probability(psi, shape, x0);
}

ContinuumDensityOperator collapse_density_operator(const WavefunctionGrid& psi,
                                                   const CollapseShape& shape,
                                                   double padding_widths) {
  if (padding_widths < 5.0) {
    throw_invalid("collapse_density_operator: the x0 range must pad the "
                  "state's support by at least 5 shape widths");
  }
  const Grid& grid = psi.grid();
  const double dx = grid.dx();
  const double padding = padding_widths * shape.width();
  const int pad_points = static_cast<int>(std::ceil(padding / dx));
  const int n_x0 = grid.points + 2 * pad_points;
  const Grid x0_grid{grid.min - pad_points * dx, grid.max + pad_points * dx,
                     n_x0};

  // rho = B^dag B with B[x0, x] = sqrt(w(x0) p(x0)) f(x - x0); one dense
  // product instead of an O(n^3) triple loop.
  Eigen::MatrixXcd collapse_matrix(n_x0, grid.points);
  for (int a = 0; a < n_x0; ++a) {
    const double x0 = x0_grid.x(a);
    const double p = overlap_probability(psi, shape, x0);
    const double scale = std::sqrt(x0_grid.weight(a) * p);
    for (int i = 0; i < grid.points; ++i) {
      collapse_matrix(a, i) = scale * shape.value(grid.x(i) - x0);
    }
  }
  Eigen::MatrixXcd rho = collapse_matrix.adjoint() * collapse_matrix;
  return ContinuumDensityOperator(grid, std::move(rho));
}

GaussianCollapseForms gaussian_collapse_closed_form(double sigma0, double l) {
  if (sigma0 <= 0.0 || l <= 0.0) {
    throw_invalid("gaussian_collapse_closed_form: widths must be > 0");
  }
  GaussianCollapseForms forms;
  forms.sigma0 = sigma0;
  forms.l = l;
  forms.sigma = std::sqrt(sigma0 * sigma0 + l * l);
  return forms;
}

double GaussianCollapseForms::probability(double x0) const {
  const double sigma_sq = sigma * sigma;
  return (2.0 * sigma0 * l / sigma_sq) *
         std::exp(-x0 * x0 / (2.0 * sigma_sq));
}

Complex GaussianCollapseForms::density(double x, double xprime) const {
  const double sigma_sq = sigma * sigma;
  const double wide = sigma_sq + l * l;
  const double diff = x - xprime;
  const double value =
      (1.0 / std::sqrt(2.0 * kPi * wide)) *
      std::exp(-(x * x + xprime * xprime) / (4.0 * wide)) *
      std::exp(-diff * diff * sigma_sq / (8.0 * l * l * wide));
  return {value, 0.0};
}

double GaussianCollapseForms::asymptotic_envelope(double separation) const {
  return std::exp(-separation * separation / (8.0 * l * l));
}

ContinuumDensityOperator kick_density_operator(const WavefunctionGrid& psi,
                                               const KickDistribution& kicks) {
  const Grid& grid = psi.grid();
  if (kicks.max_abs_k() * grid.dx() > kPi) {
    throw_invalid("kick_density_operator: grid spacing cannot resolve the "
                  "largest momentum kick (Nyquist violated)");
  }
  // The coherence factor depends only on x - x', so precompute it per
  // separation index.
  const int n = grid.points;
  Eigen::VectorXcd envelope(2 * n - 1);
  for (int d = -(n - 1); d <= n - 1; ++d) {
    envelope[d + n - 1] = kicks.characteristic_function(d * grid.dx());
  }
  Eigen::MatrixXcd rho(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      rho(i, j) = envelope[(i - j) + n - 1] * std::conj(psi.values()[i]) *
                  psi.values()[j];
    }
  }
  return ContinuumDensityOperator(grid, std::move(rho));
}

CollapseShape kernel_from_kick_spectrum(const KickDistribution& kicks,
                                        double normalization_tol) {
  const Grid& kgrid = kicks.grid();
  const double dk = kgrid.dx();
  // Conjugate window: the transform of a spectrum sampled at dk repeats
  // outside +-pi/dk, so that is the natural support bound.
  const int points = 2 * kgrid.points + 1;
  const Grid xgrid = Grid::symmetric(kPi / dk, points);

  Eigen::VectorXcd values(points);
  const double prefactor = 1.0 / std::sqrt(2.0 * kPi);
  for (int i = 0; i < points; ++i) {
    const double x = xgrid.x(i);
    Complex sum = 0.0;
    for (int a = 0; a < kgrid.points; ++a) {
      const double k = kgrid.x(a);
      sum += kgrid.weight(a) * std::sqrt(kicks.weights()[a]) *
             Complex(std::cos(k * x), -std::sin(k * x));
    }
    values[i] = prefactor * sum;
  }
  return CollapseShape::gridded(xgrid, std::move(values), normalization_tol);
}

double factorization_residual(const ContinuumDensityOperator& rho,
                              const WavefunctionGrid& psi,
                              const std::function<Complex(double)>& envelope,
                              double band_halfwidth) {
  const Grid& grid = rho.grid();
  if (psi.grid().points != grid.points || psi.grid().min != grid.min ||
      psi.grid().max != grid.max) {
    throw_invalid("factorization_residual: psi and rho grids differ");
  }
  const int band = static_cast<int>(std::floor(band_halfwidth / grid.dx()));
  const double peak = rho.matrix().cwiseAbs().maxCoeff();
  double worst = 0.0;
  for (int i = 0; i < grid.points; ++i) {
    const int j_max = std::min(grid.points - 1, i + band);
    for (int j = std::max(0, i - band); j <= j_max; ++j) {
      const Complex model = std::conj(psi.values()[i]) * psi.values()[j] *
                            envelope(grid.x(i) - grid.x(j));
      worst = std::max(worst, std::abs(rho.matrix()(i, j) - model));
    }
  }
  return worst / peak;
}

}  // namespace locwave::continuum
