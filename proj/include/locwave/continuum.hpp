#pragma once

#include <complex>
#include <functional>

#include <Eigen/Dense>

namespace locwave::continuum {

using Complex = std::complex<double>;

// Uniform 1-D grid with trapezoid quadrature weights.
struct Grid {
  double min = -1.0;
  double max = 1.0;
  int points = 2;

  static Grid symmetric(double halfwidth, int points);

  double dx() const { return (max - min) / (points - 1); }
  double x(int i) const { return min + i * dx(); }
  double weight(int i) const {
    return (i == 0 || i == points - 1) ? 0.5 * dx() : dx();
  }
  void validate() const;
};

// Normalized single-particle wavefunction sampled on a grid. The amplitude
// must be numerically negligible at the grid edges so quadrature sees the
// whole state.
class WavefunctionGrid {
 public:
  WavefunctionGrid(Grid grid, Eigen::VectorXcd values);

  const Grid& grid() const { return grid_; }
  const Eigen::VectorXcd& values() const { return values_; }
  double norm_error() const;  // |integral of |psi|^2 - 1|

 private:
  Grid grid_;
  Eigen::VectorXcd values_;
};

// (2 pi)^{-1/4} sigma0^{-1/2} exp(-(x-center)^2 / 4 sigma0^2)
WavefunctionGrid gaussian_wavepacket(const Grid& grid, double sigma0,
                                     double center = 0.0);
// Default sampling window: +-8 max(sigma0, l), 1024 points.
Grid default_grid(double sigma0, double l, int points = 1024);

// Collapse profile f, either an analytic Gaussian of width l or a gridded
// shape (linearly interpolated, zero outside its grid). Normalized so that
// the integral of |f|^2 is 1.
class CollapseShape {
 public:
  static CollapseShape gaussian(double width);
  static CollapseShape gridded(Grid grid, Eigen::VectorXcd values,
                               double normalization_tol = 1e-8);

  bool analytic() const { return analytic_; }
  // Width parameter: l for the Gaussian, RMS width of |f|^2 otherwise.
  double width() const { return width_; }
  Complex value(double x) const;
  // Radius beyond which |f| drops under `relative` times its peak.
  double support_radius(double relative = 1e-8) const;
  double norm_squared() const;  // quadrature for gridded shapes, 1 analytic

  const Grid& grid() const;                 // gridded shapes only
  const Eigen::VectorXcd& grid_values() const;

 private:
  CollapseShape() = default;
  bool analytic_ = true;
  double width_ = 1.0;
  Grid grid_{};
  Eigen::VectorXcd values_;
};

// Momentum-kick distribution p(k) >= 0 on a k grid, integrating to one.
class KickDistribution {
 public:
  KickDistribution(Grid kgrid, Eigen::VectorXd weights);
  static KickDistribution gaussian(double width, int points = 257,
                                   double halfwidth_widths = 8.0);
  static KickDistribution uniform(double kmax, int points = 257);

  const Grid& grid() const { return grid_; }
  const Eigen::VectorXd& weights() const { return weights_; }
  double max_abs_k() const;
  // integral of p(k) exp(-i k separation) dk
  Complex characteristic_function(double separation) const;

 private:
  Grid grid_;
  Eigen::VectorXd weights_;
};

// rho(x, x') on a grid, Hermitian, numerically normalized to unit trace.
// The trace before normalization is kept for diagnostics.
class ContinuumDensityOperator {
 public:
  ContinuumDensityOperator(Grid grid, Eigen::MatrixXcd matrix);

  const Grid& grid() const { return grid_; }
  const Eigen::MatrixXcd& matrix() const { return matrix_; }
  double pre_normalization_trace() const { return pre_normalization_trace_; }

  double trace_error() const;        // |quadrature trace - 1|
  double hermiticity_error() const;
  double min_diagonal() const;

 private:
  Grid grid_;
  Eigen::MatrixXcd matrix_;
  double pre_normalization_trace_ = 0.0;
};

// |integral of f*(x - x0) psi(x) dx|^2. Errors out when the shifted shape
// has support sticking past the grid boundary (partial overlap would be
// silently truncated); a shape entirely outside the grid is fine and gives
// zero overlap.
double collapse_probability(const WavefunctionGrid& psi,
                            const CollapseShape& shape, double x0);

// Post-event mixture over unknown collapse locations:
// rho(x,x') = integral of p(x0) f*(x-x0) f(x'-x0) dx0, numerically
// normalized. The x0 integral covers the grid padded by `padding_widths`
// times the shape width.
ContinuumDensityOperator collapse_density_operator(const WavefunctionGrid& psi,
                                                   const CollapseShape& shape,
                                                   double padding_widths = 5.0);

// Closed forms for Gaussian psi (width sigma0) and Gaussian f (width l).
struct GaussianCollapseForms {
  double sigma0 = 1.0;
  double l = 1.0;
  double sigma = 1.0;  // sqrt(sigma0^2 + l^2)

  double probability(double x0) const;           // (2 sigma0 l / sigma^2) e^{-x0^2/2 sigma^2}
  Complex density(double x, double xprime) const;  // exact Gaussian mixture
  // Broad-packet limit of the coherence envelope, e^{-dx^2 / 8 l^2}.
  double asymptotic_envelope(double separation) const;
};

GaussianCollapseForms gaussian_collapse_closed_form(double sigma0, double l);

// rho(x,x') = [integral p(k) e^{-ik(x-x')} dk] psi*(x) psi(x'). The k grid
// must satisfy max|k| dx <= pi on psi's grid.
ContinuumDensityOperator kick_density_operator(const WavefunctionGrid& psi,
                                               const KickDistribution& kicks);

// Localized profile equivalent to a kick spectrum:
// f(x) = (2 pi)^{-1/2} integral e^{-ikx} sqrt(p(k)) dk, evaluated on the
// conjugate grid. Parseval keeps it normalized; the tolerance guards
// spectra whose transform does not fit the window.
CollapseShape kernel_from_kick_spectrum(const KickDistribution& kicks,
                                        double normalization_tol = 1e-8);

// Sup-norm of rho(x,x') - psi*(x) psi(x') envelope(x - x') over the band
// |x - x'| <= band_halfwidth, relative to the peak of |rho|.
double factorization_residual(const ContinuumDensityOperator& rho,
                              const WavefunctionGrid& psi,
                              const std::function<Complex(double)>& envelope,
                              double band_halfwidth);

}  // namespace locwave::continuum
