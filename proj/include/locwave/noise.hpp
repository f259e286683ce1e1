#pragma once

#include <Eigen/Dense>

#include "locwave/fock_basis.hpp"
#include "locwave/master_equation.hpp"

namespace locwave::rates {

// Spatially homogeneous fluctuating on-site potential, characterized by a
// correlation time tau_c and either its momentum spectrum <|V_k|^2>
// (k = 0..M-1) or the equal-time circulant correlations <V_i V_{i+d}>.
// Homogeneity of a real potential forces the spectrum to be symmetric under
// k -> M - k; the two representations are discrete Fourier pairs.
class NoiseModel {
 public:
  static NoiseModel from_spectrum(double correlation_time,
                                  Eigen::VectorXd spectrum);
  static NoiseModel from_correlations(double correlation_time,
                                      Eigen::VectorXd correlations);

  int sites() const { return static_cast<int>(spectrum_.size()); }
  double correlation_time() const { return correlation_time_; }
  const Eigen::VectorXd& spectrum() const { return spectrum_; }
  // <V_i V_{i+d}> = (1/M) sum_k S_k exp(2 pi i d k / M), real by symmetry.
  Eigen::VectorXd correlations() const;

 private:
  NoiseModel(double correlation_time, Eigen::VectorXd spectrum);
  double correlation_time_;
  Eigen::VectorXd spectrum_;
};

struct NoiseLindblad {
  double rate = 0.0;          // tau_c / M (hbar = 1)
  Eigen::VectorXcd kernel;    // g_l, l = 0..M-1; L_l = sum_j g_{j-l} n_j
};

// Reduce the noise to localization channels: g_l is the inverse transform of
// sqrt(<|V_k|^2>) and the common rate is tau_c / M. The channels reproduce
// the noise-averaged double-commutator dissipator coefficients
// tau_c <V_i V_j> exactly.
NoiseLindblad lindblad_from_noise(const NoiseModel& noise);

// Dissipation channels ready for the master equation: one operator per
// center site l. The raw kernel is rescaled to unit norm and its squared
// norm folded into the rate, which leaves the dissipator unchanged.
std::vector<dynamics::Dissipator> noise_dissipators(
    const NoiseModel& noise, const lattice::FockBasis& basis);

// Velocity damping constant gamma = (4 tau_c / M) sum_k S_k sin^2(pi k / M).
double gamma_from_spectrum(const NoiseModel& noise);
// Same constant from the real-space form (tau_c / M) sum_i <(V_i - V_{i+1})^2>.
double gamma_from_realspace(const NoiseModel& noise);

}  // namespace locwave::rates
