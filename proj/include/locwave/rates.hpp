#pragma once

#include <Eigen/Dense>

#include "locwave/lattice_operators.hpp"
#include "locwave/noise.hpp"

namespace locwave::rates {

// Kernel-dependent damping factor: sum over centers of
// |f(-i) - f(1-i)|^2. A site-local kernel gives exactly 2.
double fbar_squared(const lattice::LocalizationKernel& kernel);
// Same quantity on a ring of M sites, with the kernel folded modulo M. A
// translation-invariant kernel damps nothing.
double fbar_squared_ring(const lattice::LocalizationKernel& kernel, int sites);

// Velocity damping constant for site-local events: 2 r.
double cm_damping_rate(double rate);
// ... and for extended kernels: fbar^2 r.
double cm_damping_rate(double rate, const lattice::LocalizationKernel& kernel);

// Quadratic fit of the high-momentum fraction against lattice depth V
// (recoil units), clamped to [0, 1].
struct NHighFit {
  double c0 = 0.01;
  double c1 = 0.018;
  double c2 = 0.0019;
};

double n_high_fit(double depth, const NHighFit& fit = NHighFit{});

// Order-of-magnitude condensate damping estimate
// gamma' = (2 U^2 / J) (N n_high / M)^2, with tau_c taken as 1/J.
struct BECEstimateInput {
  double interaction = 0.0;  // U
  double hopping = 1.0;      // J
  int atoms = 80;            // N
  int sites = 60;            // M
  double n_high = 0.0;       // high-momentum fraction

  void validate() const;
};

double gamma_prime_estimate(const BECEstimateInput& input);

// Condensate damping from density fluctuations treated as a potential
// U * dn: gamma' = (2 tau_c U^2 / M) sum_k <|dn_k|^2> sin^2(pi k / M).
double gamma_prime_general_spectrum(const Eigen::VectorXd& dn_spectrum,
                                    double interaction,
                                    double correlation_time);
// Real-space twin (tau_c U^2 / 2M) sum_i <(dn_i - dn_{i+1})^2>.
double gamma_prime_general_realspace(const Eigen::VectorXd& dn_correlations,
                                     double interaction,
                                     double correlation_time);

// Far-detuned lattice scalings: scattering rate r ~ (Omega/Delta)^2 Gamma
// and depth V ~ Omega^2 / Delta. At fixed depth, r falls like 1/Delta.
struct LightScattering {
  double rate = 0.0;
  double depth = 0.0;
};

LightScattering light_scattering_scaling(double rabi, double detuning,
                                         double linewidth, double prefactor);

// Deep-lattice single-band estimates in recoil units, J = (4/sqrt(pi))
// V^{3/4} exp(-2 sqrt(V)) and U = u_scale V^{u_exponent}. A convenience
// mapping for sweeps; the coefficients are configuration, not physics
// derived here.
struct DeepLatticeMapping {
  double u_scale = 0.15;
  double u_exponent = 0.75;

  double hopping(double depth) const;
  double interaction(double depth) const;
};

}  // namespace locwave::rates
