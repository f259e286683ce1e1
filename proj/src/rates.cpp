#include "locwave/rates.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "locwave/errors.hpp"

namespace locwave::rates {

double fbar_squared(const lattice::LocalizationKernel& kernel) {
  if (!kernel.is_normalized()) {
    throw_invalid("fbar_squared: kernel must satisfy sum |f|^2 = 1");
  }
  // Differences f(-i) - f(1-i) are nonzero only for -i or 1-i inside the
  // support, i.e. i in [-max_offset, 1 - min_offset].
  double total = 0.0;
  for (int i = -kernel.max_offset(); i <= 1 - kernel.min_offset(); ++i) {
    total += std::norm(kernel.at(-i) - kernel.at(1 - i));
  }
  return total;
}

double fbar_squared_ring(const lattice::LocalizationKernel& kernel,
                         int sites) {
  if (!kernel.is_normalized()) {
    throw_invalid("fbar_squared_ring: kernel must satisfy sum |f|^2 = 1");
  }
  if (sites < 2) throw_invalid("fbar_squared_ring: need at least two sites");
  // Fold the kernel onto the ring, then difference neighboring folds.
  std::vector<lattice::Complex> folded(static_cast<std::size_t>(sites),
                                       lattice::Complex(0.0, 0.0));
  for (std::size_t i = 0; i < kernel.size(); ++i) {
    int site = kernel.offsets()[i] % sites;
    if (site < 0) site += sites;
    folded[static_cast<std::size_t>(site)] += kernel.amplitudes()[i];
  }
  double total = 0.0;
  for (int i = 0; i < sites; ++i) {
    const int next = (i + 1) % sites;
    total += std::norm(folded[static_cast<std::size_t>(i)] -
                       folded[static_cast<std::size_t>(next)]);
  }
  return total;
}

double cm_damping_rate(double rate) {
  if (rate < 0.0) throw_invalid("cm_damping_rate: rate must be >= 0");
  return 2.0 * rate;
}

double cm_damping_rate(double rate,
                       const lattice::LocalizationKernel& kernel) {
  if (rate < 0.0) throw_invalid("cm_damping_rate: rate must be >= 0");
  return fbar_squared(kernel) * rate;
}

double n_high_fit(double depth, const NHighFit& fit) {
  if (depth < 0.0) throw_invalid("n_high_fit: depth must be >= 0");
  const double value = fit.c0 + fit.c1 * depth + fit.c2 * depth * depth;
  return std::clamp(value, 0.0, 1.0);
}

void BECEstimateInput::validate() const {
  if (hopping <= 0.0) throw_invalid("BECEstimateInput: hopping must be > 0");
  if (n_high < 0.0 || n_high > 1.0) {
    throw_invalid("BECEstimateInput: n_high must lie in [0, 1]");
  }
  if (atoms < 0 || sites < 1) {
    throw_invalid("BECEstimateInput: invalid atom or site count");
  }
}

double gamma_prime_estimate(const BECEstimateInput& input) {
  input.validate();
  const double filling = input.atoms * input.n_high / input.sites;
  return 2.0 * input.interaction * input.interaction * filling * filling /
         input.hopping;
}

double gamma_prime_general_spectrum(const Eigen::VectorXd& dn_spectrum,
                                    double interaction,
                                    double correlation_time) {
  const NoiseModel equivalent = NoiseModel::from_spectrum(
      correlation_time, interaction * interaction * dn_spectrum);
  return 0.5 * gamma_from_spectrum(equivalent);
}

double gamma_prime_general_realspace(const Eigen::VectorXd& dn_correlations,
                                     double interaction,
                                     double correlation_time) {
  const NoiseModel equivalent = NoiseModel::from_correlations(
      correlation_time, interaction * interaction * dn_correlations);
  return 0.5 * gamma_from_realspace(equivalent);
}

LightScattering light_scattering_scaling(double rabi, double detuning,
                                         double linewidth, double prefactor) {
  if (detuning == 0.0) {
    throw_invalid("light_scattering_scaling: detuning must be nonzero");
  }
  LightScattering result;
  const double saturation = rabi / detuning;
  result.rate = prefactor * saturation * saturation * linewidth;
  result.depth = prefactor * rabi * rabi / detuning;
  return result;
}

double DeepLatticeMapping::hopping(double depth) const {
  if (depth <= 0.0) throw_invalid("DeepLatticeMapping: depth must be > 0");
  return (4.0 / std::sqrt(std::numbers::pi)) * std::pow(depth, 0.75) *
         std::exp(-2.0 * std::sqrt(depth));
}

double DeepLatticeMapping::interaction(double depth) const {
  if (depth <= 0.0) throw_invalid("DeepLatticeMapping: depth must be > 0");
  return u_scale * std::pow(depth, u_exponent);
}

}  // namespace locwave::rates
