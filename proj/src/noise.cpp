#include "locwave/noise.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "locwave/errors.hpp"
#include "locwave/lattice_operators.hpp"

namespace locwave::rates {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

}  // namespace

NoiseModel::NoiseModel(double correlation_time, Eigen::VectorXd spectrum)
    : correlation_time_(correlation_time), spectrum_(std::move(spectrum)) {
  if (correlation_time_ <= 0.0) {
    throw_invalid("NoiseModel: correlation time must be > 0");
  }
  const int sites = static_cast<int>(spectrum_.size());
  if (sites < 2) throw_invalid("NoiseModel: need at least two sites");
  for (int k = 0; k < sites; ++k) {
    if (spectrum_[k] < 0.0) {
      throw_invalid("NoiseModel: negative spectral weight at k=" +
                    std::to_string(k));
    }
  }
  for (int k = 1; k < sites; ++k) {
    const double mirror = spectrum_[sites - k];
    if (std::abs(spectrum_[k] - mirror) >
        1e-12 * std::max(1.0, spectrum_.maxCoeff())) {
      throw_invalid("NoiseModel: spectrum must satisfy S_k = S_{M-k} for a "
                    "real homogeneous potential (violated at k=" +
                    std::to_string(k) + ")");
    }
  }
}

NoiseModel NoiseModel::from_spectrum(double correlation_time,
                                     Eigen::VectorXd spectrum) {
  return NoiseModel(correlation_time, std::move(spectrum));
}

NoiseModel NoiseModel::from_correlations(double correlation_time,
                                         Eigen::VectorXd correlations) {
  const int sites = static_cast<int>(correlations.size());
  if (sites < 2) throw_invalid("NoiseModel: need at least two sites");
  // S_k = sum_d C(d) exp(-2 pi i d k / M); must come out real and >= 0
  // (positive semidefinite circulant).
  Eigen::VectorXd spectrum(sites);
  for (int k = 0; k < sites; ++k) {
    double real = 0.0, imag = 0.0;
    for (int d = 0; d < sites; ++d) {
      const double angle = kTwoPi * d * k / sites;
      real += correlations[d] * std::cos(angle);
      imag -= correlations[d] * std::sin(angle);
    }
    const double scale = std::max(1.0, correlations.cwiseAbs().maxCoeff());
    if (std::abs(imag) > 1e-9 * scale) {
      throw_invalid("NoiseModel: correlations are not symmetric under "
                    "d -> M - d");
    }
    if (real < -1e-9 * scale) {
      throw_invalid("NoiseModel: correlation matrix is not positive "
                    "semidefinite (S_" + std::to_string(k) + " = " +
                    std::to_string(real) + ")");
    }
    spectrum[k] = std::max(0.0, real);
  }
  return NoiseModel(correlation_time, std::move(spectrum));
}

Eigen::VectorXd NoiseModel::correlations() const {
  const int sites = this->sites();
  Eigen::VectorXd result(sites);
  for (int d = 0; d < sites; ++d) {
    double value = 0.0;
    for (int k = 0; k < sites; ++k) {
      value += spectrum_[k] * std::cos(kTwoPi * d * k / sites);
    }
    result[d] = value / sites;
  }
  return result;
}

NoiseLindblad lindblad_from_noise(const NoiseModel& noise) {
  const int sites = noise.sites();
  NoiseLindblad result;
  result.rate = noise.correlation_time() / sites;
  result.kernel.resize(sites);
  // g_l = M^{-1/2} sum_k sqrt(S_k) exp(2 pi i k l / M)
  for (int l = 0; l < sites; ++l) {
    lattice::Complex sum = 0.0;
    for (int k = 0; k < sites; ++k) {
      const double angle = kTwoPi * k * l / sites;
      sum += std::sqrt(noise.spectrum()[k]) *
             lattice::Complex(std::cos(angle), std::sin(angle));
    }
    result.kernel[l] = sum / std::sqrt(static_cast<double>(sites));
  }
  return result;
}

std::vector<dynamics::Dissipator> noise_dissipators(
    const NoiseModel& noise, const lattice::FockBasis& basis) {
  if (noise.sites() != basis.sites()) {
    throw_invalid("noise_dissipators: noise model and basis disagree on M");
  }
  const NoiseLindblad reduction = lindblad_from_noise(noise);

  const double kernel_norm_sq = reduction.kernel.squaredNorm();
  std::vector<dynamics::Dissipator> channels;
  if (kernel_norm_sq == 0.0) return channels;  // silent noise

  std::vector<int> offsets;
  std::vector<lattice::Complex> amplitudes;
  const double scale = std::sqrt(kernel_norm_sq);
  for (int l = 0; l < noise.sites(); ++l) {
    offsets.push_back(l);
    amplitudes.push_back(reduction.kernel[l] / scale);
  }
  // L_l = sum_j g_{j-l} n_j means the profile at offset o = j - l is g_o.
  const lattice::LocalizationKernel kernel(offsets, amplitudes);

  channels.reserve(static_cast<std::size_t>(noise.sites()));
  for (int center = 0; center < noise.sites(); ++center) {
    channels.push_back(dynamics::Dissipator{
        reduction.rate * kernel_norm_sq,
        lattice::jump_operator_kernel(basis, kernel, center,
                                      lattice::Boundary::periodic)});
  }
  return channels;
}

double gamma_from_spectrum(const NoiseModel& noise) {
  const int sites = noise.sites();
  double sum = 0.0;
  for (int k = 0; k < sites; ++k) {
    const double s = std::sin(std::numbers::pi * k / sites);
    sum += noise.spectrum()[k] * s * s;
  }
  return 4.0 * noise.correlation_time() * sum / sites;
}

double gamma_from_realspace(const NoiseModel& noise) {
  const Eigen::VectorXd corr = noise.correlations();
  // <(V_i - V_{i+1})^2> = 2 C(0) - 2 C(1) on every bond of the circulant,
  // so the bond sum contributes a factor M that cancels the 1/M prefactor.
  return noise.correlation_time() * 2.0 * (corr[0] - corr[1]);
}

}  // namespace locwave::rates
