#include "locwave/fitting.hpp"

#include <cmath>
#include <cstddef>
#include <string>

#include "locwave/errors.hpp"

namespace locwave::dynamics {

ExponentialFit fit_exponential_decay(std::span<const double> times,
                                     std::span<const double> values) {
  if (times.size() != values.size()) {
    throw_invalid("fit_exponential_decay: times/values size mismatch");
  }
  if (times.size() < 3) {
    throw_invalid("fit_exponential_decay: need at least 3 samples");
  }
  for (double v : values) {
    if (v == 0.0) throw_invalid("fit_exponential_decay: zero sample");
    if ((v > 0.0) != (values[0] > 0.0)) {
      throw_invalid("fit_exponential_decay: samples change sign");
    }
  }

  const double sign = values[0] > 0.0 ? 1.0 : -1.0;
  const std::size_t n = times.size();
  double sum_t = 0.0, sum_y = 0.0, sum_tt = 0.0, sum_ty = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double y = std::log(std::abs(values[i]));
    sum_t += times[i];
    sum_y += y;
    sum_tt += times[i] * times[i];
    sum_ty += times[i] * y;
  }
  const double denom = n * sum_tt - sum_t * sum_t;
  if (denom == 0.0) {
    throw_invalid("fit_exponential_decay: degenerate time grid");
  }
  const double slope = (n * sum_ty - sum_t * sum_y) / denom;
  const double intercept = (sum_y - slope * sum_t) / n;

  ExponentialFit fit;
  fit.rate = -slope;
  fit.amplitude = sign * std::exp(intercept);
  for (std::size_t i = 0; i < n; ++i) {
    const double model = fit.amplitude * std::exp(slope * times[i]);
    fit.max_relative_residual =
        std::max(fit.max_relative_residual,
                 std::abs(model - values[i]) / std::abs(values[i]));
  }
  return fit;
}

}  // namespace locwave::dynamics
