#pragma once

#include <span>

namespace locwave::dynamics {

struct ExponentialFit {
  double rate = 0.0;       // lambda in A exp(-lambda t)
  double amplitude = 0.0;  // A, carries the common sign of the data
  double max_relative_residual = 0.0;
};

// Least-squares fit of log|values| against time. Values must share one sign
// and contain no zeros; at least three samples are required.
ExponentialFit fit_exponential_decay(std::span<const double> times,
                                     std::span<const double> values);

}  // namespace locwave::dynamics
