#include "locwave/fock_basis.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <string>

#include "locwave/errors.hpp"

namespace locwave::lattice {

std::size_t fock_dimension(int sites, int particles) {
  if (sites < 1 || particles < 0) return 0;
  if (particles == 0) return 1;
  // binomial(N+M-1, k) with k = min(N, M-1); exact at every step because
  // each prefix product of consecutive integers divides evenly.
  const unsigned long long n =
      static_cast<unsigned long long>(particles) + sites - 1;
  const unsigned long long k =
      std::min<unsigned long long>(particles, sites - 1);
  unsigned long long result = 1;
  for (unsigned long long i = 1; i <= k; ++i) {
    const unsigned long long factor = n - k + i;
    if (result > std::numeric_limits<std::size_t>::max() / factor) {
      return std::numeric_limits<std::size_t>::max();
    }
    result = result * factor / i;
  }
  return static_cast<std::size_t>(result);
}

FockBasis::FockBasis(int sites, int particles, std::size_t dimension_cap)
    : sites_(sites), particles_(particles) {
  if (sites < 1) throw_invalid("FockBasis: site count must be >= 1");
  if (particles < 0) throw_invalid("FockBasis: particle count must be >= 0");

  const std::size_t dim = fock_dimension(sites, particles);
  if (dim > dimension_cap) {
    throw_capacity("FockBasis: dimension " + std::to_string(dim) +
                   " for (M=" + std::to_string(sites) +
                   ", N=" + std::to_string(particles) + ") exceeds cap " +
                   std::to_string(dimension_cap));
  }

  states_.reserve(dim);
  Occupation current(sites_, 0);
  current[0] = particles_;
  states_.push_back(current);
  while (current[sites_ - 1] != particles_) {
    // Move one particle right from the last occupied site before the end,
    // sweeping everything beyond it back next to that site. This walks the
    // occupation vectors in descending lexicographic order.
    int k = sites_ - 2;
    while (current[k] == 0) --k;
    const int tail = std::accumulate(current.begin() + k + 1, current.end(), 0);
    current[k] -= 1;
    current[k + 1] = tail + 1;
    std::fill(current.begin() + k + 2, current.end(), 0);
    states_.push_back(current);
  }
}

std::size_t FockBasis::index_of(const Occupation& occupation) const {
  const auto descending = [](const Occupation& a, const Occupation& b) {
    return a > b;
  };
  const auto it = std::lower_bound(states_.begin(), states_.end(), occupation,
                                   descending);
  if (it == states_.end() || *it != occupation) {
    throw_invalid("FockBasis: occupation vector not in basis");
  }
  return static_cast<std::size_t>(it - states_.begin());
}

}  // namespace locwave::lattice
