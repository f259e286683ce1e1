#pragma once

#include <cstddef>
#include <vector>

namespace locwave::lattice {

using Occupation = std::vector<int>;

// Number of N-boson occupation vectors on M sites: binomial(N+M-1, N).
// Saturates to SIZE_MAX instead of overflowing.
std::size_t fock_dimension(int sites, int particles);

// Ordered enumeration of the N-particle Fock states |n_1,...,n_M> on an
// M-site lattice. States are listed in descending lexicographic order, so
// (N,0,...,0) comes first and (0,...,0,N) last; the list order defines the
// basis index.
class FockBasis {
 public:
  static constexpr std::size_t kDefaultDimensionCap = 20000;

  FockBasis(int sites, int particles,
            std::size_t dimension_cap = kDefaultDimensionCap);

  int sites() const noexcept { return sites_; }
  int particles() const noexcept { return particles_; }
  std::size_t dim() const noexcept { return states_.size(); }
  const Occupation& state(std::size_t index) const { return states_.at(index); }
  const std::vector<Occupation>& states() const noexcept { return states_; }

  // Basis index of an occupation vector (binary search over the ordered
  // enumeration). Throws if the vector does not belong to this basis.
  std::size_t index_of(const Occupation& occupation) const;

 private:
  int sites_;
  int particles_;
  std::vector<Occupation> states_;
};

}  // namespace locwave::lattice
