#pragma once

#include <complex>
#include <vector>

#include "locwave/fock_basis.hpp"
#include "locwave/sparse_operator.hpp"

namespace locwave::lattice {

enum class Boundary { periodic, hard_wall };

// One-dimensional single-band lattice, hbar = 1 and lattice constant a = 1.
struct LatticeSpec {
  int sites = 1;
  double hopping = 0.0;            // J
  std::vector<double> potential;   // V(j), empty means zero everywhere
  Boundary boundary = Boundary::periodic;

  double potential_at(int site) const;
  void validate() const;  // throws on size mismatch
};

// Finite-support collapse profile f(i) on integer offsets. Jump-operator
// constructors require unit norm sum |f(i)|^2 = 1.
class LocalizationKernel {
 public:
  LocalizationKernel(std::vector<int> offsets, std::vector<Complex> amplitudes);

  static LocalizationKernel site_local();   // f(i) = delta_{i0}
  static LocalizationKernel three_point();  // f(0) = 1/sqrt(2), f(+-1) = 1/2

  const std::vector<int>& offsets() const noexcept { return offsets_; }
  const std::vector<Complex>& amplitudes() const noexcept {
    return amplitudes_;
  }
  std::size_t size() const noexcept { return offsets_.size(); }

  Complex at(int offset) const;  // zero outside the support
  int min_offset() const;
  int max_offset() const;

  double norm_squared() const;
  bool is_normalized(double tol = 1e-9) const;
  LocalizationKernel normalized() const;

 private:
  std::vector<int> offsets_;      // sorted, unique
  std::vector<Complex> amplitudes_;
};

// First Brillouin zone: integer quasimomenta p with -M/2 <= p < M/2
// (M consecutive values).
int bz_min(int sites);
int bz_max(int sites);
bool in_brillouin_zone(int sites, int p);
int wrap_quasimomentum(int sites, int k);

// Probability distribution g(p) over the M quasimomenta of the zone,
// stored from bz_min upward.
class KickSpectrum {
 public:
  KickSpectrum(int sites, std::vector<double> weights);
  static KickSpectrum uniform(int sites);

  int sites() const noexcept { return sites_; }
  double weight(int p) const;
  const std::vector<double>& weights() const noexcept { return weights_; }

 private:
  int sites_;
  std::vector<double> weights_;
};

// ---- Operator builders (all in the Fock basis of `basis`) ----

// Occupation of one site, diag(n_i).
SparseOperator number_operator(const FockBasis& basis, int site);
SparseOperator total_number_operator(const FockBasis& basis);

// -J sum_j (a_j^dag a_{j+1} + h.c.) + sum_j V(j) n_j, with the wrap bond
// only on periodic lattices.
SparseOperator hopping_hamiltonian(const FockBasis& basis,
                                   const LatticeSpec& spec);

// Center of mass position (1/N) sum_j j n_j with site labels 1..M.
SparseOperator cm_position_operator(const FockBasis& basis);

// Center of mass velocity (iJ/N) sum_j (a_{j+1}^dag a_j - a_j^dag a_{j+1});
// requires periodic boundaries.
SparseOperator cm_velocity_operator(const FockBasis& basis,
                                    const LatticeSpec& spec);

// Localizing jump operator centered at `center`: sum_j f(j - center) n_j.
// Periodic lattices fold offsets modulo M (amplitudes at coincident sites
// add); hard walls drop offsets that fall outside 0..M-1.
SparseOperator jump_operator_kernel(const FockBasis& basis,
                                    const LocalizationKernel& kernel,
                                    int center,
                                    Boundary boundary = Boundary::periodic);

// Momentum-kick jump operator sum_j exp(2 pi i p j / M) n_j.
SparseOperator jump_operator_momentum(const FockBasis& basis, int p);

// Quasimomentum annihilation operator c_k = M^{-1/2} sum_j e^{-2 pi i kj/M} a_j
// as a rectangular map from the N-particle sector onto the (N-1)-particle one.
SparseOperator momentum_annihilation(const FockBasis& source,
                                     const FockBasis& target, int k);

// Channel families used by the dissipative dynamics.
std::vector<SparseOperator> site_jump_family(const FockBasis& basis);
std::vector<SparseOperator> kernel_jump_family(
    const FockBasis& basis, const LocalizationKernel& kernel,
    Boundary boundary = Boundary::periodic);
// (weight g(p), momentum jump operator) pairs; the caller multiplies by the
// overall event rate.
std::vector<std::pair<double, SparseOperator>> momentum_jump_family(
    const FockBasis& basis, const KickSpectrum& spectrum);

}  // namespace locwave::lattice
