#include "locwave/lattice_operators.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <string>

#include "locwave/errors.hpp"

namespace locwave::lattice {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

int positive_mod(int value, int modulus) {
  const int r = value % modulus;
  return r < 0 ? r + modulus : r;
}

Complex phase(double angle) { return {std::cos(angle), std::sin(angle)}; }

// Diagonal operator sum_j weight(j) * n_j.
SparseOperator weighted_number_sum(const FockBasis& basis,
                                   const std::vector<Complex>& weights) {
  Eigen::VectorXcd diag(basis.dim());
  for (std::size_t s = 0; s < basis.dim(); ++s) {
    const Occupation& occ = basis.state(s);
    Complex value = 0.0;
    for (int j = 0; j < basis.sites(); ++j) {
      value += weights[static_cast<std::size_t>(j)] *
               static_cast<double>(occ[static_cast<std::size_t>(j)]);
    }
    diag[static_cast<Eigen::Index>(s)] = value;
  }
  return SparseOperator::diagonal(diag);
}

}  // namespace

double LatticeSpec::potential_at(int site) const {
  if (potential.empty()) return 0.0;
  return potential.at(static_cast<std::size_t>(site));
}

void LatticeSpec::validate() const {
  if (sites < 1) throw_invalid("LatticeSpec: site count must be >= 1");
  if (!potential.empty() &&
      potential.size() != static_cast<std::size_t>(sites)) {
    throw_invalid("LatticeSpec: potential list has " +
                  std::to_string(potential.size()) + " entries for " +
                  std::to_string(sites) + " sites");
  }
}

LocalizationKernel::LocalizationKernel(std::vector<int> offsets,
                                       std::vector<Complex> amplitudes) {
  if (offsets.size() != amplitudes.size()) {
    throw_invalid("LocalizationKernel: offsets and amplitudes differ in size");
  }
  if (offsets.empty()) throw_invalid("LocalizationKernel: empty support");

  std::vector<std::size_t> order(offsets.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return offsets[a] < offsets[b]; });
  offsets_.reserve(offsets.size());
  amplitudes_.reserve(offsets.size());
  for (std::size_t i : order) {
    if (!offsets_.empty() && offsets_.back() == offsets[i]) {
      throw_invalid("LocalizationKernel: duplicate offset " +
                    std::to_string(offsets[i]));
    }
    offsets_.push_back(offsets[i]);
    amplitudes_.push_back(amplitudes[i]);
  }
}

LocalizationKernel LocalizationKernel::site_local() {
  return LocalizationKernel({0}, {Complex(1.0, 0.0)});
}

LocalizationKernel LocalizationKernel::three_point() {
  const double root_half = 1.0 / std::sqrt(2.0);
  return LocalizationKernel({-1, 0, 1},
                            {Complex(0.5, 0.0), Complex(root_half, 0.0),
                             Complex(0.5, 0.0)});
}

Complex LocalizationKernel::at(int offset) const {
  const auto it = std::lower_bound(offsets_.begin(), offsets_.end(), offset);
  if (it == offsets_.end() || *it != offset) return {0.0, 0.0};
  return amplitudes_[static_cast<std::size_t>(it - offsets_.begin())];
}

int LocalizationKernel::min_offset() const { return offsets_.front(); }
int LocalizationKernel::max_offset() const { return offsets_.back(); }

double LocalizationKernel::norm_squared() const {
  double total = 0.0;
  for (const Complex& a : amplitudes_) total += std::norm(a);
  return total;
}

bool LocalizationKernel::is_normalized(double tol) const {
  return std::abs(norm_squared() - 1.0) <= tol;
}

LocalizationKernel LocalizationKernel::normalized() const {
  const double scale = std::sqrt(norm_squared());
  if (scale == 0.0) throw_invalid("LocalizationKernel: zero norm");
  std::vector<Complex> scaled(amplitudes_);
  for (Complex& a : scaled) a /= scale;
  return LocalizationKernel(offsets_, scaled);
}

int bz_min(int sites) { return -(sites / 2); }
int bz_max(int sites) { return bz_min(sites) + sites - 1; }

bool in_brillouin_zone(int sites, int p) {
  return p >= bz_min(sites) && p <= bz_max(sites);
}

int wrap_quasimomentum(int sites, int k) {
  return positive_mod(k - bz_min(sites), sites) + bz_min(sites);
}

KickSpectrum::KickSpectrum(int sites, std::vector<double> weights)
    : sites_(sites), weights_(std::move(weights)) {
  if (sites_ < 1) throw_invalid("KickSpectrum: site count must be >= 1");
  if (weights_.size() != static_cast<std::size_t>(sites_)) {
    throw_invalid("KickSpectrum: expected " + std::to_string(sites_) +
                  " weights, got " + std::to_string(weights_.size()));
  }
  double total = 0.0;
  for (double w : weights_) {
    if (w < 0.0) throw_invalid("KickSpectrum: negative weight");
    total += w;
  }
  if (std::abs(total - 1.0) > 1e-9) {
    throw_invalid("KickSpectrum: weights sum to " + std::to_string(total) +
                  ", expected 1");
  }
}

KickSpectrum KickSpectrum::uniform(int sites) {
  return KickSpectrum(sites,
                      std::vector<double>(static_cast<std::size_t>(sites),
                                          1.0 / static_cast<double>(sites)));
}

double KickSpectrum::weight(int p) const {
  if (!in_brillouin_zone(sites_, p)) {
    throw_invalid("KickSpectrum: quasimomentum " + std::to_string(p) +
                  " outside the first Brillouin zone");
  }
  return weights_[static_cast<std::size_t>(p - bz_min(sites_))];
}

SparseOperator number_operator(const FockBasis& basis, int site) {
  if (site < 0 || site >= basis.sites()) {
    throw_invalid("number_operator: site " + std::to_string(site) +
                  " out of range for M=" + std::to_string(basis.sites()));
  }
  Eigen::VectorXcd diag(basis.dim());
  for (std::size_t s = 0; s < basis.dim(); ++s) {
    diag[static_cast<Eigen::Index>(s)] =
        static_cast<double>(basis.state(s)[static_cast<std::size_t>(site)]);
  }
  return SparseOperator::diagonal(diag);
}

SparseOperator total_number_operator(const FockBasis& basis) {
  std::vector<Complex> ones(static_cast<std::size_t>(basis.sites()),
                            Complex(1.0, 0.0));
  return weighted_number_sum(basis, ones);
}

SparseOperator hopping_hamiltonian(const FockBasis& basis,
                                   const LatticeSpec& spec) {
  spec.validate();
  if (spec.sites != basis.sites()) {
    throw_invalid("hopping_hamiltonian: spec has M=" +
                  std::to_string(spec.sites) + ", basis has M=" +
                  std::to_string(basis.sites()));
  }

  const int sites = basis.sites();
  std::vector<Triplet> entries;

  // Bonds (j, j+1); the wrap bond exists only on periodic lattices.
  const int bond_count =
      spec.boundary == Boundary::periodic ? sites : sites - 1;
  for (int j = 0; j < bond_count; ++j) {
    const int right = (j + 1) % sites;
    if (right == j) continue;  // single-site lattice has no bonds
    for (std::size_t s = 0; s < basis.dim(); ++s) {
      const Occupation& occ = basis.state(s);
      // a_j^dag a_{j+1}: move one particle right -> left.
      if (occ[static_cast<std::size_t>(right)] > 0) {
        Occupation moved = occ;
        moved[static_cast<std::size_t>(right)] -= 1;
        moved[static_cast<std::size_t>(j)] += 1;
        const double amp =
            std::sqrt(static_cast<double>(occ[static_cast<std::size_t>(right)]) *
                      (occ[static_cast<std::size_t>(j)] + 1.0));
        entries.emplace_back(static_cast<Eigen::Index>(basis.index_of(moved)),
                             static_cast<Eigen::Index>(s),
                             Complex(-spec.hopping * amp, 0.0));
      }
      // a_{j+1}^dag a_j: move one particle left -> right.
      if (occ[static_cast<std::size_t>(j)] > 0) {
        Occupation moved = occ;
        moved[static_cast<std::size_t>(j)] -= 1;
        moved[static_cast<std::size_t>(right)] += 1;
        const double amp =
            std::sqrt(static_cast<double>(occ[static_cast<std::size_t>(j)]) *
                      (occ[static_cast<std::size_t>(right)] + 1.0));
        entries.emplace_back(static_cast<Eigen::Index>(basis.index_of(moved)),
                             static_cast<Eigen::Index>(s),
                             Complex(-spec.hopping * amp, 0.0));
      }
    }
  }

  // On-site potential.
  if (!spec.potential.empty()) {
    for (std::size_t s = 0; s < basis.dim(); ++s) {
      const Occupation& occ = basis.state(s);
      double value = 0.0;
      for (int j = 0; j < sites; ++j) {
        value += spec.potential_at(j) *
                 static_cast<double>(occ[static_cast<std::size_t>(j)]);
      }
      if (value != 0.0) {
        entries.emplace_back(static_cast<Eigen::Index>(s),
                             static_cast<Eigen::Index>(s),
                             Complex(value, 0.0));
      }
    }
  }

  return SparseOperator::from_triplets(static_cast<Eigen::Index>(basis.dim()),
                                       static_cast<Eigen::Index>(basis.dim()),
                                       entries);
}

SparseOperator cm_position_operator(const FockBasis& basis) {
  if (basis.particles() < 1) {
    throw_invalid("cm_position_operator: requires N >= 1");
  }
  std::vector<Complex> weights(static_cast<std::size_t>(basis.sites()));
  for (int j = 0; j < basis.sites(); ++j) {
    // Site labels run 1..M.
    weights[static_cast<std::size_t>(j)] =
        Complex(static_cast<double>(j + 1) / basis.particles(), 0.0);
  }
  return weighted_number_sum(basis, weights);
}

SparseOperator cm_velocity_operator(const FockBasis& basis,
                                    const LatticeSpec& spec) {
  spec.validate();
  if (spec.sites != basis.sites()) {
    throw_invalid("cm_velocity_operator: lattice/basis size mismatch");
  }
  if (spec.boundary != Boundary::periodic) {
    throw_invalid(
        "cm_velocity_operator: requires periodic boundaries (the hard-wall "
        "commutator picks up edge terms)");
  }
  if (basis.particles() < 1) {
    throw_invalid("cm_velocity_operator: requires N >= 1");
  }

  const int sites = basis.sites();
  const Complex coupling(0.0, spec.hopping / basis.particles());  // iJ/N
  std::vector<Triplet> entries;
  for (int j = 0; j < sites; ++j) {
    const int right = (j + 1) % sites;
    if (right == j) continue;
    for (std::size_t s = 0; s < basis.dim(); ++s) {
      const Occupation& occ = basis.state(s);
      // +iJ/N a_{j+1}^dag a_j
      if (occ[static_cast<std::size_t>(j)] > 0) {
        Occupation moved = occ;
        moved[static_cast<std::size_t>(j)] -= 1;
        moved[static_cast<std::size_t>(right)] += 1;
        const double amp =
            std::sqrt(static_cast<double>(occ[static_cast<std::size_t>(j)]) *
                      (occ[static_cast<std::size_t>(right)] + 1.0));
        entries.emplace_back(static_cast<Eigen::Index>(basis.index_of(moved)),
                             static_cast<Eigen::Index>(s), coupling * amp);
      }
      // -iJ/N a_j^dag a_{j+1}
      if (occ[static_cast<std::size_t>(right)] > 0) {
        Occupation moved = occ;
        moved[static_cast<std::size_t>(right)] -= 1;
        moved[static_cast<std::size_t>(j)] += 1;
        const double amp =
            std::sqrt(static_cast<double>(occ[static_cast<std::size_t>(right)]) *
                      (occ[static_cast<std::size_t>(j)] + 1.0));
        entries.emplace_back(static_cast<Eigen::Index>(basis.index_of(moved)),
                             static_cast<Eigen::Index>(s), -coupling * amp);
      }
    }
  }
  return SparseOperator::from_triplets(static_cast<Eigen::Index>(basis.dim()),
                                       static_cast<Eigen::Index>(basis.dim()),
                                       entries);
}

SparseOperator jump_operator_kernel(const FockBasis& basis,
                                    const LocalizationKernel& kernel,
                                    int center, Boundary boundary) {
  if (!kernel.is_normalized()) {
    throw_invalid("jump_operator_kernel: kernel must satisfy sum |f|^2 = 1 "
                  "(got " + std::to_string(kernel.norm_squared()) + ")");
  }
  if (center < 0 || center >= basis.sites()) {
    throw_invalid("jump_operator_kernel: center site out of range");
  }

  const int sites = basis.sites();
  std::vector<Complex> weights(static_cast<std::size_t>(sites),
                               Complex(0.0, 0.0));
  for (std::size_t i = 0; i < kernel.size(); ++i) {
    const int target = center + kernel.offsets()[i];
    if (boundary == Boundary::periodic) {
      weights[static_cast<std::size_t>(positive_mod(target, sites))] +=
          kernel.amplitudes()[i];
    } else if (target >= 0 && target < sites) {
      weights[static_cast<std::size_t>(target)] += kernel.amplitudes()[i];
    }
  }
  return weighted_number_sum(basis, weights);
}

SparseOperator jump_operator_momentum(const FockBasis& basis, int p) {
  if (!in_brillouin_zone(basis.sites(), p)) {
    throw_invalid("jump_operator_momentum: p=" + std::to_string(p) +
                  " outside the first Brillouin zone of M=" +
                  std::to_string(basis.sites()));
  }
  const int sites = basis.sites();
  std::vector<Complex> weights(static_cast<std::size_t>(sites));
  for (int j = 0; j < sites; ++j) {
    weights[static_cast<std::size_t>(j)] = phase(kTwoPi * p * j / sites);
  }
  return weighted_number_sum(basis, weights);
}

SparseOperator momentum_annihilation(const FockBasis& source,
                                     const FockBasis& target, int k) {
  if (source.sites() != target.sites()) {
    throw_invalid("momentum_annihilation: bases live on different lattices");
  }
  if (source.particles() < 1) {
    throw_invalid("momentum_annihilation: nothing to annihilate at N=0");
  }
  if (target.particles() != source.particles() - 1) {
    throw_invalid("momentum_annihilation: target sector must hold N-1 "
                  "particles");
  }
  if (!in_brillouin_zone(source.sites(), k)) {
    throw_invalid("momentum_annihilation: k outside the first Brillouin zone");
  }

  const int sites = source.sites();
  const double root = 1.0 / std::sqrt(static_cast<double>(sites));
  std::vector<Triplet> entries;
  for (std::size_t s = 0; s < source.dim(); ++s) {
    const Occupation& occ = source.state(s);
    for (int j = 0; j < sites; ++j) {
      const int count = occ[static_cast<std::size_t>(j)];
      if (count == 0) continue;
      Occupation lowered = occ;
      lowered[static_cast<std::size_t>(j)] -= 1;
      const Complex value = root * phase(-kTwoPi * k * j / sites) *
                            std::sqrt(static_cast<double>(count));
      entries.emplace_back(
          static_cast<Eigen::Index>(target.index_of(lowered)),
          static_cast<Eigen::Index>(s), value);
    }
  }
  return SparseOperator::from_triplets(static_cast<Eigen::Index>(target.dim()),
                                       static_cast<Eigen::Index>(source.dim()),
                                       entries);
}

std::vector<SparseOperator> site_jump_family(const FockBasis& basis) {
  std::vector<SparseOperator> family;
  family.reserve(static_cast<std::size_t>(basis.sites()));
  for (int i = 0; i < basis.sites(); ++i) {
    family.push_back(number_operator(basis, i));
  }
  return family;
}

std::vector<SparseOperator> kernel_jump_family(const FockBasis& basis,
                                               const LocalizationKernel& kernel,
                                               Boundary boundary) {
  std::vector<SparseOperator> family;
  family.reserve(static_cast<std::size_t>(basis.sites()));
  for (int center = 0; center < basis.sites(); ++center) {
    family.push_back(jump_operator_kernel(basis, kernel, center, boundary));
  }
  return family;
}

std::vector<std::pair<double, SparseOperator>> momentum_jump_family(
    const FockBasis& basis, const KickSpectrum& spectrum) {
  if (spectrum.sites() != basis.sites()) {
    throw_invalid("momentum_jump_family: spectrum/basis size mismatch");
  }
  std::vector<std::pair<double, SparseOperator>> family;
  family.reserve(static_cast<std::size_t>(basis.sites()));
  for (int p = bz_min(basis.sites()); p <= bz_max(basis.sites()); ++p) {
    family.emplace_back(spectrum.weight(p), jump_operator_momentum(basis, p));
  }
  return family;
}

}  // namespace locwave::lattice
