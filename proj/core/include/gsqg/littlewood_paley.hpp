#pragma once

#include <vector>

#include "gsqg/spectral_field.hpp"

namespace gsqg {

/// Dyadic partition of unity on the lattice of one grid.
///
/// chi_j(xi) = rho(|xi| / 2^j), phi_j = chi_{j+1} - chi_j, where rho is 1 on
/// [0, 1/2], 0 on [1, inf) and a quintic smoothstep in log2(2r) in between.
/// The range [j_min, j_max] covers every lattice shell: S_{j_min} keeps only
/// the mean and chi_{j_max+1} is 1 on the whole lattice.
struct Partition {
  GridSpec grid;
  int j_min = 0;
  int j_max = 0;

  static double rho(double r) noexcept;
  static double chi(int j, double k) noexcept;
  static double phi(int j, double k) noexcept;
  /// Sum of phi_i over |i - j| <= 3.
  static double phi_tilde(int j, double k) noexcept;

  bool contains(int j) const noexcept { return j >= j_min && j <= j_max; }
  int block_count() const noexcept { return j_max - j_min + 1; }
};

Partition build_partition(const GridSpec& grid);

/// Delta_j f. Throws DomainError if j is outside [j_min, j_max].
SpectralField dyadic_block(const SpectralField& f, int j, const Partition& p);
/// S_j f. Accepts j in [j_min - 3, j_max + 1].
SpectralField low_pass(const SpectralField& f, int j, const Partition& p);

struct DyadicBlocks {
  int j_min = 0;
  SpectralField low;                  // S_{j_min} f
  std::vector<SpectralField> blocks;  // Delta_j f for j = j_min, ..., j_max
  double residual = 0.0;              // ||f - (low + sum blocks)||_{L2}

  const SpectralField& block(int j) const { return blocks.at(static_cast<std::size_t>(j - j_min)); }
  int j_max() const noexcept { return j_min + static_cast<int>(blocks.size()) - 1; }
};

DyadicBlocks decompose(const SpectralField& f, const Partition& p);

struct BernsteinReport {
  int j = 0;
  double sigma = 0.0;
  double ratio = 0.0;
  double lower = 0.0;
  double upper = 0.0;
  bool within = false;
};

/// r = ||Lambda^sigma Delta_j f|| / (2^{sigma j} ||Delta_j f||) against the
/// bracket [2^{-|sigma|}, 2^{|sigma|}]. Throws DomainError on an empty block.
BernsteinReport bernstein_check(const SpectralField& f, int j, double sigma, const Partition& p);

}  // namespace gsqg
