#include "gsqg/littlewood_paley.hpp"

#include <cmath>

#include "gsqg/error.hpp"
#include "gsqg/operators.hpp"

namespace gsqg {

double Partition::rho(double r) noexcept {
  if (r <= 0.5) return 1.0;
  if (r >= 1.0) return 0.0;
  const double s = std::log2(2.0 * r);
  return 1.0 - s * s * s * (10.0 + s * (-15.0 + 6.0 * s));
}

double Partition::chi(int j, double k) noexcept { return rho(std::ldexp(k, -j)); }

double Partition::phi(int j, double k) noexcept { return chi(j + 1, k) - chi(j, k); }

double Partition::phi_tilde(int j, double k) noexcept {
  // Telescopes to chi_{j+4} - chi_{j-3}.
  return chi(j + 4, k) - chi(j - 3, k);
}

Partition build_partition(const GridSpec& grid) {
  grid.validate();
  Partition p;
  p.grid = grid;
  p.j_min = static_cast<int>(std::floor(std::log2(grid.k0())));
  p.j_max = static_cast<int>(std::ceil(std::log2(grid.k_max())));
  return p;
}

SpectralField dyadic_block(const SpectralField& f, int j, const Partition& p) {
  if (!p.contains(j)) throw DomainError("dyadic block index outside the partition range");
  return apply_radial(f, [j](double k) { return Partition::phi(j, k); });
}

SpectralField low_pass(const SpectralField& f, int j, const Partition& p) {
  if (j < p.j_min - 3 || j > p.j_max + 1) throw DomainError("low-pass index outside the partition range");
  return apply_radial(f, [j](double k) { return Partition::chi(j, k); });
}

DyadicBlocks decompose(const SpectralField& f, const Partition& p) {
  DyadicBlocks out{p.j_min, low_pass(f, p.j_min, p), {}, 0.0};
  SpectralField sum = out.low;
  for (int j = p.j_min; j <= p.j_max; ++j) {
    out.blocks.push_back(dyadic_block(f, j, p));
    sum += out.blocks.back();
  }
  out.residual = l2_norm(f - sum);
  return out;
}

BernsteinReport bernstein_check(const SpectralField& f, int j, double sigma, const Partition& p) {
  const SpectralField block = dyadic_block(f, j, p);
  const double base = l2_norm(block);
  if (base == 0.0) throw DomainError("Bernstein ratio undefined for an empty block");
  BernsteinReport r;
  r.j = j;
  r.sigma = sigma;
  r.ratio = l2_norm(fractional_laplacian(block.without_mean(), sigma)) / (std::pow(2.0, sigma * j) * base);
  r.lower = std::pow(2.0, -std::abs(sigma));
  r.upper = std::pow(2.0, std::abs(sigma));
  r.within = r.ratio >= r.lower && r.ratio <= r.upper;
  return r;
}

}  // namespace gsqg
