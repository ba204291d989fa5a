#pragma once

#include <complex>
#include <span>
#include <vector>

#include "gsqg/grid.hpp"

namespace gsqg {

using Complex = std::complex<double>;

/// Real samples on the n x n collocation grid, row-major with x1 = i*h as the
/// slow index and x2 = j*h as the fast index.
struct PhysicalSamples {
  GridSpec grid;
  std::vector<double> values;

  double operator()(int i, int j) const { return values[static_cast<std::size_t>(i) * grid.n + j]; }
  double& operator()(int i, int j) { return values[static_cast<std::size_t>(i) * grid.n + j]; }
};

/// Fourier coefficients of a real scalar on the periodic box.
///
/// f(x) = sum_k c_k exp(i k.x); only the half spectrum m2 >= 0 is stored and
/// c_{-k} = conj(c_k) is implied. Nyquist entries are always zero. Parseval:
/// ||f||_{L2}^2 = period^2 * sum_k |c_k|^2.
class SpectralField {
public:
  explicit SpectralField(GridSpec grid);

  /// Takes ownership of a half spectrum. Nyquist entries are zeroed and the
  /// m2 = 0 column is projected onto Hermitian-symmetric values.
  static SpectralField from_half_spectrum(GridSpec grid, std::vector<Complex> coeffs);

  const GridSpec& grid() const noexcept { return grid_; }
  std::span<const Complex> coeffs() const noexcept { return coeffs_; }
  std::span<Complex> coeffs() noexcept { return coeffs_; }

  Complex at(int i1, int i2) const { return coeffs_[index(i1, i2)]; }

  /// Coefficient at integer wave indices (m1, m2) anywhere on the lattice;
  /// zero outside the non-Nyquist lattice.
  Complex mode(int m1, int m2) const;
  /// Sets c_{(m1,m2)} and, implicitly, c_{-(m1,m2)} = conj(value).
  void set_mode(int m1, int m2, Complex value);

  Complex mean() const noexcept { return coeffs_[0]; }
  bool mean_zero() const noexcept { return coeffs_[0] == Complex{}; }
  bool is_zero() const noexcept;
  bool all_finite() const noexcept;

  /// True if every nonzero coefficient lies in the dealiased box.
  bool dealias_supported() const;
  /// Zeroes coefficients outside the dealiased box.
  SpectralField dealiased() const;
  SpectralField without_mean() const;

  /// Re-imposes Hermitian symmetry on the m2 = 0 column and zeroes Nyquist.
  void enforce_invariants();
  /// Exact check of the Hermitian and Nyquist invariants.
  bool satisfies_invariants() const;

  SpectralField& operator+=(const SpectralField& other);
  SpectralField& operator-=(const SpectralField& other);
  SpectralField& operator*=(double s);
  /// this += s * x
  SpectralField& axpy(double s, const SpectralField& x);

  friend SpectralField operator+(SpectralField a, const SpectralField& b) { return a += b; }
  friend SpectralField operator-(SpectralField a, const SpectralField& b) { return a -= b; }
  friend SpectralField operator*(double s, SpectralField a) { return a *= s; }
  friend SpectralField operator-(SpectralField a) { return a *= -1.0; }
  friend bool operator==(const SpectralField&, const SpectralField&) = default;

private:
  std::size_t index(int i1, int i2) const noexcept {
    return static_cast<std::size_t>(i1) * grid_.half_cols() + i2;
  }
  void require_same_grid(const SpectralField& other) const;

  GridSpec grid_;
  std::vector<Complex> coeffs_;
};

/// Two fields sharing one grid, e.g. a velocity (u1, u2).
struct VectorField {
  SpectralField c1;
  SpectralField c2;

  const GridSpec& grid() const noexcept { return c1.grid(); }
};

/// Physical-space synthesis by inverse FFT.
PhysicalSamples to_physical(const SpectralField& field);
/// Analysis by forward FFT; rejects non-finite samples.
SpectralField from_physical(const PhysicalSamples& samples);

/// Real inner product <f, g> = period^2 * sum_k f_k conj(g_k).
double inner(const SpectralField& f, const SpectralField& g);
/// ||f||_{L2}, including the mean mode.
double l2_norm(const SpectralField& f);
/// max over grid points of |u|.
double max_abs(const VectorField& u);

}  // namespace gsqg
