#pragma once

#include <cmath>
#include <cstddef>
#include <numbers>

namespace gsqg {

/// Square periodic box of side `period` resolved by n x n collocation points.
///
/// Spectral storage is the real-to-complex half spectrum: rows i1 in [0, n)
/// carry the wave index m1 (wrapped to [-n/2, n/2)), columns i2 in [0, n/2]
/// carry m2 = i2 >= 0. The Nyquist row i1 = n/2 and column i2 = n/2 are kept
/// identically zero. Wavevectors are k = (2 pi / period) * (m1, m2).
struct GridSpec {
  int n = 64;
  double period = 2.0 * std::numbers::pi;
  double dealias_fraction = 2.0 / 3.0;

  /// Throws DomainError if n is not a power of two >= 16, period <= 0, or the
  /// dealias fraction is outside (0, 1].
  void validate() const;

  double k0() const noexcept { return 2.0 * std::numbers::pi / period; }
  double spacing() const noexcept { return period / n; }
  int half_cols() const noexcept { return n / 2 + 1; }
  std::size_t spectral_size() const noexcept {
    return static_cast<std::size_t>(n) * static_cast<std::size_t>(half_cols());
  }
  std::size_t physical_size() const noexcept {
    return static_cast<std::size_t>(n) * static_cast<std::size_t>(n);
  }

  /// Largest retained |m_i| under the dealiasing rule (box truncation).
  int dealias_index() const noexcept;
  /// Largest |m_i| representable without touching the Nyquist line.
  int max_index() const noexcept { return n / 2 - 1; }
  /// Largest |k| on the non-Nyquist lattice.
  double k_max() const noexcept { return k0() * std::sqrt(2.0) * max_index(); }

  int wave_index(int i1) const noexcept { return i1 < n / 2 ? i1 : i1 - n; }
  int row_of(int m1) const noexcept { return m1 >= 0 ? m1 : m1 + n; }
  bool is_nyquist(int i1, int i2) const noexcept { return i1 == n / 2 || i2 == n / 2; }
  bool in_lattice(int m1, int m2) const noexcept {
    return std::abs(m1) <= max_index() && std::abs(m2) <= max_index();
  }
  bool in_dealias_set(int m1, int m2) const noexcept {
    return std::abs(m1) <= dealias_index() && std::abs(m2) <= dealias_index();
  }

  friend bool operator==(const GridSpec&, const GridSpec&) = default;
};

/// Visit every stored (non-Nyquist) half-spectrum entry in storage order.
/// `fn(index, m1, m2)` receives the flat index and the integer wave indices.
template <class Fn>
void for_each_mode(const GridSpec& grid, Fn&& fn) {
  const int n = grid.n;
  const int cols = grid.half_cols();
  for (int i1 = 0; i1 < n; ++i1) {
    if (i1 == n / 2) continue;
    const int m1 = grid.wave_index(i1);
    for (int i2 = 0; i2 < n / 2; ++i2) {
      fn(static_cast<std::size_t>(i1) * cols + i2, m1, i2);
    }
  }
}

/// Multiplicity of a stored half-spectrum entry in full-lattice sums.
inline double mode_weight(int m2) noexcept { return m2 == 0 ? 1.0 : 2.0; }

}  // namespace gsqg
