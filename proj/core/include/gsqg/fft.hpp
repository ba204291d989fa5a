#pragma once

#include <span>
#include <vector>

#include "gsqg/spectral_field.hpp"

namespace gsqg::fft {

/// Evaluates the field on an m x m collocation grid (m >= field.grid().n),
/// i.e. an inverse transform of the zero-padded spectrum.
std::vector<double> synthesize(const SpectralField& field, int m);

/// Forward transform of m x m samples, truncated onto the non-Nyquist
/// lattice of `target` (target.n <= m).
SpectralField analyze(std::span<const double> samples, int m, const GridSpec& target);

/// Padded size for exact quadratic products of fields on an n-lattice.
inline int product_size(int n) { return 3 * n / 2; }

}  // namespace gsqg::fft
