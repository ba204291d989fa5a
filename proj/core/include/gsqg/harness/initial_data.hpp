#pragma once

#include "gsqg/harness/config.hpp"
#include "gsqg/spectral_field.hpp"

namespace gsqg::harness {

/// Builds theta_0 from a named profile:
///   zero, single_mode (cos k.x at (m1, m2)), triad (cos at (m1, m2) plus
///   cos at (m1b, m2b)), random (ensemble member `index` with the given
///   decay), vortex_pair (two opposite-signed Gaussians of width `radius`),
///   checkpoint (read from `path`; n must match).
/// Every profile except checkpoint is dealiased, made mean-zero and then
/// scaled so that the chosen norm equals `amplitude`.
SpectralField make_initial_data(const InitialDataSpec& spec, const GridSpec& grid,
                                const ModelParams& params, std::uint64_t seed);

}  // namespace gsqg::harness
