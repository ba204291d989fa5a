#pragma once

#include <cstdint>
#include <string>

#include "gsqg/model.hpp"
#include "gsqg/spectral_field.hpp"

namespace gsqg::harness {

inline constexpr std::uint32_t kCheckpointVersion = 1;

struct CheckpointState {
  SpectralField field{GridSpec{}};
  ModelParams params;
  double t = 0.0;
};

/// Binary layout: "GSQG1\0", then little-endian u32 version, u32 n, f64 period,
/// f64 beta, kappa, gamma, mu, eps_visc, u8 velocity law, f64 t, and the
/// n x (n/2 + 1) half spectrum as interleaved f64 (re, im), row-major.
void write_checkpoint(const CheckpointState& state, const std::string& path);

/// Throws FormatError on bad magic, version, truncation or a Hermitian
/// violation; IoError if the file cannot be opened. The dealias fraction is
/// not stored and is taken from `dealias_fraction`.
CheckpointState read_checkpoint(const std::string& path, double dealias_fraction = 2.0 / 3.0);

/// read_checkpoint plus a check that n and period match `expected`.
CheckpointState read_checkpoint_for(const std::string& path, const GridSpec& expected);

}  // namespace gsqg::harness
