#include "gsqg/harness/initial_data.hpp"

#include <cmath>
#include <numbers>

#include "gsqg/error.hpp"
#include "gsqg/harness/checkpoint.hpp"
#include "gsqg/inequality_lab.hpp"
#include "gsqg/norms.hpp"

namespace gsqg::harness {

namespace {

SpectralField vortex_pair(const GridSpec& grid, double radius) {
  PhysicalSamples s{grid, std::vector<double>(grid.physical_size())};
  const double L = grid.period;
  const double h = grid.spacing();
  const double cx1 = 0.35 * L, cy1 = 0.5 * L, cx2 = 0.65 * L, cy2 = 0.5 * L;
  // Sum over neighbouring periodic images so the profile is smooth across the box edge.
  const auto blob = [&](double x, double y, double cx, double cy) {
    double v = 0.0;
    for (int a = -1; a <= 1; ++a) {
      for (int b = -1; b <= 1; ++b) {
        const double dx = x - cx + a * L;
        const double dy = y - cy + b * L;
        v += std::exp(-(dx * dx + dy * dy) / (radius * radius));
      }
    }
    return v;
  };
  for (int i = 0; i < grid.n; ++i) {
    for (int j = 0; j < grid.n; ++j) {
      const double x = i * h;
      const double y = j * h;
      s(i, j) = blob(x, y, cx1, cy1) - blob(x, y, cx2, cy2);
    }
  }
  return from_physical(s);
}

}  // namespace

SpectralField make_initial_data(const InitialDataSpec& spec, const GridSpec& grid,
                                const ModelParams& params, std::uint64_t seed) {
  if (spec.profile == "checkpoint") return read_checkpoint_for(spec.path, grid).field;
  SpectralField f(grid);
  if (spec.profile == "zero") return f;
  if (spec.profile == "single_mode" || spec.profile == "triad") {
    if (!grid.in_dealias_set(spec.m1, spec.m2) || (spec.m1 == 0 && spec.m2 == 0)) {
      throw DomainError("initial mode (m1, m2) must be nonzero and inside the dealiased box");
    }
    f.set_mode(spec.m1, spec.m2, 0.5);
    if (spec.profile == "triad") {
      if (!grid.in_dealias_set(spec.m1b, spec.m2b) || (spec.m1b == 0 && spec.m2b == 0)) {
        throw DomainError("second mode (m1b, m2b) must be nonzero and inside the dealiased box");
      }
      f.set_mode(spec.m1b, spec.m2b, f.mode(spec.m1b, spec.m2b) + Complex(0.5));
    }
  } else if (spec.profile == "random") {
    EnsembleSpec e;
    e.grid = grid;
    e.decay = spec.decay;
    e.samples = 1;
    e.seed = seed;
    e.dealiased = true;
    f = random_test_field(e, spec.index);
  } else if (spec.profile == "vortex_pair") {
    f = vortex_pair(grid, spec.radius);
  } else {
    throw DomainError("unknown initial-data profile '" + spec.profile + "'");
  }
  f = f.dealiased().without_mean();
  double norm = 1.0;
  switch (spec.normalize) {
    case NormalizeBy::none:
      return spec.amplitude * f;
    case NormalizeBy::l2:
      norm = l2_norm(f);
      break;
    case NormalizeBy::critical:
      norm = sobolev_norm(f, params.sigma_c());
      break;
  }
  if (norm == 0.0) return f;
  return (spec.amplitude / norm) * f;
}

}  // namespace gsqg::harness
