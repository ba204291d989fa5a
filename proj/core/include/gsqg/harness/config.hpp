#pragma once

#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "gsqg/grid.hpp"
#include "gsqg/model.hpp"
#include "gsqg/norms.hpp"

namespace gsqg::harness {

enum class ScenarioKind {
  simulate,
  picard,
  verify_inequalities,
  verify_operators,
  scaling_check,
  decay_study,
  gevrey_track,
};

std::string to_string(ScenarioKind kind);
/// Accepts both "scaling-check" and "scaling_check" spellings.
ScenarioKind scenario_kind_from_string(const std::string& s);

enum class NormalizeBy { none, l2, critical };

struct InitialDataSpec {
  /// zero | single_mode | triad | random | vortex_pair | checkpoint
  std::string profile = "random";
  double amplitude = 0.01;
  NormalizeBy normalize = NormalizeBy::critical;
  double decay = 3.0;
  std::uint64_t index = 0;
  int m1 = 1;
  int m2 = 0;
  int m1b = 0;
  int m2b = 1;
  double radius = 0.5;
  std::string path;
};

struct ScenarioConfig {
  ScenarioKind kind = ScenarioKind::simulate;
  GridSpec grid;
  ModelParams model;
  GevreySpec gevrey{0.4, 0.0, 0.0, LambdaSchedule::power};
  InitialDataSpec initial;

  double T = 1.0;
  double dt = 1e-3;
  int snapshot_stride = 10;
  double cfl = 0.5;
  bool nonlinear = true;
  double delta = std::numeric_limits<double>::quiet_NaN();
  double sigma = std::numeric_limits<double>::quiet_NaN();
  std::vector<double> k_list{0.0};
  double lam = 2.0;
  double tol = 1e-10;
  int max_iter = 30;
  int checkpoint_every = 0;

  int ensemble_samples = 20;
  double ensemble_decay = 3.0;

  std::string out_dir = ".";
  std::uint64_t seed = 1;
};

/// Parses key = value lines grouped under [section] headers. Keys may also
/// appear before any header when their name is unambiguous. '#' starts a
/// comment. Throws ValidationError listing every problem found.
ScenarioConfig parse_config(const std::string& text);

/// Reads and parses a file; throws IoError if it cannot be read.
ScenarioConfig load_config(const std::string& path);

/// Range checks shared by parse_config and programmatic construction.
std::vector<std::string> validate(const ScenarioConfig& config);

}  // namespace gsqg::harness
