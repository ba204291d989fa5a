#pragma once

#include <vector>

#include "gsqg/solver.hpp"

namespace gsqg {

/// One Picard iterate theta^n on the shared time grid, with the difference
/// theta^n - theta^{n-1} measured in both contraction norms.
struct PicardIterate {
  int n = 0;
  Trajectory trajectory;
  /// sup_t ||theta^n - theta^{n-1}||_{L2}; 0 for n = 0.
  double diff_linf_l2 = 0.0;
  /// (int_0^T ||theta^n - theta^{n-1}||^3_{H^{2 kappa/3}} dt)^{1/3}; 0 for n = 0.
  double diff_l3 = 0.0;
  /// diff(n) / diff(n-1) in each norm; 0 for n < 2.
  double ratio_linf_l2 = 0.0;
  double ratio_l3 = 0.0;
};

struct PicardResult {
  std::vector<PicardIterate> iterates;
  bool converged = false;
  /// Index of the last iterate computed.
  int iterations = 0;
  /// Stage path of the last iterate.
  CoefficientPath limit;

  double max_ratio_linf_l2() const;
  double max_ratio_l3() const;
};

/// theta^0 is the heat flow; theta^{n+1} solves the linear modified-flux
/// equation with q = -theta^n sampled at the RK stages of theta^n. Stops when
/// sup_t ||theta^{n+1} - theta^n||_{L2} < tol or after max_iter linear solves.
PicardResult picard_solve(const SpectralField& theta0, const ModelParams& params, double T, double dt,
                          double tol, int max_iter, const SolverOptions& options = {});

/// sup over steps of ||a(t) - b(t)||_{L2} / sup_t ||b(t)||_{L2}.
double path_gap_linf_l2(const CoefficientPath& a, const std::vector<Snapshot>& b);

/// Stage path of the direct nonlinear solver, for comparison with Picard.
CoefficientPath direct_path(const SpectralField& theta0, const ModelParams& params, double T,
                            double dt, const SolverOptions& options = {});

struct ThresholdSearch {
  double threshold = 0.0;  // largest amplitude found to converge
  double failed = 0.0;     // smallest amplitude found to fail
  int probes = 0;
};

/// Locates the critical-norm amplitude at which Picard stops converging with
/// every L^inf_T L2 ratio below one. shape is rescaled to unit critical norm;
/// dt is reduced per amplitude to keep the Courant number at cfl_target.
/// tol is relative to ||theta0||_{L2}.
ThresholdSearch find_picard_threshold(const SpectralField& shape, const ModelParams& params, double T,
                                      double dt_max, double tol, int max_iter, double start,
                                      int bisections, double cfl_target = 0.4);

/// dt <= dt_max dividing T with dt max|u(theta)| / h <= cfl_target.
double stable_dt(const SpectralField& theta, const ModelParams& params, double T, double dt_max,
                 double cfl_target);

}  // namespace gsqg
