#pragma once

#include <array>
#include <functional>
#include <limits>
#include <vector>

#include "gsqg/model.hpp"
#include "gsqg/norms.hpp"
#include "gsqg/spectral_field.hpp"

namespace gsqg {

/// exp(-t (gamma |k|^kappa + eps_visc |k|^2)); t >= 0.
SpectralField linear_heat_propagator(const SpectralField& f, double t, double gamma, double kappa,
                                     double eps_visc = 0.0);

struct SimState {
  SpectralField field;
  double t = 0.0;
  long step = 0;
  ModelParams params;
  double dt = 0.0;
  /// t = t0 + step * dt.
  double t0 = 0.0;
};

struct SolverOptions {
  double cfl_limit = 0.5;
  /// false integrates the linear part only (test mode).
  bool nonlinear = true;
  /// Snapshot every this many steps; t = 0 and the final time are always kept.
  int snapshot_stride = 1;
  /// Norm exponent for diagnostics; NaN means sigma_c.
  double sigma = std::numeric_limits<double>::quiet_NaN();
  /// Smoothing exponent delta; NaN means params.default_delta().
  double delta = std::numeric_limits<double>::quiet_NaN();
  /// Radius schedule for the gevrey_tracked column; alpha = 0 disables it.
  GevreySpec gevrey{0.0, 0.0, 0.0, LambdaSchedule::fixed};
  /// Evaluate the skew residual and L2 growth at every step.
  bool monitor = true;
  /// Start time, e.g. when resuming from a checkpoint.
  double t0 = 0.0;
};

struct DiagnosticsRow {
  double t = 0.0;
  double l2 = 0.0;
  double hs_crit = 0.0;
  double hs_crit_delta = 0.0;
  double gevrey_tracked = 0.0;
  /// |<u.grad theta, theta>| / (||u|| ||theta||_{H^1} ||theta||).
  double energy_residual = 0.0;
  double max_u = 0.0;
  double courant = 0.0;
};

struct Trajectory {
  std::vector<Snapshot> snapshots;
  std::vector<DiagnosticsRow> diagnostics;
  /// Largest per-step relative L2 increase seen (monitor mode).
  double max_l2_growth = 0.0;
  /// Largest normalized skew residual seen (monitor mode).
  double max_energy_residual = 0.0;
  long steps = 0;

  bool empty() const noexcept { return snapshots.empty(); }
  const SpectralField& final_field() const { return snapshots.back().field; }
};

/// Nonlinear term N(theta) at RK stage s in {0, 1, 2, 3}; the equation is
/// d_t theta = -L theta + N(theta).
using StageTerm = std::function<SpectralField(const SpectralField& theta, int stage)>;

/// The four stage states and the final state of one integrating-factor RK4
/// step of size h.
struct StepResult {
  std::array<SpectralField, 4> stages;
  SpectralField next;
};

StepResult if_rk4_step(const SpectralField& theta, double h, const ModelParams& params,
                       const StageTerm& term);

/// -u(theta) . grad theta with the roundoff mean removed (the term is a divergence).
SpectralField nonlinear_term(const SpectralField& theta, const ModelParams& params);

/// nonlinear_term of the state's field.
SpectralField rhs(const SimState& state);

/// One step; throws CflError or BlowUpError.
SimState step(const SimState& state, double dt, const SolverOptions& options = {});

/// Number of steps T / dt; throws if T / dt is not an integer to 1e-9.
long step_count(double T, double dt);

Trajectory simulate(const SpectralField& theta0, const ModelParams& params, double T, double dt,
                    const SolverOptions& options = {});

/// Stage states of a coefficient trajectory, one array per step.
struct CoefficientPath {
  double dt = 0.0;
  std::vector<std::array<SpectralField, 4>> stages;
  SpectralField final_state{GridSpec{}};

  /// State at the start of step i (i == steps() gives the final state).
  const SpectralField& at_step(std::size_t i) const { return i < stages.size() ? stages[i][0] : final_state; }
  std::size_t steps() const noexcept { return stages.size(); }
};

/// Heat flow of theta0 sampled at the RK stage times.
CoefficientPath heat_flow_path(const SpectralField& theta0, const ModelParams& params, double T,
                               double dt);

struct LinearSolveResult {
  Trajectory trajectory;
  CoefficientPath path;  // stage states of the solution itself
};

/// d_t theta + Div F_q(theta) = -gamma Lambda^kappa theta (+ eps_visc Delta theta)
/// with q sampled from the path at every stage.
LinearSolveResult linear_flux_solve(const SpectralField& theta0, const CoefficientPath& q,
                                    const ModelParams& params, double T, double dt,
                                    const SolverOptions& options = {});

/// Diagnostics for one field at time t.
DiagnosticsRow diagnose(const SpectralField& theta, double t, double dt, const ModelParams& params,
                        const SolverOptions& options);

}  // namespace gsqg
