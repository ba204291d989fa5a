#include "gsqg/solver.hpp"

#include <algorithm>
#include <cmath>

#include "gsqg/error.hpp"
#include "gsqg/operators.hpp"

namespace gsqg {

namespace {

// Per-mode decay factors exp(-h l(k)) for the stored half spectrum.
std::vector<double> decay_factors(const GridSpec& grid, double h, const ModelParams& p) {
  std::vector<double> e(grid.spectral_size(), 0.0);
  const double k0 = grid.k0();
  for_each_mode(grid, [&](std::size_t idx, int m1, int m2) {
    const double k = k0 * std::hypot(m1, m2);
    const double rate = (k == 0.0 ? 0.0 : p.gamma * std::pow(k, p.kappa)) + p.eps_visc * k * k;
    e[idx] = std::exp(-h * rate);
  });
  return e;
}

SpectralField scaled(const SpectralField& f, const std::vector<double>& e) {
  SpectralField out = f;
  auto c = out.coeffs();
  for (std::size_t i = 0; i < c.size(); ++i) c[i] *= e[i];
  return out;
}

double vector_l2(const VectorField& u) {
  const double a = l2_norm(u.c1);
  const double b = l2_norm(u.c2);
  return std::sqrt(a * a + b * b);
}

double skew_residual(const VectorField& u, const SpectralField& theta) {
  const double denom = vector_l2(u) * sobolev_norm(theta.without_mean(), 1.0) * l2_norm(theta);
  if (denom == 0.0) return 0.0;
  return std::abs(inner(advect(u, theta), theta)) / denom;
}

double resolved(double value, double fallback) { return std::isnan(value) ? fallback : value; }

VectorField flux_velocity(const SpectralField& q, const ModelParams& params) {
  return perp_gradient(apply_radial(q, [&](double k) { return params.flux_symbol(k); }));
}

void check_finite(const SpectralField& next, double t_next, const LastDiagnostics& last) {
  if (!next.all_finite()) throw BlowUpError(t_next, last);
}

}  // namespace

SpectralField linear_heat_propagator(const SpectralField& f, double t, double gamma, double kappa,
                                     double eps_visc) {
  if (!(t >= 0.0)) throw DomainError("heat propagator needs t >= 0");
  ModelParams p;
  p.gamma = gamma;
  p.kappa = kappa;
  p.eps_visc = eps_visc;
  return scaled(f, decay_factors(f.grid(), t, p));
}

StepResult if_rk4_step(const SpectralField& theta, double h, const ModelParams& params,
                       const StageTerm& term) {
  const auto e_full = decay_factors(theta.grid(), h, params);
  const auto e_half = decay_factors(theta.grid(), 0.5 * h, params);
  const SpectralField k1 = term(theta, 0);
  SpectralField s2 = theta;
  s2.axpy(0.5 * h, k1);
  s2 = scaled(s2, e_half);
  const SpectralField k2 = term(s2, 1);
  SpectralField s3 = scaled(theta, e_half);
  s3.axpy(0.5 * h, k2);
  const SpectralField k3 = term(s3, 2);
  SpectralField s4 = scaled(theta, e_full);
  s4.axpy(h, scaled(k3, e_half));
  const SpectralField k4 = term(s4, 3);

  SpectralField incr = scaled(k1, e_full);
  SpectralField mid = k2;
  mid += k3;
  incr.axpy(2.0, scaled(mid, e_half));
  incr += k4;
  SpectralField next = scaled(theta, e_full);
  next.axpy(h / 6.0, incr);
  return StepResult{{theta, std::move(s2), std::move(s3), std::move(s4)}, std::move(next)};
}

SpectralField nonlinear_term(const SpectralField& theta, const ModelParams& params) {
  return -advect(velocity_from_scalar(theta, params), theta).without_mean();
}

SpectralField rhs(const SimState& state) { return nonlinear_term(state.field, state.params); }

long step_count(double T, double dt) {
  if (!(T > 0.0) || !(dt > 0.0)) throw DomainError("horizon T and step dt must be positive");
  const double r = T / dt;
  const double n = std::round(r);
  if (n < 1.0 || std::abs(r - n) > 1e-9 * std::max(1.0, r)) {
    throw DomainError("T must be an integer multiple of dt");
  }
  return static_cast<long>(n);
}

DiagnosticsRow diagnose(const SpectralField& theta, double t, double dt, const ModelParams& params,
                        const SolverOptions& options) {
  DiagnosticsRow row;
  const SpectralField th = theta.without_mean();
  const double sigma = resolved(options.sigma, params.sigma_c());
  const double delta = resolved(options.delta, params.default_delta());
  row.t = t;
  row.l2 = l2_norm(theta);
  row.hs_crit = sobolev_norm(th, sigma);
  row.hs_crit_delta = sobolev_norm(th, sigma + delta);
  if (options.gevrey.alpha > 0.0 && t > 0.0) {
    const double lam = options.gevrey.lambda_at(t, params.gamma, params.kappa);
    try {
      row.gevrey_tracked = std::pow(params.gamma * t, delta / params.kappa) *
                           gevrey_norm(th, options.gevrey.alpha, lam, sigma + delta);
    } catch (const OverflowGuardError&) {
      row.gevrey_tracked = std::numeric_limits<double>::quiet_NaN();
    }
  }
  if (options.nonlinear) {
    const VectorField u = velocity_from_scalar(th, params);
    row.max_u = max_abs(u);
    row.courant = dt * row.max_u / theta.grid().spacing();
    row.energy_residual = skew_residual(u, th);
  }
  return row;
}

SimState step(const SimState& state, double dt, const SolverOptions& options) {
  const ModelParams& p = state.params;
  LastDiagnostics last{state.t, l2_norm(state.field), 0.0, 0.0};
  StageTerm term = [](const SpectralField& f, int) { return SpectralField(f.grid()); };
  if (options.nonlinear) {
    const VectorField u = velocity_from_scalar(state.field, p);
    last.max_u = max_abs(u);
    last.courant = dt * last.max_u / state.field.grid().spacing();
    if (!std::isfinite(last.courant)) throw BlowUpError(state.t, last);
    if (last.courant > options.cfl_limit) throw CflError(last.courant, options.cfl_limit, state.t);
    term = [&p](const SpectralField& f, int) { return nonlinear_term(f, p); };
  }
  StepResult r = if_rk4_step(state.field, dt, p, term);
  const long next_step = state.step + 1;
  const double t_next = state.t0 + static_cast<double>(next_step) * dt;
  check_finite(r.next, t_next, last);
  return SimState{std::move(r.next), t_next, next_step, p, dt, state.t0};
}

Trajectory simulate(const SpectralField& theta0, const ModelParams& params, double T, double dt,
                    const SolverOptions& options) {
  params.validate();
  if (!theta0.all_finite()) throw DomainError("initial data has non-finite coefficients");
  if (options.snapshot_stride < 1) throw DomainError("snapshot stride must be >= 1");
  const long steps = step_count(T, dt);
  Trajectory traj;
  SimState state{theta0, options.t0, 0, params, dt, options.t0};
  const auto record = [&](const SimState& s) {
    traj.snapshots.push_back(Snapshot{s.t, s.field});
    traj.diagnostics.push_back(diagnose(s.field, s.t, dt, params, options));
  };
  record(state);
  for (long i = 0; i < steps; ++i) {
    const double before = options.monitor ? l2_norm(state.field) : 0.0;
    if (options.monitor && options.nonlinear) {
      const VectorField u = velocity_from_scalar(state.field, params);
      traj.max_energy_residual = std::max(traj.max_energy_residual, skew_residual(u, state.field));
    }
    state = step(state, dt, options);
    if (options.monitor && before > 0.0) {
      traj.max_l2_growth = std::max(traj.max_l2_growth, (l2_norm(state.field) - before) / before);
    }
    if (state.step % options.snapshot_stride == 0 || state.step == steps) record(state);
  }
  traj.steps = steps;
  return traj;
}

CoefficientPath heat_flow_path(const SpectralField& theta0, const ModelParams& params, double T,
                               double dt) {
  const long steps = step_count(T, dt);
  const auto e_full = decay_factors(theta0.grid(), dt, params);
  const auto e_half = decay_factors(theta0.grid(), 0.5 * dt, params);
  CoefficientPath path;
  path.dt = dt;
  path.stages.reserve(static_cast<std::size_t>(steps));
  SpectralField cur = theta0;
  for (long i = 0; i < steps; ++i) {
    const SpectralField half = scaled(cur, e_half);
    SpectralField next = scaled(cur, e_full);
    path.stages.push_back({cur, half, half, next});
    cur = std::move(next);
  }
  path.final_state = cur;
  return path;
}

LinearSolveResult linear_flux_solve(const SpectralField& theta0, const CoefficientPath& q,
                                    const ModelParams& params, double T, double dt,
                                    const SolverOptions& options) {
  params.validate();
  if (options.snapshot_stride < 1) throw DomainError("snapshot stride must be >= 1");
  const long steps = step_count(T, dt);
  if (q.steps() < static_cast<std::size_t>(steps) || std::abs(q.dt - dt) > 1e-15 * dt) {
    throw DomainError("coefficient path does not cover every solver step");
  }
  LinearSolveResult out;
  out.path.dt = dt;
  out.path.stages.reserve(static_cast<std::size_t>(steps));
  SolverOptions diag_options = options;
  diag_options.nonlinear = false;
  SpectralField cur = theta0;
  const auto record = [&](double t) {
    out.trajectory.snapshots.push_back(Snapshot{t, cur});
    out.trajectory.diagnostics.push_back(diagnose(cur, t, dt, params, diag_options));
  };
  record(0.0);
  for (long i = 0; i < steps; ++i) {
    const auto& qs = q.stages[static_cast<std::size_t>(i)];
    LastDiagnostics last{i * dt, l2_norm(cur), 0.0, 0.0};
    StageTerm term = [](const SpectralField& f, int) { return SpectralField(f.grid()); };
    if (options.nonlinear) {
      if (!(qs[0].grid() == cur.grid())) throw GridMismatch("coefficient path on a different grid");
      last.max_u = max_abs(flux_velocity(qs[0], params));
      last.courant = dt * last.max_u / cur.grid().spacing();
      if (!std::isfinite(last.courant)) throw BlowUpError(i * dt, last);
      if (last.courant > options.cfl_limit) throw CflError(last.courant, options.cfl_limit, i * dt);
      term = [&](const SpectralField& f, int s) {
        return -flux_divergence(qs[static_cast<std::size_t>(s)], f, params);
      };
    }
    StepResult r = if_rk4_step(cur, dt, params, term);
    check_finite(r.next, (i + 1) * dt, last);
    if (options.monitor) {
      const double before = last.l2;
      if (before > 0.0) {
        out.trajectory.max_l2_growth =
            std::max(out.trajectory.max_l2_growth, (l2_norm(r.next) - before) / before);
      }
    }
    out.path.stages.push_back(std::move(r.stages));
    cur = std::move(r.next);
    if ((i + 1) % options.snapshot_stride == 0 || i + 1 == steps) record((i + 1) * dt);
  }
  out.path.final_state = cur;
  out.trajectory.steps = steps;
  return out;
}

}  // namespace gsqg
