#include "gsqg/picard.hpp"

#include <algorithm>
#include <cmath>

#include "gsqg/error.hpp"
#include "gsqg/operators.hpp"

namespace gsqg {

namespace {

CoefficientPath negated(const CoefficientPath& p) {
  CoefficientPath q;
  q.dt = p.dt;
  q.stages.reserve(p.stages.size());
  for (const auto& s : p.stages) q.stages.push_back({-s[0], -s[1], -s[2], -s[3]});
  q.final_state = -p.final_state;
  return q;
}

struct DiffNorms {
  double linf_l2 = 0.0;
  double l3 = 0.0;
};

// Both difference norms over the step grid, including the final state.
DiffNorms difference(const CoefficientPath& a, const CoefficientPath& b, double kappa) {
  DiffNorms d;
  const std::size_t steps = a.steps();
  const double s = 2.0 * kappa / 3.0;
  double cube = 0.0;
  for (std::size_t i = 0; i <= steps; ++i) {
    const SpectralField diff = a.at_step(i) - b.at_step(i);
    d.linf_l2 = std::max(d.linf_l2, l2_norm(diff));
    const double h = sobolev_norm(diff.without_mean(), s);
    // Trapezoid weights on the uniform grid.
    const double w = (i == 0 || i == steps) ? 0.5 : 1.0;
    cube += w * a.dt * h * h * h;
  }
  d.l3 = std::cbrt(cube);
  return d;
}

}  // namespace

double PicardResult::max_ratio_linf_l2() const {
  double m = 0.0;
  for (const auto& it : iterates) m = std::max(m, it.ratio_linf_l2);
  return m;
}

double PicardResult::max_ratio_l3() const {
  double m = 0.0;
  for (const auto& it : iterates) m = std::max(m, it.ratio_l3);
  return m;
}

PicardResult picard_solve(const SpectralField& theta0, const ModelParams& params, double T, double dt,
                          double tol, int max_iter, const SolverOptions& options) {
  params.validate();
  if (!(tol > 0.0)) throw DomainError("Picard tolerance must be positive");
  if (max_iter < 1) throw DomainError("Picard needs max_iter >= 1");
  PicardResult result;

  CoefficientPath prev = heat_flow_path(theta0, params, T, dt);
  {
    SolverOptions heat = options;
    heat.nonlinear = false;
    PicardIterate it0;
    it0.n = 0;
    it0.trajectory = linear_flux_solve(theta0, prev, params, T, dt, heat).trajectory;
    result.iterates.push_back(std::move(it0));
  }
  for (int n = 1; n <= max_iter; ++n) {
    LinearSolveResult solve = linear_flux_solve(theta0, negated(prev), params, T, dt, options);
    PicardIterate it;
    it.n = n;
    const DiffNorms d = difference(solve.path, prev, params.kappa);
    it.diff_linf_l2 = d.linf_l2;
    it.diff_l3 = d.l3;
    if (n >= 2) {
      const PicardIterate& before = result.iterates.back();
      it.ratio_linf_l2 = before.diff_linf_l2 > 0.0 ? d.linf_l2 / before.diff_linf_l2 : 0.0;
      it.ratio_l3 = before.diff_l3 > 0.0 ? d.l3 / before.diff_l3 : 0.0;
    }
    it.trajectory = std::move(solve.trajectory);
    result.iterates.push_back(std::move(it));
    prev = std::move(solve.path);
    result.iterations = n;
    if (d.linf_l2 < tol) {
      result.converged = true;
      break;
    }
  }
  result.limit = std::move(prev);
  return result;
}

CoefficientPath direct_path(const SpectralField& theta0, const ModelParams& params, double T,
                            double dt, const SolverOptions& options) {
  params.validate();
  const long steps = step_count(T, dt);
  CoefficientPath path;
  path.dt = dt;
  SpectralField cur = theta0;
  const StageTerm term = [&params](const SpectralField& f, int) { return nonlinear_term(f, params); };
  for (long i = 0; i < steps; ++i) {
    const VectorField u = velocity_from_scalar(cur, params);
    const double courant = dt * max_abs(u) / cur.grid().spacing();
    if (!std::isfinite(courant)) throw BlowUpError(i * dt, LastDiagnostics{i * dt, l2_norm(cur), 0.0, courant});
    if (courant > options.cfl_limit) throw CflError(courant, options.cfl_limit, i * dt);
    StepResult r = if_rk4_step(cur, dt, params, term);
    if (!r.next.all_finite()) throw BlowUpError((i + 1) * dt, LastDiagnostics{i * dt, l2_norm(cur), 0.0, courant});
    path.stages.push_back(std::move(r.stages));
    cur = std::move(r.next);
  }
  path.final_state = cur;
  return path;
}

double path_gap_linf_l2(const CoefficientPath& a, const std::vector<Snapshot>& b) {
  double gap = 0.0;
  double scale = 0.0;
  for (const auto& snap : b) {
    const auto i = static_cast<std::size_t>(std::llround(snap.t / a.dt));
    if (i > a.steps()) throw DomainError("snapshot beyond the end of the path");
    gap = std::max(gap, l2_norm(a.at_step(i) - snap.field));
    scale = std::max(scale, l2_norm(snap.field));
  }
  return scale > 0.0 ? gap / scale : gap;
}

double stable_dt(const SpectralField& theta, const ModelParams& params, double T, double dt_max,
                 double cfl_target) {
  const double umax = max_abs(velocity_from_scalar(theta, params));
  double dt = dt_max;
  if (umax > 0.0) dt = std::min(dt, cfl_target * theta.grid().spacing() / umax);
  const double steps = std::ceil(T / dt - 1e-9);
  return T / steps;
}

ThresholdSearch find_picard_threshold(const SpectralField& shape, const ModelParams& params, double T,
                                      double dt_max, double tol, int max_iter, double start,
                                      int bisections, double cfl_target) {
  const double norm = sobolev_norm(shape.without_mean(), params.sigma_c());
  if (norm == 0.0) throw DomainError("threshold search needs a nonzero shape");
  if (!(start > 0.0)) throw DomainError("threshold search needs a positive starting amplitude");
  ThresholdSearch s;
  const auto works = [&](double amp) {
    ++s.probes;
    const SpectralField th = (amp / norm) * shape.without_mean();
    try {
      SolverOptions opt;
      opt.monitor = false;
      opt.cfl_limit = 1.0;
      const double dt = stable_dt(th, params, T, dt_max, cfl_target);
      const PicardResult r = picard_solve(th, params, T, dt, tol * l2_norm(th), max_iter, opt);
      return r.converged && r.max_ratio_linf_l2() < 1.0;
    } catch (const CflError&) {
      return false;
    } catch (const BlowUpError&) {
      return false;
    }
  };
  double lo = 0.0;
  double hi = start;
  while (works(hi)) {
    lo = hi;
    hi *= 2.0;
    if (hi > 1e12) throw DomainError("threshold search did not find a failing amplitude");
  }
  for (int i = 0; i < bisections; ++i) {
    const double mid = lo > 0.0 ? std::sqrt(lo * hi) : 0.5 * hi;
    if (works(mid)) lo = mid;
    else hi = mid;
  }
  s.threshold = lo;
  s.failed = hi;
  return s;
}

}  // namespace gsqg
