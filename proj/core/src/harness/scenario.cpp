#include "gsqg/harness/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>

#include "gsqg/error.hpp"
#include "gsqg/harness/checkpoint.hpp"
#include "gsqg/harness/csv.hpp"
#include "gsqg/harness/initial_data.hpp"
#include "gsqg/harness/verification.hpp"
#include "gsqg/picard.hpp"
#include "gsqg/studies.hpp"

namespace gsqg::harness {

namespace {

namespace fs = std::filesystem;

// Per-step bounds a simulate run is held to.
constexpr double kSkewTol = 1e-12;
constexpr double kGrowthTol = 1e-9;

struct Context {
  const ScenarioConfig& config;
  const RunOptions& options;
  std::ostringstream summary;
  fs::path dir;

  std::string path(const std::string& name) const { return (dir / name).string(); }
};

SolverOptions solver_options(const ScenarioConfig& c) {
  SolverOptions o;
  o.cfl_limit = c.cfl;
  o.nonlinear = c.nonlinear;
  o.snapshot_stride = c.snapshot_stride;
  o.sigma = c.sigma;
  o.delta = c.delta;
  o.gevrey = c.gevrey;
  return o;
}

double resolved_delta(const ScenarioConfig& c) {
  return std::isnan(c.delta) ? c.model.default_delta() : c.delta;
}

void require_same_model(const ModelParams& a, const ModelParams& b) {
  if (a.beta != b.beta || a.kappa != b.kappa || a.gamma != b.gamma || a.mu != b.mu ||
      a.eps_visc != b.eps_visc || a.velocity_law != b.velocity_law) {
    throw ValidationError({"checkpoint model parameters differ from the configuration"});
  }
}

void write_checks(Context& ctx, const std::vector<CheckResult>& checks) {
  const std::string file = ctx.path("checks.csv");
  std::ofstream out(file);
  if (!out) throw IoError("cannot write " + file);
  out << "name,pass,value,tolerance\n";
  for (const auto& c : checks) {
    out << '"' << c.name << "\"," << (c.pass ? 1 : 0) << ',' << format_double(c.value) << ','
        << format_double(c.tolerance) << '\n';
    ctx.summary << (c.pass ? "PASS " : "FAIL ") << c.name << "  value=" << c.value
                << "  tol=" << c.tolerance << '\n';
  }
  if (!out) throw IoError("write failed: " + file);
}

void append(Trajectory& all, Trajectory&& part) {
  const std::size_t skip = all.snapshots.empty() ? 0 : 1;
  for (std::size_t i = skip; i < part.snapshots.size(); ++i) {
    all.snapshots.push_back(std::move(part.snapshots[i]));
    all.diagnostics.push_back(part.diagnostics[i]);
  }
  all.max_l2_growth = std::max(all.max_l2_growth, part.max_l2_growth);
  all.max_energy_residual = std::max(all.max_energy_residual, part.max_energy_residual);
  all.steps += part.steps;
}

// Simulate, in checkpoint_every-step chunks when a checkpoint path is given.
Trajectory run_trajectory(Context& ctx, SpectralField theta, double t0) {
  const ScenarioConfig& c = ctx.config;
  SolverOptions opt = solver_options(c);
  if (!(c.T - t0 > 0.0)) throw ValidationError({"resume time is not before T"});
  const long steps = step_count(c.T - t0, c.dt);
  const bool periodic = c.checkpoint_every > 0 && !ctx.options.checkpoint.empty();
  const long chunk = periodic ? c.checkpoint_every : steps;
  Trajectory traj;
  long done = 0;
  while (done < steps) {
    const long m = std::min(chunk, steps - done);
    opt.t0 = t0 + static_cast<double>(done) * c.dt;
    Trajectory part = simulate(theta, c.model, static_cast<double>(m) * c.dt, c.dt, opt);
    done += m;
    theta = part.snapshots.back().field;
    const double t = part.snapshots.back().t;
    append(traj, std::move(part));
    if (periodic && done < steps) {
      write_checkpoint({theta, c.model, t}, ctx.options.checkpoint + ".step" + std::to_string(done));
    }
  }
  if (!ctx.options.checkpoint.empty()) {
    write_checkpoint({theta, c.model, traj.snapshots.back().t}, ctx.options.checkpoint);
  }
  return traj;
}

int run_simulate(Context& ctx) {
  const ScenarioConfig& c = ctx.config;
  SpectralField theta(c.grid);
  double t0 = 0.0;
  if (!ctx.options.resume.empty()) {
    CheckpointState s = read_checkpoint_for(ctx.options.resume, c.grid);
    require_same_model(s.params, c.model);
    theta = std::move(s.field);
    t0 = s.t;
    ctx.summary << "resumed from " << ctx.options.resume << " at t=" << t0 << '\n';
  } else {
    theta = make_initial_data(c.initial, c.grid, c.model, c.seed);
  }
  const Trajectory traj = run_trajectory(ctx, std::move(theta), t0);
  write_csv(traj, ctx.path("diagnostics.csv"));
  emit_plot_data(ctx.path("diagnostics.csv"), ctx.path("l2.dat"), "t", "l2", false, false);

  const auto& last = traj.diagnostics.back();
  ctx.summary << "steps " << traj.steps << "\nfinal t " << format_double(last.t) << "\nfinal l2 "
              << format_double(last.l2) << "\nmax relative l2 growth per step "
              << traj.max_l2_growth << "\nmax skew residual " << traj.max_energy_residual << '\n';
  bool ok = true;
  if (c.nonlinear && traj.max_energy_residual > kSkewTol) {
    ctx.summary << "FAIL skew residual above " << kSkewTol << '\n';
    ok = false;
  }
  if (c.model.gamma > 0.0 && traj.max_l2_growth > kGrowthTol) {
    ctx.summary << "FAIL l2 grew by more than " << kGrowthTol << " in one step\n";
    ok = false;
  }
  return ok ? kExitOk : kExitVerification;
}

int run_picard(Context& ctx) {
  const ScenarioConfig& c = ctx.config;
  const SpectralField theta0 = make_initial_data(c.initial, c.grid, c.model, c.seed);
  SolverOptions opt = solver_options(c);
  opt.snapshot_stride = 1;
  opt.monitor = false;
  const double scale = l2_norm(theta0);
  const double tol = scale > 0.0 ? c.tol * scale : c.tol;
  const PicardResult r = picard_solve(theta0, c.model, c.T, c.dt, tol, c.max_iter, opt);

  Table t;
  t.header = {"n", "diff_linf_l2", "diff_l3", "ratio_linf_l2", "ratio_l3"};
  for (const auto& it : r.iterates) {
    t.rows.push_back({static_cast<double>(it.n), it.diff_linf_l2, it.diff_l3, it.ratio_linf_l2,
                      it.ratio_l3});
  }
  write_csv(t, ctx.path("picard.csv"));

  ctx.summary << "iterations " << r.iterations << "\nconverged " << (r.converged ? "yes" : "no")
              << "\nmax ratio linf_l2 " << r.max_ratio_linf_l2() << "\nmax ratio l3 "
              << r.max_ratio_l3() << '\n';
  if (!r.converged) return kExitPicard;
  const Trajectory direct = simulate(theta0, c.model, c.T, c.dt, opt);
  ctx.summary << "gap to direct solver " << path_gap_linf_l2(r.limit, direct.snapshots) << '\n';
  return kExitOk;
}

int run_scaling(Context& ctx) {
  const ScenarioConfig& c = ctx.config;
  const SpectralField theta0 = make_initial_data(c.initial, c.grid, c.model, c.seed);
  const EquivarianceReport r =
      scaling_equivariance_check(theta0, c.model, c.lam, c.T, c.dt, solver_options(c));
  Table t;
  t.header = {"lam", "gap", "norm_before", "norm_after"};
  t.rows.push_back({r.lam, r.gap, r.norm_before, r.norm_after});
  write_csv(t, ctx.path("scaling.csv"));
  ctx.summary << "lam " << r.lam << "\nequivariance gap " << r.gap << "\ncritical norm "
              << r.norm_before << " -> " << r.norm_after << '\n';
  return kExitOk;
}

int run_decay(Context& ctx) {
  const ScenarioConfig& c = ctx.config;
  const SpectralField theta0 = make_initial_data(c.initial, c.grid, c.model, c.seed);
  const double delta = resolved_delta(c);
  const Trajectory traj = simulate(theta0, c.model, c.T, c.dt, solver_options(c));
  write_csv(traj, ctx.path("diagnostics.csv"));
  const auto slopes = fit_decay(traj, c.model, delta, c.k_list, 0.1 * c.T, c.T, c.sigma);
  Table t;
  t.header = {"k", "slope", "expected", "points"};
  for (const auto& s : slopes) {
    t.rows.push_back({s.k, s.slope, s.expected, static_cast<double>(s.points)});
    ctx.summary << "k=" << s.k << " slope " << s.slope << " expected " << s.expected << '\n';
  }
  write_csv(t, ctx.path("decay.csv"));
  emit_plot_data(ctx.path("diagnostics.csv"), ctx.path("decay.dat"), "t", "hs_crit_delta", true, true);
  return kExitOk;
}

int run_gevrey(Context& ctx) {
  const ScenarioConfig& c = ctx.config;
  const SpectralField theta0 = make_initial_data(c.initial, c.grid, c.model, c.seed);
  const Trajectory traj = simulate(theta0, c.model, c.T, c.dt, solver_options(c));
  write_csv(traj, ctx.path("diagnostics.csv"));
  const bool weighted = c.model.velocity_law == VelocityLaw::power;
  const GevreySeries g = gevrey_tracking(traj, c.model, c.gevrey, resolved_delta(c), c.sigma, weighted);
  Table t;
  t.header = {"t", "gevrey"};
  for (std::size_t i = 0; i < g.t.size(); ++i) t.rows.push_back({g.t[i], g.value[i]});
  write_csv(t, ctx.path("gevrey.csv"));
  ctx.summary << "gevrey sup " << g.sup << '\n';
  return std::isfinite(g.sup) ? kExitOk : kExitVerification;
}

int dispatch(Context& ctx) {
  switch (ctx.config.kind) {
    case ScenarioKind::simulate: return run_simulate(ctx);
    case ScenarioKind::picard: return run_picard(ctx);
    case ScenarioKind::verify_operators: {
      const auto checks = verify_operators(ctx.config.seed);
      write_checks(ctx, checks);
      return all_pass(checks) ? kExitOk : kExitVerification;
    }
    case ScenarioKind::verify_inequalities: {
      const auto checks = verify_inequalities(ctx.config);
      write_checks(ctx, checks);
      return all_pass(checks) ? kExitOk : kExitVerification;
    }
    case ScenarioKind::scaling_check: return run_scaling(ctx);
    case ScenarioKind::decay_study: return run_decay(ctx);
    case ScenarioKind::gevrey_track: return run_gevrey(ctx);
  }
  return kExitUsage;
}

}  // namespace

int exit_code_for(const std::exception& e) {
  if (dynamic_cast<const BlowUpError*>(&e)) return kExitBlowUp;
  if (dynamic_cast<const CflError*>(&e)) return kExitCfl;
  if (dynamic_cast<const OverflowGuardError*>(&e)) return kExitOverflow;
  if (dynamic_cast<const IoError*>(&e) || dynamic_cast<const FormatError*>(&e)) return kExitIo;
  return kExitUsage;
}

int run_scenario(const ScenarioConfig& config, const RunOptions& options, std::ostream& log) {
  Context ctx{config, options, {}, fs::path(config.out_dir)};
  int code = kExitOk;
  try {
    const auto problems = validate(config);
    if (!problems.empty()) throw ValidationError(problems);
    std::error_code ec;
    fs::create_directories(ctx.dir, ec);
    if (ec) throw IoError("cannot create output directory " + ctx.dir.string() + ": " + ec.message());
    ctx.summary << "scenario " << to_string(config.kind) << "\nseed " << config.seed << "\nn "
                << config.grid.n << "\nbeta " << config.model.beta << "\nkappa "
                << config.model.kappa << "\nsigma_c " << config.model.sigma_c() << '\n';
    code = dispatch(ctx);
  } catch (const std::exception& e) {
    code = exit_code_for(e);
    ctx.summary << "error: " << e.what() << '\n';
    log << "gsqg: " << e.what() << '\n';
    if (code == kExitIo || code == kExitUsage) return code;
  }
  ctx.summary << "exit " << code << '\n';
  std::ofstream out(ctx.path("summary.txt"));
  out << ctx.summary.str();
  if (!out) {
    log << "gsqg: cannot write " << ctx.path("summary.txt") << '\n';
    return code == kExitOk ? kExitIo : code;
  }
  log << ctx.summary.str();
  return code;
}

}  // namespace gsqg::harness
