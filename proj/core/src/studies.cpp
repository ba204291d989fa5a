#include "gsqg/studies.hpp"

#include <algorithm>
#include <cmath>

#include "gsqg/error.hpp"
#include "gsqg/operators.hpp"

namespace gsqg {

SpectralField rescale_solution(const SpectralField& field, double lam, const ModelParams& params,
                               int out_n) {
  if (!(lam >= 1.0) || lam != std::floor(lam)) throw DomainError("rescale factor must be an integer >= 1");
  GridSpec g = field.grid();
  g.period /= lam;
  if (out_n > 0) g.n = out_n;
  g.validate();
  const double factor = std::pow(lam, params.kappa - params.beta);
  SpectralField out(g);
  const auto src = field.coeffs();
  bool lost = false;
  for_each_mode(field.grid(), [&](std::size_t idx, int m1, int m2) {
    if (src[idx] == Complex{}) return;
    if (out_n > 0 && !g.in_dealias_set(m1, m2)) {
      lost = true;
      return;
    }
    if (g.in_lattice(m1, m2)) out.set_mode(m1, m2, factor * src[idx]);
    else lost = true;
  });
  if (lost) throw DomainError("rescaled field exceeds the dealiased box of the output grid");
  return out;
}

EquivarianceReport scaling_equivariance_check(const SpectralField& theta0, const ModelParams& params,
                                              double lam, double T, double dt,
                                              const SolverOptions& options) {
  EquivarianceReport r;
  r.lam = lam;
  SolverOptions opt = options;
  opt.snapshot_stride = std::max(1L, step_count(T, dt));
  opt.monitor = false;
  const Trajectory a = simulate(theta0, params, T, dt, opt);
  const SpectralField lhs = rescale_solution(a.final_field(), lam, params);
  const SpectralField start = rescale_solution(theta0, lam, params);
  const double tscale = std::pow(lam, params.kappa);
  const Trajectory b = simulate(start, params, T / tscale, dt / tscale, opt);
  const SpectralField& rhs_field = b.final_field();
  const double ref = l2_norm(lhs);
  r.gap = ref > 0.0 ? l2_norm(lhs - rhs_field) / ref : l2_norm(lhs - rhs_field);
  r.norm_before = sobolev_norm(theta0.without_mean(), params.sigma_c());
  r.norm_after = sobolev_norm(start.without_mean(), params.sigma_c());
  return r;
}

double loglog_slope(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size() || x.size() < 2) throw DomainError("slope fit needs matching series of length >= 2");
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  const double n = static_cast<double>(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!(x[i] > 0.0) || !(y[i] > 0.0)) throw DomainError("log-log fit needs positive data");
    const double lx = std::log(x[i]);
    const double ly = std::log(y[i]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  const double den = n * sxx - sx * sx;
  if (den == 0.0) throw DomainError("degenerate abscissa in slope fit");
  return (n * sxy - sx * sy) / den;
}

std::vector<DecaySlope> fit_decay(const Trajectory& traj, const ModelParams& params, double delta,
                                  const std::vector<double>& k_list, double t_lo, double t_hi,
                                  double sigma) {
  const double s = std::isnan(sigma) ? params.sigma_c() : sigma;
  std::vector<DecaySlope> out;
  for (double k : k_list) {
    std::vector<double> t, y;
    for (const auto& snap : traj.snapshots) {
      if (snap.t < t_lo * (1.0 - 1e-12) || snap.t > t_hi * (1.0 + 1e-12) || !(snap.t > 0.0)) continue;
      t.push_back(snap.t);
      y.push_back(sobolev_norm(snap.field.without_mean(), s + delta + k));
    }
    if (t.size() < 10) throw DomainError("decay fit needs at least 10 snapshots in the window");
    out.push_back(DecaySlope{k, loglog_slope(t, y), -(k + delta) / params.kappa, t.size()});
  }
  return out;
}

std::vector<DecaySlope> decay_study(const SpectralField& theta0, const ModelParams& params,
                                    double delta, const std::vector<double>& k_list, double T,
                                    double dt, const SolverOptions& options) {
  const Trajectory traj = simulate(theta0, params, T, dt, options);
  return fit_decay(traj, params, delta, k_list, T / 10.0, T, options.sigma);
}

GevreySeries gevrey_tracking(const Trajectory& traj, const ModelParams& params,
                             const GevreySpec& gevrey, double delta, double sigma, bool weighted) {
  const double s = std::isnan(sigma) ? params.sigma_c() : sigma;
  if (weighted && !(gevrey.alpha < params.kappa)) {
    throw DomainError("Gevrey tracking needs alpha < kappa");
  }
  GevreySeries out;
  for (const auto& snap : traj.snapshots) {
    if (!(snap.t > 0.0)) continue;
    const double lam = gevrey.lambda_at(snap.t, params.gamma, params.kappa);
    double v = 0.0;
    if (weighted) {
      v = std::pow(params.gamma * snap.t, delta / params.kappa) *
          gevrey_norm(snap.field.without_mean(), gevrey.alpha, lam, s + delta);
    } else {
      v = gevrey_norm(snap.field.without_mean(), gevrey.alpha, lam, s);
    }
    out.t.push_back(snap.t);
    out.value.push_back(v);
    out.sup = std::max(out.sup, v);
  }
  return out;
}

}  // namespace gsqg
