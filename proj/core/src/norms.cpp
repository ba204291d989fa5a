#include "gsqg/norms.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "gsqg/error.hpp"
#include "gsqg/operators.hpp"

namespace gsqg {

namespace {

void require_mean_zero(const SpectralField& f, const char* what) {
  if (!f.mean_zero()) throw DomainError(std::string(what) + " needs a mean-zero field");
}

// L^2 sum over the full lattice of w(|k|) |f_k|^2, skipping k = 0.
template <class W>
double weighted_sum(const SpectralField& f, W&& w) {
  const auto c = f.coeffs();
  const double k0 = f.grid().k0();
  double sum = 0.0;
  for_each_mode(f.grid(), [&](std::size_t idx, int m1, int m2) {
    if (m1 == 0 && m2 == 0) return;
    sum += mode_weight(m2) * w(k0 * std::hypot(m1, m2), m1, m2) * std::norm(c[idx]);
  });
  return f.grid().period * f.grid().period * sum;
}

double factorial(int n) {
  double r = 1.0;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

}  // namespace

double GevreySpec::lambda_at(double t, double gamma, double kappa) const {
  switch (schedule) {
    case LambdaSchedule::fixed:
      return lambda;
    case LambdaSchedule::power:
      return eps_rate * std::pow(gamma * t, alpha / kappa);
    case LambdaSchedule::linear:
      return eps_rate * t;
  }
  return lambda;
}

double sobolev_norm(const SpectralField& f, double s, bool homogeneous) {
  if (homogeneous) {
    require_mean_zero(f, "homogeneous Sobolev norm");
    return std::sqrt(weighted_sum(f, [s](double k, int, int) { return std::pow(k, 2.0 * s); }));
  }
  const double mean = std::norm(f.mean());
  const double area = f.grid().period * f.grid().period;
  return std::sqrt(area * mean +
                   weighted_sum(f, [s](double k, int, int) { return std::pow(1.0 + k * k, s); }));
}

double besov_norm(const SpectralField& f, double s, const Partition& p) {
  require_mean_zero(f, "Besov norm");
  double sum = 0.0;
  for (int j = p.j_min; j <= p.j_max; ++j) {
    const double b = std::pow(2.0, j * s) * l2_norm(dyadic_block(f, j, p));
    sum += b * b;
  }
  return std::sqrt(sum);
}

double gevrey_norm(const SpectralField& f, double alpha, double lambda, double s) {
  require_mean_zero(f, "Gevrey norm");
  if (!(alpha > 0.0 && alpha <= 1.0) || !(lambda >= 0.0)) {
    throw DomainError("Gevrey norm needs alpha in (0, 1] and lambda >= 0");
  }
  if (lambda > 0.0) check_overflow_guard(f.grid(), alpha, lambda);
  return std::sqrt(weighted_sum(f, [=](double k, int, int) {
    return std::pow(k, 2.0 * s) * std::exp(2.0 * lambda * std::pow(k, alpha));
  }));
}

NormReport sobolev_report(const SpectralField& f, double s, bool homogeneous) {
  return {homogeneous ? NormKind::sobolev_homogeneous : NormKind::sobolev_inhomogeneous, s, 0.0, 0.0,
          sobolev_norm(f, s, homogeneous), f.grid()};
}

NormReport besov_report(const SpectralField& f, double s, const Partition& p) {
  return {NormKind::besov, s, 0.0, 0.0, besov_norm(f, s, p), f.grid()};
}

NormReport gevrey_report(const SpectralField& f, double alpha, double lambda, double s) {
  return {NormKind::gevrey, s, alpha, lambda, gevrey_norm(f, alpha, lambda, s), f.grid()};
}

double xt_norm(std::span<const Snapshot> snapshots, const GevreySpec& gevrey, double sigma_c,
               double delta, double gamma, double kappa) {
  double sup = 0.0;
  bool any = false;
  for (const auto& snap : snapshots) {
    if (!(snap.t > 0.0)) continue;
    any = true;
    const double lam = gevrey.lambda_at(snap.t, gamma, kappa);
    const double w = std::pow(gamma * snap.t, delta / kappa);
    sup = std::max(sup, w * gevrey_norm(snap.field, gevrey.alpha, lam, sigma_c + delta));
  }
  if (!any) throw DomainError("X_T norm needs at least one snapshot with t > 0");
  return sup;
}

InterpolationReport check_interpolation(const SpectralField& f, double s, double s1, double s2) {
  if (!(s1 <= s && s <= s2)) throw DomainError("interpolation needs s1 <= s <= s2");
  if (f.is_zero()) throw DomainError("interpolation check on a zero field");
  InterpolationReport r;
  r.lhs = sobolev_norm(f, s);
  if (s2 == s1) {
    r.rhs = r.lhs;
  } else {
    const double th = (s2 - s) / (s2 - s1);
    r.rhs = std::pow(sobolev_norm(f, s1), th) * std::pow(sobolev_norm(f, s2), 1.0 - th);
  }
  r.ratio = r.lhs / r.rhs;
  r.holds = r.ratio <= 1.0 + 1e-12;
  return r;
}

InterpolationReport check_l1_interpolation(const SpectralField& f, double s, double s1, double s2) {
  if (!(s1 > -1.0 && -1.0 > -s2)) throw DomainError("L1 interpolation needs s1 > -1 > -s2");
  require_mean_zero(f, "L1 interpolation");
  if (f.is_zero()) throw DomainError("L1 interpolation check on a zero field");
  const auto c = f.coeffs();
  const double k0 = f.grid().k0();
  double l1 = 0.0;
  for_each_mode(f.grid(), [&](std::size_t idx, int m1, int m2) {
    if (m1 == 0 && m2 == 0) return;
    l1 += mode_weight(m2) * std::pow(k0 * std::hypot(m1, m2), s) * std::abs(c[idx]);
  });
  InterpolationReport r;
  r.lhs = f.grid().period * f.grid().period * l1;
  r.rhs = std::pow(sobolev_norm(f, s + s2), (s1 + 1.0) / (s1 + s2)) *
          std::pow(sobolev_norm(f, s - s1), (s2 - 1.0) / (s1 + s2));
  r.ratio = r.lhs / r.rhs;
  r.holds = std::isfinite(r.ratio);
  return r;
}

InterpolationReport check_gevrey_interpolation(const SpectralField& f, double alpha, double lambda,
                                               double rho, double s1, double s2) {
  if (!(s1 <= s2)) throw DomainError("Gevrey interpolation needs s1 <= s2");
  if (!(rho > 0.0 && rho <= 1.0)) throw DomainError("Gevrey interpolation needs rho in (0, 1]");
  InterpolationReport r;
  const double a = gevrey_norm(f, alpha, lambda, s1);
  const double b = gevrey_norm(f, alpha, (1.0 - rho) * lambda, s1);
  const double c = gevrey_norm(f, alpha, lambda, s2);
  r.lhs = a * a;
  const double factor = lambda == 0.0 ? (s2 == s1 ? 1.0 : 0.0)
                                      : std::pow(2.0 * rho * lambda, 2.0 * (s2 - s1) / alpha);
  r.rhs = std::numbers::e * b * b + factor * c * c;
  r.ratio = r.rhs > 0.0 ? r.lhs / r.rhs : 0.0;
  r.holds = r.lhs <= r.rhs * (1.0 + 1e-12);
  return r;
}

InterpolationReport derivative_bound_check(const SpectralField& f, double alpha, double lambda,
                                           std::array<int, 2> b, double s) {
  if (b[0] < 0 || b[1] < 0) throw DomainError("multi-index entries must be >= 0");
  const int order = b[0] + b[1];
  if (order > 0 && !(lambda > 0.0)) throw DomainError("derivative bound needs lambda > 0");
  require_mean_zero(f, "derivative bound");
  const double k0 = f.grid().k0();
  InterpolationReport r;
  r.lhs = std::sqrt(weighted_sum(f, [&](double k, int m1, int m2) {
    const double d = std::pow(std::abs(k0 * m1), b[0]) * std::pow(std::abs(k0 * m2), b[1]);
    return d * d * std::pow(k, 2.0 * s);
  }));
  const double c = order == 0 ? 1.0
                              : std::pow(factorial(b[0]) * factorial(b[1]) / std::pow(lambda * alpha, order),
                                         1.0 / alpha);
  r.rhs = c * gevrey_norm(f, alpha, lambda, s);
  r.ratio = r.rhs > 0.0 ? r.lhs / r.rhs : 0.0;
  r.holds = r.lhs <= r.rhs * (1.0 + 1e-12);
  return r;
}

}  // namespace gsqg
