#include "gsqg/harness/verification.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>

#include "gsqg/inequality_lab.hpp"
#include "gsqg/littlewood_paley.hpp"
#include "gsqg/norms.hpp"
#include "gsqg/operators.hpp"
#include "gsqg/solver.hpp"

namespace gsqg::harness {

namespace {

// max |a - b| / max |b| over stored coefficients.
double rel_diff(const SpectralField& a, const SpectralField& b) {
  const auto x = a.coeffs();
  const auto y = b.coeffs();
  double num = 0.0, den = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    num = std::max(num, std::abs(x[i] - y[i]));
    den = std::max(den, std::abs(y[i]));
  }
  return den > 0.0 ? num / den : num;
}

// Reference: multiply each stored coefficient by sym(k1, k2).
SpectralField loop_multiplier(const SpectralField& f, const std::function<Complex(double, double)>& sym) {
  SpectralField out(f.grid());
  const int K = f.grid().max_index();
  const double k0 = f.grid().k0();
  for (int m1 = -K; m1 <= K; ++m1) {
    for (int m2 = 0; m2 <= K; ++m2) {
      if (m2 == 0 && m1 < 0) continue;
      out.set_mode(m1, m2, sym(k0 * m1, k0 * m2) * f.mode(m1, m2));
    }
  }
  return out;
}

CheckResult check(const std::string& name, double err, double tol) {
  return CheckResult{name, err <= tol, err, tol, ""};
}

// Direct convolution (u . grad theta)(xi) = sum_eta u(xi - eta) . (i eta) theta(eta),
// kept on the dealiased box.
SpectralField direct_advect(const VectorField& u, const SpectralField& theta) {
  const GridSpec& g = theta.grid();
  const int K = g.max_index();
  const int D = g.dealias_index();
  const double k0 = g.k0();
  SpectralField out(g);
  for (int x1 = -D; x1 <= D; ++x1) {
    for (int x2 = 0; x2 <= D; ++x2) {
      if (x2 == 0 && x1 < 0) continue;
      Complex sum{};
      for (int e1 = -K; e1 <= K; ++e1) {
        for (int e2 = -K; e2 <= K; ++e2) {
          const int a1 = x1 - e1, a2 = x2 - e2;
          if (!g.in_lattice(a1, a2)) continue;
          const Complex th = theta.mode(e1, e2);
          if (th == Complex{}) continue;
          const Complex grad1 = Complex(0.0, k0 * e1) * th;
          const Complex grad2 = Complex(0.0, k0 * e2) * th;
          sum += u.c1.mode(a1, a2) * grad1 + u.c2.mode(a1, a2) * grad2;
        }
      }
      out.set_mode(x1, x2, sum);
    }
  }
  return out;
}

}  // namespace

bool all_pass(const std::vector<CheckResult>& checks) {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
}

std::vector<CheckResult> verify_operators(std::uint64_t seed) {
  GridSpec g;
  g.n = 16;
  EnsembleSpec e;
  e.grid = g;
  e.decay = 2.0;
  e.seed = seed;
  const SpectralField f = random_test_field(e, 0);
  const SpectralField psi = random_test_field(e, 1);
  std::vector<CheckResult> out;
  const double tol = 1e-12;

  for (double s : {-1.5, 0.5, 2.0}) {
    const auto ref = loop_multiplier(f, [s](double a, double b) {
      const double k = std::sqrt(a * a + b * b);
      return Complex(k == 0.0 ? 0.0 : std::pow(k, s));
    });
    out.push_back(check("fractional_laplacian s=" + std::to_string(s), rel_diff(fractional_laplacian(f, s), ref), tol));
  }
  {
    const double alpha = 0.5, lambda = 0.3;
    const auto ref = loop_multiplier(f, [=](double a, double b) {
      return Complex(std::exp(lambda * std::pow(a * a + b * b, alpha / 2.0)));
    });
    out.push_back(check("gevrey_operator", rel_diff(gevrey_operator(f, alpha, lambda), ref), tol));
  }
  {
    const double lambda = 0.3;
    const auto ref = loop_multiplier(f, [=](double a, double b) {
      const double c = lambda * std::sqrt(a * a + b * b);
      return Complex(c == 0.0 ? 1.0 : std::expm1(c) / c);
    });
    out.push_back(check("gevrey_avg_operator alpha=1", rel_diff(gevrey_avg_operator(f, 1.0, lambda), ref), tol));
  }
  {
    const double mu = 1.5;
    const auto ref = loop_multiplier(f, [=](double a, double b) {
      return Complex(std::pow(std::log(1.0 + a * a + b * b), mu));
    });
    out.push_back(check("log_multiplier", rel_diff(log_multiplier(f, mu), ref), tol));
  }
  {
    const VectorField u = perp_gradient(psi);
    const auto r1 = loop_multiplier(psi, [](double, double b) { return Complex(0.0, -b); });
    const auto r2 = loop_multiplier(psi, [](double a, double) { return Complex(0.0, a); });
    out.push_back(check("perp_gradient", std::max(rel_diff(u.c1, r1), rel_diff(u.c2, r2)), tol));
  }
  {
    ModelParams p;
    p.beta = 1.5;
    const VectorField u = velocity_from_scalar(f, p);
    const auto sym = [](double a, double b) {
      const double k = std::sqrt(a * a + b * b);
      return k == 0.0 ? 0.0 : std::pow(k, -0.5);
    };
    const auto r1 = loop_multiplier(f, [&](double a, double b) { return Complex(0.0, b * sym(a, b)); });
    const auto r2 = loop_multiplier(f, [&](double a, double b) { return Complex(0.0, -a * sym(a, b)); });
    out.push_back(check("velocity_from_scalar beta=1.5", std::max(rel_diff(u.c1, r1), rel_diff(u.c2, r2)), tol));
  }
  {
    const double t = 0.7, gamma = 0.8, kappa = 0.6, ev = 0.01;
    const auto ref = loop_multiplier(f, [=](double a, double b) {
      const double k2 = a * a + b * b;
      return Complex(std::exp(-t * (gamma * std::pow(k2, kappa / 2.0) + ev * k2)));
    });
    out.push_back(check("linear_heat_propagator", rel_diff(linear_heat_propagator(f, t, gamma, kappa, ev), ref), tol));
  }
  {
    const Partition part = build_partition(g);
    double err = 0.0;
    for (int j = part.j_min; j <= part.j_max; ++j) {
      const auto ref = loop_multiplier(f, [j](double a, double b) {
        return Complex(Partition::phi(j, std::sqrt(a * a + b * b)));
      });
      err = std::max(err, rel_diff(dyadic_block(f, j, part), ref));
    }
    out.push_back(check("dyadic_block", err, tol));
  }
  {
    ModelParams p;
    p.beta = 1.5;
    const SpectralField th = random_test_field(e, 2);
    const VectorField u = velocity_from_scalar(psi, p);
    out.push_back(check("advect vs direct convolution", rel_diff(advect(u, th), direct_advect(u, th)), tol));
  }
  {
    for (double beta : {1.2, 1.7}) {
      ModelParams p;
      p.beta = beta;
      const SpectralField th = random_test_field(e, 3);
      const SpectralField a = flux_divergence(-th, th, p);
      const SpectralField b = advect(velocity_from_scalar(th, p), th);
      out.push_back(check("flux_divergence(q=-theta) beta=" + std::to_string(beta), rel_diff(a, b), tol));
    }
  }
  return out;
}

std::vector<CheckResult> verify_inequalities(const ScenarioConfig& config) {
  std::vector<CheckResult> out;
  const int samples = config.ensemble_samples;
  EnsembleSpec e;
  e.grid.n = 16;
  e.decay = config.ensemble_decay;
  e.samples = samples;
  e.seed = config.seed;
  const Partition p16 = build_partition(e.grid);

  {
    double worst = 0.0;
    for (int i = 0; i < samples; ++i) {
      const SpectralField f = random_test_field(e, 3 * i);
      const SpectralField g = random_test_field(e, 3 * i + 1);
      const SpectralField h = random_test_field(e, 3 * i + 2);
      for (double sigma : {-0.5, 0.0, 0.3, 0.9}) {
        const Complex l = trilinear_form(f, g, h, sigma);
        const BonySplit b = bony_split(f, g, h, sigma, p16);
        worst = std::max(worst, std::abs(l - b.total()) / std::abs(l));
      }
    }
    out.push_back(check("bony split identity", worst, 1e-10));
  }
  {
    int violations = 0;
    for (int i = 0; i < samples; ++i) {
      const SpectralField f = random_test_field(e, i);
      for (int j = p16.j_min; j <= p16.j_max; ++j) {
        if (dyadic_block(f, j, p16).is_zero()) continue;
        for (double sigma : {-1.5, 0.0, 1.0, 1.5}) {
          if (!bernstein_check(f, j, sigma, p16).within) ++violations;
        }
      }
    }
    out.push_back(check("bernstein bracket violations", violations, 0));
  }
  {
    int violations = 0;
    std::uint64_t state = config.seed;
    const auto uniform = [&state]() {
      state = state * 6364136223846793005ULL + 1442695040888963407ULL;
      return static_cast<double>(state >> 11) * 0x1.0p-53;
    };
    for (int i = 0; i < 5 * samples; ++i) {
      const SpectralField f = random_test_field(e, i);
      const double alpha = 0.2 + 0.8 * uniform();
      const double lambda = 0.5 * uniform();
      const double rho = 0.05 + 0.95 * uniform();
      const double s1 = -1.0 + 2.0 * uniform();
      const double s2 = s1 + 2.0 * uniform();
      if (!check_gevrey_interpolation(f, alpha, lambda, rho, s1, s2).holds) ++violations;
      if (!derivative_bound_check(f, alpha, std::max(lambda, 1e-3), {i % 3, (i / 3) % 2}, s1).holds) ++violations;
      if (!check_interpolation(f, 0.5 * (s1 + s2), s1, s2).holds) ++violations;
    }
    out.push_back(check("gevrey/sobolev interpolation and derivative bound violations", violations, 0));
  }
  {
    struct Point {
      std::string name;
      FormId id;
      FormParams params;
    };
    std::vector<Point> points;
    for (double beta : {1.3, 1.7}) {
      const double kappa = 0.5;
      FormParams q;
      q.beta = beta;
      q.rho1 = kappa / 2.0;
      q.rho2 = kappa / 2.0;
      points.push_back({"commutator_block beta=" + std::to_string(beta), FormId::commutator_block, q});
      points.push_back({"commutator_singular beta=" + std::to_string(beta), FormId::commutator_singular, q});
    }
    FormParams gv;
    gv.alpha = 0.4;
    gv.lambda = 0.05;
    gv.sigma = 0.3;
    gv.rho = 0.0;
    points.push_back({"commutator_gevrey", FormId::commutator_gevrey, gv});
    FormParams lg;
    lg.mu = 1.0;
    lg.eps = 0.3;
    lg.de = 0.5;
    lg.rho = 1.0;
    points.push_back({"commutator_log", FormId::commutator_log, lg});
    for (const auto& pt : points) {
      const RefinementReport r = refinement_study(pt.id, pt.params, e);
      out.push_back(check("refinement growth " + pt.name, r.growth, 2.0));
    }
  }
  return out;
}

}  // namespace gsqg::harness
