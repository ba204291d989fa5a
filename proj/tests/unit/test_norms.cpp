#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "gsqg/error.hpp"
#include "gsqg/inequality_lab.hpp"
#include "gsqg/norms.hpp"
#include "gsqg/operators.hpp"
#include "gsqg/solver.hpp"

using namespace gsqg;

namespace {

constexpr double kPi = std::numbers::pi;

GridSpec grid(int n) {
  GridSpec g;
  g.n = n;
  return g;
}

SpectralField sine(int n = 16) {
  SpectralField f(grid(n));
  f.set_mode(1, 0, Complex(0.0, -0.5));
  return f;
}

SpectralField random_field(int n, std::uint64_t index, double decay = 2.0) {
  EnsembleSpec e;
  e.grid = grid(n);
  e.decay = decay;
  return random_test_field(e, index);
}

}  // namespace

TEST(Sobolev, UnitShell) {
  for (double s : {-1.0, 0.0, 0.5, 3.0}) {
    EXPECT_NEAR(sobolev_norm(sine(), s), std::sqrt(2.0) * kPi, 1e-13);
    EXPECT_NEAR(sobolev_norm(sine(), s, false) / sobolev_norm(sine(), s), std::pow(2.0, s / 2.0), 1e-14);
  }
}

TEST(Sobolev, ZeroExponentIsL2) {
  const SpectralField f = random_field(32, 0);
  EXPECT_NEAR(sobolev_norm(f, 0.0), l2_norm(f), 1e-15 * l2_norm(f));
}

TEST(Sobolev, HomogeneousNeedsMeanZero) {
  SpectralField f = sine();
  f.set_mode(0, 0, 1.0);
  EXPECT_THROW(sobolev_norm(f, 1.0), DomainError);
  EXPECT_NO_THROW(sobolev_norm(f, 1.0, false));
}

TEST(Besov, UnitShellAndBracket) {
  const Partition p = build_partition(grid(16));
  EXPECT_NEAR(besov_norm(sine(), 0.0, p), l2_norm(sine()), 1e-14);
  EXPECT_EQ(besov_norm(SpectralField(p.grid), 1.0, p), 0.0);
  const Partition q = build_partition(grid(32));
  for (std::uint64_t i = 0; i < 20; ++i) {
    const SpectralField f = random_field(32, i);
    for (double s : {-1.0, 0.0, 0.7, 2.0}) {
      const double r = besov_norm(f, s, q) / sobolev_norm(f, s);
      EXPECT_GE(r, std::pow(2.0, -std::abs(s) - 0.5));
      EXPECT_LE(r, std::pow(2.0, std::abs(s) + 0.5));
    }
  }
}

TEST(GevreyNorm, Values) {
  const SpectralField f = random_field(32, 2);
  EXPECT_EQ(gevrey_norm(f, 0.5, 0.0, 1.0), sobolev_norm(f, 1.0));
  EXPECT_NEAR(gevrey_norm(sine(), 1.0, 1.0, 0.7), std::numbers::e * std::sqrt(2.0) * kPi, 1e-13);
  for (std::uint64_t i = 0; i < 10; ++i) {
    const SpectralField g = random_field(32, i);
    double prev = 0.0;
    for (double lam = 0.0; lam <= 0.5; lam += 0.05) {
      const double v = gevrey_norm(g, 0.4, lam, 1.0);
      EXPECT_GE(v, prev);
      prev = v;
    }
  }
}

TEST(XtNorm, Reductions) {
  const SpectralField f = random_field(16, 1);
  GevreySpec fixed0{0.4, 0.0, 0.0, LambdaSchedule::fixed};
  std::vector<Snapshot> one{{0.5, f}};
  EXPECT_NEAR(xt_norm(one, fixed0, 2.0, 0.0, 1.0, 0.5), sobolev_norm(f, 2.0), 1e-15 * sobolev_norm(f, 2.0));
  std::vector<Snapshot> many{{0.0, f}, {0.1, 2.0 * f}, {0.2, 0.5 * f}};
  GevreySpec pow0{0.4, 0.0, 0.0, LambdaSchedule::power};
  EXPECT_NEAR(xt_norm(many, pow0, 1.0, 0.0, 1.0, 0.5), 2.0 * sobolev_norm(f, 1.0), 1e-14 * sobolev_norm(f, 1.0));
  std::vector<Snapshot> start{{0.0, f}};
  EXPECT_THROW(xt_norm(start, pow0, 1.0, 0.0, 1.0, 0.5), DomainError);
}

TEST(XtNorm, HeatFlowClosedForm) {
  // Band-limited data under the heat flow; the oracle evaluates every mode.
  const double gamma = 1.0, kappa = 0.5, delta = 0.2, sc = 2.0;
  GevreySpec gs{0.3, 0.0, 0.5, LambdaSchedule::power};
  const SpectralField f = random_field(16, 4).dealiased();
  std::vector<Snapshot> traj;
  for (int i = 0; i <= 10; ++i) {
    const double t = 0.1 * i;
    traj.push_back({t, linear_heat_propagator(f, t, gamma, kappa, 0.0)});
  }
  double ref = 0.0;
  const double L2 = f.grid().period * f.grid().period;
  for (int i = 1; i <= 10; ++i) {
    const double t = 0.1 * i;
    const double lam = 0.5 * std::pow(gamma * t, gs.alpha / kappa);
    double sum = 0.0;
    for (int a = -7; a <= 7; ++a) {
      for (int b = -7; b <= 7; ++b) {
        const double k = std::hypot(a, b);
        if (k == 0.0) continue;
        const double w = std::exp(lam * std::pow(k, gs.alpha) - gamma * std::pow(k, kappa) * t) *
                         std::pow(k, sc + delta);
        sum += w * w * std::norm(f.mode(a, b));
      }
    }
    ref = std::max(ref, std::pow(gamma * t, delta / kappa) * std::sqrt(L2 * sum));
  }
  const double v = xt_norm(traj, gs, sc, delta, gamma, kappa);
  EXPECT_TRUE(std::isfinite(v));
  EXPECT_NEAR(v / ref, 1.0, 1e-10);
}

TEST(Interpolation, EqualityCases) {
  const InterpolationReport a = check_interpolation(sine(), 0.6, 0.1, 1.3);
  EXPECT_NEAR(a.ratio, 1.0, 1e-14);
  SpectralField shell(grid(16));
  shell.set_mode(3, 4, Complex(0.2, 0.1));
  shell.set_mode(5, 0, Complex(-0.3, 0.0));
  EXPECT_NEAR(check_interpolation(shell, 0.6, 0.1, 1.3).ratio, 1.0, 1e-14);
  const SpectralField f = random_field(16, 3);
  EXPECT_NEAR(check_interpolation(f, 0.4, 0.4, 1.1).ratio, 1.0, 1e-14);
}

TEST(Interpolation, TwoShellEnsemble) {
  for (std::uint64_t i = 0; i < 50; ++i) {
    SpectralField f(grid(16));
    const double a = 0.1 + 0.01 * i;
    f.set_mode(1, 1, Complex(a, 0.2));
    f.set_mode(static_cast<int>(2 + i % 5), 3, Complex(0.05, -a));
    EXPECT_LE(check_interpolation(f, 0.7, -0.3, 1.9).ratio, 1.0 + 1e-14);
  }
}

TEST(L1Interpolation, SingleShellConstant) {
  // Equal amplitudes on the shell |k| = r with M full-lattice points:
  // C = L sqrt(M) / r.
  SpectralField f(grid(16));
  f.set_mode(1, 0, Complex(0.3, 0.4));
  f.set_mode(0, 1, Complex(0.5, 0.0));
  const InterpolationReport r = check_l1_interpolation(f, 0.5, 0.5, 2.0);
  EXPECT_NEAR(r.ratio, 2.0 * kPi * 2.0, 1e-12);
  EXPECT_THROW(check_l1_interpolation(SpectralField(grid(16)), 0.5, 0.5, 2.0), DomainError);
  EXPECT_THROW(check_l1_interpolation(f, 0.5, -1.5, 2.0), DomainError);
}

TEST(L1Interpolation, RefinementStable) {
  double c32 = 0.0, c64 = 0.0;
  for (std::uint64_t i = 0; i < 10; ++i) {
    c32 = std::max(c32, check_l1_interpolation(random_field(32, i, 3.0), 0.0, 0.5, 1.5).ratio);
    c64 = std::max(c64, check_l1_interpolation(random_field(64, i, 3.0), 0.0, 0.5, 1.5).ratio);
  }
  EXPECT_LE(c64, 2.0 * c32);
}

TEST(GevreyInterpolation, ZeroRadiusAndSingleMode) {
  const SpectralField f = random_field(16, 5);
  EXPECT_TRUE(check_gevrey_interpolation(f, 0.5, 0.0, 0.5, 0.2, 1.0).holds);
  // rho = 1, one mode with |k| = 5, amplitude A: both sides in closed form.
  SpectralField m(grid(16));
  m.set_mode(3, 4, Complex(0.25, 0.0));
  const double alpha = 0.6, lambda = 0.2, s1 = 0.3, s2 = 1.1, k = 5.0;
  const double A2 = 2.0 * 0.0625 * 4.0 * kPi * kPi;
  const double g = std::exp(2.0 * lambda * std::pow(k, alpha));
  const double lhs = g * std::pow(k, 2 * s1) * A2;
  const double rhs = std::numbers::e * std::pow(k, 2 * s1) * A2 +
                     std::pow(2.0 * lambda, 2 * (s2 - s1) / alpha) * g * std::pow(k, 2 * s2) * A2;
  const InterpolationReport r = check_gevrey_interpolation(m, alpha, lambda, 1.0, s1, s2);
  EXPECT_NEAR(r.lhs / lhs, 1.0, 1e-13);
  EXPECT_NEAR(r.rhs / rhs, 1.0, 1e-13);
}

TEST(GevreyInterpolation, RandomDraws) {
  std::uint64_t state = 99;
  const auto u = [&state]() {
    state = state * 6364136223846793005ULL + 1442695040888963407ULL;
    return static_cast<double>(state >> 11) * 0x1.0p-53;
  };
  for (std::uint64_t i = 0; i < 500; ++i) {
    const SpectralField f = random_field(16, i % 50);
    const double alpha = 0.2 + 0.8 * u(), lambda = 0.5 * u(), rho = 0.05 + 0.95 * u();
    const double s1 = -1.0 + 2.0 * u(), s2 = s1 + 2.0 * u();
    EXPECT_TRUE(check_gevrey_interpolation(f, alpha, lambda, rho, s1, s2).holds);
  }
}

TEST(DerivativeBound, Cases) {
  const SpectralField f = random_field(16, 1);
  EXPECT_TRUE(derivative_bound_check(f, 0.5, 0.3, {0, 0}, 0.5).holds);
  SpectralField m(grid(16));
  m.set_mode(2, 1, Complex(0.1, 0.2));
  const double alpha = 0.5, lambda = 0.3, s = 0.4, k = std::sqrt(5.0);
  const InterpolationReport r = derivative_bound_check(m, alpha, lambda, {1, 0}, s);
  const double amp = l2_norm(m);
  EXPECT_NEAR(r.lhs, 2.0 * std::pow(k, s) * amp, 1e-13);
  EXPECT_NEAR(r.rhs, std::pow(1.0 / (lambda * alpha), 1.0 / alpha) * std::exp(lambda * std::pow(k, alpha)) *
                         std::pow(k, s) * amp,
              1e-12);
  for (std::uint64_t i = 0; i < 20; ++i) {
    const SpectralField g = random_field(16, i);
    for (int b1 = 0; b1 <= 3; ++b1) {
      for (int b2 = 0; b1 + b2 <= 3; ++b2) {
        EXPECT_TRUE(derivative_bound_check(g, 0.7, 0.2, {b1, b2}, 0.3).holds);
      }
    }
  }
}
