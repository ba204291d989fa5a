#include "gsqg/inequality_lab.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>

#include "gsqg/error.hpp"
#include "gsqg/norms.hpp"
#include "gsqg/operators.hpp"
#include "gsqg/parallel.hpp"

namespace gsqg {

namespace {

std::uint64_t splitmix(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

double unit_double(std::uint64_t x) { return static_cast<double>(x >> 11) * 0x1.0p-53; }

// Full (not half) lattice copy with indices m in [-K, K]^2, K = n/2 - 1.
struct DenseLattice {
  int K = 0;
  int width = 0;
  std::vector<Complex> v;

  explicit DenseLattice(const SpectralField& f) : K(f.grid().max_index()), width(2 * K + 1) {
    v.resize(static_cast<std::size_t>(width) * width);
    for (int m1 = -K; m1 <= K; ++m1) {
      for (int m2 = -K; m2 <= K; ++m2) v[index(m1, m2)] = f.mode(m1, m2);
    }
  }
  std::size_t index(int m1, int m2) const {
    return static_cast<std::size_t>(m1 + K) * width + static_cast<std::size_t>(m2 + K);
  }
  Complex operator()(int m1, int m2) const { return v[index(m1, m2)]; }
};

void require_brute_force(const SpectralField& f, const SpectralField& g, const SpectralField& h,
                         int cap) {
  if (!(f.grid() == g.grid()) || !(f.grid() == h.grid())) {
    throw GridMismatch("trilinear form over fields on different grids");
  }
  if (f.grid().n > cap) {
    throw BruteForceCapError("lattice sum requested at n = " + std::to_string(f.grid().n) +
                             " above the cap " + std::to_string(cap));
  }
}

// L^2 sum_xi conj(h(xi)) sum_eta acc(xi, eta, f(xi - eta) g(eta)). The
// accumulator returns one complex value per output slot; slots are summed in
// a fixed order.
template <std::size_t S, class Weight>
std::array<Complex, S> lattice_sum(const SpectralField& f, const SpectralField& g,
                                   const SpectralField& h, Weight&& weight) {
  const DenseLattice F(f), G(g), H(h);
  const int K = F.K;
  const int w = F.width;
  std::vector<std::array<Complex, S>> rows(static_cast<std::size_t>(w));
  parallel_for(static_cast<std::size_t>(w), [&](std::size_t r) {
    const int x1 = static_cast<int>(r) - K;
    std::array<Complex, S> acc{};
    for (int x2 = -K; x2 <= K; ++x2) {
      const Complex hc = std::conj(H(x1, x2));
      if (hc == Complex{}) continue;
      std::array<Complex, S> inner{};
      for (int e1 = std::max(-K, x1 - K); e1 <= std::min(K, x1 + K); ++e1) {
        for (int e2 = std::max(-K, x2 - K); e2 <= std::min(K, x2 + K); ++e2) {
          const Complex gv = G(e1, e2);
          if (gv == Complex{}) continue;
          const Complex fv = F(x1 - e1, x2 - e2);
          if (fv == Complex{}) continue;
          const auto wt = weight(x1, x2, e1, e2);
          const Complex p = fv * gv;
          for (std::size_t s = 0; s < S; ++s) inner[s] += wt[s] * p;
        }
      }
      for (std::size_t s = 0; s < S; ++s) acc[s] += hc * inner[s];
    }
    rows[r] = acc;
  });
  std::array<Complex, S> total{};
  for (const auto& row : rows) {
    for (std::size_t s = 0; s < S; ++s) total[s] += row[s];
  }
  const double area = f.grid().period * f.grid().period;
  for (auto& t : total) t *= area;
  return total;
}

double hs(const SpectralField& f, double s) { return sobolev_norm(f.without_mean(), s); }

double gs(const SpectralField& f, double alpha, double lambda, double s) {
  return gevrey_norm(f.without_mean(), alpha, lambda, s);
}

void finish(TrilinearReport& r) {
  r.ratio = r.bound > 0.0 ? std::abs(r.value) / r.bound : 0.0;
  r.c_j = r.ratio;
}

void require_support_in_annulus(const SpectralField& h, int j) {
  const double lo = std::ldexp(1.0, j - 1);
  const double hi = std::ldexp(1.0, j + 1);
  const auto c = h.coeffs();
  const double k0 = h.grid().k0();
  bool ok = true;
  for_each_mode(h.grid(), [&](std::size_t idx, int m1, int m2) {
    const double k = k0 * std::hypot(m1, m2);
    if (c[idx] != Complex{} && !(k > lo && k < hi)) ok = false;
  });
  if (!ok) throw DomainError("h is not supported in the annulus A_j");
}

}  // namespace

void EnsembleSpec::validate() const {
  grid.validate();
  if (!(decay > 1.0)) throw DomainError("ensemble decay exponent must exceed 1");
  if (samples < 1) throw DomainError("ensemble needs at least one sample");
}

SpectralField random_test_field(const EnsembleSpec& spec, std::uint64_t index) {
  spec.validate();
  SpectralField f(spec.grid);
  const double k0 = spec.grid.k0();
  const std::uint64_t base = splitmix(splitmix(spec.seed) ^ index);
  for_each_mode(spec.grid, [&](std::size_t, int m1, int m2) {
    if (m2 == 0 && m1 <= 0) return;
    if (spec.dealiased && !spec.grid.in_dealias_set(m1, m2)) return;
    const auto key = static_cast<std::uint64_t>(static_cast<std::uint32_t>(m1)) << 32 |
                     static_cast<std::uint32_t>(m2);
    const std::uint64_t h = splitmix(base ^ splitmix(key));
    const double amp = std::pow(k0 * std::hypot(m1, m2), -spec.decay) * (0.5 + 0.5 * unit_double(h));
    const double phase = 2.0 * std::numbers::pi * unit_double(splitmix(h));
    f.set_mode(m1, m2, std::polar(amp, phase));
  });
  return f;
}

Complex trilinear_form(const SpectralField& f, const SpectralField& g, const SpectralField& h,
                       double sigma, int cap) {
  require_brute_force(f, g, h, cap);
  if (sigma < 0.0 && !h.mean_zero()) throw DomainError("trilinear form with sigma < 0 needs mean-zero h");
  const double k0 = f.grid().k0();
  const int K = f.grid().max_index();
  std::vector<double> wx(static_cast<std::size_t>(2 * K + 1) * (2 * K + 1));
  for (int a = -K; a <= K; ++a) {
    for (int b = -K; b <= K; ++b) {
      const double k = k0 * std::hypot(a, b);
      wx[static_cast<std::size_t>(a + K) * (2 * K + 1) + (b + K)] = k == 0.0 ? (sigma == 0.0 ? 1.0 : 0.0) : std::pow(k, sigma);
    }
  }
  return lattice_sum<1>(f, g, h, [&](int x1, int x2, int, int) {
    return std::array<double, 1>{wx[static_cast<std::size_t>(x1 + K) * (2 * K + 1) + (x2 + K)]};
  })[0];
}

Complex trilinear_form_sym(const SpectralField& f, const SpectralField& g, const SpectralField& h,
                           double sigma, int cap) {
  require_brute_force(f, g, h, cap);
  const double k0 = f.grid().k0();
  const int K = f.grid().max_index();
  const int w = 2 * K + 1;
  std::vector<double> wk(static_cast<std::size_t>(w) * w);
  for (int a = -K; a <= K; ++a) {
    for (int b = -K; b <= K; ++b) {
      const double k = k0 * std::hypot(a, b);
      wk[static_cast<std::size_t>(a + K) * w + (b + K)] = k == 0.0 ? (sigma == 0.0 ? 1.0 : 0.0) : std::pow(k, sigma);
    }
  }
  const auto at = [&](int a, int b) { return wk[static_cast<std::size_t>(a + K) * w + (b + K)]; };
  return lattice_sum<1>(f, g, h, [&](int x1, int x2, int e1, int e2) {
    return std::array<double, 1>{at(x1 - e1, x2 - e2) + at(e1, e2)};
  })[0];
}

BonySplit bony_split(const SpectralField& f, const SpectralField& g, const SpectralField& h,
                     double sigma, const Partition& p, int cap) {
  require_brute_force(f, g, h, cap);
  if (!(p.grid == f.grid())) throw GridMismatch("partition built for a different grid");
  if (sigma < 0.0 && !h.mean_zero()) throw DomainError("trilinear form with sigma < 0 needs mean-zero h");
  const double k0 = f.grid().k0();
  const int K = f.grid().max_index();
  const int w = 2 * K + 1;
  const int nk = p.block_count();
  const std::size_t cells = static_cast<std::size_t>(w) * w;
  // Per lattice point: |k|^sigma, phi_k, chi_{k-3}, phi_tilde_k for each block k,
  // and the (at most two) blocks where phi_k is nonzero.
  std::vector<double> pw(cells), phi(cells * nk), chi3(cells * nk), tilde(cells * nk);
  std::vector<std::array<int, 2>> active(cells, {-1, -1});
  for (int a = -K; a <= K; ++a) {
    for (int b = -K; b <= K; ++b) {
      const std::size_t c = static_cast<std::size_t>(a + K) * w + (b + K);
      const double k = k0 * std::hypot(a, b);
      pw[c] = k == 0.0 ? (sigma == 0.0 ? 1.0 : 0.0) : std::pow(k, sigma);
      int found = 0;
      for (int i = 0; i < nk; ++i) {
        const int j = p.j_min + i;
        phi[c * nk + i] = Partition::phi(j, k);
        chi3[c * nk + i] = Partition::chi(j - 3, k);
        tilde[c * nk + i] = Partition::phi_tilde(j, k);
        if (phi[c * nk + i] != 0.0 && found < 2) active[c][found++] = i;
      }
    }
  }
  const auto cell = [&](int a, int b) { return static_cast<std::size_t>(a + K) * w + (b + K); };
  const auto parts = lattice_sum<3>(f, g, h, [&](int x1, int x2, int e1, int e2) {
    const std::size_t xa = cell(x1 - e1, x2 - e2);
    const std::size_t eb = cell(e1, e2);
    double w1 = 0.0, w2 = 0.0, w3 = 0.0;
    for (int i : active[eb]) {
      if (i >= 0) w1 += chi3[xa * nk + i] * phi[eb * nk + i];
    }
    for (int i : active[xa]) {
      if (i < 0) continue;
      w2 += phi[xa * nk + i] * chi3[eb * nk + i];
      w3 += phi[xa * nk + i] * tilde[eb * nk + i];
    }
    const double s = pw[cell(x1, x2)];
    return std::array<double, 3>{s * w1, s * w2, s * w3};
  });
  return BonySplit{parts[0], parts[1], parts[2]};
}

SpectralField commutator_block(const SpectralField& f, const SpectralField& g, int j,
                               const Partition& p) {
  return dyadic_block(multiply(g, f), j, p) - multiply(g, dyadic_block(f, j, p));
}

Complex commutator_block_direct(const SpectralField& f, const SpectralField& g,
                                const SpectralField& h, int j, int cap) {
  require_brute_force(f, g, h, cap);
  const double k0 = f.grid().k0();
  return lattice_sum<1>(f, g, h, [&](int x1, int x2, int e1, int e2) {
    return std::array<double, 1>{Partition::phi(j, k0 * std::hypot(x1, x2)) -
                                 Partition::phi(j, k0 * std::hypot(x1 - e1, x2 - e2))};
  })[0];
}

SpectralField commutator_singular(const SpectralField& f, const SpectralField& g, int ell,
                                  double beta) {
  if (!(beta > 1.0 && beta < 2.0)) throw DomainError("singular commutator needs beta in (1, 2)");
  if (ell != 1 && ell != 2) throw DomainError("derivative direction must be 1 or 2");
  if (!f.mean_zero() || !g.mean_zero()) throw DomainError("singular commutator needs mean-zero f and g");
  const auto symbol = [=](double k1, double k2) {
    const double k = std::hypot(k1, k2);
    if (k == 0.0) return Complex{};
    return Complex(0.0, std::pow(k, beta - 2.0) * (ell == 1 ? k1 : k2));
  };
  return apply_symbol(multiply(g, f), symbol) - multiply(g, apply_symbol(f, symbol));
}

TrilinearReport commutator_gevrey(const SpectralField& f, const SpectralField& g,
                                  const SpectralField& h, double alpha, double lambda, double sigma,
                                  double rho, int j, double nu, double zeta, const Partition& p,
                                  int ell) {
  if (!(sigma >= 0.0 && sigma < 1.0)) throw DomainError("Gevrey commutator needs sigma in [0, 1)");
  if (!(zeta >= 0.0 && zeta < 1.0)) throw DomainError("Gevrey commutator needs zeta in [0, 1)");
  if (!(nu > 0.0 && nu < 1.0)) throw DomainError("Gevrey commutator needs nu in (0, 1)");
  if (!(alpha > 0.0 && alpha <= 1.0) || !(lambda >= 0.0)) {
    throw DomainError("Gevrey commutator needs alpha in (0, 1] and lambda >= 0");
  }
  if (ell != 1 && ell != 2) throw DomainError("derivative direction must be 1 or 2");
  if (!p.contains(j)) throw DomainError("block index outside the partition range");
  if (lambda > 0.0) check_overflow_guard(f.grid(), alpha, lambda);
  require_support_in_annulus(h, j);
  const auto symbol = [=](double k1, double k2) {
    const double k = std::hypot(k1, k2);
    if (k == 0.0) return Complex{};
    const double m = std::exp(lambda * std::pow(k, alpha)) * std::pow(k, sigma + rho) * Partition::phi(j, k);
    return Complex(0.0, m * (ell == 1 ? k1 : k2));
  };
  const SpectralField bracket = apply_symbol(multiply(g, f), symbol) - multiply(g, apply_symbol(f, symbol));

  TrilinearReport r;
  r.form = "commutator_gevrey";
  r.j = j;
  r.n = f.grid().n;
  r.value = inner(bracket, h);
  const double lh = hs(h, rho);
  const double first = std::pow(2.0, nu * j) *
                       std::min(gs(f, alpha, lambda, 1.0 - nu) * gs(g, alpha, lambda, sigma + 1.0),
                                gs(g, alpha, lambda, 2.0 - nu) * gs(f, alpha, lambda, sigma)) *
                       lh;
  double second = 0.0;
  if (lambda > 0.0) {
    const SpectralField low = gevrey_avg_operator(low_pass(g, j - 3, p), alpha, lambda);
    const SpectralField blk = gevrey_operator(dyadic_block(f, j, p), alpha, lambda);
    second = lambda * std::pow(2.0, (sigma + 1.0 + alpha - zeta) * j) * hs(low, 1.0 + zeta) *
             l2_norm(blk) * lh;
  }
  r.bound_terms = {first, second};
  r.bound = first + second;
  finish(r);
  return r;
}

TrilinearReport commutator_log(const SpectralField& f, const SpectralField& g,
                               const SpectralField& h, double mu, double eps, double de, double rho,
                               int ell) {
  if (!(mu > 0.0) || !(rho > 0.0)) throw DomainError("log commutator needs mu > 0 and rho > 0");
  if (!(eps > 0.0 && eps < 1.0)) throw DomainError("log commutator needs eps in (0, 1)");
  if (!(de > 0.0 && de < 2.0 * mu)) throw DomainError("log commutator needs de in (0, 2 mu)");
  if (ell != 1 && ell != 2) throw DomainError("derivative direction must be 1 or 2");
  const auto symbol = [=](double k1, double k2) {
    const double k2sum = k1 * k1 + k2 * k2;
    if (k2sum == 0.0) return Complex{};
    return Complex(0.0, std::pow(std::log1p(k2sum), mu) * (ell == 1 ? k1 : k2));
  };
  const SpectralField bracket = apply_symbol(multiply(g, f), symbol) - multiply(g, apply_symbol(f, symbol));

  TrilinearReport r;
  r.form = "commutator_log";
  r.n = f.grid().n;
  r.value = inner(bracket, h);
  const double gfac = std::pow(hs(g, 2.0 - eps + rho), 1.0 / (1.0 + rho)) *
                      std::pow(hs(g, 1.0 - eps), rho / (1.0 + rho));
  const double t1 = hs(f, eps + de) * l2_norm(h);
  const double t2 = l2_norm(f) * hs(h, eps + de);
  r.bound_terms = {gfac, t1, t2};
  r.bound = gfac * (t1 + t2);
  finish(r);
  const double fd = hs(f, eps + de);
  r.aux_ratio = fd > 0.0 ? hs(log_multiplier(f, mu), eps) / fd : 0.0;
  return r;
}

std::string to_string(FormId id) {
  switch (id) {
    case FormId::trilinear: return "trilinear";
    case FormId::trilinear_sym: return "trilinear_sym";
    case FormId::commutator_block: return "commutator_block";
    case FormId::commutator_singular: return "commutator_singular";
    case FormId::commutator_gevrey: return "commutator_gevrey";
    case FormId::commutator_log: return "commutator_log";
    case FormId::log_inequality: return "log_inequality";
  }
  return "unknown";
}

bool form_is_localized(FormId id) {
  return id == FormId::trilinear || id == FormId::trilinear_sym || id == FormId::commutator_block ||
         id == FormId::commutator_gevrey;
}

TrilinearReport evaluate_form(FormId id, const FormParams& q, const SpectralField& f,
                              const SpectralField& g, const SpectralField& h0, int j,
                              const Partition& p) {
  TrilinearReport r;
  r.form = to_string(id);
  r.n = f.grid().n;
  r.j = j;
  switch (id) {
    case FormId::trilinear:
    case FormId::trilinear_sym: {
      const SpectralField h = dyadic_block(h0, j, p);
      r.value = id == FormId::trilinear ? trilinear_form(f, g, h, q.sigma) : trilinear_form_sym(f, g, h, q.sigma);
      const double m = std::min(hs(f, 1.0 - q.eps) * hs(g, q.sigma), hs(g, 1.0 - q.eps) * hs(f, q.sigma));
      r.bound_terms = {std::pow(2.0, q.eps * j), m, l2_norm(h)};
      r.bound = r.bound_terms[0] * m * r.bound_terms[2];
      break;
    }
    case FormId::commutator_block: {
      const SpectralField h = dyadic_block(h0, j, p);
      r.value = inner(commutator_block(f, g, j, p), h);
      const double m = std::min(hs(f, 1.0 - q.rho1) * hs(g, 1.0 + q.rho2), hs(f, q.rho2) * hs(g, 2.0 - q.rho1));
      r.bound_terms = {std::pow(2.0, (q.rho1 - q.rho2 - 1.0) * j), m, l2_norm(h)};
      r.bound = r.bound_terms[0] * m * r.bound_terms[2];
      break;
    }
    case FormId::commutator_singular: {
      const SpectralField out = commutator_singular(f.without_mean(), g.without_mean(), q.ell, q.beta);
      r.value = hs(out, q.rho2 - q.rho1);
      r.bound_terms = {hs(g, q.beta - q.rho1), hs(f, q.rho2)};
      r.bound = r.bound_terms[0] * r.bound_terms[1];
      break;
    }
    case FormId::commutator_gevrey:
      return commutator_gevrey(f, g, dyadic_block(h0, j, p), q.alpha, q.lambda, q.sigma, q.rho, j, q.nu,
                               q.zeta, p, q.ell);
    case FormId::commutator_log:
      return commutator_log(f, g, h0, q.mu, q.eps, q.de, q.rho, q.ell);
    case FormId::log_inequality: {
      if (!(q.de > 0.0 && q.de < 2.0 * q.mu)) throw DomainError("log inequality needs de in (0, 2 mu)");
      r.value = hs(log_multiplier(f, q.mu), q.eps);
      r.bound_terms = {hs(f, q.eps + q.de)};
      r.bound = r.bound_terms[0];
      break;
    }
  }
  finish(r);
  return r;
}

ConstantStatistics estimate_best_constant(FormId id, const FormParams& params,
                                          const EnsembleSpec& ensemble) {
  ensemble.validate();
  const Partition p = build_partition(ensemble.grid);
  const bool localized = form_is_localized(id);
  const int j_lo = localized ? p.j_min : 0;
  const int j_hi = localized ? p.j_max : 0;
  const int nj = j_hi - j_lo + 1;
  const auto members = static_cast<std::size_t>(ensemble.samples);
  // ratios[i][jj], negative when the slot is unused.
  std::vector<std::vector<double>> ratios(members, std::vector<double>(static_cast<std::size_t>(nj), -1.0));
  parallel_for(members, [&](std::size_t i) {
    const SpectralField f = random_test_field(ensemble, 3 * i);
    const SpectralField g = random_test_field(ensemble, 3 * i + 1);
    const SpectralField h0 = random_test_field(ensemble, 3 * i + 2);
    if (f.is_zero() || g.is_zero() || h0.is_zero()) return;
    for (int jj = 0; jj < nj; ++jj) {
      const int j = j_lo + jj;
      if (localized && dyadic_block(h0, j, p).is_zero()) continue;
      const TrilinearReport r = evaluate_form(id, params, f, g, h0, j, p);
      if (r.bound > 0.0 && std::isfinite(r.ratio)) ratios[i][static_cast<std::size_t>(jj)] = r.ratio;
    }
  });
  ConstantStatistics st;
  st.form = id;
  st.n = ensemble.grid.n;
  st.j_first = j_lo;
  st.c_j.assign(static_cast<std::size_t>(nj), 0.0);
  std::vector<double> all;
  for (const auto& row : ratios) {
    for (std::size_t jj = 0; jj < row.size(); ++jj) {
      if (row[jj] < 0.0) continue;
      all.push_back(row[jj]);
      st.c_j[jj] = std::max(st.c_j[jj], row[jj]);
    }
  }
  if (all.empty()) throw DomainError("no usable ensemble members for " + to_string(id));
  st.count = all.size();
  st.max_ratio = *std::max_element(all.begin(), all.end());
  std::sort(all.begin(), all.end());
  const std::size_t mid = all.size() / 2;
  st.median_ratio = all.size() % 2 == 1 ? all[mid] : 0.5 * (all[mid - 1] + all[mid]);
  double l2 = 0.0;
  for (double c : st.c_j) l2 += c * c;
  st.c_l2 = std::sqrt(l2);
  return st;
}

RefinementReport refinement_study(FormId id, const FormParams& params, const EnsembleSpec& coarse) {
  EnsembleSpec fine = coarse;
  fine.grid.n = 2 * coarse.grid.n;
  RefinementReport r;
  r.coarse = estimate_best_constant(id, params, coarse);
  r.fine = estimate_best_constant(id, params, fine);
  r.growth = r.coarse.max_ratio > 0.0 ? r.fine.max_ratio / r.coarse.max_ratio : 0.0;
  return r;
}

}  // namespace gsqg
