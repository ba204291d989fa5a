#include "gsqg/fft.hpp"

#include <fftw3.h>

#include <cmath>
#include <map>
#include <mutex>

#include "gsqg/error.hpp"

namespace gsqg::fft {

namespace {

struct PlanPair {
  fftw_plan forward = nullptr;   // r2c
  fftw_plan backward = nullptr;  // c2r
};

// FFTW planning is not thread-safe; execution through the new-array interface
// is. Plans are created once per size with FFTW_UNALIGNED so any buffer works.
class PlanCache {
public:
  static PlanCache& instance() {
    static PlanCache cache;
    return cache;
  }

  PlanPair get(int m) {
    std::lock_guard lock(mutex_);
    auto it = plans_.find(m);
    if (it != plans_.end()) return it->second;
    const std::size_t nreal = static_cast<std::size_t>(m) * m;
    const std::size_t ncplx = static_cast<std::size_t>(m) * (m / 2 + 1);
    double* r = fftw_alloc_real(nreal);
    fftw_complex* c = fftw_alloc_complex(ncplx);
    const unsigned flags = FFTW_ESTIMATE | FFTW_UNALIGNED;
    PlanPair p;
    p.forward = fftw_plan_dft_r2c_2d(m, m, r, c, flags);
    p.backward = fftw_plan_dft_c2r_2d(m, m, c, r, flags);
    fftw_free(r);
    fftw_free(c);
    plans_.emplace(m, p);
    return p;
  }

  ~PlanCache() {
    for (auto& [m, p] : plans_) {
      fftw_destroy_plan(p.forward);
      fftw_destroy_plan(p.backward);
    }
  }

private:
  std::mutex mutex_;
  std::map<int, PlanPair> plans_;
};

}  // namespace

std::vector<double> synthesize(const SpectralField& field, int m) {
  const GridSpec& g = field.grid();
  if (m < g.n) throw DomainError("synthesis grid smaller than the field lattice");
  const int mc = m / 2 + 1;
  std::vector<Complex> padded(static_cast<std::size_t>(m) * mc);
  const auto coeffs = field.coeffs();
  for_each_mode(g, [&](std::size_t idx, int m1, int m2) {
    const int row = m1 >= 0 ? m1 : m1 + m;
    padded[static_cast<std::size_t>(row) * mc + m2] = coeffs[idx];
  });
  std::vector<double> out(static_cast<std::size_t>(m) * m);
  const PlanPair plans = PlanCache::instance().get(m);
  fftw_execute_dft_c2r(plans.backward, reinterpret_cast<fftw_complex*>(padded.data()), out.data());
  return out;
}

SpectralField analyze(std::span<const double> samples, int m, const GridSpec& target) {
  if (samples.size() != static_cast<std::size_t>(m) * m) {
    throw DomainError("sample count does not match the transform size");
  }
  if (m < target.n) throw DomainError("analysis grid smaller than the target lattice");
  const int mc = m / 2 + 1;
  std::vector<double> in(samples.begin(), samples.end());
  std::vector<Complex> spec(static_cast<std::size_t>(m) * mc);
  const PlanPair plans = PlanCache::instance().get(m);
  fftw_execute_dft_r2c(plans.forward, in.data(), reinterpret_cast<fftw_complex*>(spec.data()));
  const double scale = 1.0 / (static_cast<double>(m) * m);
  SpectralField out(target);
  auto dst = out.coeffs();
  for_each_mode(target, [&](std::size_t idx, int m1, int m2) {
    const int row = m1 >= 0 ? m1 : m1 + m;
    dst[idx] = spec[static_cast<std::size_t>(row) * mc + m2] * scale;
  });
  out.enforce_invariants();
  return out;
}

}  // namespace gsqg::fft
