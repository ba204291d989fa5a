#include "gsqg/spectral_field.hpp"

#include <algorithm>
#include <cmath>

#include "gsqg/error.hpp"
#include "gsqg/fft.hpp"

namespace gsqg {

SpectralField::SpectralField(GridSpec grid) : grid_(grid) {
  grid_.validate();
  coeffs_.assign(grid_.spectral_size(), Complex{});
}

SpectralField SpectralField::from_half_spectrum(GridSpec grid, std::vector<Complex> coeffs) {
  SpectralField f(grid);
  if (coeffs.size() != f.coeffs_.size()) {
    throw DomainError("half spectrum has the wrong number of coefficients");
  }
  f.coeffs_ = std::move(coeffs);
  f.enforce_invariants();
  return f;
}

Complex SpectralField::mode(int m1, int m2) const {
  if (!grid_.in_lattice(m1, m2)) return {};
  if (m2 < 0 || (m2 == 0 && m1 < 0)) {
    return std::conj(coeffs_[index(grid_.row_of(-m1), -m2)]);
  }
  return coeffs_[index(grid_.row_of(m1), m2)];
}

void SpectralField::set_mode(int m1, int m2, Complex value) {
  if (!grid_.in_lattice(m1, m2)) throw DomainError("wave index outside the non-Nyquist lattice");
  if (m2 < 0 || (m2 == 0 && m1 < 0)) {
    m1 = -m1;
    m2 = -m2;
    value = std::conj(value);
  }
  if (m1 == 0 && m2 == 0) value = Complex(value.real(), 0.0);
  coeffs_[index(grid_.row_of(m1), m2)] = value;
  if (m2 == 0 && m1 != 0) coeffs_[index(grid_.row_of(-m1), 0)] = std::conj(value);
}

bool SpectralField::is_zero() const noexcept {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](Complex c) { return c == Complex{}; });
}

bool SpectralField::all_finite() const noexcept {
  return std::all_of(coeffs_.begin(), coeffs_.end(),
                     [](Complex c) { return std::isfinite(c.real()) && std::isfinite(c.imag()); });
}

bool SpectralField::dealias_supported() const {
  bool ok = true;
  for_each_mode(grid_, [&](std::size_t idx, int m1, int m2) {
    if (!grid_.in_dealias_set(m1, m2) && coeffs_[idx] != Complex{}) ok = false;
  });
  return ok;
}

SpectralField SpectralField::dealiased() const {
  SpectralField out = *this;
  for_each_mode(grid_, [&](std::size_t idx, int m1, int m2) {
    if (!grid_.in_dealias_set(m1, m2)) out.coeffs_[idx] = Complex{};
  });
  return out;
}

SpectralField SpectralField::without_mean() const {
  SpectralField out = *this;
  out.coeffs_[0] = Complex{};
  return out;
}

void SpectralField::enforce_invariants() {
  const int n = grid_.n;
  const int cols = grid_.half_cols();
  for (int i1 = 0; i1 < n; ++i1) coeffs_[index(i1, cols - 1)] = Complex{};
  for (int i2 = 0; i2 < cols; ++i2) coeffs_[index(n / 2, i2)] = Complex{};
  coeffs_[0] = Complex(coeffs_[0].real(), 0.0);
  for (int m1 = 1; m1 <= grid_.max_index(); ++m1) {
    Complex& a = coeffs_[index(m1, 0)];
    Complex& b = coeffs_[index(n - m1, 0)];
    const Complex avg = 0.5 * (a + std::conj(b));
    a = avg;
    b = std::conj(avg);
  }
}

bool SpectralField::satisfies_invariants() const {
  const int n = grid_.n;
  const int cols = grid_.half_cols();
  for (int i1 = 0; i1 < n; ++i1) {
    if (coeffs_[index(i1, cols - 1)] != Complex{}) return false;
  }
  for (int i2 = 0; i2 < cols; ++i2) {
    if (coeffs_[index(n / 2, i2)] != Complex{}) return false;
  }
  if (coeffs_[0].imag() != 0.0) return false;
  for (int m1 = 1; m1 <= grid_.max_index(); ++m1) {
    if (coeffs_[index(m1, 0)] != std::conj(coeffs_[index(n - m1, 0)])) return false;
  }
  return true;
}

void SpectralField::require_same_grid(const SpectralField& other) const {
  if (!(grid_ == other.grid_)) throw GridMismatch("fields live on different grids");
}

SpectralField& SpectralField::operator+=(const SpectralField& other) {
  require_same_grid(other);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  return *this;
}

SpectralField& SpectralField::operator-=(const SpectralField& other) {
  require_same_grid(other);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  return *this;
}

SpectralField& SpectralField::operator*=(double s) {
  for (auto& c : coeffs_) c *= s;
  return *this;
}

SpectralField& SpectralField::axpy(double s, const SpectralField& x) {
  require_same_grid(x);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += s * x.coeffs_[i];
  return *this;
}

PhysicalSamples to_physical(const SpectralField& field) {
  return PhysicalSamples{field.grid(), fft::synthesize(field, field.grid().n)};
}

SpectralField from_physical(const PhysicalSamples& samples) {
  samples.grid.validate();
  if (samples.values.size() != samples.grid.physical_size()) {
    throw DomainError("sample array does not match the grid");
  }
  for (double v : samples.values) {
    if (!std::isfinite(v)) throw DomainError("non-finite physical sample");
  }
  return fft::analyze(samples.values, samples.grid.n, samples.grid);
}

double inner(const SpectralField& f, const SpectralField& g) {
  if (!(f.grid() == g.grid())) throw GridMismatch("inner product of fields on different grids");
  const auto a = f.coeffs();
  const auto b = g.coeffs();
  double sum = 0.0;
  for_each_mode(f.grid(), [&](std::size_t idx, int, int m2) {
    sum += mode_weight(m2) * (a[idx] * std::conj(b[idx])).real();
  });
  const double area = f.grid().period * f.grid().period;
  return area * sum;
}

double l2_norm(const SpectralField& f) { return std::sqrt(std::max(0.0, inner(f, f))); }

double max_abs(const VectorField& u) {
  const auto a = fft::synthesize(u.c1, u.grid().n);
  const auto b = fft::synthesize(u.c2, u.grid().n);
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::hypot(a[i], b[i]));
  return m;
}

}  // namespace gsqg
