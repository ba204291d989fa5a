#include "gsqg/harness/checkpoint.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstring>
#include <fstream>
#include <iterator>
#include <vector>

#include "gsqg/error.hpp"

namespace gsqg::harness {

namespace {

constexpr std::array<char, 6> kMagic{'G', 'S', 'Q', 'G', '1', '\0'};

class Writer {
public:
  void raw(const void* p, std::size_t n) {
    const auto* b = static_cast<const unsigned char*>(p);
    bytes.insert(bytes.end(), b, b + n);
  }
  template <class T>
  void little(T v) {
    static_assert(std::is_trivially_copyable_v<T>);
    std::array<unsigned char, sizeof(T)> b;
    std::memcpy(b.data(), &v, sizeof(T));
    if constexpr (std::endian::native == std::endian::big) std::reverse(b.begin(), b.end());
    raw(b.data(), b.size());
  }
  std::vector<unsigned char> bytes;
};

class Reader {
public:
  explicit Reader(std::vector<unsigned char> b) : bytes(std::move(b)) {}
  void raw(void* p, std::size_t n) {
    if (pos + n > bytes.size()) throw FormatError("checkpoint is truncated");
    std::memcpy(p, bytes.data() + pos, n);
    pos += n;
  }
  template <class T>
  T little() {
    std::array<unsigned char, sizeof(T)> b;
    raw(b.data(), b.size());
    if constexpr (std::endian::native == std::endian::big) std::reverse(b.begin(), b.end());
    T v;
    std::memcpy(&v, b.data(), sizeof(T));
    return v;
  }
  bool done() const { return pos == bytes.size(); }

private:
  std::vector<unsigned char> bytes;
  std::size_t pos = 0;
};

}  // namespace

void write_checkpoint(const CheckpointState& state, const std::string& path) {
  const GridSpec& g = state.field.grid();
  Writer w;
  w.raw(kMagic.data(), kMagic.size());
  w.little<std::uint32_t>(kCheckpointVersion);
  w.little<std::uint32_t>(static_cast<std::uint32_t>(g.n));
  w.little<double>(g.period);
  w.little<double>(state.params.beta);
  w.little<double>(state.params.kappa);
  w.little<double>(state.params.gamma);
  w.little<double>(state.params.mu);
  w.little<double>(state.params.eps_visc);
  w.little<std::uint8_t>(state.params.velocity_law == VelocityLaw::log ? 1 : 0);
  w.little<double>(state.t);
  for (const Complex& c : state.field.coeffs()) {
    w.little<double>(c.real());
    w.little<double>(c.imag());
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open checkpoint for writing: " + path);
  out.write(reinterpret_cast<const char*>(w.bytes.data()), static_cast<std::streamsize>(w.bytes.size()));
  if (!out) throw IoError("failed writing checkpoint " + path);
}

CheckpointState read_checkpoint(const std::string& path, double dealias_fraction) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open checkpoint " + path);
  std::vector<unsigned char> bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  Reader r(std::move(bytes));
  std::array<char, 6> magic{};
  try {
    r.raw(magic.data(), magic.size());
  } catch (const FormatError&) {
    throw FormatError("not a checkpoint file (too short for the magic bytes)");
  }
  if (magic != kMagic) throw FormatError("bad checkpoint magic in " + path);
  const auto version = r.little<std::uint32_t>();
  if (version != kCheckpointVersion) {
    throw FormatError("unsupported checkpoint version " + std::to_string(version));
  }
  GridSpec g;
  g.n = static_cast<int>(r.little<std::uint32_t>());
  g.period = r.little<double>();
  g.dealias_fraction = dealias_fraction;
  try {
    g.validate();
  } catch (const DomainError& e) {
    throw FormatError(std::string("checkpoint grid is invalid: ") + e.what());
  }
  CheckpointState s;
  s.params.beta = r.little<double>();
  s.params.kappa = r.little<double>();
  s.params.gamma = r.little<double>();
  s.params.mu = r.little<double>();
  s.params.eps_visc = r.little<double>();
  const auto law = r.little<std::uint8_t>();
  if (law > 1) throw FormatError("unknown velocity law tag in checkpoint");
  s.params.velocity_law = law == 1 ? VelocityLaw::log : VelocityLaw::power;
  s.t = r.little<double>();
  SpectralField f(g);
  for (Complex& c : f.coeffs()) {
    const double re = r.little<double>();
    const double im = r.little<double>();
    c = Complex(re, im);
  }
  if (!r.done()) throw FormatError("trailing bytes after checkpoint payload");
  if (!f.satisfies_invariants()) throw FormatError("checkpoint coefficients violate Hermitian or Nyquist invariants");
  s.field = std::move(f);
  return s;
}

CheckpointState read_checkpoint_for(const std::string& path, const GridSpec& expected) {
  CheckpointState s = read_checkpoint(path, expected.dealias_fraction);
  const GridSpec& g = s.field.grid();
  if (g.n != expected.n || g.period != expected.period) {
    throw FormatError("checkpoint grid (n = " + std::to_string(g.n) + ") does not match the configured grid (n = " +
                      std::to_string(expected.n) + "); no resampling is done");
  }
  return s;
}

}  // namespace gsqg::harness
