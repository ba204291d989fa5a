#include "gsqg/grid.hpp"

#include <algorithm>
#include <sstream>

#include "gsqg/error.hpp"

namespace gsqg {

void GridSpec::validate() const {
  if (n < 16 || (n & (n - 1)) != 0) {
    std::ostringstream os;
    os << "grid size n = " << n << " must be a power of two >= 16";
    throw DomainError(os.str());
  }
  if (!(period > 0.0) || !std::isfinite(period)) {
    throw DomainError("grid period must be positive and finite");
  }
  if (!(dealias_fraction > 0.0 && dealias_fraction <= 1.0)) {
    throw DomainError("dealias_fraction must lie in (0, 1]");
  }
}

int GridSpec::dealias_index() const noexcept {
  // The small slack keeps 2/3 * n/2 from rounding below an exact integer.
  const int k = static_cast<int>(std::floor(dealias_fraction * (n / 2) + 1e-9));
  return std::clamp(k, 0, max_index());
}

}  // namespace gsqg
