#include "sgt/shape.hpp"

namespace sgt {

bool interlaces(const Shape& x, const Shape& y) {
  const std::size_t n = x.size();
  if (y.size() != n && y.size() != n + 1)
    throw ShapeError("interlaces: lengths must differ by 0 or 1");
  // x_j in [y_{j+1} (0 if absent), y_j] for all j, which is the full chain.
  for (std::size_t j = 0; j < n; ++j) {
    if (x[j] > y[j]) return false;
    const Coord lo = (j + 1 < y.size()) ? y[j + 1] : 0;
    if (x[j] < lo) return false;
  }
  return true;
}

}  // namespace sgt
