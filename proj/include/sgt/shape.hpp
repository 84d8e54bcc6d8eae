#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <utility>
#include <vector>

#include "sgt/errors.hpp"

namespace sgt {

using Coord = std::int64_t;

// Weakly decreasing vector of nonnegative integers. Length r belongs to the
// ambient row index k with r = (k+1)/2; the ambient k is supplied by callers,
// since odd and even rows of the same length share one shape set.
class Shape {
 public:
  Shape() = default;
  explicit Shape(std::vector<Coord> coords) : c_(std::move(coords)) {
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (c_[i] < 0) throw ShapeError("shape coordinate is negative");
      if (i + 1 < c_.size() && c_[i] < c_[i + 1])
        throw ShapeError("shape coordinates are not weakly decreasing");
    }
  }
  static Shape unchecked(std::vector<Coord> coords) {
    Shape s;
    s.c_ = std::move(coords);
    return s;
  }

  std::size_t size() const { return c_.size(); }
  bool empty() const { return c_.empty(); }
  Coord operator[](std::size_t i) const { return c_[i]; }
  const std::vector<Coord>& coords() const { return c_; }
  Coord sum() const { return std::accumulate(c_.begin(), c_.end(), Coord{0}); }

  auto operator<=>(const Shape&) const = default;

 private:
  std::vector<Coord> c_;
};

// Number of coordinates in row k of a pattern (1-based row index).
inline int row_length(int k) { return (k + 1) / 2; }

// x ⪯ y: the chain x_n <= y_n <= x_{n-1} <= ... <= x_1 <= y_1, with the extra
// relation y_{n+1} <= x_n when y is one longer. Lengths must differ by 0 or 1.
bool interlaces(const Shape& x, const Shape& y);

// Every weakly decreasing tuple of the given length with entries in [0, maxc],
// lexicographically. fn receives a reused buffer.
template <class Fn>
void for_each_shape(std::size_t len, Coord maxc, Fn&& fn) {
  std::vector<Coord> cur(len, 0);
  if (len == 0) {
    fn(static_cast<const std::vector<Coord>&>(cur));
    return;
  }
  while (true) {
    fn(static_cast<const std::vector<Coord>&>(cur));
    std::size_t j = len;
    while (j > 0) {
      --j;
      const Coord hi = (j == 0) ? maxc : cur[j - 1];
      if (cur[j] < hi) {
        ++cur[j];
        for (std::size_t t = j + 1; t < len; ++t) cur[t] = 0;
        break;
      }
      if (j == 0) return;
    }
  }
}

// Iterates over { x : x ⪯ upper, x has `len` coordinates } in lexicographic
// order. len must be upper.size() or upper.size()-1. In both cases the
// constraint set is the box x_j in [upper_{j+1} (0 if absent), upper_j];
// weak decrease of x is automatic. fn receives a reused coordinate buffer.
template <class Fn>
void for_each_interlacing_below(const Shape& upper, std::size_t len, Fn&& fn) {
  if (len != upper.size() && len + 1 != upper.size())
    throw ShapeError("interlacing enumeration: incompatible lengths");
  std::vector<Coord> cur(len), lo(len), hi(len);
  for (std::size_t j = 0; j < len; ++j) {
    lo[j] = (j + 1 < upper.size()) ? upper[j + 1] : 0;
    hi[j] = upper[j];
    cur[j] = lo[j];
  }
  if (len == 0) {
    fn(static_cast<const std::vector<Coord>&>(cur));
    return;
  }
  while (true) {
    fn(static_cast<const std::vector<Coord>&>(cur));
    std::size_t j = len;
    while (j > 0) {
      --j;
      if (cur[j] < hi[j]) {
        ++cur[j];
        for (std::size_t t = j + 1; t < len; ++t) cur[t] = lo[t];
        break;
      }
      if (j == 0) return;
    }
  }
}

}  // namespace sgt
