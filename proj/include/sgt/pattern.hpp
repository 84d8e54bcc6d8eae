#pragma once

#include <cstdint>
#include <vector>

#include "sgt/scalar.hpp"
#include "sgt/shape.hpp"

namespace sgt {

// Symplectic Gelfand-Tsetlin pattern of depth k: rows 1..k, row i holding
// (i+1)/2 coordinates, consecutive rows interlacing. Row indexing is 1-based
// in the API to match the usual convention; storage is 0-based.
class GTPattern {
 public:
  GTPattern() = default;
  GTPattern(int k, std::vector<Shape> rows);
  static GTPattern unchecked(int k, std::vector<Shape> rows) {
    GTPattern p;
    p.k_ = k;
    p.rows_ = std::move(rows);
    return p;
  }
  static GTPattern zeros(int k);

  int depth() const { return k_; }
  const Shape& row(int i) const { return rows_[static_cast<std::size_t>(i) - 1]; }
  const std::vector<Shape>& rows() const { return rows_; }

  // Re-checks row lengths, nonnegativity and interlacing.
  bool valid() const;

  auto operator<=>(const GTPattern&) const = default;

 private:
  int k_ = 0;
  std::vector<Shape> rows_;
};

inline constexpr std::size_t kDefaultPatternCap = 10'000'000;

// All patterns with k-th row equal to `top`, sorted lexicographically on the
// concatenated rows (row 1 first). Throws OverflowError past `cap`.
std::vector<GTPattern> enumerate_patterns(int k, const Shape& top,
                                          std::size_t cap = kDefaultPatternCap);

// Multiplicative weight w^k_x(q): the base row contributes q_1^{|x^1|}, row 2i
// contributes q_i^(|x^{2i-1}| - |x^{2i}|), row 2i+1 contributes
// q_{i+1}^(|x^{2i+1}| - |x^{2i}|).
template <class T>
T pattern_weight(const GTPattern& x, const std::vector<T>& q) {
  const int k = x.depth();
  if (static_cast<int>(q.size()) < row_length(k))
    throw DomainError("pattern_weight: q has too few entries");
  T w = pow_int(q[0], x.row(1).sum());
  for (int i = 2; i <= k; ++i) {
    const Coord below = x.row(i - 1).sum();
    const Coord here = x.row(i).sum();
    if (i % 2 == 0) {
      w *= pow_int(q[i / 2 - 1], below - here);
    } else {
      w *= pow_int(q[(i + 1) / 2 - 1], here - below);
    }
  }
  return w;
}

}  // namespace sgt
