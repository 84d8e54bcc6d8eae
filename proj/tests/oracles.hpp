#pragma once

// Test-only oracles, independent of the library's computation paths.

#include <complex>
#include <vector>

#include "sgt/characters.hpp"
#include "sgt/pattern.hpp"
#include "sgt/randmat.hpp"

namespace oracles {

// Character by full pattern enumeration (the defining sum), independent of
// the memoized row recursion.
template <class T>
T schur_by_enumeration(int k, const sgt::Shape& lambda, const std::vector<T>& q) {
  T acc(0);
  for (const auto& x : sgt::enumerate_patterns(k, lambda)) acc += sgt::pattern_weight(x, q);
  return acc;
}

// Characteristic polynomial coefficients by Faddeev-LeVerrier: p(x) = x^n +
// c[1] x^(n-1) + ... + c[n].
inline std::vector<std::complex<double>> char_poly(const sgt::BlockMatrix& m) {
  const int n = m.dim();
  std::vector<std::complex<double>> M(static_cast<std::size_t>(n * n), 0.0);
  auto at = [&](std::vector<std::complex<double>>& a, int i, int j) -> std::complex<double>& {
    return a[static_cast<std::size_t>(i * n + j)];
  };
  std::vector<std::complex<double>> c(static_cast<std::size_t>(n) + 1, 0.0);
  c[0] = 1.0;
  std::vector<std::complex<double>> Mk(static_cast<std::size_t>(n * n), 0.0);
  for (int i = 0; i < n; ++i) at(Mk, i, i) = 1.0;  // M_1 = I
  for (int kk = 1; kk <= n; ++kk) {
    // A * Mk
    std::vector<std::complex<double>> AM(static_cast<std::size_t>(n * n), 0.0);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        std::complex<double> acc = 0;
        for (int t = 0; t < n; ++t) acc += m.at(i, t) * at(Mk, t, j);
        at(AM, i, j) = acc;
      }
    std::complex<double> tr = 0;
    for (int i = 0; i < n; ++i) tr += at(AM, i, i);
    c[static_cast<std::size_t>(kk)] = -tr / static_cast<double>(kk);
    Mk = AM;
    for (int i = 0; i < n; ++i) at(Mk, i, i) += c[static_cast<std::size_t>(kk)];
  }
  (void)M;
  return c;
}

// Roots of a monic polynomial by Durand-Kerner iteration.
inline std::vector<std::complex<double>> poly_roots(const std::vector<std::complex<double>>& c) {
  const int n = static_cast<int>(c.size()) - 1;
  auto eval = [&](std::complex<double> x) {
    std::complex<double> acc = c[0];
    for (int i = 1; i <= n; ++i) acc = acc * x + c[static_cast<std::size_t>(i)];
    return acc;
  };
  std::vector<std::complex<double>> roots(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    roots[static_cast<std::size_t>(i)] =
        std::pow(std::complex<double>(0.4, 0.9), static_cast<double>(i + 1));
  for (int iter = 0; iter < 500; ++iter) {
    double moved = 0;
    for (int i = 0; i < n; ++i) {
      std::complex<double> denom = 1.0;
      for (int j = 0; j < n; ++j)
        if (j != i)
          denom *= roots[static_cast<std::size_t>(i)] - roots[static_cast<std::size_t>(j)];
      const std::complex<double> delta = eval(roots[static_cast<std::size_t>(i)]) / denom;
      roots[static_cast<std::size_t>(i)] -= delta;
      moved += std::abs(delta);
    }
    if (moved < 1e-14) break;
  }
  return roots;
}

}  // namespace oracles
