#pragma once

#include <cstdint>
#include <vector>

#include "sgt/characters.hpp"
#include "sgt/mass_function.hpp"
#include "sgt/pattern.hpp"
#include "sgt/rng.hpp"

namespace sgt {

// Exponential-clock model: particles attempt unit jumps on their own clocks.
// Row 2i-1 jumps left at rate 1/q_i and right at rate q_i; row 2i jumps left
// at rate q_i and right at rate 1/q_i. This is the assignment consistent with
// the small-alpha limit of the geometric model and with the depth-1 generator.
struct ContinuousParams {
  int k = 0;
  std::vector<double> q;  // length (k+1)/2

  ContinuousParams() = default;
  ContinuousParams(int k_, std::vector<double> q_) : k(k_), q(std::move(q_)) {
    if (k < 1) throw DomainError("continuous params: k must be >= 1");
    if (q.size() != static_cast<std::size_t>(row_length(k)))
      throw DomainError("continuous params: q must have (k+1)/2 entries");
    for (double qi : q)
      if (!(qi > 0)) throw DomainError("continuous params: q entries must be positive");
  }

  double left_rate(int row) const {
    const double qi = q[static_cast<std::size_t>((row + 1) / 2) - 1];
    return row % 2 != 0 ? 1.0 / qi : qi;
  }
  double right_rate(int row) const {
    const double qi = q[static_cast<std::size_t>((row + 1) / 2) - 1];
    return row % 2 != 0 ? qi : 1.0 / qi;
  }
};

// Applies one attempted unit jump of the particle (row, j). Blocked attempts
// return the state unchanged. Rightward pushes propagate straight down the
// column; leftward pushes propagate down the diagonal.
GTPattern apply_jump(const GTPattern& state, int row, int j, int direction);

struct JumpEvent {
  double time = 0;
  int row = 0;
  int j = 0;
  int direction = 0;  // +1 right, -1 left
  bool applied = false;
};

struct EventTrajectory {
  ContinuousParams params;
  std::uint64_t seed = 0;
  std::vector<JumpEvent> events;  // populated only when recording is on
  GTPattern final_state;
};

EventTrajectory simulate_continuous(const ContinuousParams& params, double horizon,
                                    std::uint64_t seed, bool record_events = false);

// Nearest-neighbor jump rates of the depth-k top-row chain: x -> x +- e_i at
// rate s_y / s_x for the neighbors that stay weakly decreasing, nonnegative.
template <class T>
MassFunction<Shape, T> generator_row(int k, SchurCache<T>& cache, const Shape& x) {
  const std::size_t r = static_cast<std::size_t>(row_length(k));
  if (x.size() != r) throw ShapeError("generator_row: wrong shape length");
  const T sx = cache.eval(k, x);
  MassFunction<Shape, T> out;
  for (std::size_t i = 0; i < r; ++i) {
    for (int d : {+1, -1}) {
      std::vector<Coord> y = x.coords();
      y[i] += d;
      if (y[i] < 0) continue;
      if (i > 0 && y[i] > y[i - 1]) continue;
      if (i + 1 < r && y[i] < y[i + 1]) continue;
      Shape ys = Shape::unchecked(std::move(y));
      out.add(ys, cache.eval(k, ys) / sx);
    }
  }
  return out;
}

}  // namespace sgt
