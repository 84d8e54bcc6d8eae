#pragma once

#include <cstdint>
#include <vector>

#include "sgt/params.hpp"
#include "sgt/pattern.hpp"
#include "sgt/rng.hpp"

namespace sgt {

enum class StepKind { LeftHalf, RightFull };

// One geometric variable per particle (row i, position j), tagged with the
// sweep it belongs to; the parameter depends on row parity and sweep kind.
struct NoiseField {
  StepKind kind = StepKind::LeftHalf;
  std::vector<std::vector<Coord>> xi;  // xi[i-1][j-1]

  Coord at(int row, int j) const {
    return xi[static_cast<std::size_t>(row) - 1][static_cast<std::size_t>(j) - 1];
  }
};

NoiseField sample_noise(const ModelParams<double>& params, StepKind kind, Rng& rng);

// Leftward sweep (time n -> n+1/2). Rows update top to bottom; a particle is
// pushed by the already-updated particle up-left of it and blocked below by
// the pre-step particle directly above it (the wall for the last coordinate
// of odd rows). Deterministic; never increases a coordinate.
GTPattern half_step_left(const GTPattern& state, const NoiseField& noise);

// Rightward sweep (time n+1/2 -> n+1). A particle is pushed by the updated
// particle directly above it and capped by the pre-step particle up-left of
// it; the first coordinate is uncapped. Never decreases a coordinate.
GTPattern full_step_right(const GTPattern& state, const NoiseField& noise);

struct DiscreteTrajectory {
  int k = 0;
  std::uint64_t seed = 0;
  // states[t2] is the pattern at time t2/2 (t2 = 0,1,...,2*horizon).
  std::vector<GTPattern> states;
};

DiscreteTrajectory simulate_discrete(const ModelParams<double>& params, int horizon,
                                     std::uint64_t seed);

// Streaming variant: obs(t2, pattern) after every half step, including t2 = 0.
template <class Observer>
void run_discrete(const ModelParams<double>& params, int horizon, std::uint64_t seed,
                  Observer&& obs) {
  Rng rng(seed);
  GTPattern state = GTPattern::zeros(params.k);
  obs(0, state);
  for (int n = 0; n < horizon; ++n) {
    NoiseField left = sample_noise(params, StepKind::LeftHalf, rng);
    state = half_step_left(state, left);
    obs(2 * n + 1, state);
    NoiseField right = sample_noise(params, StepKind::RightFull, rng);
    state = full_step_right(state, right);
    obs(2 * n + 2, state);
  }
}

}  // namespace sgt
