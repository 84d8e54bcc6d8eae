#include "sgt/sim_discrete.hpp"

#include <algorithm>

namespace sgt {

NoiseField sample_noise(const ModelParams<double>& params, StepKind kind, Rng& rng) {
  NoiseField field;
  field.kind = kind;
  field.xi.resize(static_cast<std::size_t>(params.k));
  for (int i = 1; i <= params.k; ++i) {
    const double qi = params.q[static_cast<std::size_t>((i + 1) / 2) - 1];
    // Left half-steps: odd rows jump with alpha/q_i, even rows with alpha*q_i.
    // Right full-steps swap the two.
    const bool odd = i % 2 != 0;
    const double p = (kind == StepKind::LeftHalf) == odd ? params.alpha / qi
                                                         : params.alpha * qi;
    auto& row = field.xi[static_cast<std::size_t>(i) - 1];
    row.resize(static_cast<std::size_t>(row_length(i)));
    for (auto& x : row) x = rng.geometric(p);
  }
  return field;
}

GTPattern half_step_left(const GTPattern& state, const NoiseField& noise) {
  const int k = state.depth();
  std::vector<Shape> out;
  out.reserve(static_cast<std::size_t>(k));
  for (int l = 1; l <= k; ++l) {
    const int n = row_length(l);
    std::vector<Coord> row(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) {
      Coord start = state.row(l)[static_cast<std::size_t>(i) - 1];
      if (i >= 2)  // pushed by the updated particle up-left
        start = std::min(start, out[static_cast<std::size_t>(l) - 2][static_cast<std::size_t>(i) - 2]);
      const bool wall = (l % 2 != 0) && i == (l + 1) / 2;
      const Coord floor = wall ? 0 : state.row(l - 1)[static_cast<std::size_t>(i) - 1];
      row[static_cast<std::size_t>(i) - 1] = std::max(floor, start - noise.at(l, i));
    }
    out.push_back(Shape::unchecked(std::move(row)));
  }
  return GTPattern::unchecked(k, std::move(out));
}

GTPattern full_step_right(const GTPattern& state, const NoiseField& noise) {
  const int k = state.depth();
  std::vector<Shape> out;
  out.reserve(static_cast<std::size_t>(k));
  for (int l = 1; l <= k; ++l) {
    const int n = row_length(l);
    std::vector<Coord> row(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) {
      const bool wall = (l % 2 != 0) && i == (l + 1) / 2;
      // pushed by the updated particle directly above
      const Coord push = wall ? 0 : out[static_cast<std::size_t>(l) - 2][static_cast<std::size_t>(i) - 1];
      Coord value = std::max(state.row(l)[static_cast<std::size_t>(i) - 1], push) + noise.at(l, i);
      if (i >= 2)  // capped by the pre-step particle up-left
        value = std::min(value, state.row(l - 1)[static_cast<std::size_t>(i) - 2]);
      row[static_cast<std::size_t>(i) - 1] = value;
    }
    out.push_back(Shape::unchecked(std::move(row)));
  }
  return GTPattern::unchecked(k, std::move(out));
}

DiscreteTrajectory simulate_discrete(const ModelParams<double>& params, int horizon,
                                     std::uint64_t seed) {
  if (horizon < 0) throw DomainError("simulate_discrete: horizon must be >= 0");
  DiscreteTrajectory traj;
  traj.k = params.k;
  traj.seed = seed;
  traj.states.reserve(static_cast<std::size_t>(2 * horizon + 1));
  run_discrete(params, horizon, seed,
               [&](int, const GTPattern& s) { traj.states.push_back(s); });
  return traj;
}

}  // namespace sgt
