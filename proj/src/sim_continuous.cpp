#include "sgt/sim_continuous.hpp"

#include <array>
#include <utility>

namespace sgt {

namespace {

Coord coord(const GTPattern& p, int row, int j) {
  return p.row(row)[static_cast<std::size_t>(j) - 1];
}

void bump(GTPattern& p, int row, int j, Coord delta) {
  std::vector<Shape> rows = p.rows();
  std::vector<Coord> c = rows[static_cast<std::size_t>(row) - 1].coords();
  c[static_cast<std::size_t>(j) - 1] += delta;
  rows[static_cast<std::size_t>(row) - 1] = Shape::unchecked(std::move(c));
  p = GTPattern::unchecked(p.depth(), std::move(rows));
}

}  // namespace

GTPattern apply_jump(const GTPattern& state, int row, int j, int direction) {
  const int k = state.depth();
  if (row < 1 || row > k || j < 1 || j > row_length(row))
    throw ShapeError("apply_jump: particle label out of range");
  const Coord val = coord(state, row, j);
  GTPattern out = state;

  if (direction > 0) {
    // blocked by the particle up-left of it
    if (row >= 2 && j >= 2 && val == coord(state, row - 1, j - 1)) return out;
    // push chain straight down the column: maximal run of equal coordinates
    int len = 0;
    while (row + len + 1 <= k && j <= row_length(row + len + 1) &&
           coord(state, row + len + 1, j) == val)
      ++len;
    for (int m = 0; m <= len; ++m) bump(out, row + m, j, +1);
    return out;
  }

  const bool wall_particle = (row % 2 != 0) && j == (row + 1) / 2;
  if (wall_particle) {
    if (val == 0) return out;  // blocked by the wall
    bump(out, row, j, -1);
    return out;
  }
  // blocked by the particle directly above
  if (val == coord(state, row - 1, j)) return out;
  // push chain down the diagonal
  int len = 0;
  while (row + len + 1 <= k && j + len + 1 <= row_length(row + len + 1) &&
         coord(state, row + len + 1, j + len + 1) == val)
    ++len;
  for (int m = 0; m <= len; ++m) bump(out, row + m, j + m, -1);
  return out;
}

EventTrajectory simulate_continuous(const ContinuousParams& params, double horizon,
                                    std::uint64_t seed, bool record_events) {
  if (horizon < 0) throw DomainError("simulate_continuous: horizon must be >= 0");
  EventTrajectory traj;
  traj.params = params;
  traj.seed = seed;
  traj.final_state = GTPattern::zeros(params.k);

  // One global clock at the total attempt rate; the attempting particle and
  // direction are drawn categorically. Equivalent to independent clocks.
  std::vector<double> weights;
  std::vector<std::array<int, 2>> labels;  // (row, j) twice: left then right
  double total = 0;
  for (int i = 1; i <= params.k; ++i) {
    for (int j = 1; j <= row_length(i); ++j) {
      weights.push_back(params.left_rate(i));
      labels.push_back({i, j});
      weights.push_back(params.right_rate(i));
      labels.push_back({i, j});
      total += params.left_rate(i) + params.right_rate(i);
    }
  }

  Rng rng(seed);
  double t = 0;
  while (true) {
    t += rng.exponential(total);
    if (t > horizon) break;
    const std::size_t pick = rng.categorical(weights, total);
    const int row = labels[pick][0];
    const int j = labels[pick][1];
    const int dir = pick % 2 == 0 ? -1 : +1;
    GTPattern next = apply_jump(traj.final_state, row, j, dir);
    const bool applied = next != traj.final_state;
    if (record_events) traj.events.push_back({t, row, j, dir, applied});
    traj.final_state = std::move(next);
  }
  return traj;
}

}  // namespace sgt
