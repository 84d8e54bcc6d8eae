#include <doctest.h>

#include <cmath>

#include "sgt/sim_continuous.hpp"
#include "sgt/stats.hpp"
#include "sgt/verify.hpp"

using namespace sgt;

namespace {
Shape sh(std::vector<Coord> c) { return Shape(std::move(c)); }

// Independent scan for the coordinates an attempted jump should change.
std::vector<std::pair<int, int>> expected_chain(const GTPattern& s, int row, int j, int dir) {
  const int k = s.depth();
  const Coord val = s.row(row)[static_cast<std::size_t>(j) - 1];
  std::vector<std::pair<int, int>> chain;
  if (dir > 0) {
    if (row >= 2 && j >= 2 && val == s.row(row - 1)[static_cast<std::size_t>(j) - 2]) return {};
    chain.push_back({row, j});
    for (int m = 1; row + m <= k && j <= row_length(row + m); ++m) {
      if (s.row(row + m)[static_cast<std::size_t>(j) - 1] != val) break;
      chain.push_back({row + m, j});
    }
    return chain;
  }
  const bool wall = (row % 2 != 0) && j == (row + 1) / 2;
  if (wall) {
    if (val == 0) return {};
    return {{row, j}};
  }
  if (val == s.row(row - 1)[static_cast<std::size_t>(j) - 1]) return {};
  chain.push_back({row, j});
  for (int m = 1; row + m <= k && j + m <= row_length(row + m); ++m) {
    if (s.row(row + m)[static_cast<std::size_t>(j + m) - 1] != val) break;
    chain.push_back({row + m, j + m});
  }
  return chain;
}

}  // namespace

TEST_CASE("attempted jumps at hand-checked states") {
  SUBCASE("wall particles cannot cross zero") {
    GTPattern s(1, {sh({0})});
    CHECK(apply_jump(s, 1, 1, -1) == s);
    GTPattern s3(3, {sh({1}), sh({1}), sh({1, 0})});
    CHECK(apply_jump(s3, 3, 2, -1) == s3);  // (3,2) is the wall particle at 0
  }
  SUBCASE("right jumps are blocked by the particle up-left") {
    GTPattern s(3, {sh({1}), sh({1}), sh({1, 1})});
    CHECK(apply_jump(s, 3, 2, +1) == s);  // Y^3_2 = Y^2_1
  }
  SUBCASE("right jumps push straight down the column") {
    GTPattern s(2, {sh({1}), sh({1})});
    const GTPattern out = apply_jump(s, 1, 1, +1);
    CHECK(out.row(1) == sh({2}));
    CHECK(out.row(2) == sh({2}));
  }
  SUBCASE("left jumps push down the diagonal") {
    GTPattern s(3, {sh({0}), sh({1}), sh({1, 1})});
    const GTPattern out = apply_jump(s, 2, 1, -1);
    CHECK(out.row(2) == sh({0}));
    CHECK(out.row(3) == sh({1, 0}));
  }
  SUBCASE("left jumps are blocked by the particle directly above") {
    GTPattern s(2, {sh({1}), sh({1})});
    CHECK(apply_jump(s, 2, 1, -1) == s);
  }
}

TEST_CASE("attempted jumps move exactly the expected chain") {
  Rng rng(17);
  for (int trial = 0; trial < 4000; ++trial) {
    const int k = 1 + static_cast<int>(rng.uniform() * 6);
    // random valid pattern, built by a short burst of random attempts
    GTPattern s = GTPattern::zeros(k);
    for (int warm = 0; warm < 30; ++warm) {
      const int row = 1 + static_cast<int>(rng.uniform() * k);
      const int j = 1 + static_cast<int>(rng.uniform() * row_length(row));
      s = apply_jump(s, row, j, rng.uniform() < 0.6 ? +1 : -1);
    }
    const int row = 1 + static_cast<int>(rng.uniform() * k);
    const int j = 1 + static_cast<int>(rng.uniform() * row_length(row));
    const int dir = rng.uniform() < 0.5 ? +1 : -1;
    const GTPattern out = apply_jump(s, row, j, dir);
    REQUIRE(out.valid());
    const auto chain = expected_chain(s, row, j, dir);
    for (int i = 1; i <= k; ++i)
      for (std::size_t jj = 0; jj < out.row(i).size(); ++jj) {
        const bool in_chain = std::find(chain.begin(), chain.end(),
                                        std::make_pair(i, static_cast<int>(jj) + 1)) !=
                              chain.end();
        const Coord delta = out.row(i)[jj] - s.row(i)[jj];
        CHECK(delta == (in_chain ? dir : 0));
      }
  }
}

TEST_CASE("event trajectories") {
  ContinuousParams params(2, {1.0});
  SUBCASE("zero horizon stays at zero") {
    auto traj = simulate_continuous(params, 0.0, 5);
    CHECK(traj.final_state == GTPattern::zeros(2));
    CHECK(traj.events.empty());
  }
  SUBCASE("reproducible and strictly ordered event times") {
    auto a = simulate_continuous(params, 3.0, 11, true);
    auto b = simulate_continuous(params, 3.0, 11, true);
    CHECK(a.final_state == b.final_state);
    REQUIRE(a.events.size() == b.events.size());
    for (std::size_t i = 0; i + 1 < a.events.size(); ++i)
      CHECK(a.events[i].time < a.events[i + 1].time);
  }
}

TEST_CASE("depth-1 chain is the expected birth-death process") {
  // rates: up q_1, down 1/q_1 blocked at zero
  const double q1 = 1.5;
  ContinuousParams params(1, {q1});
  const double horizon = 4000;
  auto traj = simulate_continuous(params, horizon, 2024, true);
  long long ups = 0, downs = 0;
  double positive_time = 0;
  double last_time = 0;
  Coord pos = 0;
  for (const auto& e : traj.events) {
    if (pos > 0) positive_time += e.time - last_time;
    last_time = e.time;
    if (e.applied) {
      if (e.direction > 0) ++ups;
      else ++downs;
      pos += e.direction;
    }
  }
  const double up_rate = static_cast<double>(ups) / horizon;
  const double down_rate = static_cast<double>(downs) / positive_time;
  CHECK(std::abs(up_rate - q1) < 3 * std::sqrt(q1 * horizon) / horizon);
  CHECK(std::abs(down_rate - 1 / q1) <
        3 * std::sqrt(positive_time / q1) / positive_time + 0.02);
}

TEST_CASE("generator rows") {
  SUBCASE("depth 1 rates are parameter ratios") {
    SchurCache<Rational> cache({Rational(3, 2)});
    auto row = generator_row(1, cache, sh({2}));
    CHECK(row.at(sh({3})) == Rational(3, 2));
    CHECK(row.at(sh({1})) == Rational(2, 3));
  }
  SUBCASE("moves leaving the cone are excluded") {
    SchurCache<Rational> cache({Rational(1), Rational(1)});
    auto row = generator_row(4, cache, sh({2, 2}));
    CHECK(row.support_size() == 2);  // only +e_1 and -e_2 stay decreasing
    CHECK(row.contains(sh({3, 2})));
    CHECK(row.contains(sh({2, 1})));
  }
  SUBCASE("from the origin only the first coordinate can grow") {
    SchurCache<Rational> cache({Rational(3, 2)});
    auto row = generator_row(2, cache, sh({0}));
    REQUIRE(row.support_size() == 1);
    CHECK(row.at(sh({1})) == Rational(3, 2) + Rational(2, 3));  // s_1 / s_0 = q + 1/q
  }
}

TEST_CASE("clock model matches the uniformized generator law at depth 2") {
  const auto law = continuous_row_law(2, {1.0}, 1.0, 60);
  EmpiricalDist<Shape> emp;
  ContinuousParams params(2, {1.0});
  const long long n = 20000;
  for (long long i = 0; i < n; ++i) {
    auto traj = simulate_continuous(params, 1.0, stream_seed(606, static_cast<std::uint64_t>(i)));
    emp.add(traj.final_state.row(2));
  }
  CHECK(tv_distance(law, emp) < 0.05);
}
