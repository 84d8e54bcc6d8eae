#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <vector>

#include "sgt/mass_function.hpp"

namespace sgt {

template <class State>
struct EmpiricalDist {
  std::map<State, long long> counts;
  long long total = 0;

  void add(const State& s, long long n = 1) {
    counts[s] += n;
    total += n;
  }

  double frequency(const State& s) const {
    auto it = counts.find(s);
    return it == counts.end() ? 0.0 : static_cast<double>(it->second) / total;
  }

  void merge(const EmpiricalDist& other) {
    for (const auto& [s, n] : other.counts) counts[s] += n;
    total += other.total;
  }
};

// 1/2 sum over the union of supports of |p - q|.
template <class State>
double tv_distance(const MassFunction<State, double>& p, const MassFunction<State, double>& q) {
  double acc = 0;
  for (const auto& [s, m] : p) acc += std::abs(m - q.at(s));
  for (const auto& [s, m] : q)
    if (!p.contains(s)) acc += std::abs(m);
  return acc / 2;
}

template <class State>
double tv_distance(const MassFunction<State, double>& p, const EmpiricalDist<State>& q) {
  double acc = 0;
  for (const auto& [s, m] : p) acc += std::abs(m - q.frequency(s));
  for (const auto& [s, n] : q.counts)
    if (!p.contains(s)) acc += static_cast<double>(n) / q.total;
  return acc / 2;
}

template <class State>
double tv_distance(const EmpiricalDist<State>& p, const EmpiricalDist<State>& q) {
  double acc = 0;
  for (const auto& [s, n] : p.counts)
    acc += std::abs(static_cast<double>(n) / p.total - q.frequency(s));
  for (const auto& [s, n] : q.counts)
    if (!p.counts.count(s)) acc += static_cast<double>(n) / q.total;
  return acc / 2;
}

// Two-sample Kolmogorov-Smirnov statistic (sup-norm of the empirical CDF gap).
double ks_two_sample(std::vector<double> a, std::vector<double> b);

// One-sample statistic against an exact CDF.
double ks_vs_cdf(std::vector<double> a, const std::function<double(double)>& cdf);

// Runs fn(chunk_index, begin, end) over [0, total) split into roughly equal
// chunks, one thread per chunk. Callers keep per-chunk state and merge in
// chunk order, so results do not depend on scheduling.
void parallel_chunks(long long total, int threads,
                     const std::function<void(int, long long, long long)>& fn);

int default_thread_count();

}  // namespace sgt
