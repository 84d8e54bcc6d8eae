#include "sgt/stats.hpp"

#include <thread>

#include "sgt/errors.hpp"

namespace sgt {

double ks_two_sample(std::vector<double> a, std::vector<double> b) {
  if (a.empty() || b.empty()) throw DomainError("ks: empty sample");
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  const double na = static_cast<double>(a.size());
  const double nb = static_cast<double>(b.size());
  std::size_t i = 0, j = 0;
  double d = 0;
  while (i < a.size() && j < b.size()) {
    const double v = std::min(a[i], b[j]);
    while (i < a.size() && a[i] <= v) ++i;
    while (j < b.size() && b[j] <= v) ++j;
    d = std::max(d, std::abs(static_cast<double>(i) / na - static_cast<double>(j) / nb));
  }
  return d;
}

double ks_vs_cdf(std::vector<double> a, const std::function<double(double)>& cdf) {
  if (a.empty()) throw DomainError("ks: empty sample");
  std::sort(a.begin(), a.end());
  const double n = static_cast<double>(a.size());
  double d = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double f = cdf(a[i]);
    d = std::max(d, std::abs(static_cast<double>(i + 1) / n - f));
    d = std::max(d, std::abs(static_cast<double>(i) / n - f));
  }
  return d;
}

void parallel_chunks(long long total, int threads,
                     const std::function<void(int, long long, long long)>& fn) {
  if (threads <= 0) threads = default_thread_count();
  threads = static_cast<int>(std::min<long long>(threads, std::max<long long>(1, total)));
  if (threads == 1) {
    fn(0, 0, total);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(threads));
  const long long step = (total + threads - 1) / threads;
  for (int c = 0; c < threads; ++c) {
    const long long begin = static_cast<long long>(c) * step;
    const long long end = std::min(total, begin + step);
    if (begin >= end) break;
    pool.emplace_back([&fn, c, begin, end] { fn(c, begin, end); });
  }
  for (auto& t : pool) t.join();
}

int default_thread_count() {
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 2 : static_cast<int>(hw);
}

}  // namespace sgt
