#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <vector>

#include "sgt/errors.hpp"

namespace sgt {

// Seed of the index-th independent stream under a master seed.
inline std::uint64_t stream_seed(std::uint64_t master, std::uint64_t index) {
  return master + 0x9E3779B97F4A7C15ULL * (index + 1);
}

// xoshiro256++ seeded through splitmix64. Every trajectory derives its own
// stream from (master seed, stream index), so batches are reproducible
// independently of thread scheduling.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) {
    std::uint64_t x = seed;
    for (auto& word : s_) word = splitmix64(x);
  }

  static Rng stream(std::uint64_t master, std::uint64_t index) {
    return Rng(stream_seed(master, index));
  }

  std::uint64_t next() {
    const std::uint64_t result = rotl(s_[0] + s_[3], 23) + s_[0];
    const std::uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = rotl(s_[3], 45);
    return result;
  }

  // Uniform on the open interval (0,1): lattice points (n + 1/2) * 2^-53.
  double uniform() {
    return (static_cast<double>(next() >> 11) + 0.5) * 0x1.0p-53;
  }

  // P(x) = p^x (1-p) on {0,1,2,...} by inverse transform.
  std::int64_t geometric(double p) {
    if (p <= 0.0) return 0;
    if (p >= 1.0) throw DomainError("geometric: parameter must be < 1");
    return static_cast<std::int64_t>(std::floor(std::log(uniform()) / std::log(p)));
  }

  double exponential(double rate) { return -std::log(uniform()) / rate; }

  double normal(double mean, double stddev) {
    const double u1 = uniform();
    const double u2 = uniform();
    return mean + stddev * std::sqrt(-2.0 * std::log(u1)) *
                      std::cos(2.0 * 3.14159265358979323846 * u2);
  }

  // Index i with probability weights[i] / total.
  std::size_t categorical(const std::vector<double>& weights, double total) {
    double target = uniform() * total;
    for (std::size_t i = 0; i < weights.size(); ++i) {
      target -= weights[i];
      if (target <= 0.0) return i;
    }
    return weights.size() - 1;
  }

 private:
  static std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }
  static std::uint64_t splitmix64(std::uint64_t& x) {
    std::uint64_t z = (x += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  std::array<std::uint64_t, 4> s_{};
};

}  // namespace sgt
