#pragma once

#include <vector>

#include "sgt/scalar.hpp"
#include "sgt/shape.hpp"

namespace sgt {

// Parameters of the geometric-jump model at depth k: spectral vector q of
// length (k+1)/2 and jump parameter alpha, with the standing assumption
// alpha*q_i < 1 and alpha/q_i < 1 for every i.
template <class T>
struct ModelParams {
  int k = 0;
  std::vector<T> q;
  T alpha{};

  ModelParams() = default;
  ModelParams(int k_, std::vector<T> q_, T alpha_) : k(k_), q(std::move(q_)), alpha(alpha_) {
    if (k < 1) throw DomainError("params: k must be >= 1");
    if (q.size() != static_cast<std::size_t>(row_length(k)))
      throw DomainError("params: q must have (k+1)/2 entries");
    if (!(alpha > T(0)) || !(alpha < T(1)))
      throw DomainError("params: alpha must lie in (0,1)");
    for (const T& qi : q) {
      if (!(qi > T(0))) throw DomainError("params: q entries must be positive");
      if (!(alpha * qi < T(1))) throw DomainError("params: alpha*q_i must be < 1");
      if (!(alpha / qi < T(1))) throw DomainError("params: alpha/q_i must be < 1");
    }
  }

  int rank() const { return row_length(k); }

  // Same alpha, q truncated for a shallower row.
  ModelParams restrict_to_row(int k2) const {
    std::vector<T> q2(q.begin(), q.begin() + row_length(k2));
    return ModelParams(k2, std::move(q2), alpha);
  }

  // a(q) = prod (1 - alpha q_i)(1 - alpha / q_i): even-row normalization.
  T normalization_even() const {
    T acc(1);
    for (const T& qi : q) acc *= (T(1) - alpha * qi) * (T(1) - alpha / qi);
    return acc;
  }

  // a~(q): the q_r right factor is dropped for odd rows.
  T normalization_odd() const {
    T acc(T(1) - alpha * q.back());
    for (std::size_t i = 0; i + 1 < q.size(); ++i)
      acc *= (T(1) - alpha * q[i]) * (T(1) - alpha / q[i]);
    return acc;
  }

  T normalization() const { return k % 2 == 0 ? normalization_even() : normalization_odd(); }

  // Geometric parameters of row k's jumps: even rows step left with alpha*q_r
  // and right with alpha/q_r, odd rows the reverse.
  T left_jump_param() const {
    return k % 2 == 0 ? T(alpha * q.back()) : T(alpha / q.back());
  }
  T right_jump_param() const {
    return k % 2 == 0 ? T(alpha / q.back()) : T(alpha * q.back());
  }
};

template <class T>
ModelParams<double> to_double_params(const ModelParams<T>& p) {
  std::vector<double> qd;
  qd.reserve(p.q.size());
  for (const T& qi : p.q) qd.push_back(to_double(qi));
  return ModelParams<double>(p.k, std::move(qd), to_double(p.alpha));
}

}  // namespace sgt
