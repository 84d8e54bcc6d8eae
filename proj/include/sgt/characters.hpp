#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "sgt/pattern.hpp"
#include "sgt/scalar.hpp"
#include "sgt/shape.hpp"

namespace sgt {

// Memoized evaluator of the symplectic Schur functions s^k_lambda at a fixed
// parameter vector q. Row-branching recursion over the next row down:
//   s^1_(m)        = q_1^m
//   s^{2i}_lambda  = sum_{mu ⪯ lambda} q_i^(|mu|-|lambda|)   s^{2i-1}_mu
//   s^{2i+1}_lambda= sum_{mu ⪯ lambda} q_{i+1}^(|lambda|-|mu|) s^{2i}_mu
// s^k only reads q_1..q_{(k+1)/2}, so one cache serves every row below the q
// it was built for. Not internally synchronized; use one instance per thread.
template <class T>
class SchurCache {
 public:
  explicit SchurCache(std::vector<T> q) : q_(std::move(q)) {
    for (const T& qi : q_)
      if (!(qi > T(0))) throw DomainError("schur: q entries must be positive");
  }

  const std::vector<T>& q() const { return q_; }

  // s^k_lambda(q_1..q_{(k+1)/2}); k = 0 with an empty shape yields 1.
  const T& eval(int k, const Shape& lambda) {
    if (k < 0 || lambda.size() != static_cast<std::size_t>(row_length(k)))
      throw ShapeError("schur: shape length does not match row index");
    if (k > 0 && static_cast<std::size_t>(row_length(k)) > q_.size())
      throw DomainError("schur: q has too few entries for this row");
    auto it = memo_.find({k, lambda});
    if (it != memo_.end()) return it->second;

    T value(0);
    if (k == 0) {
      value = T(1);
    } else if (k == 1) {
      value = pow_int(q_[0], lambda[0]);
    } else {
      const std::size_t lower_len = static_cast<std::size_t>(row_length(k - 1));
      const Coord top_sum = lambda.sum();
      // q index and exponent sign depend on the parity of k.
      const std::size_t qi = (k % 2 == 0) ? static_cast<std::size_t>(k / 2 - 1)
                                          : static_cast<std::size_t>((k + 1) / 2 - 1);
      for_each_interlacing_below(lambda, lower_len, [&](const std::vector<Coord>& mu) {
        Coord mu_sum = 0;
        for (Coord c : mu) mu_sum += c;
        const std::int64_t e = (k % 2 == 0) ? (mu_sum - top_sum) : (top_sum - mu_sum);
        value += pow_int(q_[qi], e) * eval(k - 1, Shape::unchecked(mu));
      });
    }
    return memo_.emplace(std::make_pair(k, lambda), std::move(value)).first->second;
  }

 private:
  std::vector<T> q_;
  std::map<std::pair<int, Shape>, T> memo_;
};

// One-shot evaluation with a fresh cache.
template <class T>
T schur_eval(int k, const Shape& lambda, const std::vector<T>& q) {
  SchurCache<T> cache(q);
  return cache.eval(k, lambda);
}

// Sparse Laurent polynomial in r variables with integer coefficients; carries
// s^k_lambda as a function of q for exact identity tests.
class LaurentPoly {
 public:
  explicit LaurentPoly(std::size_t nvars) : nvars_(nvars) {}

  std::size_t nvars() const { return nvars_; }
  const std::map<std::vector<std::int64_t>, std::int64_t>& terms() const { return terms_; }

  void add_term(const std::vector<std::int64_t>& exps, std::int64_t coeff);

  template <class T>
  T eval(const std::vector<T>& q) const {
    if (q.size() != nvars_) throw DomainError("laurent eval: wrong variable count");
    T acc(0);
    for (const auto& [e, c] : terms_) {
      T mono(c);
      for (std::size_t i = 0; i < nvars_; ++i) mono *= pow_int(q[i], e[i]);
      acc += mono;
    }
    return acc;
  }

 private:
  std::size_t nvars_;
  std::map<std::vector<std::int64_t>, std::int64_t> terms_;
};

// s^k_lambda as a Laurent polynomial in q_1..q_{(k+1)/2}, via pattern
// enumeration. Subject to the enumeration cap.
LaurentPoly schur_poly(int k, const Shape& lambda, std::size_t cap = kDefaultPatternCap);

// Dimension of the irreducible Sp(2r) representation with highest weight
// lambda (Weyl product formula); equals s^{2r}_lambda(1,...,1).
std::int64_t weyl_dim(int r, const Shape& lambda);

// Decomposition of the tensor product V_lambda (x) V_(m,0,..,0): maps each
// admissible top shape beta to its multiplicity, i.e. the number of
// intermediate shapes c ⪯ lambda, beta with |lambda| + |beta| - 2|c| = m.
struct PieriDecomposition {
  Shape lambda;
  std::int64_t m = 0;
  std::map<Shape, std::int64_t> terms;
};

PieriDecomposition pieri_expand(int r, const Shape& lambda, std::int64_t m);

// |s_lambda * s_gamma_m - sum_beta mult(beta) * s_beta| at the given q;
// exactly zero in rational mode.
template <class T>
T pieri_identity_residual(int r, const Shape& lambda, std::int64_t m,
                          const std::vector<T>& q) {
  SchurCache<T> cache(q);
  const int k = 2 * r;
  std::vector<Coord> gm(static_cast<std::size_t>(r), 0);
  gm[0] = m;
  const T lhs = cache.eval(k, lambda) * cache.eval(k, Shape(std::move(gm)));
  T rhs(0);
  for (const auto& [beta, mult] : pieri_expand(r, lambda, m).terms)
    rhs += T(mult) * cache.eval(k, beta);
  T diff = lhs - rhs;
  if (diff < T(0)) diff = -diff;
  return diff;
}

}  // namespace sgt
