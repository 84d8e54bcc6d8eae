#include "sgt/characters.hpp"

#include <functional>

namespace sgt {

void LaurentPoly::add_term(const std::vector<std::int64_t>& exps, std::int64_t coeff) {
  if (exps.size() != nvars_) throw DomainError("laurent: wrong exponent arity");
  if (coeff == 0) return;
  auto it = terms_.find(exps);
  if (it == terms_.end()) {
    terms_.emplace(exps, coeff);
    return;
  }
  it->second += coeff;
  if (it->second == 0) terms_.erase(it);
}

LaurentPoly schur_poly(int k, const Shape& lambda, std::size_t cap) {
  const std::size_t r = static_cast<std::size_t>(row_length(k));
  LaurentPoly poly(r);
  for (const GTPattern& x : enumerate_patterns(k, lambda, cap)) {
    std::vector<std::int64_t> exps(r, 0);
    exps[0] = x.row(1).sum();
    for (int i = 2; i <= k; ++i) {
      const Coord below = x.row(i - 1).sum();
      const Coord here = x.row(i).sum();
      if (i % 2 == 0)
        exps[static_cast<std::size_t>(i / 2) - 1] += below - here;
      else
        exps[static_cast<std::size_t>((i + 1) / 2) - 1] += here - below;
    }
    poly.add_term(exps, 1);
  }
  return poly;
}

std::int64_t weyl_dim(int r, const Shape& lambda) {
  if (lambda.size() != static_cast<std::size_t>(r))
    throw ShapeError("weyl_dim: shape must have r coordinates");
  auto l = [&](int i) { return lambda[static_cast<std::size_t>(i) - 1]; };
  Rational dim(1);
  for (int i = 1; i <= r; ++i) {
    for (int j = i + 1; j <= r; ++j) {
      dim *= Rational(l(i) - l(j) + j - i, j - i);
      dim *= Rational(l(i) + l(j) + 2 * r + 2 - j - i, 2 * r + 2 - j - i);
    }
    dim *= Rational(l(i) + r + 1 - i, r + 1 - i);
  }
  if (denominator(dim) != 1) throw std::logic_error("weyl_dim: non-integer result");
  return numerator(dim).convert_to<std::int64_t>();
}

PieriDecomposition pieri_expand(int r, const Shape& lambda, std::int64_t m) {
  if (lambda.size() != static_cast<std::size_t>(r))
    throw ShapeError("pieri_expand: shape must have r coordinates");
  if (m < 0) throw DomainError("pieri_expand: m must be >= 0");

  PieriDecomposition out;
  out.lambda = lambda;
  out.m = m;
  const std::size_t n = static_cast<std::size_t>(r);
  const Coord lam_sum = lambda.sum();

  // c ⪯ lambda ranges over the box [lambda_{i+1}, lambda_i]; for each c, every
  // beta with c ⪯ beta and |beta| = m + 2|c| - |lambda| contributes one unit of
  // multiplicity. beta_1 is determined by the sum, so enumerate beta_2..beta_r.
  for_each_interlacing_below(lambda, n, [&](const std::vector<Coord>& c) {
    Coord c_sum = 0;
    for (Coord v : c) c_sum += v;
    const Coord beta_sum = m + 2 * c_sum - lam_sum;
    if (beta_sum < 0) return;

    std::vector<Coord> beta(n, 0);
    std::function<void(std::size_t, Coord)> place = [&](std::size_t j, Coord used) {
      if (j == n) {
        const Coord b1 = beta_sum - used;
        if (b1 < c[0]) return;
        if (n > 1 && b1 < beta[1]) return;
        beta[0] = b1;
        out.terms[Shape::unchecked(beta)] += 1;
        return;
      }
      const Coord lo = c[j];
      const Coord hi = c[j - 1];  // beta_j in [c_j, c_{j-1}] for j >= 2
      for (Coord b = lo; b <= hi; ++b) {
        beta[j] = b;
        place(j + 1, used + b);
      }
    };
    place(1, 0);
  });
  return out;
}

}  // namespace sgt
