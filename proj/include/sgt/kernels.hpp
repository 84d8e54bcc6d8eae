#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "sgt/characters.hpp"
#include "sgt/mass_function.hpp"
#include "sgt/params.hpp"

namespace sgt {

// ---------------------------------------------------------------------------
// Censored geometric step laws. These are the one-coordinate building blocks
// of the coupled kernel: a geometric jump truncated by a floor (left moves)
// or a cap (right moves).
// ---------------------------------------------------------------------------

// P(max(a - xi, b) = j), xi geometric(p): (1-p) p^(a-j) on (b, a], p^(a-b) at b.
template <class T>
T censored_geometric_down_pmf(const T& p, Coord a, Coord b, Coord j) {
  if (b > a) throw DomainError("censored geometric: floor above start");
  if (j < b || j > a) return T(0);
  if (j == b) return pow_int(p, a - b);
  return (T(1) - p) * pow_int(p, a - j);
}

// P(min(a + xi, b) = j); absent cap means a plain geometric started at a.
template <class T>
T censored_geometric_up_pmf(const T& p, Coord a, std::optional<Coord> cap, Coord j) {
  if (cap && *cap < a) throw DomainError("censored geometric: cap below start");
  if (j < a || (cap && j > *cap)) return T(0);
  if (cap && j == *cap) return pow_int(p, *cap - a);
  return (T(1) - p) * pow_int(p, j - a);
}

template <class T>
MassFunction<Coord, T> censored_geometric_down(const T& p, Coord a, Coord b) {
  if (b > a) throw DomainError("censored geometric: floor above start");
  MassFunction<Coord, T> out;
  for (Coord j = b; j <= a; ++j) out.add(j, censored_geometric_down_pmf(p, a, b, j));
  return out;
}

// Finite cap only; the uncapped law has infinite support.
template <class T>
MassFunction<Coord, T> censored_geometric_up(const T& p, Coord a, Coord b) {
  if (b < a) throw DomainError("censored geometric: cap below start");
  MassFunction<Coord, T> out;
  for (Coord j = a; j <= b; ++j)
    out.add(j, censored_geometric_up_pmf(p, a, std::optional<Coord>(b), j));
  return out;
}

// ---------------------------------------------------------------------------
// Certified geometric-polynomial tail cutoffs.
// ---------------------------------------------------------------------------

// Smallest M such that sum_{m>M} C rho^m (m+1)^degree < eps, certified: past M
// the term ratio is at most kappa = rho ((M+2)/(M+1))^degree, so the tail is
// dominated by term(M+1)/(1-kappa).
std::int64_t poly_geometric_cutoff(double C, double rho, int degree, double eps,
                                   double* tail_bound);

// rho = alpha * max_i max(q_i, 1/q_i), the decay rate of every kernel tail.
double tail_decay_rate(const ModelParams<double>& p);

// ---------------------------------------------------------------------------
// nu: the law of the sum of the 2r independent geometric jump counts,
// nu(m) = alpha^m a(q) s^{2r}_(m,0,..,0)(q). Defined for even k.
// ---------------------------------------------------------------------------

template <class T>
T geometric_sum_law(const ModelParams<T>& params, SchurCache<T>& cache, std::int64_t m) {
  if (params.k % 2 != 0) throw DomainError("geometric sum law requires even k");
  if (m < 0) throw DomainError("geometric sum law: m must be >= 0");
  std::vector<Coord> gm(static_cast<std::size_t>(params.rank()), 0);
  gm[0] = m;
  return pow_int(params.alpha, m) * params.normalization_even() *
         cache.eval(params.k, Shape(std::move(gm)));
}

// Certified truncation level for the nu tail: nu(m) <= a(q) rho^m (m+2r)^(2r-1).
std::int64_t geometric_sum_cutoff(const ModelParams<double>& params, double eps,
                                  double* tail_bound);

// ---------------------------------------------------------------------------
// mu_m: the Pieri kernel beta ~ mult(beta) s_beta / (s_lambda s_gamma_m).
// Finite support, exact probability row. Even k only.
// ---------------------------------------------------------------------------

template <class T>
MassFunction<Shape, T> pieri_kernel_row(const ModelParams<T>& params, SchurCache<T>& cache,
                                        const Shape& lambda, std::int64_t m) {
  if (params.k % 2 != 0) throw DomainError("pieri kernel requires even k");
  const int r = params.rank();
  std::vector<Coord> gm(static_cast<std::size_t>(r), 0);
  gm[0] = m;
  const T denom = cache.eval(params.k, lambda) * cache.eval(params.k, Shape(std::move(gm)));
  MassFunction<Shape, T> out;
  for (const auto& [beta, mult] : pieri_expand(r, lambda, m).terms)
    out.add(beta, T(mult) * cache.eval(params.k, beta) / denom);
  return out;
}

// ---------------------------------------------------------------------------
// P_k: one-step kernel of row k observed at integer times. The sum over the
// intermediate shape c factorizes across coordinates.
// ---------------------------------------------------------------------------

template <class T>
T row_kernel(const ModelParams<T>& params, SchurCache<T>& cache, const Shape& lambda,
             const Shape& beta) {
  const std::size_t r = static_cast<std::size_t>(params.rank());
  if (lambda.size() != r || beta.size() != r)
    throw ShapeError("row kernel: shapes must have (k+1)/2 coordinates");
  const bool even = params.k % 2 == 0;
  T cfactor(1);
  for (std::size_t i = 0; i < r; ++i) {
    const Coord lo = (i + 1 < r) ? std::max(lambda[i + 1], beta[i + 1]) : 0;
    const Coord hi = std::min(lambda[i], beta[i]);
    if (lo > hi) return T(0);
    T coord_sum(0);
    for (Coord c = lo; c <= hi; ++c) {
      T term = pow_int(params.alpha, lambda[i] + beta[i] - 2 * c);
      if (!even && i + 1 == r && c > 0) term *= T(1) - params.alpha / params.q.back();
      coord_sum += term;
    }
    cfactor *= coord_sum;
  }
  return params.normalization() * cache.eval(params.k, beta) / cache.eval(params.k, lambda) *
         cfactor;
}

// ---------------------------------------------------------------------------
// S_k: one-step kernel of the pair (row k at half time, row k at full time).
// Independent of the source pair's first component.
// ---------------------------------------------------------------------------

template <class T>
T pair_kernel(const ModelParams<T>& params, SchurCache<T>& cache, const Shape& lambda,
              const Shape& c, const Shape& beta) {
  const std::size_t r = static_cast<std::size_t>(params.rank());
  if (lambda.size() != r || c.size() != r || beta.size() != r)
    throw ShapeError("pair kernel: shapes must have (k+1)/2 coordinates");
  if (!interlaces(c, lambda) || !interlaces(c, beta)) return T(0);
  std::int64_t expo = 0;
  for (std::size_t i = 0; i < r; ++i) expo += lambda[i] + beta[i] - 2 * c[i];
  T value = params.normalization() * cache.eval(params.k, beta) /
            cache.eval(params.k, lambda) * pow_int(params.alpha, expo);
  if (params.k % 2 != 0 && c[r - 1] > 0) value *= T(1) - params.alpha / params.q.back();
  return value;
}

// ---------------------------------------------------------------------------
// Truncated row materialization. Rows have infinite support in the upward
// direction; enumeration is cut at exponent level M with a certified bound on
// the discarded mass (see row_tail_model in kernels.cpp for the inequality).
// ---------------------------------------------------------------------------

struct RowTailModel {
  double C = 0;
  double rho = 0;
  int degree = 0;
};

RowTailModel row_tail_model(const ModelParams<double>& params, double s_lambda,
                            const Shape& lambda);

// Enumerates every (c, beta) with c ⪯ lambda, c ⪯ beta and
// |lambda| + |beta| - 2|c| <= M. fn(c, beta, exponent).
template <class Fn>
void for_each_pair_term(const Shape& lambda, std::int64_t M, Fn&& fn) {
  const std::size_t r = lambda.size();
  const Coord lam_sum = lambda.sum();
  for_each_interlacing_below(lambda, r, [&](const std::vector<Coord>& c) {
    Coord c_sum = 0;
    for (Coord v : c) c_sum += v;
    const Coord max_beta_sum = M + 2 * c_sum - lam_sum;
    if (max_beta_sum < c_sum) return;
    std::vector<Coord> beta(r, 0);
    std::function<void(std::size_t, Coord)> place = [&](std::size_t j, Coord used) {
      if (j == r) {
        const Coord lo = std::max(c[0], r > 1 ? beta[1] : 0);
        for (Coord b1 = lo; b1 <= max_beta_sum - used; ++b1) {
          beta[0] = b1;
          fn(c, beta, lam_sum + used + b1 - 2 * c_sum);
        }
        return;
      }
      for (Coord b = c[j]; b <= c[j - 1]; ++b) {
        beta[j] = b;
        place(j + 1, used + b);
      }
    };
    place(r > 1 ? 1 : r, 0);
  });
}

template <class T>
MassFunction<std::pair<Shape, Shape>, T> pair_kernel_mass(const ModelParams<T>& params,
                                                          SchurCache<T>& cache,
                                                          const Shape& lambda, double eps) {
  const auto pd = to_double_params(params);
  const RowTailModel model =
      row_tail_model(pd, to_double(cache.eval(params.k, lambda)), lambda);
  double tail = 0;
  const std::int64_t M = poly_geometric_cutoff(model.C, model.rho, model.degree, eps, &tail);
  const bool even = params.k % 2 == 0;
  const T norm = params.normalization();
  const T s_lambda = cache.eval(params.k, lambda);
  MassFunction<std::pair<Shape, Shape>, T> out;
  out.tail_bound = tail;
  for_each_pair_term(lambda, M,
                     [&](const std::vector<Coord>& c, const std::vector<Coord>& beta,
                         std::int64_t expo) {
                       Shape cs = Shape::unchecked(c);
                       Shape bs = Shape::unchecked(beta);
                       T value = norm * cache.eval(params.k, bs) / s_lambda *
                                 pow_int(params.alpha, expo);
                       if (!even && c.back() > 0)
                         value *= T(1) - params.alpha / params.q.back();
                       out.add({std::move(cs), std::move(bs)}, value);
                     });
  return out;
}

template <class T>
MassFunction<Shape, T> row_kernel_mass(const ModelParams<T>& params, SchurCache<T>& cache,
                                       const Shape& lambda, double eps) {
  MassFunction<Shape, T> out;
  auto pairs = pair_kernel_mass(params, cache, lambda, eps);
  out.tail_bound = pairs.tail_bound;
  for (const auto& [cb, mass] : pairs) out.add(cb.second, mass);
  return out;
}

// ---------------------------------------------------------------------------
// m_lambda: the law of row k-1 under the weight measure on patterns with top
// row lambda. Finite support { beta ⪯ lambda }, sums to 1 exactly.
// ---------------------------------------------------------------------------

template <class T>
MassFunction<Shape, T> lower_row_measure(int k, SchurCache<T>& cache, const Shape& lambda) {
  const std::size_t r = static_cast<std::size_t>(row_length(k));
  if (lambda.size() != r) throw ShapeError("lower row measure: wrong shape length");
  const Coord lam_sum = lambda.sum();
  const T s_top = cache.eval(k, lambda);
  const T qr = cache.q()[r - 1];
  MassFunction<Shape, T> out;
  for_each_interlacing_below(
      lambda, static_cast<std::size_t>(row_length(k - 1)), [&](const std::vector<Coord>& b) {
        Shape beta = Shape::unchecked(b);
        const Coord diff = beta.sum() - lam_sum;
        const std::int64_t e = (k % 2 == 0) ? diff : -diff;
        out.add(beta, pow_int(qr, e) * cache.eval(k - 1, beta) / s_top);
      });
  return out;
}

// ---------------------------------------------------------------------------
// Q_k: one-step kernel of (row k-1, row-k pair). State fields: lower = row
// k-1 at integer time, half = row k at the preceding half time, full = row k
// at integer time.
// ---------------------------------------------------------------------------

struct CoupledState {
  Shape lower;
  Shape half;
  Shape full;
  auto operator<=>(const CoupledState&) const = default;
};

namespace detail {

// Sum over the intermediate row k-1 position v of
//   S_{k-1}(u,(v,x)) * prod_i Pbar_down(y_i ^ v_{i-1} -> z'_i | floor u_i)
//                    * prod_i Pbar_up(z'_{i+1} v x_{i+1} -> y'_{i+1} | cap v_i),
// with v_0 = +infinity and, for odd k, u_r = x_r = 0. fn(v, term) lets callers
// either total the sum (pointwise kernel) or scan supports (row builder).
template <class T>
T coupled_kernel_sum(const ModelParams<T>& params, SchurCache<T>& cache,
                     const CoupledState& from, const CoupledState& to) {
  const int k = params.k;
  const std::size_t r = static_cast<std::size_t>(params.rank());
  const bool even = k % 2 == 0;
  const std::size_t rl = static_cast<std::size_t>(row_length(k - 1));

  const T pl = params.left_jump_param();
  const T pr = params.right_jump_param();
  const auto& u = from.lower;
  const auto& y = from.full;
  const auto& x = to.lower;
  const auto& zp = to.half;
  const auto& yp = to.full;

  if (k == 1) {
    return censored_geometric_down_pmf(pl, y[0], Coord{0}, zp[0]) *
           censored_geometric_up_pmf(pr, zp[0], std::nullopt, yp[0]);
  }

  const ModelParams<T> sub = params.restrict_to_row(k - 1);

  // v_i in [y'_{i+1}, min(x_i, z'_i)] for i = 1..r-1; for even k the final
  // coordinate is constrained only through S_{k-1}: v_r in [0, min(u_r, x_r)].
  std::vector<Coord> lo(rl), hi(rl);
  for (std::size_t i = 0; i < rl; ++i) {
    if (i + 1 < r) {
      lo[i] = yp[i + 1];
      hi[i] = std::min(x[i], zp[i]);
    } else {  // even k only: the last coordinate is constrained through S_{k-1} alone
      lo[i] = 0;
      hi[i] = std::min(u[i], x[i]);
    }
    if (lo[i] > hi[i]) return T(0);
  }

  T total(0);
  std::vector<Coord> v(rl, 0);
  std::function<void(std::size_t)> scan = [&](std::size_t i) {
    if (i == rl) {
      T sval = pair_kernel(sub, cache, u, Shape::unchecked(v), x);
      if (sval == T(0)) return;
      T left(1);
      for (std::size_t j = 0; j < r; ++j) {
        const Coord start = (j == 0) ? y[0] : std::min(y[j], v[j - 1]);
        const Coord floor = (!even && j + 1 == r) ? 0 : u[j];
        left *= censored_geometric_down_pmf(pl, start, floor, zp[j]);
        if (left == T(0)) return;
      }
      T right(1);
      for (std::size_t j = 0; j < r; ++j) {
        const Coord push = (!even && j + 1 == r) ? 0 : x[j];
        const Coord start = std::max(zp[j], push);
        std::optional<Coord> cap;
        if (j > 0) cap = v[j - 1];
        right *= censored_geometric_up_pmf(pr, start, cap, yp[j]);
        if (right == T(0)) return;
      }
      total += sval * left * right;
      return;
    }
    for (Coord c = lo[i]; c <= hi[i]; ++c) {
      if (i > 0 && c > v[i - 1]) break;  // v must stay weakly decreasing
      v[i] = c;
      scan(i + 1);
    }
  };
  scan(0);
  return total;
}

}  // namespace detail

template <class T>
T coupled_kernel(const ModelParams<T>& params, SchurCache<T>& cache, const CoupledState& from,
                 const CoupledState& to) {
  const std::size_t r = static_cast<std::size_t>(params.rank());
  const std::size_t rl = params.k >= 2 ? static_cast<std::size_t>(row_length(params.k - 1)) : 0;
  if (from.lower.size() != rl || from.half.size() != r || from.full.size() != r ||
      to.lower.size() != rl || to.half.size() != r || to.full.size() != r)
    throw ShapeError("coupled kernel: wrong state shape lengths");
  if (!interlaces(from.lower, from.full) || !interlaces(from.half, from.full)) return T(0);
  if (!interlaces(to.lower, to.full) || !interlaces(to.half, to.full)) return T(0);
  return detail::coupled_kernel_sum(params, cache, from, to);
}

// Truncated full row of Q_k from a fixed source. eps is split between the
// S_{k-1} row truncation and the geometric cap on the first coordinate's
// rightward jump (the only unbounded target direction).
template <class T>
MassFunction<CoupledState, T> coupled_kernel_mass(const ModelParams<T>& params,
                                                  SchurCache<T>& cache,
                                                  const CoupledState& from, double eps) {
  const int k = params.k;
  const std::size_t r = static_cast<std::size_t>(params.rank());
  const bool even = k % 2 == 0;
  const T pl = params.left_jump_param();
  const T pr = params.right_jump_param();
  const double prd = to_double(pr);
  const std::int64_t cap_extra = std::max<std::int64_t>(
      0, static_cast<std::int64_t>(std::ceil(std::log(eps / 2.0) / std::log(prd))));
  const double geo_tail = std::pow(prd, static_cast<double>(cap_extra) + 1.0);

  MassFunction<CoupledState, T> out;
  const auto& u = from.lower;
  const auto& y = from.full;

  if (k == 1) {
    out.tail_bound = geo_tail;
    for (Coord z = 0; z <= y[0]; ++z) {
      const T down = censored_geometric_down_pmf(pl, y[0], Coord{0}, z);
      for (Coord w = z; w <= z + cap_extra; ++w) {
        out.add(CoupledState{Shape(), Shape::unchecked({z}), Shape::unchecked({w})},
                down * censored_geometric_up_pmf(pr, z, std::nullopt, w));
      }
    }
    return out;
  }

  if (!interlaces(u, y) || !interlaces(from.half, y))
    throw DomainError("coupled kernel row: source state is not interlaced");

  const ModelParams<T> sub = params.restrict_to_row(k - 1);
  auto svrow = pair_kernel_mass(sub, cache, u, eps / 2.0);
  out.tail_bound = svrow.tail_bound + geo_tail;

  std::vector<Coord> zp(r, 0), yp(r, 0);
  for (const auto& [vx, sval] : svrow) {
    const Shape& v = vx.first;
    const Shape& x = vx.second;
    // z' box and its down-step masses
    std::function<void(std::size_t, T)> place_z = [&](std::size_t j, T left) {
      if (j == r) {
        std::function<void(std::size_t, T)> place_y = [&](std::size_t i, T right) {
          if (i == r) {
            out.add(CoupledState{x, Shape::unchecked(zp), Shape::unchecked(yp)},
                    sval * left * right);
            return;
          }
          const Coord push = (!even && i + 1 == r) ? 0 : x[i];
          const Coord start = std::max(zp[i], push);
          const Coord hi = (i == 0) ? start + cap_extra : v[i - 1];
          std::optional<Coord> cap;
          if (i > 0) cap = v[i - 1];
          for (Coord w = start; w <= hi; ++w) {
            yp[i] = w;
            place_y(i + 1, right * censored_geometric_up_pmf(pr, start, cap, w));
          }
        };
        place_y(0, T(1));
        return;
      }
      const Coord start = (j == 0) ? y[0] : std::min(y[j], v[j - 1]);
      const Coord floor = (!even && j + 1 == r) ? 0 : u[j];
      for (Coord c = floor; c <= start; ++c) {
        zp[j] = c;
        place_z(j + 1, left * censored_geometric_down_pmf(pl, start, floor, c));
      }
    };
    place_z(0, T(1));
  }
  return out;
}

// Both sides of the intertwining identity at one matrix entry:
//   lhs = sum_u m_y(u) Q_k((u,z,y),(x,z',y'))
//   rhs = S_k(y,(z',y')) m_{y'}(x)
// Equal on the chain's domain (z ⪯ y); outside it both sides are zero.
template <class T>
std::pair<T, T> intertwining_sides(const ModelParams<T>& params, SchurCache<T>& cache,
                                   const Shape& z, const Shape& y, const CoupledState& to) {
  if (!interlaces(z, y)) return {T(0), T(0)};
  T lhs(0);
  for (const auto& [u, mu] : lower_row_measure(params.k, cache, y))
    lhs += mu * coupled_kernel(params, cache, CoupledState{u, z, y}, to);
  T rhs(0);
  if (interlaces(to.half, to.full) && interlaces(to.lower, to.full))
    rhs = pair_kernel(params, cache, y, to.half, to.full) *
          lower_row_measure(params.k, cache, to.full).at(to.lower);
  return {lhs, rhs};
}

}  // namespace sgt
