#include "sgt/kernels.hpp"

namespace sgt {

std::int64_t poly_geometric_cutoff(double C, double rho, int degree, double eps,
                                   double* tail_bound) {
  if (!(rho > 0.0) || !(rho < 1.0))
    throw DomainError("tail cutoff: decay rate must lie in (0,1)");
  if (!(eps > 0.0)) throw DomainError("tail cutoff: eps must be positive");
  for (std::int64_t M = 1; M <= 2'000'000; ++M) {
    const double kappa =
        rho * std::pow((static_cast<double>(M) + 2.0) / (static_cast<double>(M) + 1.0), degree);
    if (kappa >= 1.0) continue;
    const double term =
        C * std::pow(rho, static_cast<double>(M) + 1.0) * std::pow(static_cast<double>(M) + 2.0, degree);
    const double bound = term / (1.0 - kappa);
    if (bound < eps) {
      if (tail_bound) *tail_bound = bound;
      return M;
    }
  }
  throw DomainError("tail cutoff: eps unattainable");
}

double tail_decay_rate(const ModelParams<double>& p) {
  double big = 0.0;
  for (double qi : p.q) big = std::max({big, qi, 1.0 / qi});
  return p.alpha * big;
}

std::int64_t geometric_sum_cutoff(const ModelParams<double>& params, double eps,
                                  double* tail_bound) {
  if (params.k % 2 != 0) throw DomainError("geometric sum cutoff requires even k");
  const int r = params.rank();
  // nu(m) <= a(q) rho^m dim(m,0,..,0) and the dimension is a product of 2r-1
  // linear factors each at most (m+1)*2r.
  const double C =
      params.normalization_even() * std::pow(2.0 * r, 2 * r - 1);
  return poly_geometric_cutoff(C, tail_decay_rate(params), 2 * r - 1, eps, tail_bound);
}

RowTailModel row_tail_model(const ModelParams<double>& params, double s_lambda,
                            const Shape& lambda) {
  // Mass of the S_k row at exponent level m = |lambda|+|beta|-2|c| is at most
  //   cnum(lambda) * (1/s_lambda) * Q^|lambda| * rho^m * (s+1)^(N+r-1)
  // with s = |beta| <= m + |lambda|: each character is bounded by its pattern
  // count (s+1)^N times Q^|beta|, there are at most (s+1)^(r-1) shapes per sum
  // level and cnum intermediate shapes below lambda.
  const int r = params.rank();
  int ncoords = 0;
  for (int i = 1; i < params.k; ++i) ncoords += row_length(i);
  const int degree = ncoords + r - 1;
  double cnum = 1.0;
  for (std::size_t i = 0; i < lambda.size(); ++i) {
    const Coord next = (i + 1 < lambda.size()) ? lambda[i + 1] : 0;
    cnum *= static_cast<double>(lambda[i] - next + 1);
  }
  double big = 0.0;
  for (double qi : params.q) big = std::max({big, qi, 1.0 / qi});
  const double lam_sum = static_cast<double>(lambda.sum());
  const double C = 1.01 * cnum * (1.0 / s_lambda) * std::pow(big, lam_sum) *
                   std::pow(lam_sum + 1.0, degree);
  return RowTailModel{C, params.alpha * big, degree};
}

}  // namespace sgt
