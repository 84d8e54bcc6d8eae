#include "sgt/randmat.hpp"

#include <algorithm>
#include <cmath>

#include "sgt/errors.hpp"

namespace sgt {

double BlockMatrix::hermiticity_residual() const {
  double worst = 0;
  for (int i = 0; i < dim(); ++i)
    for (int j = 0; j < dim(); ++j)
      worst = std::max(worst, std::abs(at(i, j) - std::conj(at(j, i))));
  return worst;
}

double BlockMatrix::frobenius_norm() const {
  double acc = 0;
  for (int i = 0; i < dim(); ++i)
    for (int j = 0; j < dim(); ++j) acc += std::norm(at(i, j));
  return std::sqrt(acc);
}

std::vector<Quaternion> sample_gaussian_column(int r, Rng& rng) {
  const double sigma = 1.0 / std::sqrt(2.0);
  std::vector<Quaternion> col(static_cast<std::size_t>(r));
  for (auto& z : col) {
    z.a = {rng.normal(0, sigma), rng.normal(0, sigma)};
    z.b = {rng.normal(0, sigma), rng.normal(0, sigma)};
  }
  return col;
}

void add_signed_rank_step(BlockMatrix& m, const std::vector<Quaternion>& y) {
  const int r = m.rank();
  if (y.size() != static_cast<std::size_t>(r))
    throw DomainError("rank step: column has wrong length");
  // Y is 2r x 2; block l holds [[a, b], [-conj(b), conj(a)]].
  auto yv = [&](int i, int s) -> std::complex<double> {
    const Quaternion& z = y[static_cast<std::size_t>(i / 2)];
    if (i % 2 == 0) return s == 0 ? z.a : z.b;
    return s == 0 ? -std::conj(z.b) : std::conj(z.a);
  };
  for (int i = 0; i < 2 * r; ++i)
    for (int j = 0; j < 2 * r; ++j)
      m.at(i, j) += yv(i, 0) * std::conj(yv(j, 0)) - yv(i, 1) * std::conj(yv(j, 1));
}

std::vector<double> hermitian_eigenvalues(const BlockMatrix& m) {
  const int n = m.dim();
  const double scale = std::max(1.0, m.frobenius_norm());
  if (m.hermiticity_residual() > 1e-9 * scale)
    throw DomainError("eigenvalues: matrix is not Hermitian");

  BlockMatrix a = m;
  auto off_norm = [&]() {
    double acc = 0;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (i != j) acc += std::norm(a.at(i, j));
    return std::sqrt(acc);
  };

  for (int sweep = 0; sweep < 100 && off_norm() > 1e-13 * scale; ++sweep) {
    for (int p = 0; p < n; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const std::complex<double> w = a.at(p, q);
        const double rho = std::abs(w);
        if (rho < 1e-300) continue;
        const std::complex<double> phase = w / rho;
        const double app = a.at(p, p).real();
        const double aqq = a.at(q, q).real();
        const double tau = (aqq - app) / (2.0 * rho);
        const double t = tau >= 0 ? 1.0 / (tau + std::sqrt(1.0 + tau * tau))
                                  : 1.0 / (tau - std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        // B = A U with U the identity outside the (p,q) plane,
        // U[p][p]=c, U[p][q]=s, U[q][p]=-s exp(-i theta), U[q][q]=c exp(-i theta)
        for (int i = 0; i < n; ++i) {
          const std::complex<double> aip = a.at(i, p);
          const std::complex<double> aiq = a.at(i, q);
          a.at(i, p) = c * aip - s * std::conj(phase) * aiq;
          a.at(i, q) = s * aip + c * std::conj(phase) * aiq;
        }
        // A' = U* B
        for (int j = 0; j < n; ++j) {
          const std::complex<double> bpj = a.at(p, j);
          const std::complex<double> bqj = a.at(q, j);
          a.at(p, j) = c * bpj - s * phase * bqj;
          a.at(q, j) = s * bpj + c * phase * bqj;
        }
        a.at(p, q) = 0;
        a.at(q, p) = 0;
      }
    }
  }

  std::vector<double> eig(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) eig[static_cast<std::size_t>(i)] = a.at(i, i).real();
  std::sort(eig.begin(), eig.end(), std::greater<double>());
  return eig;
}

std::vector<double> top_eigenvalues(const BlockMatrix& m) {
  std::vector<double> all = hermitian_eigenvalues(m);
  all.resize(static_cast<std::size_t>(m.rank()));
  return all;
}

double chamber_weight(std::span<const double> x) {
  double acc = 1;
  for (std::size_t i = 0; i < x.size(); ++i) {
    for (std::size_t j = i + 1; j < x.size(); ++j) acc *= x[i] * x[i] - x[j] * x[j];
    acc *= x[i];
  }
  return acc;
}

double interlace_box_integral(std::span<const double> x, std::span<const double> y) {
  const std::size_t r = x.size();
  if (y.size() != r) throw DomainError("box integral: dimension mismatch");
  double expo = 0;
  double prod = 1;
  for (std::size_t i = 0; i < r; ++i) {
    expo += x[i] + y[i];
    const double lo = (i + 1 < r) ? std::max(x[i + 1], y[i + 1]) : 0.0;
    const double hi = std::min(x[i], y[i]);
    if (hi <= lo) return 0.0;
    prod *= (std::exp(2.0 * hi) - std::exp(2.0 * lo)) / 2.0;
  }
  return std::exp(-expo) * prod;
}

double eigen_step_density(std::span<const double> x, std::span<const double> y) {
  const std::size_t r = x.size();
  if (y.size() != r) throw DomainError("density: dimension mismatch");
  for (std::size_t i = 0; i < r; ++i) {
    const double next = (i + 1 < r) ? x[i + 1] : 0.0;
    if (!(x[i] > next)) throw DomainError("density: x must lie in the open chamber");
  }
  return chamber_weight(y) / chamber_weight(x) * interlace_box_integral(x, y);
}

std::vector<std::vector<double>> simulate_top_eigenvalues(int r, int steps, Rng& rng) {
  BlockMatrix m(r);
  std::vector<std::vector<double>> out;
  out.reserve(static_cast<std::size_t>(steps));
  for (int n = 0; n < steps; ++n) {
    add_signed_rank_step(m, sample_gaussian_column(r, rng));
    out.push_back(top_eigenvalues(m));
  }
  return out;
}

}  // namespace sgt
