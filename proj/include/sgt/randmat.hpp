#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include "sgt/rng.hpp"

namespace sgt {

// 2x2 complex block [[a, b], [-conj(b), conj(a)]].
struct Quaternion {
  std::complex<double> a{0.0, 0.0};
  std::complex<double> b{0.0, 0.0};
};

// Dense 2r x 2r complex matrix, row-major. The process keeps it Hermitian
// with a spectrum symmetric about zero.
class BlockMatrix {
 public:
  explicit BlockMatrix(int r)
      : r_(r), data_(static_cast<std::size_t>(4 * r * r), {0.0, 0.0}) {}

  int rank() const { return r_; }
  int dim() const { return 2 * r_; }
  std::complex<double>& at(int i, int j) {
    return data_[static_cast<std::size_t>(i) * static_cast<std::size_t>(dim()) +
                 static_cast<std::size_t>(j)];
  }
  const std::complex<double>& at(int i, int j) const {
    return data_[static_cast<std::size_t>(i) * static_cast<std::size_t>(dim()) +
                 static_cast<std::size_t>(j)];
  }

  double hermiticity_residual() const;
  double frobenius_norm() const;

 private:
  int r_;
  std::vector<std::complex<double>> data_;
};

// Column of r independent quaternions, each real component N(0, 1/2): the
// standard Gaussian for the inner product tr(M N*).
std::vector<Quaternion> sample_gaussian_column(int r, Rng& rng);

// M += Y diag(1,-1) Y* with Y the 2r x 2 complex matrix stacking the column.
void add_signed_rank_step(BlockMatrix& m, const std::vector<Quaternion>& y);

// Full spectrum, descending, by cyclic Jacobi rotations. Throws DomainError
// if the input is not Hermitian to tolerance.
std::vector<double> hermitian_eigenvalues(const BlockMatrix& m);

// The r largest eigenvalues, descending.
std::vector<double> top_eigenvalues(const BlockMatrix& m);

// d_r(x) = prod_{i<j} (x_i^2 - x_j^2) prod_i x_i.
double chamber_weight(std::span<const double> x);

// Closed form of the box integral over interlacing z:
// exp(-sum(x_i+y_i)) prod_i (exp(2u_i) - exp(2l_i))/2 with
// l_i = max(x_{i+1}, y_{i+1}), u_i = min(x_i, y_i); zero on an empty box.
double interlace_box_integral(std::span<const double> x, std::span<const double> y);

// Transition density p_r(x, y) of the top-eigenvalue process. x must lie in
// the open chamber x_1 > ... > x_r > 0.
double eigen_step_density(std::span<const double> x, std::span<const double> y);

// One trajectory of the top-r eigenvalue process: out[n] is the eigenvalue
// vector after n+1 steps.
std::vector<std::vector<double>> simulate_top_eigenvalues(int r, int steps, Rng& rng);

}  // namespace sgt
