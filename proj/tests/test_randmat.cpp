#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "oracles.hpp"
#include "sgt/randmat.hpp"
#include "sgt/stats.hpp"

using namespace sgt;

TEST_CASE("gaussian columns") {
  SUBCASE("deterministic under a fixed stream") {
    Rng a(5), b(5);
    auto ya = sample_gaussian_column(3, a);
    auto yb = sample_gaussian_column(3, b);
    for (int i = 0; i < 3; ++i) {
      CHECK(ya[static_cast<std::size_t>(i)].a == yb[static_cast<std::size_t>(i)].a);
      CHECK(ya[static_cast<std::size_t>(i)].b == yb[static_cast<std::size_t>(i)].b);
    }
  }
  SUBCASE("squared norm has mean 2 per quaternion") {
    Rng rng(99);
    double acc = 0;
    const int n = 100000;
    for (int i = 0; i < n; ++i) {
      auto y = sample_gaussian_column(1, rng);
      acc += std::norm(y[0].a) + std::norm(y[0].b);  // = tr(YY*)/2 per block pair
    }
    CHECK(std::abs(acc / n - 2.0) < 0.03);
  }
  SUBCASE("components are uncorrelated") {
    Rng rng(17);
    const int n = 100000;
    double sums[4] = {0, 0, 0, 0};
    double cross[6] = {0, 0, 0, 0, 0, 0};
    for (int i = 0; i < n; ++i) {
      auto y = sample_gaussian_column(1, rng);
      const double c[4] = {y[0].a.real(), y[0].a.imag(), y[0].b.real(), y[0].b.imag()};
      int t = 0;
      for (int p = 0; p < 4; ++p) {
        sums[p] += c[p];
        for (int q = p + 1; q < 4; ++q) cross[t++] += c[p] * c[q];
      }
    }
    int t = 0;
    for (int p = 0; p < 4; ++p)
      for (int q = p + 1; q < 4; ++q, ++t)
        CHECK(std::abs(cross[t] / n - (sums[p] / n) * (sums[q] / n)) < 0.02);
  }
}

TEST_CASE("signed rank-one steps") {
  SUBCASE("zero column leaves the matrix unchanged") {
    BlockMatrix m(2);
    add_signed_rank_step(m, std::vector<Quaternion>(2));
    CHECK(m.frobenius_norm() == 0.0);
  }
  SUBCASE("depth-one step has eigenvalues +-(|a|^2+|b|^2)") {
    Rng rng(3);
    for (int t = 0; t < 20; ++t) {
      auto y = sample_gaussian_column(1, rng);
      BlockMatrix m(1);
      add_signed_rank_step(m, y);
      const double lam = std::norm(y[0].a) + std::norm(y[0].b);
      auto eig = hermitian_eigenvalues(m);
      CHECK(eig[0] == doctest::Approx(lam).epsilon(1e-12));
      CHECK(eig[1] == doctest::Approx(-lam).epsilon(1e-12));
    }
  }
  SUBCASE("hermiticity is preserved over long runs") {
    Rng rng(8);
    BlockMatrix m(4);
    for (int step = 0; step < 1000; ++step) add_signed_rank_step(m, sample_gaussian_column(4, rng));
    CHECK(m.hermiticity_residual() < 1e-12 * m.frobenius_norm());
  }
}

TEST_CASE("jacobi eigensolver") {
  SUBCASE("zero matrix") {
    BlockMatrix m(2);
    for (double v : hermitian_eigenvalues(m)) CHECK(v == 0.0);
  }
  SUBCASE("spectrum is symmetric about zero") {
    Rng rng(21);
    BlockMatrix m(3);
    for (int step = 0; step < 5; ++step) add_signed_rank_step(m, sample_gaussian_column(3, rng));
    auto eig = hermitian_eigenvalues(m);
    for (int i = 0; i < 3; ++i)
      CHECK(std::abs(eig[static_cast<std::size_t>(i)] + eig[static_cast<std::size_t>(5 - i)]) <
            1e-8);
  }
  SUBCASE("agrees with characteristic-polynomial roots for r=1,2") {
    Rng rng(34);
    for (int r = 1; r <= 2; ++r) {
      for (int t = 0; t < 10; ++t) {
        BlockMatrix m(r);
        for (int step = 0; step < 3; ++step) add_signed_rank_step(m, sample_gaussian_column(r, rng));
        auto eig = hermitian_eigenvalues(m);
        auto roots = oracles::poly_roots(oracles::char_poly(m));
        std::vector<double> expected;
        for (const auto& z : roots) expected.push_back(z.real());
        std::sort(expected.begin(), expected.end(), std::greater<double>());
        REQUIRE(expected.size() == eig.size());
        for (std::size_t i = 0; i < eig.size(); ++i)
          CHECK(std::abs(eig[i] - expected[i]) < 1e-9 * std::max(1.0, m.frobenius_norm()));
      }
    }
  }
  SUBCASE("rejects non-Hermitian input") {
    BlockMatrix m(1);
    m.at(0, 1) = {1.0, 0.0};
    m.at(1, 0) = {5.0, 0.0};
    CHECK_THROWS_AS(hermitian_eigenvalues(m), DomainError);
  }
}

TEST_CASE("transition density") {
  SUBCASE("rank one closed form") {
    auto p1 = [](double x, double y) {
      return (y / x) * std::exp(-(x + y)) * (std::exp(2 * std::min(x, y)) - 1) / 2;
    };
    for (double x : {0.5, 1.0, 2.0})
      for (double y : {0.3, 1.0, 1.7}) {
        const double xs[1] = {x}, ys[1] = {y};
        CHECK(eigen_step_density({xs, 1}, {ys, 1}) == doctest::Approx(p1(x, y)).epsilon(1e-12));
      }
  }
  SUBCASE("empty interlacing box gives zero") {
    const std::vector<double> x{3.0, 2.0};
    const std::vector<double> y{1.5, 0.5};  // y_1 < x_2
    CHECK(eigen_step_density(x, y) == 0.0);
  }
  SUBCASE("chamber boundary is rejected") {
    const std::vector<double> x{2.0, 2.0};
    const std::vector<double> y{2.5, 1.0};
    CHECK_THROWS_AS(eigen_step_density(x, y), DomainError);
  }
  SUBCASE("integrates to one at rank one") {
    auto f = [](double y) {
      const double xs[1] = {1.0}, ys[1] = {y};
      return y <= 0 ? 0.0 : eigen_step_density({xs, 1}, {ys, 1});
    };
    auto simpson = [&](double a, double b, int n) {
      const double h = (b - a) / (2 * n);
      double acc = f(a) + f(b);
      for (int i = 1; i < 2 * n; ++i) acc += f(a + h * i) * (i % 2 == 1 ? 4.0 : 2.0);
      return acc * h / 3;
    };
    CHECK(std::abs(simpson(0, 1, 4000) + simpson(1, 40, 4000) - 1.0) < 1e-6);
  }
  SUBCASE("closed-form box integral matches Monte Carlo at rank two") {
    const std::vector<double> x{2.0, 0.7};
    const std::vector<double> y{2.3, 1.1};
    const double closed = interlace_box_integral(x, y);
    Rng rng(777);
    const double l1 = std::max(x[1], y[1]), u1 = std::min(x[0], y[0]);
    const double u2 = std::min(x[1], y[1]);
    double acc = 0;
    const long long n = 1000000;
    for (long long i = 0; i < n; ++i) {
      const double z1 = l1 + (u1 - l1) * rng.uniform();
      const double z2 = u2 * rng.uniform();
      acc += std::exp(-(x[0] + x[1] + y[0] + y[1]) + 2 * (z1 + z2));
    }
    const double mc = (u1 - l1) * u2 * acc / static_cast<double>(n);
    CHECK(std::abs(mc - closed) / closed < 1e-3);
  }
}

TEST_CASE("eigenvalue process") {
  SUBCASE("no steps, no motion") {
    Rng rng(1);
    CHECK(simulate_top_eigenvalues(2, 0, rng).empty());
  }
  SUBCASE("one step is Gamma(2,1) at rank one") {
    std::vector<double> samples;
    const long long n = 10000;
    for (long long i = 0; i < n; ++i) {
      Rng rng = Rng::stream(31337, static_cast<std::uint64_t>(i));
      samples.push_back(simulate_top_eigenvalues(1, 1, rng)[0][0]);
    }
    const double ks = ks_vs_cdf(
        samples, [](double y) { return y <= 0 ? 0.0 : 1.0 - std::exp(-y) * (1.0 + y); });
    CHECK(ks < 0.015);
  }
  SUBCASE("conditional second step follows the transition density") {
    // condition Lambda(1) near 1.0 and compare Lambda(2) with p_1(1, .)
    std::vector<double> conditioned;
    for (long long i = 0; conditioned.size() < 6000 && i < 400000; ++i) {
      Rng rng = Rng::stream(90210, static_cast<std::uint64_t>(i));
      auto steps = simulate_top_eigenvalues(1, 2, rng);
      if (std::abs(steps[0][0] - 1.0) < 0.1) conditioned.push_back(steps[1][0]);
    }
    REQUIRE(conditioned.size() >= 5000);
    // numeric CDF of p_1(1, .) by cumulative Simpson on a fine grid
    const int grid = 4000;
    const double hi = 30.0;
    std::vector<double> cdf(static_cast<std::size_t>(grid) + 1, 0.0);
    auto f = [](double y) {
      const double xs[1] = {1.0}, ys[1] = {y};
      return y <= 0 ? 0.0 : eigen_step_density({xs, 1}, {ys, 1});
    };
    for (int i = 1; i <= grid; ++i) {
      const double a = hi * (i - 1) / grid, b = hi * i / grid;
      cdf[static_cast<std::size_t>(i)] =
          cdf[static_cast<std::size_t>(i) - 1] + (f(a) + 4 * f((a + b) / 2) + f(b)) * (b - a) / 6;
    }
    const double ks = ks_vs_cdf(conditioned, [&](double y) {
      if (y <= 0) return 0.0;
      if (y >= hi) return 1.0;
      const double pos = y / hi * grid;
      const int lo = static_cast<int>(pos);
      const double frac = pos - lo;
      return cdf[static_cast<std::size_t>(lo)] * (1 - frac) +
             cdf[static_cast<std::size_t>(lo) + 1] * frac;
    });
    CHECK(ks < 0.05);
  }
}
