#include <doctest.h>

#include <algorithm>

#include "oracles.hpp"
#include "sgt/characters.hpp"
#include "sgt/rng.hpp"

using namespace sgt;

namespace {
Shape sh(std::vector<Coord> c) { return Shape(std::move(c)); }
}  // namespace

TEST_CASE("schur evaluation at hand-checked points") {
  CHECK(schur_eval<Rational>(2, sh({1}), {Rational(3, 2)}) == Rational(13, 6));  // q + 1/q
  CHECK(schur_eval<Rational>(4, sh({1, 0}), {Rational(1), Rational(1)}) == Rational(4));
  CHECK(schur_eval<double>(1, sh({3}), {2.0}) == doctest::Approx(8.0));
  CHECK(schur_eval<Rational>(2, sh({0}), {Rational(5, 7)}) == Rational(1));
}

TEST_CASE("schur shape validation") {
  CHECK_THROWS_AS(schur_eval<double>(3, sh({1}), {1.0, 1.0}), ShapeError);
  CHECK_THROWS_AS(SchurCache<double>({-1.0}), DomainError);
}

TEST_CASE("memoized recursion equals the defining pattern sum") {
  const std::vector<Rational> q{Rational(3, 2), Rational(2, 3), Rational(5, 7)};
  for (int k = 1; k <= 5; ++k) {
    const std::size_t r = static_cast<std::size_t>(row_length(k));
    std::vector<Rational> qk(q.begin(), q.begin() + r);
    SchurCache<Rational> cache(qk);
    for_each_shape(r, 3, [&](const std::vector<Coord>& c) {
      const Shape lambda = Shape::unchecked(c);
      CHECK(cache.eval(k, lambda) == oracles::schur_by_enumeration(k, lambda, qk));
    });
  }
}

TEST_CASE("laurent polynomial carrier") {
  SUBCASE("k=2, lambda=(1) is q + 1/q") {
    const LaurentPoly poly = schur_poly(2, sh({1}));
    REQUIRE(poly.terms().size() == 2);
    CHECK(poly.terms().at({-1}) == 1);
    CHECK(poly.terms().at({1}) == 1);
  }
  SUBCASE("empty shape is the constant 1") {
    const LaurentPoly poly = schur_poly(2, sh({0}));
    REQUIRE(poly.terms().size() == 1);
    CHECK(poly.terms().at({0}) == 1);
  }
  SUBCASE("evaluation agrees with schur_eval exactly") {
    const std::vector<Rational> q{Rational(3, 2), Rational(2, 3)};
    for (int k = 3; k <= 4; ++k) {
      for_each_shape(2, 2, [&](const std::vector<Coord>& c) {
        const Shape lambda = Shape::unchecked(c);
        CHECK(schur_poly(k, lambda).eval(q) == schur_eval(k, lambda, q));
      });
    }
  }
  SUBCASE("evaluation at all-ones counts patterns") {
    const Shape lambda = sh({1, 0});
    CHECK(schur_poly(3, lambda).eval(std::vector<Rational>{Rational(1), Rational(1)}) ==
          Rational(static_cast<std::int64_t>(enumerate_patterns(3, lambda).size())));
  }
}

TEST_CASE("characters are Weyl-group invariant for even depth") {
  // permutations of q and single inversions q_i -> 1/q_i fix s^{2r}_lambda
  const std::vector<Rational> base{Rational(3, 2), Rational(2, 3), Rational(5, 7)};
  for (int r = 2; r <= 3; ++r) {
    std::vector<Rational> q(base.begin(), base.begin() + r);
    SchurCache<Rational> cache(q);
    std::vector<Rational> swapped = q;
    std::swap(swapped[0], swapped[static_cast<std::size_t>(r) - 1]);
    SchurCache<Rational> cache_swapped(swapped);
    std::vector<Rational> inverted = q;
    inverted[1] = Rational(1) / inverted[1];
    SchurCache<Rational> cache_inverted(inverted);
    for_each_shape(static_cast<std::size_t>(r), 3, [&](const std::vector<Coord>& c) {
      const Shape lambda = Shape::unchecked(c);
      const Rational v = cache.eval(2 * r, lambda);
      CHECK(v == cache_swapped.eval(2 * r, lambda));
      CHECK(v == cache_inverted.eval(2 * r, lambda));
    });
  }
}

TEST_CASE("weyl dimension formula") {
  CHECK(weyl_dim(2, sh({0, 0})) == 1);
  for (Coord m = 0; m <= 5; ++m) CHECK(weyl_dim(1, sh({m})) == m + 1);
  CHECK(weyl_dim(2, sh({1, 0})) == 4);
  CHECK(weyl_dim(2, sh({1, 0})) ==
        static_cast<std::int64_t>(enumerate_patterns(4, sh({1, 0})).size()));

  for (int r = 1; r <= 3; ++r) {
    SchurCache<Rational> ones(std::vector<Rational>(static_cast<std::size_t>(r), Rational(1)));
    for_each_shape(static_cast<std::size_t>(r), 4, [&](const std::vector<Coord>& c) {
      const Shape lambda = Shape::unchecked(c);
      CHECK(Rational(weyl_dim(r, lambda)) == ones.eval(2 * r, lambda));
    });
  }
}

TEST_CASE("pieri decompositions at rank one") {
  SUBCASE("m=0 is the identity") {
    const auto dec = pieri_expand(1, sh({1}), 0);
    REQUIRE(dec.terms.size() == 1);
    CHECK(dec.terms.at(sh({1})) == 1);
  }
  SUBCASE("m=1 reproduces the rank-one fusion rule") {
    const auto dec = pieri_expand(1, sh({1}), 1);
    REQUIRE(dec.terms.size() == 2);
    CHECK(dec.terms.at(sh({2})) == 1);
    CHECK(dec.terms.at(sh({0})) == 1);
  }
  SUBCASE("m=2") {
    const auto dec = pieri_expand(1, sh({1}), 2);
    REQUIRE(dec.terms.size() == 2);
    CHECK(dec.terms.at(sh({3})) == 1);
    CHECK(dec.terms.at(sh({1})) == 1);
  }
}

TEST_CASE("pieri terms carry the right total dimension") {
  for (int r = 1; r <= 2; ++r) {
    for_each_shape(static_cast<std::size_t>(r), 3, [&](const std::vector<Coord>& c) {
      const Shape lambda = Shape::unchecked(c);
      for (std::int64_t m = 0; m <= 4; ++m) {
        std::vector<Coord> gm(static_cast<std::size_t>(r), 0);
        gm[0] = m;
        std::int64_t total = 0;
        for (const auto& [beta, mult] : pieri_expand(r, lambda, m).terms)
          total += mult * weyl_dim(r, beta);
        CHECK(total == weyl_dim(r, lambda) * weyl_dim(r, Shape(std::move(gm))));
      }
    });
  }
}

TEST_CASE("pieri character identity has zero residual in exact mode") {
  CHECK(pieri_identity_residual<Rational>(1, sh({1}), 1, {Rational(3, 2)}) == Rational(0));
  CHECK(pieri_identity_residual<Rational>(2, sh({1, 0}), 0, {Rational(3, 2), Rational(2, 3)}) ==
        Rational(0));
  CHECK(pieri_identity_residual<Rational>(2, sh({2, 1}), 3, {Rational(3, 2), Rational(2, 3)}) ==
        Rational(0));
}
