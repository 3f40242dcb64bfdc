#include <doctest.h>

#include <cmath>

#include <tvflow/shrinkage.hpp>

#include "oracles.hpp"

using namespace tvflow;

namespace {

// The 2D Spohn component formula written out term by term.
double spohn2d_display(double sc, double s, double mu_cell, double beta) {
  if (sc == 0.0) return 0.0;
  const double q = std::max(std::abs(sc) - beta * std::abs(sc) / (mu_cell * s), 0.0);
  return mu_cell * std::abs(sc) / (2.0 * s) * (sc / std::abs(sc)) *
         (-1.0 + std::sqrt(1.0 + 4.0 * s / (mu_cell * std::abs(sc)) * q));
}

}  // namespace

TEST_CASE("shrink_tv examples") {
  CHECK(shrink_tv(5.0, 2.0) == 3.0);
  CHECK(shrink_tv(-5.0, 2.0) == -3.0);
  CHECK(shrink_tv(1.0, 2.0) == 0.0);
  CHECK(shrink_tv(2.0, 2.0) == 0.0);
  CHECK(shrink_tv(0.0, 1.0) == 0.0);
}

TEST_CASE("shrink_spohn examples") {
  CHECK(shrink_spohn(3.0, 1.0, 1.0) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(shrink_spohn(0.5, 1.0, 1.0) == 0.0);
  CHECK(shrink_spohn(1.0, 1.0, 1.0) == 0.0);
  CHECK(shrink_spohn(-3.0, 1.0, 1.0) == doctest::Approx(-1.0).epsilon(1e-15));
  CHECK(shrink_spohn(0.0, 1.0, 1.0) == 0.0);
  const double x = shrink_spohn(3.0, 1.0, 1.0);
  CHECK(std::abs(1.0 + x * std::abs(x) + (x - 3.0)) < 1e-15);
}

TEST_CASE("shrink_iso2d examples") {
  const auto [dx, dy] = shrink_iso2d(3.0, 4.0, 1.0);
  CHECK(dx == doctest::Approx(2.4).epsilon(1e-15));
  CHECK(dy == doctest::Approx(3.2).epsilon(1e-15));
  CHECK(shrink_iso2d(0.0, 0.0, 1.0) == std::pair{0.0, 0.0});
  CHECK(shrink_iso2d(0.3, 0.4, 1.0) == std::pair{0.0, 0.0});
  const auto a = shrink_iso2d(1.5, -0.7, 2.0);
  const auto b = shrink_iso2d(-0.7, 1.5, 2.0);
  CHECK(a.first == b.second);
  CHECK(a.second == b.first);
}

TEST_CASE("shrink_spohn2d examples against a bisection root of the approximated EL equation") {
  const double sx = 3.0, sy = 4.0, mu = 1.0, beta = 1.0;
  const double s = 5.0;
  const auto [dx, dy] = shrink_spohn2d(sx, sy, mu, beta);
  auto el = [&](double sc) {
    return [&, sc](double d) {
      const double sg = d > 0 ? 1.0 : (d < 0 ? -1.0 : 0.0);
      return beta * sg * std::abs(sc) / s + d * std::abs(d) * s / std::abs(sc) + mu * (d - sc);
    };
  };
  const double rx = oracle::bisect(el(sx), 1e-15, sx);
  const double ry = oracle::bisect(el(sy), 1e-15, sy);
  CHECK(dx == doctest::Approx(rx).epsilon(1e-12));
  CHECK(dy == doctest::Approx(ry).epsilon(1e-12));
  CHECK(dx == doctest::Approx(0.93693).epsilon(1e-5));
  CHECK(std::abs(el(sx)(dx)) < 1e-12);

  // Dead zone: beta |s_x| / (mu s) >= |s_x|.
  CHECK(shrink_spohn2d(0.3, 0.4, 1.0, 1.0).first == 0.0);
  CHECK(shrink_spohn2d(0.0, 2.0, 1.0, 0.1).first == 0.0);
  CHECK(shrink_spohn2d(0.0, 0.0, 1.0, 0.1) == std::pair{0.0, 0.0});
  const auto eq = shrink_spohn2d(1.7, 1.7, 3.0, 0.2);
  CHECK(eq.first == eq.second);
}

TEST_CASE("SpohnShrinkage validates p and beta") {
  CHECK_THROWS_AS(SpohnShrinkage(0.25, 2), std::invalid_argument);
  CHECK_THROWS_AS(SpohnShrinkage(0.0), std::domain_error);
  CHECK_THROWS_AS(SpohnShrinkage(-1.0), std::domain_error);
  const SpohnShrinkage k(1.0);
  CHECK(k(3.0, 1.0) == shrink_spohn(3.0, 1.0, 1.0));
  CHECK(k.beta() == 1.0);
}

TEST_CASE("property: shrink_tv and shrink_spohn are proximal maps (brute-force grid)") {
  oracle::Rng rng(101);
  for (int i = 0; i < 200; ++i) {
    const double rho = rng.uniform(-4.0, 4.0);
    const double a = rng.log_uniform(0.05, 4.0);
    const double beta = rng.log_uniform(0.01, 2.0);
    const double tv = oracle::brute_prox([&](double x) { return a * std::abs(x); }, rho);
    CHECK(std::abs(shrink_tv(rho, a) - tv) <= 2e-5);
    const double sp = oracle::brute_prox(
        [&](double x) { return a * (beta * std::abs(x) + std::abs(x) * x * x / 3.0); }, rho);
    CHECK(std::abs(shrink_spohn(rho, a, beta) - sp) <= 2e-5);
  }
}

TEST_CASE("property: Spohn kernel is odd, monotone, nonexpansive and solves its EL equation") {
  oracle::Rng rng(202);
  for (int i = 0; i < 500; ++i) {
    const double a = rng.log_uniform(1e-3, 1e3);
    const double beta = rng.log_uniform(1e-3, 10.0);
    const double rho = rng.uniform(-20.0, 20.0);
    const double x = shrink_spohn(rho, a, beta);
    CHECK(shrink_spohn(-rho, a, beta) == -x);
    CHECK(std::abs(x) <= std::abs(rho));
    CHECK(std::abs(shrink_tv(rho, a)) <= std::abs(rho));
    const double rho2 = rho + rng.uniform(0.0, 1.0);
    CHECK(shrink_spohn(rho2, a, beta) >= x);
    if (std::abs(rho) <= a * beta) {
      CHECK(x == 0.0);
    } else {
      CHECK(x * rho > 0.0);
      const double res = beta * (x > 0 ? 1.0 : -1.0) + x * std::abs(x) + (x - rho) / a;
      CHECK(std::abs(res) <= 1e-12 * std::max(1.0, std::abs(rho) / a));
    }
  }
}

TEST_CASE("property: stable Spohn form equals the literal formula") {
  oracle::Rng rng(303);
  for (int i = 0; i < 500; ++i) {
    const double a = rng.log_uniform(1e-2, 1e2);
    const double beta = rng.log_uniform(1e-2, 2.0);
    const double rho = rng.uniform(-10.0, 10.0);
    const double stable = shrink_spohn(rho, a, beta);
    const double literal = shrink_spohn_literal(rho, a, beta);
    CHECK(std::abs(stable - literal) <= 1e-10 * std::max(1.0, std::abs(stable)));
  }
  // Where 4 a q << 1 the literal form cancels and the stable one does not.
  const double rho = 1.0 + 1e-9, a = 1e-6, beta = 1e6;
  const double q = rho - a * beta;
  const double stable = shrink_spohn(rho, a, beta);
  CHECK(stable == doctest::Approx(q * (1.0 - a * q)).epsilon(1e-12));
}

TEST_CASE("property: beta -> 0 leaves the cubic proximal map") {
  oracle::Rng rng(404);
  for (int i = 0; i < 100; ++i) {
    const double a = rng.log_uniform(0.01, 10.0);
    const double rho = rng.uniform(-5.0, 5.0);
    const double x = shrink_spohn(rho, a, 1e-12);
    CHECK(std::abs(x * std::abs(x) + (x - rho) / a) <= 1e-6);
  }
}

TEST_CASE("property: 2D kernels") {
  oracle::Rng rng(505);
  for (int i = 0; i < 300; ++i) {
    const double sx = rng.uniform(-3.0, 3.0);
    const double sy = rng.uniform(-3.0, 3.0);
    const double mu = rng.log_uniform(0.2, 20.0);
    const double beta = rng.log_uniform(0.01, 2.0);
    const double s = std::hypot(sx, sy);

    const auto [ix, iy] = shrink_iso2d(sx, sy, mu);
    CHECK(std::hypot(ix, iy) == doctest::Approx(shrink_tv(s, 1.0 / mu)).epsilon(1e-12));
    CHECK(std::abs(ix - sx * std::max(1.0 - 1.0 / (mu * s), 0.0)) <= 1e-12);
    // Equivalent to the component display with |s_c| / (mu s) thresholds.
    CHECK(ix == doctest::Approx(shrink_tv(sx, std::abs(sx) / (mu * s))).epsilon(1e-12));
    CHECK(iy == doctest::Approx(shrink_tv(sy, std::abs(sy) / (mu * s))).epsilon(1e-12));
    CHECK(std::abs(ix) <= std::abs(sx));

    const auto [px, py] = shrink_spohn2d(sx, sy, mu, beta);
    CHECK(px == doctest::Approx(spohn2d_display(sx, s, mu, beta)).epsilon(1e-9));
    CHECK(py == doctest::Approx(spohn2d_display(sy, s, mu, beta)).epsilon(1e-9));
    CHECK(std::abs(px) <= std::abs(sx));
    CHECK(std::abs(py) <= std::abs(sy));
    auto res = [&](double d, double sc) {
      return beta * (d > 0 ? 1.0 : -1.0) * std::abs(sc) / s + d * std::abs(d) * s / std::abs(sc) +
             mu * (d - sc);
    };
    if (px != 0.0) CHECK(std::abs(res(px, sx)) <= 1e-10);
    if (py != 0.0) CHECK(std::abs(res(py, sy)) <= 1e-10);
  }
}
