#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <string>

#include <tvflow/presets.hpp>

#include "oracles.hpp"

using namespace tvflow;

namespace {

double cusp_ref(double x) {
  const double y = x - std::floor(x);
  const double r = std::fabs(y - 0.5);
  return r <= 0.1 ? 40.0 - 10.0 * std::log(5.0) : 5.0 / r - 10.0 - 10.0 * std::log(5.0);
}

double cubic_ref(double x) {
  const double y = x - std::floor(x);
  const double a = 450.0, r = 1.0 / 15.0;
  const double c = a * (0.25 - r) * (0.25 - r) * (0.25 - r);
  if (y > r && y < 0.5 - r) return a * (y - 0.25) * (y - 0.25) * (y - 0.25);
  if (y > 0.5 + r && y < 1.0 - r) return -a * (y - 0.75) * (y - 0.75) * (y - 0.75);
  return (y >= 0.5 - r && y <= 0.5 + r) ? c : -c;
}

std::string write_temp(const std::string& name, const std::string& text) {
  const std::string path = "tvflow_presets_" + name + ".txt";
  std::ofstream(path) << text;
  return path;
}

}  // namespace

TEST_CASE("cos1d at N=4") {
  const Vector s = preset_samples("cos1d", 4);
  CHECK(s(0) == doctest::Approx(0.0).epsilon(1e-15));
  CHECK(std::abs(s(0)) < 1e-15);
  CHECK(s(1) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(std::abs(s(2)) < 1e-15);
  CHECK(s(3) == doctest::Approx(-1.0).epsilon(1e-15));
  const Vector r = preset_initial("cos1d", 4);
  REQUIRE(r.size() == 3);
  CHECK(r(1) == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("cubic profile: half-shift antisymmetry, evenness and continuity") {
  oracle::Rng rng(61);
  for (int i = 0; i < 200; ++i) {
    const double x = rng.uniform(0.0, 1.0);
    CHECK(formula::cubic(x + 0.5) == doctest::Approx(-formula::cubic(x)).epsilon(1e-12));
    CHECK(formula::cubic(1.0 - x) == doctest::Approx(formula::cubic(x)).epsilon(1e-12));
  }
  const double r = 1.0 / 15.0;
  for (double edge : {r, 0.5 - r, 0.5 + r, 1.0 - r}) {
    CHECK(std::abs(formula::cubic(edge - 1e-12) - formula::cubic(edge + 1e-12)) < 1e-8);
  }
  CHECK(formula::cubic(0.25) == 0.0);
  CHECK(formula::cubic(0.0) == doctest::Approx(-450.0 * std::pow(0.25 - r, 3)));
}

TEST_CASE("cusp profile is continuous and even about 1/2") {
  CHECK(std::abs(formula::cusp(0.4 - 1e-13) - formula::cusp(0.4 + 1e-13)) < 1e-9);
  CHECK(formula::cusp(0.5) == doctest::Approx(10.0 * (4.0 - std::log(5.0))));
  CHECK(formula::cusp(0.3) == doctest::Approx(formula::cusp(0.7)));
}

TEST_CASE("property: formulas agree with independent reimplementations") {
  oracle::Rng rng(67);
  for (int n : {10, 37, 100, 200}) {
    const double h = 1.0 / n;
    for (int t = 0; t < 5; ++t) {
      const int i = rng.integer(1, n);
      const double x = i * h;
      CHECK(std::abs(formula::cusp(x) - cusp_ref(x)) <= 1e-14 * std::max(1.0, std::abs(cusp_ref(x))));
      CHECK(std::abs(formula::cubic(x) - cubic_ref(x)) <= 1e-14 * std::max(1.0, std::abs(cubic_ref(x))));
      CHECK(std::abs(formula::cosine(x) + std::cos(2.0 * std::numbers::pi * x)) <= 1e-14);
      const double y = rng.integer(1, n) * h;
      CHECK(std::abs(formula::poly2d(x, y) - (x * x - x) * (y * y - y) + 1.0 / 36.0) <= 1e-14);
    }
  }
}

TEST_CASE("samples are mean-free and reduced vectors drop the last entry") {
  for (const char* name : {"cusp1d", "cubic1d", "cos1d"}) {
    const Vector s = preset_samples(name, 50);
    CHECK(std::abs(s.sum()) <= 1e-12 * std::max(1.0, s.cwiseAbs().sum()));
    const Vector r = preset_initial(name, 50);
    CHECK((r - s.head(49)).cwiseAbs().maxCoeff() <= 1e-13);
  }
  const Vector p = preset_samples2d("poly2d", 6, 5);
  CHECK(p.size() == 30);
  CHECK(std::abs(p.sum()) <= 1e-15);
  CHECK(p(2 + 3 * 6) == doctest::Approx(formula::poly2d(3.0 / 6.0, 4.0 / 5.0) -
                                        [] {
                                          double m = 0.0;
                                          for (int iy = 1; iy <= 5; ++iy)
                                            for (int ix = 1; ix <= 6; ++ix)
                                              m += formula::poly2d(ix / 6.0, iy / 5.0);
                                          return m / 30.0;
                                        }())
                              .epsilon(1e-13));
  CHECK(preset_initial2d("poly2d", 6, 5).size() == 29);
}

TEST_CASE("unknown and mismatched presets are rejected") {
  CHECK_THROWS_AS(preset_dimension("square"), std::invalid_argument);
  CHECK_THROWS_AS(preset_initial("square", 10), std::invalid_argument);
  CHECK_THROWS_AS(preset_initial("poly2d", 10), std::invalid_argument);
  CHECK_THROWS_AS(preset_initial2d("cos1d", 4, 4), std::invalid_argument);
  CHECK_THROWS_AS(preset_initial("cos1d", 2), std::domain_error);
  CHECK(preset_names().size() == 4);
  CHECK(preset_dimension("poly2d") == 2);
}

TEST_CASE("load_initial parses mixed separators and comments") {
  const std::string path = write_temp("ok", "# four cells\n1, 2\n3;4\n\n");
  const Vector r = load_initial(path, 4);
  REQUIRE(r.size() == 3);
  CHECK(r(0) == doctest::Approx(-1.5));
  CHECK(r(2) == doctest::Approx(0.5));
  std::remove(path.c_str());
}

TEST_CASE("load_initial reports bad input with its location") {
  const std::string bad = write_temp("bad", "1 2\n3 x4\n");
  try {
    load_initial(bad, 4);
    FAIL("expected an exception");
  } catch (const std::runtime_error& e) {
    CHECK(std::string(e.what()).find(":2:") != std::string::npos);
  }
  const std::string few = write_temp("few", "1 2 3\n");
  CHECK_THROWS_AS(load_initial(few, 4), std::runtime_error);
  CHECK_THROWS_AS(load_initial("does/not/exist.txt", 4), std::runtime_error);
  const std::string nan = write_temp("nan", "1 nan 2 3\n");
  CHECK_THROWS_AS(load_initial(nan, 4), std::runtime_error);
  std::remove(bad.c_str());
  std::remove(few.c_str());
  std::remove(nan.c_str());
}
