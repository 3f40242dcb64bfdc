#include <tvflow/shrinkage.hpp>

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace tvflow {

namespace {

double sign(double x) { return x > 0.0 ? 1.0 : (x < 0.0 ? -1.0 : 0.0); }

}  // namespace

double shrink_tv(double rho, double a) {
  const double mag = std::abs(rho) - a;
  return mag > 0.0 ? sign(rho) * mag : 0.0;
}

double shrink_spohn(double rho, double a, double beta) {
  const double q = std::abs(rho) - a * beta;
  if (!(q > 0.0)) return 0.0;
  // 2q / (1 + sqrt(1 + 4aq)) is the positive root of a x^2 + x - q = 0
  return sign(rho) * 2.0 * q / (1.0 + std::sqrt(1.0 + 4.0 * a * q));
}

double shrink_spohn_literal(double rho, double a, double beta) {
  if (rho == 0.0) return 0.0;
  const double q = std::max(std::abs(rho) - a * beta, 0.0);
  return rho / (2.0 * a * std::abs(rho)) * (-1.0 + std::sqrt(1.0 + 4.0 * a * q));
}

std::pair<double, double> shrink_iso2d(double s_x, double s_y, double mu_cell) {
  const double s = std::hypot(s_x, s_y);
  if (!(s > 0.0)) return {0.0, 0.0};
  const double scale = std::max(s - 1.0 / mu_cell, 0.0) / s;
  return {s_x * scale, s_y * scale};
}

std::pair<double, double> shrink_spohn2d(double s_x, double s_y, double mu_cell, double beta) {
  const double s = std::hypot(s_x, s_y);
  if (!(s > 0.0)) return {0.0, 0.0};
  // With c = s/|s_c| the component equation is the scalar Spohn equation
  // with a = c/mu_cell and facet weight beta/c^2.
  auto component = [&](double sc) {
    if (sc == 0.0) return 0.0;
    const double c = s / std::abs(sc);
    return shrink_spohn(sc, c / mu_cell, beta / (c * c));
  };
  return {component(s_x), component(s_y)};
}

SpohnShrinkage::SpohnShrinkage(double beta, int p) : beta_(beta) {
  if (p != 3) {
    throw std::invalid_argument("Spohn shrinkage has a closed form only for p = 3, got p = " +
                                std::to_string(p));
  }
  if (!(beta > 0.0)) throw std::domain_error("facet weight beta must be positive");
}

}  // namespace tvflow
