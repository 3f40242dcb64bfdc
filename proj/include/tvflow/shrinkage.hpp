#ifndef TVFLOW_SHRINKAGE_HPP
#define TVFLOW_SHRINKAGE_HPP

#include <utility>

namespace tvflow {

/// Soft threshold: sign(rho) * max(|rho| - a, 0). Proximal map of a|x|.
double shrink_tv(double rho, double a);

/// Proximal map of a(beta|x| + |x|^3/3): the root of
///   beta sign(x) + x|x| + (x - rho)/a = 0,
/// or 0 inside the dead zone |rho| <= a beta.
double shrink_spohn(double rho, double a, double beta);

/// Same kernel written literally as
///   rho / (2a|rho|) * (-1 + sqrt(1 + 4a max(|rho| - a beta, 0))).
/// Loses digits when 4a max(...) is small; kept as a cross-check.
double shrink_spohn_literal(double rho, double a, double beta);

/// Isotropic (vectorial) soft threshold of (s_x, s_y) with threshold 1/mu_cell.
std::pair<double, double> shrink_iso2d(double s_x, double s_y, double mu_cell);

/// Cellwise Spohn shrinkage in 2D under the frozen-coefficient approximation
/// |d_xy| ~ |d_x| s / |s_x|. Each component solves
///   beta sign(d) |s_c|/s + d|d| s/|s_c| + mu_cell (d - s_c) = 0.
std::pair<double, double> shrink_spohn2d(double s_x, double s_y, double mu_cell, double beta);

/// Facet weight plus exponent, validated once. Only p = 3 has a closed form.
class SpohnShrinkage {
public:
  explicit SpohnShrinkage(double beta, int p = 3);

  double beta() const { return beta_; }
  double operator()(double rho, double a) const { return shrink_spohn(rho, a, beta_); }

private:
  double beta_;
};

}  // namespace tvflow

#endif  // TVFLOW_SHRINKAGE_HPP
