#include <tvflow/diagnostics.hpp>

#include <algorithm>
#include <cmath>

namespace tvflow {

namespace {

int wrap(int i, int n) { return ((i % n) + n) % n; }

}  // namespace

std::vector<Plateau> find_plateaus(const Vector& full, int min_length, double band,
                                   double min_jump) {
  const int n = static_cast<int>(full.size());
  std::vector<Plateau> out;
  if (n == 0) return out;

  // Longest band-limited run starting at each cell.
  std::vector<int> reach(n, 0);
  for (int i = 0; i < n; ++i) {
    double lo = full(i);
    double hi = full(i);
    int len = 1;
    while (len < n) {
      const double v = full(wrap(i + len, n));
      const double nlo = std::min(lo, v);
      const double nhi = std::max(hi, v);
      if (nhi - nlo > band) break;
      lo = nlo;
      hi = nhi;
      ++len;
    }
    reach[i] = len;
  }

  for (int i = 0; i < n; ++i) {
    const int len = reach[i];
    if (len == n) {
      if (i > 0) continue;
    } else {
      // Maximal on the left: the run starting one cell earlier must not cover this one.
      const int prev = wrap(i - 1, n);
      if (reach[prev] >= len + 1) continue;
    }
    if (len < min_length) continue;
    Plateau p;
    p.start = i;
    p.length = len;
    double lo = full(i), hi = full(i), sum = 0.0;
    for (int j = 0; j < len; ++j) {
      const double v = full(wrap(i + j, n));
      lo = std::min(lo, v);
      hi = std::max(hi, v);
      sum += v;
    }
    p.level = sum / len;
    p.spread = hi - lo;
    if (len < n) {
      p.left_jump = std::abs(full(i) - full(wrap(i - 1, n)));
      p.right_jump = std::abs(full(wrap(i + len, n)) - full(wrap(i + len - 1, n)));
    }
    if (p.left_jump >= min_jump && p.right_jump >= min_jump) out.push_back(p);
  }
  return out;
}

double reflection_error(const Vector& full) {
  const int n = static_cast<int>(full.size());
  double err = 0.0;
  // zero-based i holds x_{i+1}; its mirror x_{N-i-1} sits at index N-i-2.
  for (int i = 0; i < n; ++i) err = std::max(err, std::abs(full(i) - full(wrap(n - i - 2, n))));
  return err;
}

double half_shift_antisymmetry_error(const Vector& full) {
  const int n = static_cast<int>(full.size());
  if (n % 2 != 0) throw std::invalid_argument("half-shift symmetry needs an even cell count");
  double err = 0.0;
  for (int i = 0; i < n / 2; ++i) err = std::max(err, std::abs(full(i) + full(i + n / 2)));
  return err;
}

double plateau_coverage(const Vector& full, int nx, int ny, double band) {
  if (full.size() != static_cast<Eigen::Index>(nx) * ny) {
    throw std::invalid_argument("field size does not match the grid");
  }
  auto at = [&](int ix, int iy) { return full(wrap(ix, nx) + wrap(iy, ny) * nx); };
  int flat = 0;
  for (int iy = 0; iy < ny; ++iy) {
    for (int ix = 0; ix < nx; ++ix) {
      const double c[5] = {at(ix, iy), at(ix - 1, iy), at(ix + 1, iy), at(ix, iy - 1),
                           at(ix, iy + 1)};
      const auto [lo, hi] = std::minmax_element(c, c + 5);
      if (*hi - *lo <= band) ++flat;
    }
  }
  return static_cast<double>(flat) / (static_cast<double>(nx) * ny);
}

double dihedral_error(const Vector& full, int n) {
  if (full.size() != static_cast<Eigen::Index>(n) * n) {
    throw std::invalid_argument("field size does not match the square grid");
  }
  auto at = [&](int ix, int iy) { return full(wrap(ix, n) + wrap(iy, n) * n); };
  double err = 0.0;
  for (int iy = 0; iy < n; ++iy) {
    for (int ix = 0; ix < n; ++ix) {
      const double v = at(ix, iy);
      err = std::max(err, std::abs(v - at(n - ix - 2, iy)));
      err = std::max(err, std::abs(v - at(ix, n - iy - 2)));
      err = std::max(err, std::abs(v - at(iy, ix)));
    }
  }
  return err;
}

}  // namespace tvflow
