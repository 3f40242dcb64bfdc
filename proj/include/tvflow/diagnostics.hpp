#ifndef TVFLOW_DIAGNOSTICS_HPP
#define TVFLOW_DIAGNOSTICS_HPP

#include <vector>

#include <tvflow/types.hpp>

namespace tvflow {

/// A maximal cyclic run of cells [start, start + length) whose values
/// spread by at most the band width.
struct Plateau {
  int start = 0;
  int length = 0;
  double level = 0.0;       // mean value on the run
  double spread = 0.0;      // max - min on the run
  double left_jump = 0.0;   // |u_start - u_{start-1}|
  double right_jump = 0.0;  // |u_{end+1} - u_end|
};

/// Maximal flat runs of a periodic 1D profile. A run qualifies when it has
/// at least min_length cells, spread <= band, and both neighbouring cells
/// differ from the run's edge cells by at least min_jump. A constant
/// profile yields one run covering the ring with zero jumps, which never
/// qualifies when min_jump > 0.
std::vector<Plateau> find_plateaus(const Vector& full, int min_length = 10, double band = 1e-3,
                                   double min_jump = 1e-2);

/// max_n |u_n - u_{N-n}| for cell centres x_n = n h, n = 1..N (indices mod N):
/// deviation from symmetry under x -> 1 - x.
double reflection_error(const Vector& full);

/// max_n |u_n + u_{n+N/2}|: deviation from u(x + 1/2) = -u(x). Needs even N.
double half_shift_antisymmetry_error(const Vector& full);

/// Fraction of cells whose periodic 5-point stencil (cell and its four
/// neighbours) spreads by at most band. Field is x-fastest, nx * ny cells.
double plateau_coverage(const Vector& full, int nx, int ny, double band = 1e-3);

/// Largest deviation of a square-grid field from the dihedral symmetries
/// x -> 1 - x, y -> 1 - y and x <-> y (cell centres at (ix h, iy h), 1-based).
double dihedral_error(const Vector& full, int n);

}  // namespace tvflow

#endif  // TVFLOW_DIAGNOSTICS_HPP
