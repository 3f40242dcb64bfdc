#ifndef TVFLOW_TWODIM_HPP
#define TVFLOW_TWODIM_HPP

#include <utility>

#include <Eigen/Sparse>

#include <tvflow/trajectory.hpp>
#include <tvflow/types.hpp>

namespace tvflow {

using SparseMatrix = Eigen::SparseMatrix<double>;

/// Uniform periodic partition of the unit square. Cell (ix, iy), zero-based,
/// is unknown ix + iy * nx (x runs fastest).
struct Grid2D {
  int nx = 0;
  int ny = 0;
  double hx = 0.0;
  double hy = 0.0;

  int cells() const { return nx * ny; }
  int index(int ix, int iy) const { return ix + iy * nx; }
};

/// Throws std::domain_error when either count is below 3.
Grid2D build_grid2d(int nx, int ny);

/// h_x * grad_x = I_{ny} (x) S_{nx} on full (nx ny) vectors.
SparseMatrix difference_x(const Grid2D& grid);
/// h_y * grad_y = S_{ny} (x) I_{nx}.
SparseMatrix difference_y(const Grid2D& grid);

/// Operators of the 2D approximate scheme. Only Scheme::ApproxJ exists in 2D.
///
/// B_x, B_y act on reduced coordinates and return cell differences
/// (unit-free). K_x = grad_x R (-Delta_av)_h^{-1} and K_y likewise, with
/// (-Delta_av)_h = L (grad_x^T grad_x + grad_y^T grad_y) R in physical units.
struct OperatorSet2D {
  Grid2D grid;
  SparseMatrix Bx;
  SparseMatrix By;
  Matrix A;  // (-Delta_av)_h, reduced
  Eigen::PartialPivLU<Matrix> A_lu;
  Matrix Kx;
  Matrix Ky;

  int cells() const { return grid.cells(); }
};

OperatorSet2D build_ops2d(const Grid2D& grid, Scheme scheme = Scheme::ApproxJ);

Vector expand2d(const OperatorSet2D& ops, const Vector& reduced);
/// Full -> reduced through L_{nx ny}; discards any constant offset.
Vector reduce2d(const OperatorSet2D& ops, const Vector& full);

enum class Model2D { Isotropic, Anisotropic, Spohn };

std::string_view to_string(Model2D model);
Model2D parse_model2d(std::string_view text);

struct SolverConfig2D {
  double lambda = 1.0;
  double mu = 1.0;
  Model2D model = Model2D::Isotropic;
  double beta = 0.0;
  Mode mode = Mode::Flow;

  /// lambda = c_lambda h^{-4}, mu = c_mu h^{-2} with h^2 = h_x h_y.
  static SolverConfig2D scaled(const Grid2D& grid, double c_lambda, double c_mu,
                               Model2D model = Model2D::Isotropic);

  double tau() const { return 1.0 / lambda; }
  double mu_cell(const Grid2D& grid) const { return mu * grid.hx * grid.hy; }
  void validate() const;
};

struct BregmanState2D {
  Vector u;  // reduced, nx ny - 1
  Vector dx, dy, ax, ay;
  long k = 0;
};

BregmanState2D initial_state2d(const Vector& u0, const OperatorSet2D& ops);

/// Cholesky factor of
///   G = lambda hx hy (Kx^T Kx + Ky^T Ky) + mu hx hy (Bx^T Bx + By^T By).
/// Dense: cubic in the number of cells, paid once per run.
struct SystemFactor2D {
  Matrix G;
  Matrix fidelity;
  Eigen::LLT<Matrix> llt;
  double mu_cell = 0.0;

  Vector solve(const Vector& rhs) const { return llt.solve(rhs); }
};

SystemFactor2D factor_system2d(const OperatorSet2D& ops, const SolverConfig2D& cfg);

Vector u_rhs2d(const BregmanState2D& state, const Vector& f, const SystemFactor2D& factor,
               const OperatorSet2D& ops);
Vector u_update2d(const BregmanState2D& state, const Vector& f, const SystemFactor2D& factor,
                  const OperatorSet2D& ops);

using VectorPair = std::pair<Vector, Vector>;

/// s_x = B_x u + a_x, s_y = B_y u + a_y for the state's current u and multipliers.
VectorPair shrink_arguments(const BregmanState2D& state, const OperatorSet2D& ops);

VectorPair d_update_iso(const BregmanState2D& state, const OperatorSet2D& ops,
                        const SolverConfig2D& cfg);
VectorPair d_update_aniso(const BregmanState2D& state, const OperatorSet2D& ops,
                          const SolverConfig2D& cfg);
VectorPair d_update_spohn2d(const BregmanState2D& state, const OperatorSet2D& ops,
                            const SolverConfig2D& cfg);

BregmanState2D sweep2d(const BregmanState2D& state, const Vector& f,
                       const SystemFactor2D& factor, const OperatorSet2D& ops,
                       const SolverConfig2D& cfg);

BregmanState2D flow_step2d(const BregmanState2D& state, const SystemFactor2D& factor,
                           const OperatorSet2D& ops, const SolverConfig2D& cfg);

/// sum of cellwise |(d_x, d_y)|.
double tv_iso2d(const Vector& u, const OperatorSet2D& ops);
/// |B_x u|_1 + |B_y u|_1.
double tv_aniso2d(const Vector& u, const OperatorSet2D& ops);
/// beta |d_xy|_1 + |d_xy|_3^3 / 3.
double spohn_energy2d(const Vector& u, double beta, const OperatorSet2D& ops);
/// hx hy (|K_x v|^2 + |K_y v|^2).
double hminus1_norm_sq2d(const Vector& v, const OperatorSet2D& ops);

/// The isotropic d-subproblem objective at fixed shrink arguments.
double iso_d_objective(const Vector& dx, const Vector& dy, const Vector& sx, const Vector& sy,
                       double mu_cell);

Trajectory run_flow2d(const Vector& u0, const OperatorSet2D& ops, const SolverConfig2D& cfg,
                      const FlowMonitors& monitors);

}  // namespace tvflow

#endif  // TVFLOW_TWODIM_HPP
